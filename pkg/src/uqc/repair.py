"""Repairing disconnected sets and building minimal universal pairs.

A reducible set is fixed by appending elementary bridges Y_ab = E_ab - E_ba
(or the imaginary-symmetric i(E_ab + E_ba)) between connected components
until the coupling graph is a single component; a spanning tree of bridges,
r - 1 of them for r components.  The same idea gives the minimal
construction: one diagonal drift plus one nearest-neighbor chain already
couples every basis index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidInput
from .generators import Algebra, Generator, GeneratorSet, make_general_direction
from .universality import (
    TAU_EDGE,
    build_coupling_graph,
    connected_components,
)


class BridgeStyle(Enum):
    ANTISYMMETRIC = "antisym"
    SYMMETRIC_IMAGINARY = "sym"


#: endpoint selection rules for repair bridges; "paper-example" is an alias
#: kept for the CLI, selecting the largest index inside the start component
SELECTION_RULES = ("smallest", "largest-inside", "paper-example")


@dataclass(frozen=True)
class RepairPlan:
    bridges: tuple[tuple[int, int, BridgeStyle], ...]
    added_generators: tuple[Generator, ...]
    resulting_set: GeneratorSet


def bridge_generator(a: int, b: int, dim: int, style: BridgeStyle) -> Generator:
    """Elementary skew-Hermitian coupling of basis indices a and b (0-based)."""
    M = np.zeros((dim, dim), dtype=complex)
    if style is BridgeStyle.ANTISYMMETRIC:
        M[a, b] = 1.0
        M[b, a] = -1.0
    else:
        M[a, b] = 1.0j
        M[b, a] = 1.0j
    return Generator(matrix=M, label=f"bridge({a + 1},{b + 1})")


def repair(
    gen_set: GeneratorSet,
    style: BridgeStyle | str = BridgeStyle.ANTISYMMETRIC,
    tau_edge: float = TAU_EDGE,
    selection: str = "smallest",
) -> RepairPlan:
    """Append bridges until the coupling graph is connected.

    Each round picks ``a`` inside the component of vertex 0 (smallest index,
    or largest under the "largest-inside"/"paper-example" rule) and ``b`` as
    the smallest index outside, then appends the bridge and recomputes
    components, so exactly one fewer component remains per round.  On an
    already-connected set the plan is empty and the set is returned as-is.
    """
    style = BridgeStyle(style)
    if selection not in SELECTION_RULES:
        raise InvalidInput(f"unknown selection rule {selection!r}")
    pick_inside = min if selection == "smallest" else max

    current = gen_set
    bridges: list[tuple[int, int, BridgeStyle]] = []
    added: list[Generator] = []
    while True:
        comps = connected_components(build_coupling_graph(current, tau_edge))
        if len(comps) == 1:
            break
        inside = next(c for c in comps if 0 in c)
        a = pick_inside(inside)
        b = min(v for v in range(current.dim) if v not in inside)
        gen = bridge_generator(a, b, current.dim, style)
        bridges.append((a, b, style))
        added.append(gen)
        current = current.with_extra([gen])
    return RepairPlan(
        bridges=tuple(bridges),
        added_generators=tuple(added),
        resulting_set=current,
    )


def _chain_matrix(d: int, coefficients, symmetric: bool) -> np.ndarray:
    c = np.ones(d - 1) if coefficients is None else np.asarray(coefficients, dtype=float)
    if c.shape != (d - 1,):
        raise InvalidInput(f"expected {d - 1} chain coefficients, got {c.shape}")
    if np.any(c == 0.0):
        raise InvalidInput("chain coefficients must all be nonzero")
    M = np.zeros((d, d), dtype=complex)
    for j, cj in enumerate(c):
        if symmetric:
            M[j, j + 1] = 1.0j * cj
            M[j + 1, j] = 1.0j * cj
        else:
            M[j, j + 1] = cj
            M[j + 1, j] = -cj
    return M


def antisymmetric_chain(algebra: Algebra, coefficients=None) -> Generator:
    """Nearest-neighbor coupling chain: sum_j c_j (E_{j,j+1} - E_{j+1,j})."""
    return Generator(_chain_matrix(algebra.dim, coefficients, symmetric=False), "chain")


def symmetric_chain(algebra: Algebra, coefficients=None) -> Generator:
    """Imaginary-symmetric chain i * sum_j c_j (E_{j,j+1} + E_{j+1,j}).

    Same off-diagonal support as the antisymmetric chain, hence an identical
    coupling graph; offered for hardware whose couplings are Hermitian-
    symmetric.
    """
    return Generator(_chain_matrix(algebra.dim, coefficients, symmetric=True), "chain")


def minimal_pair(
    algebra: Algebra,
    coefficients=None,
    style: BridgeStyle | str = BridgeStyle.ANTISYMMETRIC,
) -> GeneratorSet:
    """Two-generator universal set: constructed drift + coupling chain.

    The chain couples 1-2-...-d into a single path, so the coupling graph is
    connected for any nonzero coefficients; together with the constructed
    drift the set is universal.  For d = 1 the drift alone suffices.
    """
    style = BridgeStyle(style)
    drift = make_general_direction(algebra)
    gens = [drift]
    if algebra.dim > 1:
        chain = (
            antisymmetric_chain(algebra, coefficients)
            if style is BridgeStyle.ANTISYMMETRIC
            else symmetric_chain(algebra, coefficients)
        )
        gens.append(chain)
    elif coefficients is not None and len(coefficients) != 0:
        raise InvalidInput("d = 1 admits no chain coefficients")
    return GeneratorSet(
        algebra=algebra,
        generators=tuple(gens),
        general_index=0,
        constructed_general=True,
    )
