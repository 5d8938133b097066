"""Coupling-graph universality criterion.

Index the standard basis of C^d by graph vertices and put an edge {r, l}
wherever some non-designated generator has a nonzero (r, l) entry.  With a
valid diagonal drift, a nontrivial invariant coordinate subspace exists if
and only if this graph is disconnected, so the whole universality decision
reduces to connected components plus the drift-spectrum scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .errors import NumericalFailure
from .generators import (
    GeneratorSet,
    IndependenceStatus,
    RELATION_BOUND,
    SpectrumIndependenceVerdict,
    TAU_RELATION,
    check_general_direction,
    phases_of,
    spectrum_is_degenerate,
    validate_set,
)

#: relative entry-magnitude cutoff for graph edges
TAU_EDGE = 1e-12
#: spectrum scans are skipped (verdict downgraded) above this dimension;
#: lattice relation detection gets slow and, at fixed tolerances, loses
#: meaning for long phase vectors
SPECTRUM_SCAN_LIMIT = 32


@dataclass(frozen=True)
class CouplingGraph:
    """Undirected graph on 0-based basis indices.

    ``edges`` are (r, l) pairs with r < l; ``edge_source`` maps each edge to
    the contributing (generator index, entry magnitude) pairs.
    """

    dim: int
    edges: frozenset[tuple[int, int]]
    edge_source: dict[tuple[int, int], list[tuple[int, float]]]


class VerdictStatus(Enum):
    UNIVERSAL = "universal"
    REDUCIBLE = "reducible"
    CONDITIONALLY_UNIVERSAL = "conditionally_universal"


@dataclass(frozen=True)
class UniversalityVerdict:
    """Decision plus the block structure certifying it.

    ``components`` partition the 0-based indices (ordered by smallest
    member, members ascending); ``permutation`` lists old indices in the
    order that groups components contiguously, so conjugating a generator by
    the associated permutation matrix makes it block-diagonal with
    ``block_sizes``.  ``witness_subspace`` is the component of vertex 0 when
    reducible.  ``degenerate_spectrum`` surfaces a designated diagonal whose
    phases collide; the criterion then certifies nothing and the status is at
    most CONDITIONALLY_UNIVERSAL.
    """

    status: VerdictStatus
    components: tuple[tuple[int, ...], ...]
    permutation: tuple[int, ...]
    block_sizes: tuple[int, ...]
    witness_subspace: tuple[int, ...] | None
    general_direction: SpectrumIndependenceVerdict
    degenerate_spectrum: bool = False


def build_coupling_graph(
    gen_set: GeneratorSet,
    tau_edge: float = TAU_EDGE,
    absolute: bool = False,
) -> CouplingGraph:
    """Collect edges from off-diagonal support of non-designated generators.

    The cutoff is ``tau_edge`` relative to each generator's max-entry
    magnitude (or an absolute magnitude when ``absolute`` is set, for inputs
    carrying physical noise).  The designated diagonal contributes nothing;
    additional diagonal generators contribute nothing vacuously.
    """
    d = gen_set.dim
    edges: set[tuple[int, int]] = set()
    edge_source: dict[tuple[int, int], list[tuple[int, float]]] = {}
    for j, gen in enumerate(gen_set.generators):
        if j == gen_set.general_index:
            continue
        A = gen.matrix
        cut = tau_edge if absolute else tau_edge * linalg.max_abs(A)
        mask = np.abs(A) > cut
        np.fill_diagonal(mask, False)
        rr, ll = np.nonzero(np.triu(mask | mask.T))
        mags = np.abs(A)
        for r, l in zip(rr.tolist(), ll.tolist()):
            e = (r, l)
            edges.add(e)
            edge_source.setdefault(e, []).append((j, float(max(mags[r, l], mags[l, r]))))
    return CouplingGraph(dim=d, edges=frozenset(edges), edge_source=edge_source)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:  # path compression
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def connected_components(graph: CouplingGraph) -> list[list[int]]:
    """Components ordered by smallest member, members ascending."""
    uf = _UnionFind(graph.dim)
    for r, l in graph.edges:
        uf.union(r, l)
    groups: dict[int, list[int]] = {}
    for v in range(graph.dim):
        groups.setdefault(uf.find(v), []).append(v)
    return [sorted(groups[k]) for k in sorted(groups)]


def reachable_from(graph: CouplingGraph, start: int) -> set[int]:
    """Fixed-point expansion of {start} along edges (plain BFS).

    Equals the connected component of ``start`` for any choice of start
    vertex; kept as a separate code path so tests can confirm that.
    """
    adj: dict[int, list[int]] = {v: [] for v in range(graph.dim)}
    for r, l in graph.edges:
        adj[r].append(l)
        adj[l].append(r)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def _partition_and_permutation(components: list[list[int]]):
    perm = tuple(v for comp in components for v in comp)
    sizes = tuple(len(c) for c in components)
    return tuple(tuple(c) for c in components), perm, sizes


def block_partition(gen_set: GeneratorSet, tau_edge: float = TAU_EDGE):
    """Deterministic block partition and basis permutation.

    Returns ``(components, permutation)``; conjugating every generator by
    the permutation yields block-diagonal matrices with the component sizes,
    which is verified entrywise before returning.
    """
    gen_set = validate_set(gen_set, require_nondegenerate=False)
    graph = build_coupling_graph(gen_set, tau_edge)
    components, perm, _ = _partition_and_permutation(connected_components(graph))
    _verify_block_certificate(gen_set, components, perm, tau_edge)
    return components, perm


def _verify_block_certificate(gen_set, components, perm, tau_edge):
    d = gen_set.dim
    block_of = np.empty(d, dtype=int)
    for b, comp in enumerate(components):
        for v in comp:
            block_of[v] = b
    order = np.asarray(perm)
    same_block = block_of[order][:, None] == block_of[order][None, :]
    for j, gen in enumerate(gen_set.generators):
        if j == gen_set.general_index:
            continue
        P = gen.matrix[np.ix_(order, order)]
        off = linalg.max_abs(np.where(same_block, 0.0, P))
        if off > tau_edge * linalg.max_abs(gen.matrix):
            raise NumericalFailure(
                f"block certificate violated by generator {j}: "
                f"off-block magnitude {off:.3e}"
            )


def check_universality(
    gen_set: GeneratorSet,
    tau_edge: float = TAU_EDGE,
    relation_bound: int = RELATION_BOUND,
    tau_rel: float = TAU_RELATION,
    absolute: bool = False,
    spectrum_scan: bool | None = None,
) -> UniversalityVerdict:
    """Decide universality of a validated generator set.

    UNIVERSAL requires one connected component *and* a designated spectrum
    passing the independence scan (heuristically, or exactly for constructed
    directions).  A connected graph with a failed, degenerate, or skipped
    scan is CONDITIONALLY_UNIVERSAL; a disconnected graph is REDUCIBLE with
    the full partition, permutation, and witness component of vertex 0.

    ``spectrum_scan=None`` (auto) runs the scan for d <= SPECTRUM_SCAN_LIMIT
    and skips it above, where it would dominate the runtime.
    """
    gen_set = validate_set(gen_set, require_nondegenerate=False)
    theta = phases_of(gen_set.designated)
    degenerate = spectrum_is_degenerate(theta)

    if gen_set.constructed_general:
        direction = SpectrumIndependenceVerdict(
            IndependenceStatus.CONSTRUCTED_EXACT, None, 0, 0.0
        )
    else:
        if spectrum_scan is None:
            spectrum_scan = gen_set.dim <= SPECTRUM_SCAN_LIMIT
        if spectrum_scan:
            direction = check_general_direction(
                theta, gen_set.algebra, relation_bound, tau_rel
            )
        else:
            direction = SpectrumIndependenceVerdict(
                IndependenceStatus.SKIPPED, None, 0, float("inf")
            )

    graph = build_coupling_graph(gen_set, tau_edge, absolute)
    components, perm, sizes = _partition_and_permutation(connected_components(graph))
    connected = len(components) == 1

    if not connected:
        status = VerdictStatus.REDUCIBLE
        witness = components[0]  # component containing vertex 0
    elif direction.independent and not degenerate:
        status = VerdictStatus.UNIVERSAL
        witness = None
    else:
        status = VerdictStatus.CONDITIONALLY_UNIVERSAL
        witness = None

    return UniversalityVerdict(
        status=status,
        components=components,
        permutation=perm,
        block_sizes=sizes,
        witness_subspace=witness,
        general_direction=direction,
        degenerate_spectrum=degenerate,
    )
