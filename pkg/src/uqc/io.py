"""JSON document formats and text rendering for the command-line front end.

Input documents describe a generator set; complex entries are [re, im] pairs
so no string parsing of "a+bi" is ever needed.  Basis indices are 1-based in
every document (components, permutations, bridge endpoints) and 0-based in
the library; this module is the only place that converts.  ``general_index``
is a position in the generator list and stays 0-based, default 0.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput
from .generators import (
    Algebra,
    Generator,
    GeneratorSet,
    RELATION_BOUND,
    TAU_RELATION,
    validate_set,
)
from .oracle import TAU_CLOSURE_RANK
from .universality import TAU_EDGE, CouplingGraph, UniversalityVerdict

#: UQC_TOLERANCE_PROFILE values and the edge threshold each selects
TOLERANCE_PROFILES = {
    "strict": 1e-13,
    "default": 1e-12,
    "loose": 1e-9,
}


@dataclass
class RunTolerances:
    """Effective tolerances for one CLI invocation.

    Resolution order: built-in defaults, then the UQC_TOLERANCE_PROFILE
    environment profile (edge threshold only), then the input document's
    ``tolerances`` section, then explicit flags.
    """

    tau_edge: float = TAU_EDGE
    tau_rank: float = TAU_CLOSURE_RANK
    tau_rel: float = TAU_RELATION
    relation_bound: int = RELATION_BOUND

    def apply_profile(self, profile: str) -> "RunTolerances":
        if profile not in TOLERANCE_PROFILES:
            raise InvalidInput(
                f"unknown tolerance profile {profile!r}; "
                f"expected one of {sorted(TOLERANCE_PROFILES)}"
            )
        self.tau_edge = TOLERANCE_PROFILES[profile]
        return self

    def apply_overrides(self, overrides: dict) -> "RunTolerances":
        for key, value in overrides.items():
            if key == "relation_bound":
                self.relation_bound = int(value)
            elif key in ("tau_edge", "tau_rank", "tau_rel"):
                setattr(self, key, float(value))
            else:
                raise InvalidInput(f"tolerances: unknown key {key!r}")
        return self


def _require(cond: bool, message: str):
    if not cond:
        raise InvalidInput(message)


def _parse_entry(value, where: str) -> complex:
    _require(
        isinstance(value, (list, tuple)) and len(value) == 2,
        f"{where}: expected an [re, im] pair, got {value!r}",
    )
    re, im = value
    _require(
        isinstance(re, (int, float)) and isinstance(im, (int, float)),
        f"{where}: entries must be numbers, got {value!r}",
    )
    return complex(re, im)


def _parse_matrix(rows, d: int, where: str) -> np.ndarray:
    _require(isinstance(rows, list), f"{where}: matrix must be a list of rows")
    _require(
        len(rows) == d, f"{where}: expected {d} rows, got {len(rows)}"
    )
    M = np.zeros((d, d), dtype=complex)
    for i, row in enumerate(rows):
        _require(isinstance(row, list), f"{where} row {i + 1}: expected a list")
        _require(
            len(row) == d,
            f"{where} row {i + 1}: expected {d} entries, got {len(row)}",
        )
        for k, value in enumerate(row):
            M[i, k] = _parse_entry(value, f"{where} row {i + 1} column {k + 1}")
    return M


def parse_input_document(obj: dict) -> tuple[GeneratorSet, dict]:
    """Parse and validate one input document.

    Returns the validated generator set and the raw ``tolerances`` override
    dict (empty when absent).  Errors always locate the offending field.
    """
    _require(isinstance(obj, dict), "input document must be a JSON object")
    for key in ("algebra", "dimension", "generators"):
        _require(key in obj, f"missing required field {key!r}")
    kind = obj["algebra"]
    _require(kind in ("u", "su"), f"algebra: expected 'u' or 'su', got {kind!r}")
    d = obj["dimension"]
    _require(
        isinstance(d, int) and d >= 1,
        f"dimension: expected a positive integer, got {d!r}",
    )
    algebra = Algebra(kind=kind, dim=d)

    raw_gens = obj["generators"]
    _require(
        isinstance(raw_gens, list) and len(raw_gens) >= 1,
        "generators: expected a non-empty list",
    )
    generators = []
    for j, item in enumerate(raw_gens):
        _require(isinstance(item, dict), f"generators[{j}]: expected an object")
        label = item.get("label", f"g{j + 1}")
        _require(
            isinstance(label, str), f"generators[{j}].label: expected a string"
        )
        _require("matrix" in item, f"generators[{j}] ({label}): missing matrix")
        M = _parse_matrix(item["matrix"], d, f"generators[{j}] ({label}) matrix")
        generators.append(Generator(matrix=M, label=label))

    general_index = obj.get("general_index", 0)
    _require(
        isinstance(general_index, int) and 0 <= general_index < len(generators),
        f"general_index: expected an integer in [0, {len(generators)}), "
        f"got {general_index!r}",
    )

    tolerances = obj.get("tolerances", {})
    _require(isinstance(tolerances, dict), "tolerances: expected an object")

    gen_set = GeneratorSet(
        algebra=algebra,
        generators=tuple(generators),
        general_index=general_index,
    )
    return validate_set(gen_set), tolerances


def load_input_document(path: str) -> tuple[GeneratorSet, dict]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc
    return parse_input_document(obj)


def matrix_to_pairs(M: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in M]


def generator_set_to_document(gen_set: GeneratorSet, tolerances: dict | None = None) -> dict:
    doc = {
        "algebra": gen_set.algebra.kind,
        "dimension": gen_set.algebra.dim,
        "general_index": gen_set.general_index,
        "generators": [
            {"label": g.label or f"g{j + 1}", "matrix": matrix_to_pairs(g.matrix)}
            for j, g in enumerate(gen_set.generators)
        ],
    }
    if tolerances:
        doc["tolerances"] = dict(tolerances)
    return doc


def _finite_or_none(x: float | None):
    if x is None or not math.isfinite(x):
        return None
    return float(x)


def _one_based(indices) -> list:
    return [i + 1 for i in indices]


def direction_to_document(direction) -> dict:
    return {
        "status": direction.status.value,
        "relation": list(direction.relation) if direction.relation is not None else None,
        "search_bound": direction.search_bound,
        "residual": _finite_or_none(direction.residual),
    }


def verdict_to_document(
    verdict: UniversalityVerdict,
    epsilon_max: float | None = None,
    oracle: dict | None = None,
    repair: dict | None = None,
) -> dict:
    doc = {
        "status": verdict.status.value,
        "components": [_one_based(c) for c in verdict.components],
        "block_sizes": list(verdict.block_sizes),
        "permutation": _one_based(verdict.permutation),
        "general_direction": direction_to_document(verdict.general_direction),
        "epsilon_max": _finite_or_none(epsilon_max),
    }
    if verdict.degenerate_spectrum:
        doc["degenerate_spectrum"] = True
    if oracle is not None:
        doc["oracle"] = oracle
    if repair is not None:
        doc["repair"] = repair
    return doc


def repair_plan_to_document(plan) -> dict:
    return {
        "bridges": [
            {"a": a + 1, "b": b + 1, "style": style.value}
            for a, b, style in plan.bridges
        ],
        "added_generators": [
            {"label": g.label, "matrix": matrix_to_pairs(g.matrix)}
            for g in plan.added_generators
        ],
        "noop": len(plan.bridges) == 0,
    }


def closure_report_to_document(report, partition=None) -> dict:
    doc = {
        "dimension": report.dimension,
        "target_dimension": report.target_dimension,
        "rounds": report.rounds,
        "residual_max": _finite_or_none(report.residual_max),
    }
    if partition is not None:
        doc["closure_partition"] = [_one_based(c) for c in partition]
    return doc


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, allow_nan=False)


def write_document(doc: dict, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(doc))
        fh.write("\n")


# ---------------------------------------------------------------------------
# text rendering

_MAX_EDGE_LINES = 40


def render_graph_text(graph: CouplingGraph, labels: list[str]) -> str:
    lines = [f"coupling graph: {graph.dim} vertices, {len(graph.edges)} edges"]
    for n, (r, l) in enumerate(sorted(graph.edges)):
        if n == _MAX_EDGE_LINES:
            lines.append(f"  ... ({len(graph.edges) - _MAX_EDGE_LINES} more edges)")
            break
        sources = ", ".join(
            f"{labels[j]}(|{mag:.3g}|)" for j, mag in graph.edge_source[(r, l)]
        )
        lines.append(f"  {r + 1} -- {l + 1}   via {sources}")
    return "\n".join(lines)


def render_verdict_text(doc: dict, graph_text: str | None = None) -> str:
    lines = [f"status: {doc['status']}"]
    comps = " ".join("{" + ",".join(map(str, c)) + "}" for c in doc["components"])
    lines.append(f"components: {comps}")
    lines.append(f"block sizes: {', '.join(map(str, doc['block_sizes']))}")
    lines.append(f"permutation: ({', '.join(map(str, doc['permutation']))})")
    gd = doc["general_direction"]
    extra = ""
    if gd["relation"] is not None:
        extra = f", relation {gd['relation']}"
    if gd["residual"] is not None:
        extra += f", residual {gd['residual']:.3g}"
    lines.append(
        f"general direction: {gd['status']} (coefficient bound {gd['search_bound']}{extra})"
    )
    if doc.get("degenerate_spectrum"):
        lines.append("warning: designated spectrum is degenerate")
    if doc["epsilon_max"] is not None:
        lines.append(f"epsilon_max: {doc['epsilon_max']:.6g}")
    if "oracle" in doc:
        o = doc["oracle"]
        lines.append(
            f"oracle: closure dimension {o['dimension']} of {o['target_dimension']}, "
            f"agrees: {str(o['agrees']).lower()}"
        )
    if "repair" in doc:
        r = doc["repair"]
        if r["noop"]:
            lines.append("repair: already connected, no bridges added")
        else:
            bridge_list = ", ".join(f"({b['a']},{b['b']})" for b in r["bridges"])
            lines.append(f"repair: added {len(r['bridges'])} bridge(s): {bridge_list}")
    if graph_text:
        lines.append(graph_text)
    return "\n".join(lines)
