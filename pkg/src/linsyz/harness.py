"""Equivalence batteries: evaluate every predicate that the shape theorems
claim to be equal and record disagreements instance by instance."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .betti import betti_table
from .complexes import (
    SimplicialComplex,
    all_pair_subcomplexes_connected,
    cm_shape_report,
    dual_ideal,
    facet_graph,
    is_cohen_macaulay,
    is_cohen_macaulay_oracle,
)
from .generators import (
    Lcg64,
    cycle_family,
    cycle_perturbations,
    path_ideal_cycle,
    path_ideal_line,
    random_ideal,
    random_pure_complex,
    random_tree_ideal,
)
from .errors import GenerationError
from .graph import (
    GraphShape,
    build_syzygy_graph,
    classify_shape,
    has_linear_relations_combinatorial,
    raw_syzygy_graph,
)
from .ideal import RATIONALS, FieldSpec, MonomialIdeal, fmt_monomial, ideal
from .structure import (
    criterion_verdict,
    cycle_criterion,
    find_admissible_order,
    is_variable_decomposable,
    line_criterion,
    scarf_matches_graph,
    tree_criterion,
)


@dataclass
class InstanceRecord:
    label: str
    values: dict
    groups: list[tuple[str, ...]]
    notes: dict = field(default_factory=dict)

    @property
    def disagreements(self) -> list[tuple[str, ...]]:
        bad = []
        for names in self.groups:
            vals = {self.values[k] for k in names if self.values.get(k) is not None}
            if len(vals) > 1:
                bad.append(names)
        return bad

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "values": self.values,
            "agree": self.agree,
            "disagreements": [list(g) for g in self.disagreements],
            **({"notes": self.notes} if self.notes else {}),
        }


@dataclass
class SuiteResult:
    name: str
    records: list[InstanceRecord]

    @property
    def disagreements(self) -> int:
        return sum(not r.agree for r in self.records)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "instances": len(self.records),
            "disagreements": self.disagreements,
            "records": [r.to_json() for r in self.records],
        }


def _label(I: MonomialIdeal) -> str:
    return f"n={I.n} <" + ",".join(fmt_monomial(g) for g in I.gens) + ">"


def _has_lq(I: MonomialIdeal) -> bool:
    return find_admissible_order(I) is not None


def _is_vd(I: MonomialIdeal) -> bool:
    return is_variable_decomposable(I)[0]


def path_sub_ideals_linear(I: MonomialIdeal, G=None) -> bool:
    """Every sub-ideal whose generators form a path of the tree G_I passes the line criterion."""
    G = G or build_syzygy_graph(I)
    for a, b in combinations(G.vertices, 2):
        path = G.path(a, b)
        if len(path) < 3:
            continue
        if not line_criterion(I.sub(path), order=list(range(1, len(path) + 1))):
            return False
    return True


def pd1_tree_record(I: MonomialIdeal, field_: FieldSpec, values: dict) -> None:
    """Adds the pd = 1 implications as boolean checks (True = consistent)."""
    table = betti_table(I, field_)
    G = build_syzygy_graph(I)
    pd = table.projdim
    d = I.degree
    values["projdim"] = pd
    if table.has_linear_relations(d):
        values["pd1_tree_consistent"] = (pd == 1) == G.is_tree() if I.m > 1 else True
    if pd == 1:
        values["pd1_consistent"] = table.is_linear(d) == G.is_connected()


def tree_record(I: MonomialIdeal, field_: FieldSpec = RATIONALS) -> InstanceRecord:
    G = build_syzygy_graph(I)
    table = betti_table(I, field_)
    d = I.degree
    values = {
        "shape": str(classify_shape(G)),
        "oracle_linear": table.is_linear(d),
        "oracle_relations": table.has_linear_relations(d),
        "combinatorial_relations": has_linear_relations_combinatorial(I, G).holds,
        "tree_criterion": tree_criterion(I, G).holds,
        "path_lines": path_sub_ideals_linear(I, G),
        "linear_quotients": _has_lq(I),
        "variable_decomposable": _is_vd(I),
        "scarf_matches": scarf_matches_graph(I, G),
    }
    groups = [tuple(k for k in values if k not in ("shape", "scarf_matches"))]
    pd1_tree_record(I, field_, values)
    groups.append(("oracle_linear", "scarf_matches"))
    groups.append(("pd1_tree_consistent", "_true"))
    groups.append(("pd1_consistent", "_true"))
    values["_true"] = True
    return InstanceRecord(_label(I), values, groups)


def tree_suite(count: int = 50, seed: int = 3, field_: FieldSpec = RATIONALS) -> SuiteResult:
    """Seeded random tree-shaped ideals with n <= 8, m <= 7."""
    rng = Lcg64(seed)
    records = []
    while len(records) < count:
        n = 4 + rng.below(5)
        m = 2 + rng.below(6)
        s = rng.next32()
        try:
            I = random_tree_ideal(n, m, s)
        except Exception:
            continue
        records.append(tree_record(I, field_))
    return SuiteResult("tree", records)


def cycle_record(I: MonomialIdeal, label: str, field_: FieldSpec = RATIONALS) -> InstanceRecord:
    G = build_syzygy_graph(I)
    table = betti_table(I, field_)
    values = {
        "shape": str(classify_shape(G)),
        "cycle_criterion": cycle_criterion(I, G).holds,
        "pruned_edges": len(G.pruned),
        "oracle_linear": table.is_linear(I.degree),
        "linear_quotients": _has_lq(I),
        "variable_decomposable": _is_vd(I),
        "oracle_relations": table.has_linear_relations(I.degree),
        "combinatorial_relations": has_linear_relations_combinatorial(I, G).holds,
    }
    pd1_tree_record(I, field_, values)
    values["_true"] = True
    groups = [
        ("cycle_criterion", "oracle_linear", "linear_quotients", "variable_decomposable"),
        ("oracle_relations", "combinatorial_relations"),
        ("pd1_tree_consistent", "_true"),
        ("pd1_consistent", "_true"),
    ]
    return InstanceRecord(f"{label}: {_label(I)}", values, groups)


def random_cycles(count: int, seed: int, n_max: int = 7) -> list[MonomialIdeal]:
    """Random equigenerated ideals whose syzygy graph is a cycle of length >= 4."""
    rng = Lcg64(seed)
    out = []
    tries = 0
    while len(out) < count and tries < 20000:
        tries += 1
        n = 4 + rng.below(n_max - 3)
        d = 2 + rng.below(n - 3) if n > 4 else 2
        m = 4 + rng.below(3)
        try:
            I = random_ideal(n, m, d, rng.next32())
        except Exception:
            continue
        shape = classify_shape(build_syzygy_graph(I))
        if shape.tag == GraphShape.CYCLE and shape.length >= 4:
            out.append(I)
    return out


def cycle_suite(n_values=range(4, 9), seed: int = 5, random_count: int = 10, field_: FieldSpec = RATIONALS) -> SuiteResult:
    records = []
    for n in n_values:
        records.append(cycle_record(cycle_family(n), f"cycle_family({n})", field_))
        for k, P in enumerate(cycle_perturbations(n)):
            records.append(cycle_record(P, f"perturbation {k} of cycle_family({n})", field_))
        for t in range(2, n - 2):
            records.append(cycle_record(path_ideal_cycle(n, t), f"I_{t}(C_{n})", field_))
    for k, I in enumerate(random_cycles(random_count, seed)):
        records.append(cycle_record(I, f"random cycle {k}", field_))
    return SuiteResult("cycle", records)


def line_suite(count: int = 20, seed: int = 11, field_: FieldSpec = RATIONALS) -> SuiteResult:
    instances: list[tuple[str, MonomialIdeal]] = []
    for n in range(4, 11):
        for t in range(2, n + 1):
            instances.append((f"I_{t}(L_{n})", path_ideal_line(n, t)))
    rng = Lcg64(seed)
    found = 0
    while found < count:
        n = 4 + rng.below(5)
        m = 2 + rng.below(5)
        try:
            I = random_tree_ideal(n, m, rng.next32())
        except GenerationError:
            continue
        if classify_shape(build_syzygy_graph(I)).tag == GraphShape.LINE:
            instances.append((f"random line {found}", I))
            found += 1
    records = []
    for label, I in instances:
        G = build_syzygy_graph(I)
        values = {
            "shape": str(classify_shape(G)),
            "line_criterion": line_criterion(I, G).holds,
            "oracle_linear": betti_table(I, field_).is_linear(I.degree),
            "linear_quotients": _has_lq(I),
            "variable_decomposable": _is_vd(I),
        }
        groups = [("line_criterion", "oracle_linear", "linear_quotients", "variable_decomposable")]
        if label.startswith("I_"):
            n, t = I.n, I.degree
            values["half_rule"] = t >= n / 2
            groups[0] += ("half_rule",)
        records.append(InstanceRecord(f"{label}: {_label(I)}", values, groups))
    return SuiteResult("line", records)


def path_ideal_suite(field_: FieldSpec = RATIONALS) -> SuiteResult:
    records = []
    for n in range(4, 9):
        for t in range(2, n):
            I = path_ideal_cycle(n, t)
            shape = classify_shape(build_syzygy_graph(I))
            values = {
                "oracle_linear": betti_table(I, field_).is_linear(I.degree),
                "predicted": t in (n - 2, n - 1),
                "shape": str(shape),
                "shape_ok": (shape.tag == GraphShape.CYCLE and shape.length == n) if t < n - 1 else True,
                "_true": True,
            }
            records.append(
                InstanceRecord(f"I_{t}(C_{n})", values, [("oracle_linear", "predicted"), ("shape_ok", "_true")])
            )
    for n in range(4, 11):
        for t in range(2, n + 1):
            I = path_ideal_line(n, t)
            values = {
                "oracle_linear": betti_table(I, field_).is_linear(I.degree),
                "predicted": t >= n / 2,
            }
            records.append(InstanceRecord(f"I_{t}(L_{n})", values, [("oracle_linear", "predicted")]))
    return SuiteResult("path-ideals", records)


def height(I: MonomialIdeal) -> int:
    """Minimum size of a variable set meeting every generator."""
    masks = I.masks
    for k in range(0, I.n + 1):
        for T in combinations(range(I.n), k):
            t = sum(1 << i for i in T)
            if all(g & t for g in masks):
                return k
    return I.n


def cm2_suite(count: int = 40, seed: int = 13, field_: FieldSpec = RATIONALS) -> SuiteResult:
    """Equigenerated ideals with projdim 1: linear resolution iff G_I connected;
    for the CM codimension-2 ones (height 2) also LQ and VD agree."""
    instances = [
        ("(xy,yz,zt)", ideal(4, {1, 2}, {2, 3}, {3, 4})),
        ("(xy,zt)", ideal(4, {1, 2}, {3, 4})),
    ]
    rng = Lcg64(seed)
    tries = 0
    while len(instances) < count + 2 and tries < 5000:
        tries += 1
        n = 4 + rng.below(4)
        d = 2 + rng.below(n - 3)
        m = 2 + rng.below(4)
        try:
            I = random_ideal(n, m, d, rng.next32())
        except Exception:
            continue
        if betti_table(I, field_).projdim == 1:
            instances.append((f"random pd1 {len(instances) - 2}", I))
    records = []
    for label, I in instances:
        G = build_syzygy_graph(I)
        table = betti_table(I, field_)
        values = {
            "projdim": table.projdim,
            "height": height(I),
            "oracle_linear": table.is_linear(I.degree),
            "connected": G.is_connected(),
        }
        groups = [("oracle_linear", "connected")]
        if values["height"] == 2 and values["projdim"] == 1:
            values["cm_codim2"] = True
            values["linear_quotients"] = _has_lq(I)
            values["variable_decomposable"] = _is_vd(I)
            groups = [("oracle_linear", "connected", "linear_quotients", "variable_decomposable")]
        records.append(InstanceRecord(f"{label}: {_label(I)}", values, groups))
    return SuiteResult("cm2", records)


def random_complexes(count: int, seed: int) -> list[SimplicialComplex]:
    rng = Lcg64(seed)
    out = []
    while len(out) < count:
        n = 4 + rng.below(5)
        m = 2 + rng.below(5)
        k = 2 + rng.below(n - 3)
        D = random_pure_complex(n, m, k, rng.next32(), walk=rng.below(4) != 0)
        if D.m >= 2:
            out.append(D)
    return out


def complex_record(D: SimplicialComplex, field_: FieldSpec = RATIONALS) -> InstanceRecord:
    J = dual_ideal(D)
    values: dict = {}
    values["facet_graph_matches"] = facet_graph(D).edges == raw_syzygy_graph(J).edges
    cm = is_cohen_macaulay(D, field_)
    values["cm_criterion_route"] = cm.cohen_macaulay
    values["cm_oracle"] = is_cohen_macaulay_oracle(D, field_)
    crit = criterion_verdict(J)
    values["dual_criterion"] = crit.linear
    values["pair_subcomplexes"] = all_pair_subcomplexes_connected(D).holds
    values["dual_relations_oracle"] = betti_table(J, field_).has_linear_relations(J.degree)
    report = cm_shape_report(D, field_, independent=True)
    values["shape"] = report["shape"]
    groups = [
        ("facet_graph_matches", "_true"),
        ("cm_criterion_route", "cm_oracle", "dual_criterion"),
        ("pair_subcomplexes", "dual_relations_oracle"),
    ]
    values["rule"] = report.get("rule")
    if report.get("rule") in ("d-line", "d-cycle", "d-tree", "d-cycle-pruned"):
        ind = report.get("independent", report)
        values["shellable"] = ind["shellable"]
        values["vertex_decomposable"] = ind["vertexDecomposable"]
        values["condition"] = report["condition"]
        groups.append(("cm_oracle", "shellable", "vertex_decomposable"))
        if report["rule"] != "d-cycle-pruned":
            groups.append(("condition", "cm_oracle"))
    values["_true"] = True
    return InstanceRecord(str(D), values, groups)


def duality_suite(count: int = 30, seed: int = 17, field_: FieldSpec = RATIONALS) -> SuiteResult:
    return SuiteResult("duality", [complex_record(D, field_) for D in random_complexes(count, seed)])


def pd1_records(ideals: list[MonomialIdeal], field_: FieldSpec = RATIONALS) -> SuiteResult:
    records = []
    for I in ideals:
        values = {
            "combinatorial": has_linear_relations_combinatorial(I).holds,
            "oracle": betti_table(I, field_).has_linear_relations(I.degree),
        }
        records.append(InstanceRecord(_label(I), values, [("combinatorial", "oracle")]))
    return SuiteResult("pd1", records)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "line": line_suite,
    "cycle": cycle_suite,
    "tree": tree_suite,
    "cm2": cm2_suite,
    "path-ideals": path_ideal_suite,
    "duality": duality_suite,
}


def run_suite(name: str, count: int | None = None, seed: int | None = None, field_: FieldSpec = RATIONALS) -> SuiteResult:
    fn = SUITES[name]
    kwargs: dict = {"field_": field_}
    if count is not None and name in ("line", "tree", "cm2", "duality"):
        kwargs["count"] = count
    if count is not None and name == "cycle":
        kwargs["random_count"] = count
    if seed is not None and name != "path-ideals":
        kwargs["seed"] = seed
    return fn(**kwargs)
