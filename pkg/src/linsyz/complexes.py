"""Simplicial complexes: Stanley-Reisner dictionary, Alexander duality, the
facet graph G_Delta, and Cohen-Macaulay / shellable / vertex-decomposable
decisions through the dual ideal."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .betti import betti_table
from .config import Caps, default_caps
from .errors import InputError, PreconditionError, ResourceError
from .graph import GraphShape, SyzygyGraph, build_syzygy_graph, classify_shape, raw_syzygy_graph
from .ideal import RATIONALS, FieldSpec, MonomialIdeal, from_mask, to_mask
from .structure import Check, decide_linear_resolution, is_variable_decomposable


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[frozenset[int], ...]

    @property
    def m(self) -> int:
        return len(self.facets)

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def facet(self, k: int) -> frozenset[int]:
        if not 1 <= k <= self.m:
            raise InputError(f"facet index {k} out of range 1..{self.m}")
        return self.facets[k - 1]

    def index_of(self, F: Iterable[int]) -> int:
        F = frozenset(F)
        try:
            return self.facets.index(F) + 1
        except ValueError:
            raise InputError(f"{sorted(F)} is not a facet") from None

    def require_pure(self) -> None:
        if not self.is_pure:
            raise PreconditionError("complex is not pure")

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"<{body}> on {self.n} vertices"


def simplicial_complex(n: int, facets: Sequence[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from generating faces, keeping only the maximal ones."""
    sets = []
    for f in facets:
        s = frozenset(f)
        if any(not 1 <= v <= n for v in s):
            raise InputError(f"facet {sorted(s)} has a vertex outside [1, {n}]")
        sets.append(s)
    kept: list[frozenset[int]] = []
    for s in sets:
        if s in kept or any(s < t for t in sets):
            continue
        kept.append(s)
    return SimplicialComplex(n, tuple(kept))


def _faces_of_ideal(I: MonomialIdeal) -> list[int]:
    masks = I.masks
    return [s for s in range(1 << I.n) if not any(g & s == g for g in masks)]


def stanley_reisner_complex(I: MonomialIdeal, caps: Caps | None = None) -> SimplicialComplex:
    """The complex whose faces are the subsets of [n] containing no generator support."""
    caps = caps or default_caps()
    if I.n > caps.oracle_n:
        raise ResourceError(f"n={I.n} exceeds oracle cap {caps.oracle_n}")
    faces = _faces_of_ideal(I)
    present = set(faces)
    facets = [s for s in faces if all(s >> v & 1 or (s | 1 << v) not in present for v in range(I.n))]
    facets.sort(key=lambda s: sorted(from_mask(s)))
    return SimplicialComplex(I.n, tuple(from_mask(s) for s in facets))


def stanley_reisner_ideal(D: SimplicialComplex, caps: Caps | None = None) -> MonomialIdeal:
    """Minimal nonfaces of D."""
    caps = caps or default_caps()
    if D.n > caps.oracle_n:
        raise ResourceError(f"n={D.n} exceeds oracle cap {caps.oracle_n}")
    facet_masks = [to_mask(f) for f in D.facets]

    def is_face(s: int) -> bool:
        return any(s & f == s for f in facet_masks)

    gens = []
    for s in sorted(range(1, 1 << D.n), key=lambda s: (s.bit_count(), sorted(from_mask(s)))):
        if is_face(s):
            continue
        if all(is_face(s ^ (1 << v)) for v in range(D.n) if s >> v & 1):
            gens.append(from_mask(s))
    return MonomialIdeal(D.n, tuple(gens))


def dual_ideal(D: SimplicialComplex) -> MonomialIdeal:
    """I_{D^vee}: generated by x_{[n] minus F} over the facets F."""
    if not D.facets:
        raise PreconditionError("complex has no facets")
    full = frozenset(range(1, D.n + 1))
    gens = []
    for F in D.facets:
        if F == full:
            raise PreconditionError("a facet equals [n]; the dual generator would be 1")
        gens.append(full - F)
    return MonomialIdeal(D.n, tuple(gens))


def alexander_dual(D: SimplicialComplex, caps: Caps | None = None) -> SimplicialComplex:
    """Facets of D^vee are complements of the minimal nonfaces of D."""
    full = frozenset(range(1, D.n + 1))
    nonfaces = stanley_reisner_ideal(D, caps).gens
    return SimplicialComplex(D.n, tuple(full - g for g in nonfaces))


def facet_graph(D: SimplicialComplex) -> SyzygyGraph:
    """Codimension-one adjacency of facets; checked index-for-index against
    the unpruned syzygy graph of the dual ideal."""
    D.require_pure()
    edges = frozenset(
        (a + 1, b + 1)
        for a, b in combinations(range(D.m), 2)
        if len(D.facets[a] & D.facets[b]) == len(D.facets[a]) - 1
    )
    G = SyzygyGraph(tuple(range(1, D.m + 1)), edges)
    full = frozenset(range(1, D.n + 1))
    if D.m > 1 and full not in D.facets:
        dual_edges = raw_syzygy_graph(dual_ideal(D)).edges
        if dual_edges != edges:
            raise AssertionError("facet graph differs from the dual syzygy graph")
    return G


def is_strongly_connected(D: SimplicialComplex) -> bool:
    return facet_graph(D).is_connected()


def pair_subcomplex(D: SimplicialComplex, F: Iterable[int], G: Iterable[int]) -> list[int]:
    """Indices of facets containing F & G (the facets of D^(F,G))."""
    a, b = D.index_of(F), D.index_of(G)
    common = D.facet(a) & D.facet(b)
    return [k for k in range(1, D.m + 1) if common <= D.facet(k)]


def pair_subcomplex_connected(D: SimplicialComplex, F: Iterable[int], G: Iterable[int]) -> bool:
    D.require_pure()
    return facet_graph(D).induced(pair_subcomplex(D, F, G)).is_connected()


def all_pair_subcomplexes_connected(D: SimplicialComplex) -> Check:
    """First failing facet pair (lexicographic on indices) as witness."""
    D.require_pure()
    G = facet_graph(D)
    for a, b in combinations(range(1, D.m + 1), 2):
        common = D.facet(a) & D.facet(b)
        keep = [k for k in range(1, D.m + 1) if common <= D.facet(k)]
        if not G.induced(keep).is_connected():
            return Check(False, (a, b))
    return Check(True)


@dataclass(frozen=True)
class CMVerdict:
    cohen_macaulay: bool
    reason: str
    shape: str | None = None
    oracle_used: bool = False

    def __bool__(self) -> bool:
        return self.cohen_macaulay


def is_cohen_macaulay(D: SimplicialComplex, field: FieldSpec = RATIONALS, caps: Caps | None = None) -> CMVerdict:
    """Eagon-Reiner: D is CM over the field iff its dual ideal has a linear resolution."""
    if not D.is_pure:
        return CMVerdict(False, "not pure")
    if D.m == 1:
        return CMVerdict(True, "simplex")
    v = decide_linear_resolution(dual_ideal(D), field, caps)
    return CMVerdict(bool(v.linear), v.rule, v.shape, v.oracle_used)


def is_cohen_macaulay_oracle(D: SimplicialComplex, field: FieldSpec = RATIONALS, caps: Caps | None = None) -> bool:
    """Same route, but always through the Betti table of the dual."""
    if not D.is_pure:
        return False
    if D.m == 1:
        return True
    J = dual_ideal(D)
    return betti_table(J, field, caps).is_linear(J.degree)


def is_shellable(D: SimplicialComplex, caps: Caps | None = None) -> Check:
    """Backtracking search for a shelling order (witness: facet indices)."""
    D.require_pure()
    caps = caps or default_caps()
    if D.m > caps.shelling_m:
        raise ResourceError(f"m={D.m} exceeds shelling cap {caps.shelling_m}")
    facets = [to_mask(f) for f in D.facets]
    m = D.m
    if m <= 1:
        return Check(True, tuple(range(1, m + 1)))
    r = facets[0].bit_count() - 1

    def fits(prefix: list[int], i: int) -> bool:
        Fi = facets[i]
        ridges = [Fi & facets[k] for k in prefix if (Fi & facets[k]).bit_count() == r]
        if not ridges:
            return False
        return all(any((Fi & facets[j]) & ~R == 0 for R in ridges) for j in prefix)

    dead: set[int] = set()

    def extend(prefix: list[int], used: int) -> list[int] | None:
        if len(prefix) == m:
            return prefix
        if used in dead:
            return None
        options = [i for i in range(m) if not used >> i & 1 and fits(prefix, i)]
        options.sort(key=lambda i: (-max((facets[i] & facets[k]).bit_count() for k in prefix), i))
        for i in options:
            found = extend(prefix + [i], used | 1 << i)
            if found is not None:
                return found
        dead.add(used)
        return None

    for start in range(m):
        found = extend([start], 1 << start)
        if found is not None:
            return Check(True, tuple(k + 1 for k in found))
    return Check(False)


def is_vertex_decomposable_pure(D: SimplicialComplex) -> bool:
    D.require_pure()
    if D.m == 1:
        return True
    ok, _tree = is_variable_decomposable(dual_ideal(D))
    return ok


# -- dual shape report -------------------------------------------------------


def _line_condition(D: SimplicialComplex, order: Sequence[int]) -> Check:
    F = [D.facet(k) for k in order]
    for j in range(len(F)):
        for i in range(j + 2, len(F)):
            for k in range(j + 1, i):
                if not (F[i] & F[j]) <= F[k]:
                    return Check(False, (order[j], order[k], order[i]))
    return Check(True)


def _cycle_condition(D: SimplicialComplex, order: Sequence[int]) -> Check:
    # vertices in no facet or in every facet are ignored (cone points / unused)
    vertices = frozenset.union(*D.facets) - frozenset.intersection(*D.facets)
    m = len(order)
    if m != len(vertices):
        return Check(False, ("fails: m != n", m, len(vertices)))
    where: dict[int, list[int]] = {v: [] for v in vertices}
    for pos, k in enumerate(order):
        for v in D.facet(k) & vertices:
            where[v].append(pos)
    for v, pos in where.items():
        if len(pos) != 2:
            return Check(False, ("vertex not in exactly two facets", v))
        a, b = pos
        if not (b - a == 1 or (a, b) == (0, m - 1)):
            return Check(False, ("vertex in non-consecutive facets", v))
    return Check(True)


def _tree_condition(D: SimplicialComplex, G: SyzygyGraph) -> Check:
    for a, b in combinations(G.vertices, 2):
        path = G.path(a, b)
        common = D.facet(a) & D.facet(b)
        for w in path[1:-1]:
            if not common <= D.facet(w):
                return Check(False, (a, w, b))
    return Check(True)


def cm_shape_report(
    D: SimplicialComplex,
    field: FieldSpec = RATIONALS,
    caps: Caps | None = None,
    independent: bool = False,
) -> dict:
    """Classify G_Delta and apply the matching facet-side condition.

    For line, cycle (m >= 4) and tree shapes the condition decides CM,
    shellability and vertex-decomposability at once.  With ``independent`` the
    three properties are also computed separately (Betti oracle, shelling
    search, decomposition search) and compared.
    """
    D.require_pure()
    report: dict = {"pure": True, "m": D.m, "n": D.n}
    if D.m == 1:
        shape = GraphShape(GraphShape.LINE, (1,))
        G = SyzygyGraph((1,), frozenset())
    else:
        facet_graph(D)
        G = build_syzygy_graph(dual_ideal(D))
        shape = classify_shape(G)
    report["shape"] = str(shape)
    cond: Check | None = None
    if shape.tag == GraphShape.LINE:
        cond, rule = _line_condition(D, shape.witness), "d-line"
    elif shape.tag == GraphShape.CYCLE and shape.length >= 4:
        cond, rule = _cycle_condition(D, shape.witness), "d-cycle"
    elif shape.tag == GraphShape.TREE:
        cond, rule = _tree_condition(D, G), "d-tree"
    if cond is not None and rule == "d-cycle" and G.pruned:
        # the cycle condition is unsound once a type-(i) edge has been pruned
        # (see cycle_criterion); keep it for inspection, decide independently
        report.update(rule="d-cycle-pruned", condition=cond.holds, conditionApplies=False)
        cond = None
    if cond is not None:
        report.update(
            rule=rule,
            condition=cond.holds,
            witness=list(cond.witness) if cond.witness else None,
            cm=cond.holds,
            shellable=cond.holds,
            vertexDecomposable=cond.holds,
        )
    if cond is None or independent:
        oracle = {
            "cm": is_cohen_macaulay_oracle(D, field, caps),
            "shellable": is_shellable(D, caps).holds,
            "vertexDecomposable": is_vertex_decomposable_pure(D),
        }
        if cond is None:
            report.setdefault("rule", "independent")
            report.setdefault("condition", None)
            report.update(witness=None, **oracle)
        else:
            report["independent"] = oracle
            report["agree"] = all(v == cond.holds for v in oracle.values())
    return report
