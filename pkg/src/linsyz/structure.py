"""Linear quotients, variable-decomposability, the Scarf complex, and the
shape-specific linear-resolution criteria for lines, cycles and trees."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .betti import betti_table
from .config import Caps, default_caps
from .errors import InputError, PreconditionError, ResourceError
from .graph import (
    GraphShape,
    SyzygyGraph,
    build_syzygy_graph,
    classify_shape,
    is_adjacent,
)
from .ideal import RATIONALS, FieldSpec, MonomialIdeal


@dataclass(frozen=True)
class Check:
    """A boolean verdict plus an optional witness (failure site or certificate)."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


# -- linear quotients ---------------------------------------------------------


def _can_follow(masks: Sequence[int], prefix: Sequence[int], i: int) -> int | None:
    """None if <prefix> : u_i is generated by variables, else a bad j in prefix.

    Indices are 0-based positions into ``masks``.
    """
    ui = masks[i]
    singles = 0
    for k in prefix:
        diff = masks[k] & ~ui
        if diff & (diff - 1) == 0:
            singles |= diff
    for j in prefix:
        if not (masks[j] & ~ui) & singles:
            return j
    return None


def is_admissible_order(I: MonomialIdeal, order: Sequence[int]) -> Check:
    """Check an order of generator indices; the witness is (u_i, u_j) at the first failure."""
    if sorted(order) != list(range(1, I.m + 1)):
        raise InputError(f"{list(order)} is not a permutation of 1..{I.m}")
    masks = I.masks
    pos = [k - 1 for k in order]
    for t in range(1, len(pos)):
        bad = _can_follow(masks, pos[:t], pos[t])
        if bad is not None:
            return Check(False, (pos[t] + 1, bad + 1))
    return Check(True, tuple(order))


def connected_prefix_order(G: SyzygyGraph) -> list[int] | None:
    """BFS order from the smallest vertex: every prefix induces a connected subgraph."""
    if not G.is_connected():
        return None
    order = [G.vertices[0]]
    seen = {order[0]}
    head = 0
    while head < len(order):
        for w in sorted(G.neighbors(order[head])):
            if w not in seen:
                seen.add(w)
                order.append(w)
        head += 1
    return order


def find_admissible_order(I: MonomialIdeal, G: SyzygyGraph | None = None) -> tuple[int, ...] | None:
    """An admissible order of G(I), or None when I has no linear quotients."""
    if I.m <= 1:
        return tuple(range(1, I.m + 1))
    if I.is_equigenerated:
        G = G or build_syzygy_graph(I)
        guess = connected_prefix_order(G)
        if guess is not None and is_admissible_order(I, guess):
            return tuple(guess)

    masks = I.masks
    m = I.m
    dead: set[int] = set()

    def extend(prefix: list[int], used: int) -> list[int] | None:
        if len(prefix) == m:
            return prefix
        if used in dead:
            return None
        options = [i for i in range(m) if not used >> i & 1 and _can_follow(masks, prefix, i) is None]
        # most constrained first: candidates sharing the most with the prefix
        options.sort(key=lambda i: (-sum(is_adjacent(I.gens[i], I.gens[k]) for k in prefix), i))
        for i in options:
            found = extend(prefix + [i], used | 1 << i)
            if found is not None:
                return found
        dead.add(used)
        return None

    for start in range(m):
        found = extend([start], 1 << start)
        if found is not None:
            return tuple(k + 1 for k in found)
    return None


# -- variable-decomposability ---------------------------------------------------


@dataclass(frozen=True)
class DecompositionTree:
    """Leaf when ``variable`` is None; otherwise ``without``/``with_`` are the
    subtrees for the generators not divisible / divisible by x_variable."""

    generators: tuple[int, ...]
    variable: int | None = None
    without: "DecompositionTree | None" = None
    with_: "DecompositionTree | None" = None

    def to_json(self) -> dict:
        if self.variable is None:
            return {"generators": list(self.generators)}
        return {
            "generators": list(self.generators),
            "shedding": self.variable,
            "without": self.without.to_json(),
            "with": self.with_.to_json(),
        }


def is_shedding_variable(I: MonomialIdeal, indices: Sequence[int], l: int) -> bool:
    without = [k for k in indices if l not in I.gen(k)]
    with_l = [k for k in indices if l in I.gen(k)]
    if not without:
        return False
    return all(any(I.gen(j) - I.gen(i) == {l} for j in with_l) for i in without)


def is_variable_decomposable(I: MonomialIdeal) -> tuple[bool, DecompositionTree | None]:
    memo: dict[tuple[int, ...], DecompositionTree | None] = {}

    def solve(idx: tuple[int, ...]) -> DecompositionTree | None:
        if len(idx) <= 1:
            return DecompositionTree(idx)
        if idx in memo:
            return memo[idx]
        memo[idx] = None
        variables = sorted(set().union(*(I.gen(k) for k in idx)))
        for l in variables:
            if not is_shedding_variable(I, idx, l):
                continue
            without = tuple(k for k in idx if l not in I.gen(k))
            with_l = tuple(k for k in idx if l in I.gen(k))
            left = solve(without)
            if left is None:
                continue
            right = solve(with_l)
            if right is None:
                continue
            memo[idx] = DecompositionTree(idx, l, left, right)
            break
        return memo[idx]

    tree = solve(tuple(range(1, I.m + 1)))
    return tree is not None, tree


# -- Scarf complex -----------------------------------------------------------------


@dataclass(frozen=True)
class ScarfComplex:
    faces: frozenset[tuple[int, ...]]

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def faces_of_size(self, k: int) -> list[tuple[int, ...]]:
        return sorted(f for f in self.faces if len(f) == k)


def scarf_complex(I: MonomialIdeal, caps: Caps | None = None) -> ScarfComplex:
    caps = caps or default_caps()
    m = I.m
    if m > caps.scarf_m:
        raise ResourceError(f"m={m} exceeds Scarf cap {caps.scarf_m}")
    masks = I.masks
    lcms = [0] * (1 << m)
    counts: dict[int, int] = {}
    for s in range(1, 1 << m):
        low = (s & -s).bit_length() - 1
        lcms[s] = lcms[s & (s - 1)] | masks[low]
    for s in range(1 << m):
        counts[lcms[s]] = counts.get(lcms[s], 0) + 1
    faces = frozenset(
        tuple(i + 1 for i in range(m) if s >> i & 1)
        for s in range(1 << m)
        if counts[lcms[s]] == 1
    )
    return ScarfComplex(faces)


def scarf_matches_graph(I: MonomialIdeal, G: SyzygyGraph | None = None, caps: Caps | None = None) -> bool:
    G = G or build_syzygy_graph(I)
    if not G.is_tree():
        raise PreconditionError("Scarf comparison needs G_I to be a tree")
    scarf = scarf_complex(I, caps)
    if any(len(f) > 2 for f in scarf.faces):
        return False
    vertices = {f[0] for f in scarf.faces_of_size(1)}
    edges = set(scarf.faces_of_size(2))
    return vertices == set(G.vertices) and edges == set(G.edges)


# -- shape criteria ------------------------------------------------------------------


def _shape(I: MonomialIdeal, G: SyzygyGraph | None) -> tuple[SyzygyGraph, GraphShape]:
    G = G or build_syzygy_graph(I)
    return G, classify_shape(G)


def line_criterion(I: MonomialIdeal, G: SyzygyGraph | None = None, order: Sequence[int] | None = None) -> Check:
    """Nested supports along the line: F(u_k) within F(u_i) | F(u_j) for j <= k <= i.

    The witness on failure is the triple (u_j, u_k, u_i) of generator indices.
    """
    if order is None:
        G, shape = _shape(I, G)
        if shape.tag != GraphShape.LINE:
            raise PreconditionError(f"line criterion needs a line, got {shape}")
        order = shape.witness
    gens = [I.gen(k) for k in order]
    s = len(gens)
    for j in range(s):
        for i in range(j + 2, s):
            union = gens[j] | gens[i]
            for k in range(j + 1, i):
                if not gens[k] <= union:
                    return Check(False, (order[j], order[k], order[i]))
    return Check(True)


def cycle_criterion(I: MonomialIdeal, G: SyzygyGraph | None = None) -> Check:
    """Cyclic missing-pair pattern: m = n, degree n - 2, and each variable is
    absent from exactly two cyclically consecutive generators.

    n and d are counted after discarding variables that divide no generator or
    every generator (neither affects linearity).
    """
    G, shape = _shape(I, G)
    if shape.tag != GraphShape.CYCLE or shape.length < 4:
        raise PreconditionError(f"cycle criterion needs cycle(m), m >= 4; got {shape}")
    order = shape.witness
    common = frozenset.intersection(*I.gens)
    variables = frozenset.union(*I.gens) - common
    m, n = len(order), len(variables)
    if m != n:
        return Check(False, ("m != n", m, n))
    d = I.degree - len(common)
    if d != n - 2:
        return Check(False, ("d + 2 != n", d, n))
    missing: dict[int, list[int]] = {x: [] for x in variables}
    for pos, k in enumerate(order):
        for x in variables - I.gen(k):
            missing[x].append(pos)
    labeling = [0] * m
    for x, where in missing.items():
        if len(where) != 2:
            return Check(False, ("variable not missing exactly twice", x))
        a, b = where
        if b - a == 1:
            labeling[a] = x
        elif (a, b) == (0, m - 1):
            labeling[m - 1] = x
        else:
            return Check(False, ("missing from non-consecutive generators", x))
    # labeling[p] is the variable absent from generators p and p + 1 (cyclically)
    return Check(True, tuple(labeling))


def tree_criterion(I: MonomialIdeal, G: SyzygyGraph | None = None) -> Check:
    """Every interior vertex w of every tree path a..b has F(u_w) within F(u_a) | F(u_b)."""
    G = G or build_syzygy_graph(I)
    if not G.is_tree():
        raise PreconditionError("tree criterion needs G_I to be a tree")
    for a, b in combinations(G.vertices, 2):
        path = G.path(a, b)
        union = I.gen(a) | I.gen(b)
        for w in path[1:-1]:
            if not I.gen(w) <= union:
                return Check(False, (a, w, b))
    return Check(True)


def leaf_extension_check(I: MonomialIdeal, v: frozenset[int]) -> Check:
    """Whether <I, v> keeps linear quotients when v hangs off G_I as a leaf.

    Holds iff the variable in F(u_i) minus F(v), for the unique neighbour u_i of
    v, divides every generator of I.
    """
    v = frozenset(v)
    d = I.require_equigenerated()
    if len(v) != d:
        raise PreconditionError("v must have the generators' degree")
    if any(g <= v or v <= g for g in I.gens):
        raise PreconditionError("v is comparable with a generator of I")
    if not build_syzygy_graph(I).is_tree():
        raise PreconditionError("G_I must be a tree")
    if find_admissible_order(I) is None:
        raise PreconditionError("I must have linear quotients")
    J = MonomialIdeal(max(I.n, max(v, default=0)), I.gens + (v,))
    GJ = build_syzygy_graph(J)
    nbrs = GJ.neighbors(J.m)
    if len(nbrs) != 1:
        raise PreconditionError(f"v is not a leaf of G_<I,v> (degree {len(nbrs)})")
    (i,) = nbrs
    (l,) = I.gen(i) - v
    for t in range(1, I.m + 1):
        if l not in I.gen(t):
            return Check(False, (i, l, t))
    return Check(True, (i, l))


# -- dispatcher ------------------------------------------------------------------------


@dataclass(frozen=True)
class ResolutionVerdict:
    linear: bool | None
    rule: str
    shape: str
    linear_quotients: bool | None = None
    variable_decomposable: bool | None = None
    witness: tuple | None = None
    oracle_used: bool = False

    def __bool__(self) -> bool:
        return bool(self.linear)

    def to_json(self) -> dict:
        return {
            "linear": self.linear,
            "rule": self.rule,
            "shape": self.shape,
            "linearQuotients": self.linear_quotients,
            "variableDecomposable": self.variable_decomposable,
            "witness": list(self.witness) if self.witness is not None else None,
            "oracleUsed": self.oracle_used,
        }


SHAPE_RULES = {
    GraphShape.COMPLETE: "complete-graph",
    GraphShape.LINE: "line-criterion",
    GraphShape.TREE: "tree-criterion",
    GraphShape.DISCONNECTED: "disconnected",
}


def criterion_verdict(I: MonomialIdeal, G: SyzygyGraph | None = None) -> ResolutionVerdict:
    """Shape-theorem verdict without touching the oracle; ``linear`` is None
    when no criterion covers the shape."""
    I.require_equigenerated()
    G, shape = _shape(I, G)
    tag = shape.tag
    if tag == GraphShape.COMPLETE:
        return ResolutionVerdict(True, "complete-graph", str(shape), True, True)
    if tag == GraphShape.DISCONNECTED:
        return ResolutionVerdict(False, "disconnected", str(shape), False, False)
    if tag == GraphShape.LINE:
        c = line_criterion(I, G)
    elif tag == GraphShape.TREE:
        c = tree_criterion(I, G)
    elif tag == GraphShape.CYCLE and shape.length == 3:
        return ResolutionVerdict(True, "triangle", str(shape), True, True)
    elif tag == GraphShape.CYCLE and G.pruned:
        # the cycle criterion is only sound when no type-(i) edge was removed;
        # e.g. <x2x4, x1x2, x1x3, x1x4> prunes to C_4, is linear, fails (b)
        return ResolutionVerdict(None, "pruned-cycle", str(shape))
    elif tag == GraphShape.CYCLE:
        c = cycle_criterion(I, G)
        return ResolutionVerdict(c.holds, "cycle-criterion", str(shape), c.holds, c.holds, c.witness)
    else:
        return ResolutionVerdict(None, "no-criterion", str(shape))
    return ResolutionVerdict(c.holds, SHAPE_RULES[tag], str(shape), c.holds, c.holds, c.witness)


def decide_linear_resolution(
    I: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps | None = None
) -> ResolutionVerdict:
    v = criterion_verdict(I)
    if v.linear is not None:
        return v
    linear = betti_table(I, field, caps).is_linear(I.degree)
    return ResolutionVerdict(linear, "oracle", v.shape, oracle_used=True)
