"""Deterministic instance families and seeded random instances.

Randomness comes from a 64-bit linear congruential generator with Knuth's
MMIX constants so that instances can be reproduced outside Python.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import SimplicialComplex
from .errors import GenerationError, InputError
from .graph import GraphShape, build_syzygy_graph, classify_shape, is_adjacent
from .ideal import MonomialIdeal, minimalize

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg64:
    """x <- (a*x + c) mod 2**64; outputs are the high 32 bits of the state."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64
        self.next32()

    def next32(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK64
        return self.state >> 32

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next32() % k

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def sample(self, population, k: int) -> list:
        pool = list(population)
        out = []
        for _ in range(k):
            out.append(pool.pop(self.below(len(pool))))
        return out


def path_ideal_cycle(n: int, t: int) -> MonomialIdeal:
    """I_t(C_n): the n cyclic windows {i, ..., i+t-1 mod n}."""
    if not 2 <= t <= n:
        raise InputError(f"need 2 <= t <= n, got t={t}, n={n}")
    windows = [{(i + k) % n + 1 for k in range(t)} for i in range(n)]
    return minimalize(windows, n)


def path_ideal_line(n: int, t: int) -> MonomialIdeal:
    """I_t(L_n): the n - t + 1 consecutive windows of length t."""
    if not 2 <= t <= n:
        raise InputError(f"need 2 <= t <= n, got t={t}, n={n}")
    return minimalize([set(range(i, i + t)) for i in range(1, n - t + 2)], n)


def cycle_family(n: int) -> MonomialIdeal:
    """u_j = x_{[n] minus {j, j+1 mod n}}; G_I is the n-cycle and I is linear."""
    if n < 4:
        raise InputError(f"cycle family needs n >= 4, got {n}")
    full = set(range(1, n + 1))
    return minimalize([full - {j, j % n + 1} for j in range(1, n + 1)], n)


def _swap_neighbor(rng: Lcg64, u: frozenset[int], n: int) -> frozenset[int] | None:
    outside = [x for x in range(1, n + 1) if x not in u]
    if not outside or not u:
        return None
    a = rng.choice(sorted(u))
    b = rng.choice(outside)
    return (u - {a}) | {b}


def random_tree_ideal(
    n: int,
    m: int,
    seed: int,
    d: int | None = None,
    nested: bool = False,
    retries: int = 200,
) -> MonomialIdeal:
    """Random equigenerated ideal whose syzygy graph is a tree.

    Grown by a random walk: each new generator is a one-swap neighbour of an
    existing one and must not be adjacent to any other generator.  With
    ``nested`` every intermediate ideal must also pass the tree criterion.
    """
    from .structure import tree_criterion

    if m < 1:
        raise InputError("m must be positive")
    rng = Lcg64(seed)
    if d is None:
        d = 2 + rng.below(n - 3) if n >= 4 else max(1, n - 1)
    if not 1 <= d < n:
        raise InputError(f"degree {d} impossible with n={n}")
    for _ in range(retries):
        gens = [frozenset(rng.sample(range(1, n + 1), d))]
        stuck = 0
        while len(gens) < m and stuck < 100:
            parent = rng.choice(gens)
            cand = _swap_neighbor(rng, parent, n)
            if cand is None or cand in gens or sum(is_adjacent(cand, g) for g in gens) != 1:
                stuck += 1
                continue
            if nested and not tree_criterion(MonomialIdeal(n, tuple(gens) + (cand,))):
                stuck += 1
                continue
            gens.append(cand)
            stuck = 0
        if len(gens) == m:
            I = MonomialIdeal(n, tuple(gens))
            if build_syzygy_graph(I).is_tree():
                return I
    raise GenerationError(f"no tree-shaped ideal with n={n}, m={m}, d={d} after {retries} tries")


def random_ideal(n: int, m: int, d: int, seed: int) -> MonomialIdeal:
    """m distinct uniformly random d-subsets of [n]."""
    if not 1 <= d <= n:
        raise InputError(f"degree {d} impossible with n={n}")
    rng = Lcg64(seed)
    pool = [frozenset(c) for c in combinations(range(1, n + 1), d)]
    if m > len(pool):
        raise InputError(f"only {len(pool)} monomials of degree {d} in {n} variables")
    return MonomialIdeal(n, tuple(rng.sample(pool, m)))


def random_pure_complex(n: int, m: int, k: int, seed: int, walk: bool = True) -> SimplicialComplex:
    """Pure complex with up to m facets of size k.

    With ``walk`` each facet after the first is a one-swap neighbour of an
    earlier one, which keeps the facet graph connected.
    """
    if not 1 <= k < n:
        raise InputError(f"facet size {k} impossible with n={n}")
    rng = Lcg64(seed)
    facets = [frozenset(rng.sample(range(1, n + 1), k))]
    attempts = 0
    while len(facets) < m and attempts < 50 * m:
        attempts += 1
        if walk:
            cand = _swap_neighbor(rng, rng.choice(facets), n)
        else:
            cand = frozenset(rng.sample(range(1, n + 1), k))
        if cand is not None and cand not in facets:
            facets.append(cand)
    return SimplicialComplex(n, tuple(facets))


def cycle_perturbations(n: int) -> list[MonomialIdeal]:
    """Single-swap mutations of ``cycle_family(n)`` (variables from [n+1])
    whose syzygy graph is still an m-cycle, m = n."""
    base = cycle_family(n)
    out = []
    seen = set()
    for j, u in enumerate(base.gens):
        for a in sorted(u):
            for b in range(1, n + 2):
                if b in u:
                    continue
                gens = list(base.gens)
                gens[j] = (u - {a}) | {b}
                if len(set(gens)) < len(gens):
                    continue
                I = MonomialIdeal(n + 1, tuple(gens))
                key = tuple(sorted(tuple(sorted(g)) for g in gens))
                if key in seen:
                    continue
                shape = classify_shape(build_syzygy_graph(I))
                if shape.tag == GraphShape.CYCLE and shape.length == n:
                    seen.add(key)
                    out.append(I)
    return out
