"""Squarefree monomials, minimal generating sets and base fields.

A squarefree monomial is identified with its support, a ``frozenset`` of
1-based variable indices.  The empty set is the monomial 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import MAX_VARIABLES
from .errors import InputError, PreconditionError

Monomial = frozenset


def monomial(*indices: int) -> frozenset[int]:
    return frozenset(indices)


def to_mask(u: Iterable[int]) -> int:
    mask = 0
    for i in u:
        mask |= 1 << (i - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def colon(u: frozenset[int], v: frozenset[int]) -> frozenset[int]:
    """Return ``u : v``, which for squarefree monomials has support F(u) \\ F(v)."""
    return frozenset(u) - frozenset(v)


def lcm_of(u: frozenset[int], v: frozenset[int]) -> frozenset[int]:
    return frozenset(u) | frozenset(v)


def fmt_monomial(u: Iterable[int]) -> str:
    s = sorted(u)
    return "1" if not s else "*".join(f"x{i}" for i in s)


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal given by its minimal generators.

    Generator ``k`` (1-based) is ``gens[k - 1]``; indices are stable and every
    graph or order in the package refers to them.
    """

    n: int
    gens: tuple[frozenset[int], ...]
    was_minimal: bool = field(default=True, compare=False)

    @property
    def m(self) -> int:
        return len(self.gens)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(g) for g in self.gens)

    @property
    def degrees(self) -> list[int]:
        return [len(g) for g in self.gens]

    @property
    def is_equigenerated(self) -> bool:
        return len(set(self.degrees)) <= 1

    @property
    def degree(self) -> int | None:
        """Common generator degree, or None for mixed degrees / zero ideal."""
        degs = set(self.degrees)
        return degs.pop() if len(degs) == 1 else None

    def gen(self, k: int) -> frozenset[int]:
        if not 1 <= k <= self.m:
            raise InputError(f"generator index {k} out of range 1..{self.m}")
        return self.gens[k - 1]

    def sub(self, indices: Iterable[int]) -> "MonomialIdeal":
        """Ideal generated by a subset of the generators, in the given order."""
        return MonomialIdeal(self.n, tuple(self.gen(k) for k in indices))

    def require_equigenerated(self) -> int:
        d = self.degree
        if self.m == 0 or d is None:
            raise PreconditionError("graph undefined for mixed degrees")
        if d < 1:
            raise PreconditionError("graph undefined for the unit ideal")
        return d

    def __str__(self) -> str:
        body = ", ".join(fmt_monomial(g) for g in self.gens)
        return f"<{body}> in {self.n} variables"


def _check_support(u: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(u)
    for i in s:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise InputError(f"variable index {i} out of range [1, {n}]")
    return s


def minimalize(monomials: Sequence[Iterable[int]], n: int) -> MonomialIdeal:
    """Deduplicate and drop non-minimal monomials, keeping first-occurrence order."""
    if not 0 <= n <= MAX_VARIABLES:
        raise InputError(f"variable count {n} outside 0..{MAX_VARIABLES}")
    supports = [_check_support(u, n) for u in monomials]
    kept: list[frozenset[int]] = []
    for u in supports:
        if u in kept:
            continue
        if any(v < u for v in supports):
            continue
        kept.append(u)
    return MonomialIdeal(n, tuple(kept), was_minimal=len(kept) == len(supports))


def ideal(n: int, *gens: Iterable[int]) -> MonomialIdeal:
    """Shorthand used heavily in tests: ``ideal(4, {1, 2}, {2, 3})``."""
    return minimalize(list(gens), n)


def split_by_variable(I: MonomialIdeal, l: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Split G(I) into generators not divisible by x_l and those divisible by it."""
    if not 1 <= l <= I.n:
        raise InputError(f"variable index {l} out of range [1, {I.n}]")
    without = tuple(g for g in I.gens if l not in g)
    with_l = tuple(g for g in I.gens if l in g)
    return MonomialIdeal(I.n, without), MonomialIdeal(I.n, with_l)


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals or GF(p)."""

    kind: str = "rat"
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind == "rat":
            return
        if self.kind != "gf":
            raise InputError(f"unknown field kind {self.kind!r}")
        if not _is_prime(self.p):
            raise InputError(f"GF(p) needs a prime p, got {self.p}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rat" else self.p

    def __str__(self) -> str:
        return "rat" if self.kind == "rat" else f"gf:{self.p}"


RATIONALS = FieldSpec()


def gf(p: int) -> FieldSpec:
    return FieldSpec("gf", p)


def parse_field(text: str) -> FieldSpec:
    text = text.strip().lower()
    if text in ("rat", "q", "qq", "rationals"):
        return RATIONALS
    if text.startswith("gf:") or text.startswith("gf"):
        digits = text[3:] if text.startswith("gf:") else text[2:]
        try:
            return gf(int(digits))
        except ValueError:
            raise InputError(f"bad field spec {text!r}") from None
    raise InputError(f"bad field spec {text!r}; use 'rat' or 'gf:p'")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True
