"""Graded Betti numbers of squarefree monomial ideals via Hochster's formula.

    beta_{i,j}(I) = sum_{W subset [n], |W| = j} dim H~_{j-i-2}(Delta|_W)

where Delta is the Stanley-Reisner complex of I.  Only W in the lcm lattice of
G(I) are visited: any other W has a vertex lying in no generator contained in
W, so Delta|_W is a cone over it and contributes nothing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .config import Caps, default_caps
from .errors import PreconditionError, ResourceError
from .homology import homology_of_faces
from .ideal import RATIONALS, FieldSpec, MonomialIdeal

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    entries: tuple[tuple[tuple[int, int], int], ...]
    field: FieldSpec = RATIONALS

    @classmethod
    def from_dict(cls, entries: dict[tuple[int, int], int], field: FieldSpec) -> "BettiTable":
        return cls(tuple(sorted((k, v) for k, v in entries.items() if v)), field)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.as_dict().get(key, 0)

    @property
    def projdim(self) -> int:
        return max(i for (i, _), _b in self.entries)

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries if k == i)

    def is_linear(self, d: int) -> bool:
        return all(j == i + d for (i, j), _b in self.entries)

    def has_linear_relations(self, d: int) -> bool:
        return all(j == d + 1 for (i, j), _b in self.entries if i == 1)

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in self.entries],
        }

    def macaulay(self) -> str:
        """Macaulay2-style display: columns are i, rows are j - i."""
        if not self.entries:
            return "(zero)"
        table = self.as_dict()
        cols = range(0, self.projdim + 1)
        shifts = sorted({j - i for (i, j) in table})
        width = max(len(str(b)) for b in table.values()) + 1
        width = max(width, len(str(self.projdim)) + 1, 2)
        lines = ["      " + "".join(str(i).rjust(width) for i in cols)]
        lines.append("total:" + "".join(str(self.total(i)).rjust(width) for i in cols))
        for s in range(shifts[0], shifts[-1] + 1):
            cells = []
            for i in cols:
                b = table.get((i, i + s), 0)
                cells.append(("." if b == 0 else str(b)).rjust(width))
            lines.append(f"{s:>5}:" + "".join(cells))
        return "\n".join(lines)


def lcm_lattice(masks: tuple[int, ...]) -> set[int]:
    """Supports of lcms of all nonempty subsets of generators."""
    seen: set[int] = set()
    for g in masks:
        seen |= {g | x for x in seen}
        seen.add(g)
    return seen


def restriction_faces(W: int, masks: tuple[int, ...]) -> list[int]:
    """Faces of Delta|_W: subsets of W containing no generator support."""
    inside = [g for g in masks if g & W == g]
    faces = []
    sub = W
    while True:
        if not any(g & sub == g for g in inside):
            faces.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & W
    return faces


def _check(I: MonomialIdeal, caps: Caps) -> None:
    if I.m == 0:
        raise PreconditionError("Betti table of the zero ideal is undefined")
    if any(not g for g in I.gens):
        raise PreconditionError("Betti table of the unit ideal is undefined here")
    if I.n > caps.oracle_n:
        raise ResourceError(f"n={I.n} exceeds oracle cap {caps.oracle_n}")


def betti_table(I: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps | None = None) -> BettiTable:
    caps = caps or default_caps()
    _check(I, caps)
    return _betti_cached(I.n, I.gens, field, caps.faces)


@lru_cache(maxsize=4096)
def _betti_cached(n: int, gens: tuple[frozenset[int], ...], field: FieldSpec, face_cap: int) -> BettiTable:
    masks = MonomialIdeal(n, gens).masks
    entries: dict[tuple[int, int], int] = {}
    for W in sorted(lcm_lattice(masks)):
        faces = restriction_faces(W, masks)
        if len(faces) > face_cap:
            raise ResourceError(f"restriction has {len(faces)} faces, cap {face_cap}")
        j = W.bit_count()
        for k, h in homology_of_faces(faces, field).nonzero().items():
            i = j - k - 2
            entries[(i, j)] = entries.get((i, j), 0) + h
    return BettiTable.from_dict(entries, field)


def has_linear_resolution(I: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps | None = None) -> bool:
    d = I.degree
    if d is None:
        log.warning("mixed generator degrees: no d-linear resolution by convention")
        return False
    return betti_table(I, field, caps).is_linear(d)


def has_linear_relations_oracle(I: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps | None = None) -> bool:
    d = I.degree
    if d is None:
        log.warning("mixed generator degrees: linear relations undefined, reporting False")
        return False
    return betti_table(I, field, caps).has_linear_relations(d)


def projdim(I: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps | None = None) -> int:
    return betti_table(I, field, caps).projdim
