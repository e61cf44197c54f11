"""Reduced simplicial homology over Q or GF(p) from boundary-matrix ranks.

Faces are bitmasks over the vertex set.  Conventions: the void complex (no
faces at all) is acyclic in every degree, while the complex {emptyset} has
reduced H_{-1} of dimension one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .config import Caps, default_caps
from .errors import ResourceError
from .ideal import RATIONALS, FieldSpec, to_mask
from .linalg import rank


@dataclass(frozen=True)
class HomologyProfile:
    """``dims[k + 1]`` is dim H~_k for k = -1, 0, 1, ..."""

    dims: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        idx = k + 1
        if 0 <= idx < len(self.dims):
            return self.dims[idx]
        return 0

    def nonzero(self) -> dict[int, int]:
        return {k - 1: h for k, h in enumerate(self.dims) if h}

    @property
    def euler(self) -> int:
        return sum((-1) ** (k - 1) * h for k, h in enumerate(self.dims))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low)
        mask ^= low
    return out


def closure(facets: Iterable[int]) -> set[int]:
    """All faces (as masks) of the complex generated by the given facet masks."""
    faces: set[int] = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return faces


def homology_of_faces(faces: Iterable[int], field: FieldSpec = RATIONALS) -> HomologyProfile:
    """Reduced homology of a complex given by its full (downward-closed) face set."""
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    if not by_dim:
        return HomologyProfile(())
    top = max(by_dim)
    index = {k: {f: i for i, f in enumerate(sorted(fs))} for k, fs in by_dim.items()}
    ranks = {}
    for k in range(0, top + 1):
        lower = index.get(k - 1)
        if not lower or k not in by_dim:
            ranks[k] = 0
            continue
        rows = []
        for f in by_dim[k]:
            row = {}
            for pos, bit in enumerate(_bits(f)):
                row[lower[f ^ bit]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[k] = rank(rows, field)
    dims = []
    for k in range(-1, top + 1):
        c_k = len(by_dim.get(k, ()))
        dims.append(c_k - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return HomologyProfile(tuple(dims))


def reduced_homology(
    facets: Iterable[Iterable[int]],
    field: FieldSpec = RATIONALS,
    caps: Caps | None = None,
) -> HomologyProfile:
    """Reduced homology of the complex generated by ``facets`` (vertex sets)."""
    caps = caps or default_caps()
    masks = [to_mask(f) for f in facets]
    vertices = 0
    for f in masks:
        vertices |= f
    if vertices.bit_count() > caps.oracle_n:
        raise ResourceError(f"{vertices.bit_count()} vertices exceed oracle cap {caps.oracle_n}")
    faces = closure(masks)
    if len(faces) > caps.faces:
        raise ResourceError(f"{len(faces)} faces exceed cap {caps.faces}")
    return homology_of_faces(faces, field)
