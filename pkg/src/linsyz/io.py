"""Plain-text formats for ideals and complexes.

Both share one layout: a header line ``n <int>`` followed by one support per
line as space-separated 1-based indices.  Blank lines and ``#`` comments are
skipped.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .complexes import SimplicialComplex, simplicial_complex
from .errors import InputError
from .ideal import MonomialIdeal, minimalize


def _parse_rows(text: str) -> tuple[int, list[list[int]]]:
    n = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise InputError(f"line {lineno}: expected header 'n <int>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad variable count {parts[1]!r}") from None
            if n < 0:
                raise InputError(f"line {lineno}: negative variable count")
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise InputError(f"line {lineno}: indices must be integers: {raw!r}") from None
    if n is None:
        raise InputError("missing header 'n <int>'")
    return n, rows


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse and minimalize; ``was_minimal`` records whether anything was dropped."""
    n, rows = _parse_rows(text)
    return minimalize(rows, n)


def parse_complex(text: str) -> SimplicialComplex:
    n, rows = _parse_rows(text)
    if not rows:
        raise InputError("a complex needs at least one facet")
    return simplicial_complex(n, rows)


def _format(n: int, supports: Iterable[frozenset[int]]) -> str:
    lines = [f"n {n}"]
    lines += [" ".join(str(x) for x in sorted(s)) for s in supports]
    return "\n".join(lines) + "\n"


def format_ideal(I: MonomialIdeal) -> str:
    return _format(I.n, I.gens)


def format_complex(D: SimplicialComplex) -> str:
    return _format(D.n, D.facets)


def read_ideal(path: str | Path) -> MonomialIdeal:
    return parse_ideal(_read(path))


def read_complex(path: str | Path) -> SimplicialComplex:
    return parse_complex(_read(path))


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
