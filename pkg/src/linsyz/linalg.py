"""Exact ranks of sparse integer matrices.

Rows are ``{column: value}`` dicts.  Over the rationals elimination is
fraction-free (rows are combined with integer multipliers and divided by the
gcd of their entries); over GF(p) everything is reduced modulo p.  No floating
point is involved.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

from .ideal import FieldSpec


def _content(row: dict[int, int]) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def rank_rational(rows: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                g = _content(r)
                if g != 1:
                    r = {c: v // g for c, v in r.items()}
                pivots[lead] = r
                break
            a, b = piv[lead], r[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            # r <- a*r - b*piv kills the lead column
            new = {c: a * v for c, v in r.items()} if a != 1 else dict(r)
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            g = _content(new) if new else 1
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            r = new
    return len(pivots)


def rank_mod_p(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(r[lead], -1, p)
                pivots[lead] = {c: (v * inv) % p for c, v in r.items()}
                break
            b = r[lead]
            for c, v in piv.items():
                nv = (r.get(c, 0) - b * v) % p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return len(pivots)


def rank(rows: Iterable[dict[int, int]], field: FieldSpec) -> int:
    if field.kind == "rat":
        return rank_rational(rows)
    return rank_mod_p(rows, field.p)
