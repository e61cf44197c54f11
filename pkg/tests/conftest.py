"""Shared instances from the worked examples, plus hypothesis strategies."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from linsyz.ideal import MonomialIdeal, ideal

# u, w, z, v: a line u - w - z - v
EX1 = ideal(5, {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {3, 4, 5})
# u, v, w, z, q: connected line, but no linear relations
EX2 = ideal(6, {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {4, 5, 6}, {3, 5, 6})
# <xy, zy, zq, qx>
C4 = ideal(4, {1, 2}, {2, 3}, {3, 4}, {1, 4})
# <xyz, yzq, zqw, qwe, wex, xye>
I3C6 = ideal(6, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 1}, {1, 2, 6})


@pytest.fixture
def ex1() -> MonomialIdeal:
    return EX1


@pytest.fixture
def ex2() -> MonomialIdeal:
    return EX2


@st.composite
def equigenerated_ideals(draw, n_min=2, n_max=6, m_max=6):
    """Random equigenerated squarefree ideals with 1 <= d < n."""
    n = draw(st.integers(n_min, n_max))
    d = draw(st.integers(1, n - 1))
    supports = draw(
        st.lists(
            st.frozensets(st.integers(1, n), min_size=d, max_size=d),
            min_size=1,
            max_size=m_max,
            unique=True,
        )
    )
    return MonomialIdeal(n, tuple(supports))


@st.composite
def squarefree_ideals(draw, n_max=6, m_max=6):
    """Arbitrary (possibly mixed-degree) minimal ideals without the unit."""
    n = draw(st.integers(1, n_max))
    raw = draw(st.lists(st.frozensets(st.integers(1, n), min_size=1), min_size=1, max_size=m_max))
    from linsyz.ideal import minimalize

    return minimalize(raw, n)


@st.composite
def pure_complexes(draw, n_max=7, m_max=6):
    from linsyz.complexes import simplicial_complex

    n = draw(st.integers(3, n_max))
    k = draw(st.integers(1, n - 1))
    facets = draw(
        st.lists(st.frozensets(st.integers(1, n), min_size=k, max_size=k), min_size=1, max_size=m_max, unique=True)
    )
    return simplicial_complex(n, facets)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
