"""Acceptance criteria 1-10: each test records one PASS/FAIL line that is
printed in the terminal summary (see conftest.py).

Criteria 5 and 7 are marked xfail(strict=True): the measured disagreements
are genuine counterexamples (written up in the decisions ledger), so the
lines print FAIL while the suite stays green; if they ever start passing,
strict xfail turns the run red.
"""

from __future__ import annotations

import time
from math import comb

import pytest

from linsyz.betti import _betti_cached, betti_table
from linsyz.cli import run
from linsyz.complexes import dual_ideal, is_cohen_macaulay, simplicial_complex
from linsyz.generators import (
    Lcg64,
    cycle_family,
    cycle_perturbations,
    path_ideal_cycle,
    path_ideal_line,
    random_ideal,
)
from linsyz.graph import build_syzygy_graph, classify_shape, has_linear_relations_combinatorial
from linsyz.harness import (
    cycle_suite,
    duality_suite,
    line_suite,
    random_complexes,
    tree_suite,
)
from linsyz.ideal import gf, ideal
from linsyz.io import format_ideal
from linsyz.structure import (
    cycle_criterion,
    decide_linear_resolution,
    find_admissible_order,
    is_variable_decomposable,
)

from conftest import C4, EX2, I3C6

RESULTS: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)


_cache: dict = {}


def battery4():
    if "tree" not in _cache:
        _cache["tree"] = tree_suite(count=50, seed=3)
    return _cache["tree"]


def battery5():
    if "cycle" not in _cache:
        _cache["cycle"] = cycle_suite()
    return _cache["cycle"]


def random_equigenerated(count: int = 50, seed: int = 23):
    if "random" in _cache:
        return _cache["random"]
    rng = Lcg64(seed)
    out = []
    while len(out) < count:
        n = 4 + rng.below(4)
        d = 1 + rng.below(n - 1)
        m = 2 + rng.below(5)
        if m > comb(n, d):
            continue
        out.append(random_ideal(n, m, d, rng.next32()))
    _cache["random"] = out
    return out


# -- 1 ---------------------------------------------------------------------------------


def test_criterion_01_reference_betti_tables():
    expected = [
        ("Example 2", EX2, {(0, 3): 5, (1, 4): 4, (1, 5): 1, (2, 6): 1}),
        ("C_4", C4, {(0, 2): 4, (1, 3): 4, (2, 4): 1}),
        ("I_3(C_6)", I3C6, {(0, 3): 6, (1, 4): 6, (2, 6): 1}),
    ]
    failures = []
    slowest = 0.0
    for name, I, table in expected:
        for field in (None, gf(2)):
            _betti_cached.cache_clear()
            start = time.perf_counter()
            got = (betti_table(I, field) if field else betti_table(I)).as_dict()
            elapsed = time.perf_counter() - start
            slowest = max(slowest, elapsed)
            if got != table or elapsed >= 1.0:
                failures.append((name, str(field), got, elapsed))
    record(1, not failures, f"3 tables x 2 fields exact; slowest {slowest:.3f}s (< 1 s)")
    assert not failures


# -- 2 ---------------------------------------------------------------------------------


def test_criterion_02_cycle_path_ideals():
    start = time.perf_counter()
    bad = []
    for n in range(4, 9):
        for t in range(2, n):
            I = path_ideal_cycle(n, t)
            linear = betti_table(I).is_linear(I.degree)
            if linear != (t in (n - 2, n - 1)):
                bad.append(("linearity", n, t))
            if t < n - 1 and str(classify_shape(build_syzygy_graph(I))) != f"cycle({n})":
                bad.append(("shape", n, t))
    elapsed = time.perf_counter() - start
    record(2, not bad and elapsed < 60, f"I_t(C_n), n=4..8: {len(bad)} mismatches; {elapsed:.2f}s (< 60 s)")
    assert not bad and elapsed < 60


# -- 3 ---------------------------------------------------------------------------------


def test_criterion_03_line_path_ideals():
    start = time.perf_counter()
    bad = []
    for n in range(4, 11):
        for t in range(2, n + 1):
            I = path_ideal_line(n, t)
            if betti_table(I).is_linear(I.degree) != (2 * t >= n):
                bad.append((n, t))
    elapsed = time.perf_counter() - start
    record(3, not bad and elapsed < 60, f"I_t(L_n), n=4..10: {len(bad)} mismatches; {elapsed:.2f}s (< 60 s)")
    assert not bad and elapsed < 60


# -- 4 ---------------------------------------------------------------------------------

TREE_KEYS = (
    "oracle_linear",
    "oracle_relations",
    "combinatorial_relations",
    "tree_criterion",
    "path_lines",
    "linear_quotients",
    "variable_decomposable",
)


def test_criterion_04_tree_battery():
    suite = battery4()
    assert all(build_syzygy_graph(_ideal(r)).is_tree() for r in suite.records)
    bad = [r.label for r in suite.records if len({r.values[k] for k in TREE_KEYS}) > 1]
    linear = sum(r.values["oracle_linear"] for r in suite.records)
    record(
        4,
        len(suite.records) == 50 and not bad,
        f"{len(suite.records)} tree instances ({linear} linear): {len(bad)} disagreements among 7 predicates",
    )
    assert len(suite.records) == 50 and not bad


def _ideal(rec):
    # harness labels end in "n=<n> <x1*x2,...>"
    text = rec.label[rec.label.index("n=") :]
    head, body = text.split(" ", 1)
    n = int(head[2:])
    gens = [{int(v[1:]) for v in mono.split("*")} for mono in body.strip("<>").split(",")]
    return ideal(n, *gens)


# -- 5 ---------------------------------------------------------------------------------


@pytest.mark.xfail(strict=True, reason="pruned-cycle counterexamples; see decisions ledger")
def test_criterion_05_cycle_battery():
    family_bad = []
    for n in range(4, 9):
        I = cycle_family(n)
        ok = (
            cycle_criterion(I).holds
            and find_admissible_order(I) is not None
            and is_variable_decomposable(I)[0]
            and betti_table(I).is_linear(n - 2)
        )
        if not ok:
            family_bad.append(n)
    perturbed = [P for n in range(4, 9) for P in cycle_perturbations(n)]
    pert_bad = []
    for P in perturbed:
        crit = cycle_criterion(P).holds
        orc = betti_table(P).is_linear(P.degree)
        if crit or orc:
            pert_bad.append((format_ideal(P).strip().replace("\n", "; "), crit, orc))
    ok = not family_bad and not pert_bad
    record(
        5,
        ok,
        f"cycleFamily n=4..8: {5 - len(family_bad)}/5 pass; perturbations keeping C_n: "
        f"{len(pert_bad)}/{len(perturbed)} not failing both (all have pruned edges, are linear, fail the criterion)",
    )
    assert not family_bad
    assert not pert_bad


def test_criterion_05_family_part_holds():
    # the cycleFamily half of criterion 5 on its own
    for n in range(4, 9):
        I = cycle_family(n)
        assert cycle_criterion(I) and find_admissible_order(I) is not None
        assert is_variable_decomposable(I)[0] and betti_table(I).is_linear(n - 2)


# -- 6 ---------------------------------------------------------------------------------


def _pd_checks(I):
    table = betti_table(I)
    G = build_syzygy_graph(I)
    bad = []
    if I.m > 1 and table.has_linear_relations(I.degree) and (table.projdim == 1) != G.is_tree():
        bad.append("pd1-tree")
    if table.projdim == 1 and table.is_linear(I.degree) != G.is_connected():
        bad.append("pd1")
    return bad


def test_criterion_06_projdim_one():
    ideals = [_ideal(r) for r in battery4().records]
    ideals += [cycle_family(n) for n in range(4, 9)]
    ideals += [P for n in range(4, 9) for P in cycle_perturbations(n)]
    ideals += [path_ideal_cycle(n, t) for n in range(4, 9) for t in range(2, n - 2)]
    ideals += random_equigenerated()
    bad = [(str(I), b) for I in ideals for b in _pd_checks(I)]
    record(6, not bad, f"{len(ideals)} instances (batteries 4-5 + 50 random): {len(bad)} disagreements")
    assert not bad


# -- 7 ---------------------------------------------------------------------------------


@pytest.mark.xfail(strict=True, reason="Scarf converse fails on tree-shaped ideals; see decisions ledger")
def test_criterion_07_scarf_battery():
    suite = battery4()
    bad = [r.label for r in suite.records if r.values["oracle_linear"] != r.values["scarf_matches"]]
    record(
        7,
        not bad,
        f"{len(suite.records)} tree instances: {len(bad)} disagreements "
        "(Scarf complex equals G_I yet resolution not linear)",
    )
    assert not bad


# -- 8 ---------------------------------------------------------------------------------


def test_criterion_08_duality(tmp_path):
    complexes = random_complexes(30, 17)
    suite = duality_suite(count=30, seed=17)
    graph_bad = [r.label for r in suite.records if not r.values["facet_graph_matches"]]
    shape_bad = [r.label for r in suite.records if not r.agree]
    cli_bad = []
    for k, D in enumerate(complexes):
        J = dual_ideal(D)
        p = tmp_path / f"dual{k}.txt"
        p.write_text(format_ideal(J))
        code, report = run(["check", str(p), "--method", "both"])
        cm = is_cohen_macaulay(D).cohen_macaulay
        if code != 0 or report["verdicts"]["oracle"]["value"] != cm or decide_linear_resolution(J).linear != cm:
            cli_bad.append(str(D))
    shaped = sum(r.values.get("rule") in ("d-line", "d-cycle", "d-tree", "d-cycle-pruned") for r in suite.records)
    ok = not graph_bad and not shape_bad and not cli_bad and len(suite.records) == 30
    record(
        8,
        ok,
        f"30 pure complexes ({shaped} on shape-rule complexes): facet-graph mismatches {len(graph_bad)}, "
        f"CM vs dual `check --method both` {len(cli_bad)}, CM/shellable/VD disagreements {len(shape_bad)}",
    )
    assert ok


# -- 9 ---------------------------------------------------------------------------------


def test_criterion_09_cm_codim_two():
    def dual_complex(I):
        full = frozenset(range(1, I.n + 1))
        return simplicial_complex(I.n, [full - g for g in I.gens])

    yes = is_cohen_macaulay(dual_complex(ideal(4, {1, 2}, {2, 3}, {3, 4}))).cohen_macaulay
    no = is_cohen_macaulay(dual_complex(ideal(4, {1, 2}, {3, 4}))).cohen_macaulay
    record(9, yes is True and no is False, f"(xy,yz,zt) -> CM {yes}; (xy,zt) -> CM {no}")
    assert yes is True and no is False


# -- 10 --------------------------------------------------------------------------------


def test_criterion_10_linear_relations_everywhere():
    ideals = [_ideal(r) for r in battery4().records]
    ideals += [cycle_family(n) for n in range(4, 9)]
    ideals += [P for n in range(4, 9) for P in cycle_perturbations(n)]
    ideals += [path_ideal_cycle(n, t) for n in range(4, 9) for t in range(2, n)]
    ideals += [path_ideal_line(n, t) for n in range(4, 11) for t in range(2, n + 1)]
    ideals += random_equigenerated()
    ideals += [dual_ideal(D) for D in random_complexes(30, 17)]
    ideals += [_ideal(r) for r in line_suite().records if r.label.startswith("random")]
    bad = []
    for I in ideals:
        for field in (None, gf(2)):
            table = betti_table(I, field) if field else betti_table(I)
            if has_linear_relations_combinatorial(I).holds != table.has_linear_relations(I.degree):
                bad.append((str(I), str(field)))
    record(10, not bad, f"{len(ideals)} generated instances x 2 fields: {len(bad)} disagreements")
    assert not bad

