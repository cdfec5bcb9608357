"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (``pytest tests/test_acceptance.py -s`` shows the lines
inline; they are printed unconditionally either way) or directly with
``python3 tests/test_acceptance.py``.
"""

import json
import random
import sys
import time
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))
import oracle  # noqa: E402

from gorenstein_families import codim2 as c2  # noqa: E402
from gorenstein_families.codim2 import Codim2Data  # noqa: E402
from gorenstein_families.errors import HilbertBurchViolation, Indeterminate  # noqa: E402
from gorenstein_families.families import (  # noqa: E402
    ConstructionSpec,
    Kind,
    family_dim_h1_mu4,
    family_dim_h1_mu5,
    family_dim_nb,
    nb_exact_value,
    nb_hom_value,
    stratum_codim_h1_mu4,
)
from gorenstein_families.graded import hilbert_polynomial, series_oracle  # noqa: E402
from gorenstein_families.report import emit, load_report, parse_input, run  # noqa: E402
from gorenstein_families.resolution import (  # noqa: E402
    artinian_profile,
    check_self_dual,
    hilbert_function_crosscheck,
    mapping_cone_resolution,
    minimality_flag,
    reconcile_ranks,
    scheme_profile,
)

ROOT = Path(__file__).resolve().parents[1]
JOBS = sorted((ROOT / "demos" / "jobs").glob("*.json"))

L4 = Codim2Data(4, (3,) * 4, (4,) * 3)
L6 = Codim2Data(6, (3,) * 4, (4,) * 3)
L5 = Codim2Data(5, (4,) * 5, (5,) * 4)
E6 = Codim2Data(6, (2,) * 3, (3,) * 2)


def res(D, kind, s):
    return mapping_cone_resolution(D, ConstructionSpec(kind, s))


def criterion_1():
    for s in range(1, 11):
        assert family_dim_h1_mu4(L4, s).dimension == 12 * s + 63
    # below the simplified range the ext^1 correction is 1 and 4
    assert family_dim_h1_mu4(L4, 0).dimension == 63 + 1 == 64
    assert family_dim_h1_mu4(L4, -1).dimension == 51 + 4 == 55


def criterion_2():
    HB = [oracle.dim_at(4, L4.n1, L4.n2, "quotient", v) for v in range(20)]
    for s in range(0, 6):
        p = artinian_profile(res(L4, Kind.H1_MU4, s))
        assert p.socle_degree == 2 * s + 8
        half = HB[: s + 4] + [6 * s + 19]
        assert p.h_vector == tuple(half + half[-2::-1])
        assert half[-2] == 6 * s + 16
        assert p.h_vector == p.h_vector[::-1]


def criterion_3():
    for s in range(1, 9):
        assert family_dim_h1_mu4(L6, s).dimension == 2 * (s + 4) ** 2 * (s + 5) + 47
    assert family_dim_h1_mu4(L6, -2).dimension == 71
    assert [stratum_codim_h1_mu4(L6, s) for s in (0, -1)] == [1, 6]
    p = scheme_profile(res(L6, Kind.H1_MU4, 0))
    assert (p.degree, p.genus) == (81, 244)


def criterion_4():
    for s in range(5, 13):
        assert family_dim_nb(E6, s).dimension == (s + 1) * (s - 1) ** 2 + 23
    assert family_dim_nb(E6, 3, assume_ext2_zero=True).dimension == 36
    assert family_dim_nb(E6, 4, assume_ext2_zero=True).dimension == 71
    p = scheme_profile(res(E6, Kind.NB, 4))
    assert (p.degree, p.genus) == (17, 18)
    for s in range(-5, 13):
        assert nb_exact_value(E6, s) == nb_hom_value(E6, s)


def criterion_5():
    def q(s):
        return 15 * s * s + 125 * s + 324

    for s in range(1, 9):
        assert family_dim_h1_mu5(L5, s).dimension == q(s)
    for s in (-2, -1, 0):
        assert family_dim_h1_mu5(L5, s).dimension == q(s) + comb(4 - s, 4)
    assert family_dim_h1_mu5(L5, 0).breakdown["dim(N_B)_0"] == 60
    for s in range(-2, 9):
        assert c2.h1_dual_dims(L5)(s) == 15 * s * s + 125 * s + 265
    assert artinian_profile(res(L5, Kind.H1_MU5, -3)).h_vector == (1, 5, 11, 15, 11, 5, 1)
    assert artinian_profile(res(L5, Kind.H1_MU5, -2)).h_vector == (1, 5, 15, 31, 45, 45, 31, 15, 5, 1)
    assert isinstance(family_dim_h1_mu5(L5, -3).dimension, Indeterminate)


def criterion_6():
    s = 1
    h1a = res(L4, Kind.H1_MU4, s)
    assert [dict(F.counts()) for F in h1a.terms] == [
        {0: 1}, {-3: 4, -5: 3}, {-4: 3, -7: 6, -10: 3}, {-9: 3, -11: 4}, {-14: 1}
    ]
    nba = res(E6, Kind.NB, 5)
    assert [dict(F.counts()) for F in nba.terms] == [
        {0: 1}, {-2: 3, -4: 6}, {-3: 2, -5: 12, -7: 2}, {-6: 6, -8: 3}, {-10: 1}
    ]
    h2a = res(L5, Kind.H1_MU5, s)
    assert [dict(F.counts()) for F in h2a.terms] == [
        {0: 1}, {-4: 5, -6: 4}, {-5: 4, -9: 10, -12: 6}, {-11: 6, -14: 10, -18: 4}, {-17: 4, -19: 5}, {-23: 1}
    ]
    assert all(check_self_dual(r) for r in (h1a, nba, h2a))

    printed_h1a = [[(0, 1)], [(-3, 4), (-5, 3)], [(-4, 3), (-7, 6), (-10, 3)], [(-9, 8), (-11, 4)], [(-14, 1)]]
    assert reconcile_ranks(h1a, printed_h1a) == [
        "corrected-rank: term 3, R(-9) printed with rank 8, self-duality forces 3"
    ]
    printed_h2a = [
        [(0, 1)], [(-4, 5), (-6, 4)], [(-5, 4), (-9, 6), (-12, 6)],
        [(-11, 6), (-14, 10), (-18, 4)], [(-17, 8), (-19, 5)], [(-23, 1)],
    ]
    notes = reconcile_ranks(h2a, printed_h2a)
    assert [n.split("forces ")[1] for n in notes] == ["10", "4"]
    assert "term 4, R(-17)" in notes[1] and "term 2, R(-9)" in notes[0]

    assert not minimality_flag(res(L4, Kind.H1_MU4, 0)).minimal
    assert all(minimality_flag(res(L4, Kind.H1_MU4, s)).minimal for s in range(1, 12))
    assert not minimality_flag(res(E6, Kind.NB, 4)).minimal
    assert all(minimality_flag(res(E6, Kind.NB, s)).minimal for s in range(5, 16))


def criterion_7():
    rng = random.Random(20240607)
    for _ in range(200):
        D = Codim2Data(*oracle.random_betti_data(rng))
        assert D.realizable
        nums = oracle.numerators(D.N, D.n1, D.n2)
        for name, make in c2.module_constructors().items():
            e = make(D)
            got = e.values(-20, 40)
            assert min(got) >= 0, (D, name)
            assert got == series_oracle(e.flat, D.N, 40, -20), (D, name)
            assert got == oracle.expand(nums[name], D.N, -20, 40), (D, name)
        eta = c2.conormal_dims(D)
        euler = c2.hom_conormal_conormal_dims(D)(0) - sum(eta(a) for a in D.n1) + sum(eta(b) for b in D.n2)
        assert euler == c2.normal_dims(D)(0)
        kinds = [Kind.NB] + {4: [Kind.H1_MU4], 5: [Kind.H1_MU5]}.get(D.mu, [])
        for kind in kinds:
            for s in range(-3, 9):
                spec = ConstructionSpec(kind, s)
                # equal numerators: the two Hilbert functions agree in every degree
                assert hilbert_function_crosscheck(D, spec)
        assert hilbert_polynomial(c2.quotient_dims(D)).degree == D.N - 3


def criterion_8():
    assert len(JOBS) == 5
    for path in JOBS:
        rep = run(parse_input(path.read_text()))
        text = emit(rep, "json")
        back = load_report(text)
        assert back == rep
        assert emit(back, "json") == text
        assert json.loads(emit(back, "json")) == json.loads(text)
    bad = json.loads(JOBS[0].read_text())
    bad["rel_degrees"] = [4, 4, 5]
    bad.pop("printed_resolution", None)
    with pytest.raises(HilbertBurchViolation):
        parse_input(json.dumps(bad))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def _check(n):
    t0 = time.perf_counter()
    try:
        CRITERIA[n - 1]()
    except BaseException:
        print(f"ACCEPTANCE criterion {n}: FAIL")
        raise
    print(f"ACCEPTANCE criterion {n}: PASS ({time.perf_counter() - t0:.2f}s)")


@pytest.mark.parametrize("n", range(1, len(CRITERIA) + 1))
def test_criterion(n, capsys):
    with capsys.disabled():
        print()
        _check(n)


if __name__ == "__main__":
    failed = 0
    for n in range(1, len(CRITERIA) + 1):
        try:
            _check(n)
        except Exception as exc:  # keep going, report at the end
            failed += 1
            print(f"  {type(exc).__name__}: {exc}")
    sys.exit(1 if failed else 0)
