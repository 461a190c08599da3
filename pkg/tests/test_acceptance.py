"""Exit criteria.  Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""
import json
import random
import time

import pytest

import overcrank
from overcrank import genfun
from overcrank.cli import main
from overcrank.identities import registry, verify
from overcrank.partitions import blo_modified_count, count_statistic
from overcrank.qseries import LaurentPoly, QSeries

from oracles import no_rep_odd_counts, overpartition_counts, partition_counts

crit = pytest.mark.criterion


def table_poly(n, stat):
    return LaurentPoly(count_statistic(n, stat).counts)


@pytest.fixture(scope="module", autouse=True)
def cold_start():
    overcrank.clear_caches()
    yield


@crit(1, "Table 1: counts --n 3 --stat crank1, exact, < 1 s")
def test_ac1_table_one(capsys):
    start = time.perf_counter()
    code = main(["counts", "--n", "3", "--stat", "crank1", "--format", "json"])
    elapsed = time.perf_counter() - start
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out == {"-3": 1, "-2": 1, "-1": 1, "0": 2, "1": 1, "2": 1, "3": 1}
    assert elapsed < 1.0


@crit(2, "q^4 coefficient of Cbar2 = (z^4+3z^3+6z^2+3z+1)/z^2 = crank2 counts, < 1 s")
def test_ac2_cbar2_q4(capsys):
    start = time.perf_counter()
    coeff = genfun.series_Cbar2(4)[4]
    main(["counts", "--n", "4", "--stat", "crank2"])
    elapsed = time.perf_counter() - start
    out = json.loads(capsys.readouterr().out)
    expected = LaurentPoly({2: 1, 1: 3, 0: 6, -1: 3, -2: 1})
    assert coeff == expected
    assert LaurentPoly({int(k): v for k, v in out.items()}) == expected
    assert elapsed < 1.0


@crit(3, "Theorem M1: crank1 counts = Cbar coefficients, 0 <= n <= 30, < 60 s")
def test_ac3_theorem_m1():
    start = time.perf_counter()
    s = genfun.series_Cbar(30)
    for n in range(31):
        assert table_poly(n, "crank1") == s[n], n
    assert time.perf_counter() - start < 60


@crit(4, "Theorem M2: crank2 counts = Cbar2 coefficients, 0 <= n <= 30, < 60 s")
def test_ac4_theorem_m2():
    start = time.perf_counter()
    s = genfun.series_Cbar2(30)
    for n in range(31):
        assert table_poly(n, "crank2") == s[n], n
    assert time.perf_counter() - start < 60


@crit(5, "M2crank: counts = M2 coefficients for n != 2; n = 2 residual is z - 1")
def test_ac5_m2crank():
    s = genfun.series_M2(30)
    for n in range(31):
        residual = s[n] - table_poly(n, "m2crank")
        if n == 2:
            assert residual == LaurentPoly({1: 1, 0: -1})
        else:
            assert residual.is_zero(), n


@crit(6, "N2: m2rank counts = N2 coefficients, 0 <= n <= 30")
def test_ac6_n2():
    s = genfun.series_N2(30)
    for n in range(31):
        assert table_poly(n, "m2rank") == s[n], n


@crit(7, "BLO adjusted count = crank1 counts, 0 <= n <= 20; n = 1 table {-1:1, 0:0, 1:1}")
def test_ac7_blo():
    for n in range(21):
        assert blo_modified_count(n).nonzero() == count_statistic(n, "crank1").nonzero(), n
    assert blo_modified_count(1).counts == {-1: 1, 0: 0, 1: 1}


@crit(8, "Crank anomaly: C q^1 = -1 + z + 1/z vs {-1:1}; agreement for 2 <= n <= 30")
def test_ac8_crank_anomaly():
    s = genfun.series_C(30)
    assert s[1] == LaurentPoly({-1: 1, 0: -1, 1: 1})
    assert count_statistic(1, "crank").counts == {-1: 1}
    for n in range(2, 31):
        assert table_poly(n, "crank") == s[n], n


AC9_ORDERS = {
    "thm-M1": 30,
    "thm-M2": 30,
    "thm-M2crank": 30,
    "blo-equivalence": 30,
    "fifth-order-chi0": 10,
    "tenth-phi": 8,
    "crankdiff-3phi": 8,
    "tenth-psi": 8,
    "crankdiff-3psi": 8,
    "m2rank-X": 10,
    "m2-combo-X": 10,
    "m2rank-chi": 9,
    "m2-combo-chi": 9,
}
_ac9_elapsed = {}


def test_ac9_orders_cover_registry():
    assert sorted(AC9_ORDERS) == sorted(s.id for s in registry())


@crit(9, "verify --all: every registry identity exact at its order, < 10 min total")
@pytest.mark.parametrize("identity", list(AC9_ORDERS))
def test_ac9_identity(identity):
    start = time.perf_counter()
    report = verify(identity, AC9_ORDERS[identity])
    _ac9_elapsed[identity] = time.perf_counter() - start
    print(json.dumps(report.to_record(), sort_keys=True))
    assert report.holds, report.to_record()


@crit(9, "verify --all: every registry identity exact at its order, < 10 min total")
def test_ac9_total_runtime():
    assert len(_ac9_elapsed) == len(AC9_ORDERS)
    assert sum(_ac9_elapsed.values()) < 600


@crit(10, "Properties: z-symmetry to order 30, |m| <= n, class sizes, ring axioms (>= 100 cases)")
def test_ac10_symmetry_and_support():
    for name in ("C", "Cbar", "Cbar2", "M2", "N2"):
        s = genfun.build(name, 30)
        assert s.mirror() == s, name
        for n, c in enumerate(s.coeffs):
            assert all(abs(m) <= n for m in c.terms), (name, n)
    for stat in ("crank", "rank", "crank1", "crank2", "m2crank", "m2rank", "rank_over"):
        for n in range(31):
            assert all(abs(m) <= n for m in count_statistic(n, stat).counts), (stat, n)


@crit(10, "Properties: z-symmetry to order 30, |m| <= n, class sizes, ring axioms (>= 100 cases)")
def test_ac10_class_sizes():
    N = 30
    p, pbar, nro = partition_counts(N), overpartition_counts(N), no_rep_odd_counts(N)
    for n in range(N + 1):
        for stat in ("crank", "rank"):
            assert count_statistic(n, stat).total() == p[n]
        for stat in ("crank1", "crank2", "rank_over"):
            assert count_statistic(n, stat).total() == pbar[n]
        for stat in ("m2crank", "m2rank"):
            assert count_statistic(n, stat).total() == nro[n]


def _random_series(rng, order, unit=False):
    coeffs = []
    for n in range(order + 1):
        if n == 0 and unit:
            coeffs.append(LaurentPoly(1))
            continue
        coeffs.append(LaurentPoly({rng.randint(-3, 3): rng.randint(-5, 5) for _ in range(rng.randint(0, 3))}))
    return QSeries(coeffs)


@crit(10, "Properties: z-symmetry to order 30, |m| <= n, class sizes, ring axioms (>= 100 cases)")
def test_ac10_ring_axioms_and_inverse():
    rng = random.Random(20241026)
    cases = 0
    for _ in range(120):
        order = rng.randint(0, 7)
        a, b, c = (_random_series(rng, order) for _ in range(3))
        u = _random_series(rng, order, unit=True)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert u * u.invert() == QSeries.one(order)
        cases += 1
    assert cases >= 100
