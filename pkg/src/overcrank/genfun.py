"""Two-variable crank/rank generating functions and tenth/fifth order mock thetas."""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .qseries import LaurentPoly, PochSpec, QSeries, poch_product


def poch(order: int, c: int = 1, e: int = 0, b: int = 1, d: int = 1, n=None) -> QSeries:
    return poch_product(PochSpec(c=c, e=e, b=b, d=d, n=n), order)


def _crank_denominator(order: int, step: int) -> QSeries:
    """(z q^step; q^step)_inf (z^-1 q^step; q^step)_inf"""
    return poch(order, e=1, b=step, d=step) * poch(order, e=-1, b=step, d=step)


@lru_cache(maxsize=None)
def series_C(N: int) -> QSeries:
    """(q;q)_inf / ((zq;q)_inf (z^-1 q;q)_inf)"""
    return poch(N) * _crank_denominator(N, 1).invert()


@lru_cache(maxsize=None)
def series_Cbar(N: int) -> QSeries:
    """(q^2;q^2)_inf / ((zq;q)_inf (z^-1 q;q)_inf)"""
    return poch(N, b=2, d=2) * _crank_denominator(N, 1).invert()


@lru_cache(maxsize=None)
def series_Cbar2(N: int) -> QSeries:
    num = poch(N, c=-1) * poch(N, b=2, d=2)
    den = poch(N, b=1, d=2) * _crank_denominator(N, 2)
    return num * den.invert()


@lru_cache(maxsize=None)
def series_M2(N: int) -> QSeries:
    """Raw product (q^2;q^2)(-q;q^2) / ((zq^2;q^2)(z^-1q^2;q^2)).

    The coefficient of q^2 still carries the extra z - 1; see
    :func:`m2_anomaly`.
    """
    num = poch(N, b=2, d=2) * poch(N, c=-1, b=1, d=2)
    return num * _crank_denominator(N, 2).invert()


def m2_anomaly(N: int) -> QSeries:
    """(z - 1) q^2 at order N."""
    return QSeries.monomial(2, N, LaurentPoly({1: 1, 0: -1}))


@lru_cache(maxsize=None)
def series_N2(N: int) -> QSeries:
    """sum_n q^(n^2) (-q;q^2)_n / ((zq^2;q^2)_n (z^-1 q^2;q^2)_n)"""
    total = QSeries.zero(N)
    n = 0
    while n * n <= N:
        num = poch(N, c=-1, b=1, d=2, n=n).shift(n * n)
        den = poch(N, e=1, b=2, d=2, n=n) * poch(N, e=-1, b=2, d=2, n=n)
        total = total + num * den.invert()
        n += 1
    return total


def _eulerian_sum(N: int, lead, denominator) -> QSeries:
    """sum_n sign(n) q^lead(n) / denominator(n), stopping once lead(n) > N.

    ``lead(n)`` returns (sign, exponent); ``denominator(n)`` a QSeries with
    constant term 1.
    """
    total = QSeries.zero(N)
    n = 0
    while True:
        sign, e = lead(n)
        if e > N:
            return total
        total = total + denominator(n).invert().shift(e) * sign
        n += 1


@lru_cache(maxsize=None)
def chi0(N: int) -> QSeries:
    """sum_n q^n / (q^(n+1);q)_n"""
    return _eulerian_sum(N, lambda n: (1, n), lambda n: poch(N, b=n + 1, n=n))


@lru_cache(maxsize=None)
def phi(N: int) -> QSeries:
    """Tenth order phi: sum_n q^C(n+1,2) / (q;q^2)_(n+1)"""
    return _eulerian_sum(N, lambda n: (1, comb(n + 1, 2)), lambda n: poch(N, d=2, n=n + 1))


@lru_cache(maxsize=None)
def psi(N: int) -> QSeries:
    """Tenth order psi: sum_n q^C(n+2,2) / (q;q^2)_(n+1)"""
    return _eulerian_sum(N, lambda n: (1, comb(n + 2, 2)), lambda n: poch(N, d=2, n=n + 1))


@lru_cache(maxsize=None)
def X(N: int) -> QSeries:
    """Tenth order X: sum_n (-1)^n q^(n^2) / (-q;q)_(2n)"""
    return _eulerian_sum(N, lambda n: ((-1) ** n, n * n), lambda n: poch(N, c=-1, n=2 * n))


@lru_cache(maxsize=None)
def chi(N: int) -> QSeries:
    """Tenth order chi: sum_n (-1)^n q^((n+1)^2) / (-q;q)_(2n+1)"""
    return _eulerian_sum(
        N, lambda n: ((-1) ** n, (n + 1) ** 2), lambda n: poch(N, c=-1, n=2 * n + 1)
    )


MOCK = {"chi0": chi0, "phi": phi, "psi": psi, "X": X, "chi": chi}

BUILDERS = {
    "C": series_C,
    "Cbar": series_Cbar,
    "Cbar2": series_Cbar2,
    "M2": series_M2,
    "N2": series_N2,
    **MOCK,
}


def series_mock(name: str, N: int) -> QSeries:
    try:
        fn = MOCK[name]
    except KeyError:
        raise ValueError(f"unknown mock theta function {name!r}; expected one of {sorted(MOCK)}") from None
    return fn(N)


def build(name: str, N: int) -> QSeries:
    """Any named builder: C, Cbar, Cbar2, M2, N2 or a mock theta function."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    try:
        fn = BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown series {name!r}; expected one of {sorted(BUILDERS)}") from None
    return fn(N)
