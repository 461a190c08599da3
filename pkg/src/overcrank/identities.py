"""Registry of rank/crank identities, each checked as an exact series equality.

The left-hand side of every identity is built by brute-force enumeration
(:mod:`overcrank.partitions`); the right-hand side comes from the product and
Eulerian series of :mod:`overcrank.genfun`.  Agreement therefore
cross-validates both engines.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Union

from . import genfun
from .partitions import blo_modified_count, count_residue, count_statistic
from .qseries import LaurentPoly, QSeries


@dataclass(frozen=True)
class DiffTerm:
    """``scale * sum_a weight[a] * #{objects of size r*n+j with stat = a mod m}``."""

    stat: str
    weights: tuple  # ((residue, weight), ...)
    modulus: int = 5
    progression: tuple = (5, 0)
    scale: int = 1


@dataclass(frozen=True)
class DistTerm:
    """Full two-variable distribution ``sum_m count(m, n) z^m q^n`` of a statistic.

    ``stat`` may also be ``"blo"`` for the adjusted first residual crank count.
    """

    stat: str
    scale: int = 1


@dataclass(frozen=True)
class SeriesTerm:
    """``scale * name(q)``, or ``scale * name(-q)`` when ``neg_q``.

    ``name`` is a :data:`genfun.BUILDERS` key, ``"one"`` for the constant 1 or
    ``"m2_anomaly"`` for ``(z-1) q^2``.
    """

    name: str
    scale: int = 1
    neg_q: bool = False


@dataclass(frozen=True)
class IdentitySpec:
    """``q**lhs_shift * sum(lhs) == sum(rhs)`` as power series."""

    id: str
    lhs: tuple
    rhs: tuple
    lhs_shift: int = 0
    max_order: int = 8
    statement: str = ""


@dataclass(frozen=True)
class VerificationReport:
    id: str
    order: int
    holds: bool
    first_mismatch: Optional[tuple] = None  # (n, lhs coefficient, rhs coefficient)

    def to_record(self) -> dict:
        mismatch = None
        if self.first_mismatch is not None:
            n, lhs, rhs = self.first_mismatch
            mismatch = {
                "n": n,
                "lhs": [list(t) for t in lhs.items()],
                "rhs": [list(t) for t in rhs.items()],
            }
        return {
            "id": self.id,
            "order": self.order,
            "holds": self.holds,
            "first_mismatch": mismatch,
        }


def _w(**kw) -> tuple:
    return tuple((int(k[1:]), v) for k, v in kw.items())


def _diff(stat, progression, scale=1, **weights) -> DiffTerm:
    return DiffTerm(stat, _w(**weights), 5, progression, scale)


_REGISTRY = (
    IdentitySpec(
        "thm-M1",
        lhs=(DistTerm("crank1"),),
        rhs=(SeriesTerm("Cbar"),),
        max_order=30,
        statement="#{overpartitions of n with crank1 = m} = Mbar(m, n)",
    ),
    IdentitySpec(
        "thm-M2",
        lhs=(DistTerm("crank2"),),
        rhs=(SeriesTerm("Cbar2"),),
        max_order=30,
        statement="#{overpartitions of n with crank2 = m} = Mbar2(m, n)",
    ),
    IdentitySpec(
        "thm-M2crank",
        lhs=(DistTerm("m2crank"),),
        rhs=(SeriesTerm("M2"), SeriesTerm("m2_anomaly", -1)),
        max_order=30,
        statement="M2(z,q) = (z-1)q^2 + sum z^M2crank q^n",
    ),
    IdentitySpec(
        "blo-equivalence",
        lhs=(DistTerm("blo"),),
        rhs=(SeriesTerm("Cbar"),),
        max_order=20,
        statement="adjusted non-overlined crank count = Mbar(m, n)",
    ),
    IdentitySpec(
        "fifth-order-chi0",
        lhs=(
            _diff("rank", (5, 0), 3, a1=1, a2=-1),
            _diff("crank", (5, 0), -1, a0=1, a1=-1),
        ),
        rhs=(SeriesTerm("chi0"), SeriesTerm("one", -2)),
        max_order=10,
        statement="3(N(1,5,5n)-N(2,5,5n)) - (M(0,5,5n)-M(1,5,5n)) = chi0(q) - 2",
    ),
    IdentitySpec(
        "tenth-phi",
        lhs=(_diff("rank_over", (5, 1), a0=1, a2=-1),),
        rhs=(SeriesTerm("phi", 2),),
        max_order=8,
        statement="Nbar(0,5,5n+1) - Nbar(2,5,5n+1) = 2 phi(q)",
    ),
    IdentitySpec(
        "tenth-psi",
        lhs=(_diff("rank_over", (5, 4), a0=1, a1=1, a2=-2),),
        rhs=(SeriesTerm("psi", 2),),
        lhs_shift=1,
        max_order=8,
        statement="sum (Nbar(0,5,5n+4) + Nbar(1,5,5n+4) - 2 Nbar(2,5,5n+4)) q^(n+1) = 2 psi(q)",
    ),
    IdentitySpec(
        "crankdiff-3phi",
        lhs=(
            _diff("rank_over", (5, 1), a0=1, a1=-1),
            _diff("crank1", (5, 1), -1, a0=1, a1=-1),
        ),
        rhs=(SeriesTerm("phi", 3),),
        max_order=8,
        statement="(Nbar(0,5,5n+1)-Nbar(1,5,5n+1)) - (Mbar(0,5,5n+1)-Mbar(1,5,5n+1)) = 3 phi(q)",
    ),
    IdentitySpec(
        "crankdiff-3psi",
        lhs=(
            _diff("rank_over", (5, 4), a1=1, a2=-1),
            _diff("crank1", (5, 4), -1, a0=1, a2=-1),
        ),
        rhs=(SeriesTerm("psi", 3),),
        lhs_shift=1,
        max_order=8,
        statement="(Nbar(1,5,5n+4)-Nbar(2,5,5n+4)) - (Mbar(0,5,5n+4)-Mbar(2,5,5n+4)) = 3 q^-1 psi(q)",
    ),
    IdentitySpec(
        "m2rank-X",
        lhs=(_diff("m2rank", (5, 0), a0=1, a2=-1),),
        rhs=(SeriesTerm("X", neg_q=True),),
        max_order=10,
        statement="N2(0,5,5n) - N2(2,5,5n) = X(-q)",
    ),
    IdentitySpec(
        "m2rank-chi",
        lhs=(_diff("m2rank", (5, 4), a1=1, a2=-1),),
        rhs=(SeriesTerm("chi", neg_q=True),),
        lhs_shift=1,
        max_order=9,
        statement="N2(1,5,5n+4) - N2(2,5,5n+4) = q^-1 chi(-q)",
    ),
    IdentitySpec(
        "m2-combo-X",
        lhs=(
            _diff("m2rank", (5, 0), 2, a0=1, a1=-1),
            _diff("m2crank", (5, 0), a0=1, a1=-1),
        ),
        rhs=(SeriesTerm("X", 3, neg_q=True),),
        max_order=10,
        statement="2(N2(0,5,5n)-N2(1,5,5n)) + (M2(0,5,5n)-M2(1,5,5n)) = 3 X(-q)",
    ),
    IdentitySpec(
        "m2-combo-chi",
        lhs=(
            _diff("m2rank", (5, 4), 2, a0=1, a1=-1),
            _diff("m2crank", (5, 4), -1, a0=1, a1=-1),
        ),
        rhs=(SeriesTerm("chi", neg_q=True),),
        lhs_shift=1,
        max_order=9,
        statement="2(N2(0,5,5n+4)-N2(1,5,5n+4)) - (M2(0,5,5n+4)-M2(1,5,5n+4)) = q^-1 chi(-q)",
    ),
)


def registry() -> list:
    return list(_REGISTRY)


def get_spec(identity_id: str) -> IdentitySpec:
    for spec in _REGISTRY:
        if spec.id == identity_id:
            return spec
    raise KeyError(f"unknown identity {identity_id!r}")


def diff_series(stat: str, modulus: int, weights, progression: tuple, N: int) -> QSeries:
    """Weighted residue-class count series over ``progression = (r, j)``.

    The coefficient of ``q**n`` is ``sum_a weights[a] * #{objects of size
    r*n + j whose statistic is congruent to a mod modulus}``.
    """
    r, j = progression
    if r < 1 or not 0 <= j < r:
        raise ValueError("progression needs r >= 1 and 0 <= j < r")
    weights = dict(weights)
    coeffs = []
    for n in range(N + 1):
        table = count_residue(r * n + j, stat, modulus)
        coeffs.append(sum(w * table[a % modulus] for a, w in weights.items()))
    return QSeries(coeffs, N)


def distribution_series(stat: str, N: int) -> QSeries:
    coeffs = []
    for n in range(N + 1):
        table = blo_modified_count(n) if stat == "blo" else count_statistic(n, stat)
        coeffs.append(LaurentPoly(table.counts))
    return QSeries(coeffs, N)


def _eval_lhs(spec: IdentitySpec, N: int) -> QSeries:
    total = QSeries.zero(N)
    for term in spec.lhs:
        if isinstance(term, DiffTerm):
            s = diff_series(term.stat, term.modulus, term.weights, term.progression, N)
        else:
            s = distribution_series(term.stat, N)
        total = total + s * term.scale
    return total


def _eval_rhs(spec: IdentitySpec, N: int) -> QSeries:
    total = QSeries.zero(N)
    for term in spec.rhs:
        if term.name == "one":
            s = QSeries.one(N)
        elif term.name == "m2_anomaly":
            s = genfun.m2_anomaly(N)
        else:
            s = genfun.build(term.name, N)
        if term.neg_q:
            s = s.subst_neg_q()
        total = total + s * term.scale
    return total


def evaluate(spec: IdentitySpec, N: int) -> tuple:
    """Both sides at LHS order ``N``, aligned at order ``N + lhs_shift``."""
    shift = spec.lhs_shift
    lhs = _eval_lhs(spec, N)
    lhs = QSeries(list(lhs.coeffs), N + shift).shift(shift)
    rhs = _eval_rhs(spec, N + shift)
    return lhs, rhs


def verify(identity: Union[str, IdentitySpec], N: Optional[int] = None) -> VerificationReport:
    """Compare both sides coefficient by coefficient.

    ``N`` is the order of the enumerated side (default: the spec's
    ``max_order``).  For a shifted identity the right side's leading
    coefficients must vanish; they are compared against the zero prefix of
    the shifted left side, so a violation is reported at that position.
    """
    spec = get_spec(identity) if isinstance(identity, str) else identity
    if N is None:
        N = spec.max_order
    if N < 0:
        raise ValueError("order must be nonnegative")
    lhs, rhs = evaluate(spec, N)
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return VerificationReport(spec.id, N, False, (n, a, b))
    return VerificationReport(spec.id, N, True)


def _verify_args(args):
    return verify(*args)


def verify_many(ids, N: Optional[int] = None, jobs: int = 1) -> list:
    """Reports in the order of ``ids`` regardless of ``jobs``."""
    args = [(i, N) for i in ids]
    if jobs <= 1:
        return [verify(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_args, args))


def perturbed(spec: IdentitySpec, constant: int = 1) -> IdentitySpec:
    """Copy of ``spec`` with ``constant`` added to the right side."""
    return replace(spec, id=spec.id + "+perturbed", rhs=spec.rhs + (SeriesTerm("one", constant),))
