"""Exact truncated power series in q with Laurent polynomial coefficients in z.

All coefficients are Python ints, so nothing overflows.  A :class:`QSeries`
of order ``N`` stands for an element of ``Z[z, 1/z][[q]] / (q^(N+1))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

__all__ = [
    "LaurentPoly",
    "QSeries",
    "PochSpec",
    "zp_add",
    "zp_mul",
    "qs_add",
    "qs_mul",
    "qs_invert",
    "poch_product",
    "qs_subst_neg_q",
    "qs_dissect",
    "qs_coeff",
]


class LaurentPoly:
    """Sparse Laurent polynomial in z with integer coefficients.

    Stored as ``{exponent: coefficient}`` with zero coefficients removed, so
    the zero polynomial is the empty mapping.  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable, int, None] = None):
        if terms is None:
            d = {}
        elif isinstance(terms, int):
            d = {0: terms} if terms else {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            d = {}
            for e, c in items:
                d[e] = d.get(e, 0) + c
            d = {e: c for e, c in d.items() if c}
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "LaurentPoly":
        # d must already be free of zero coefficients
        p = cls.__new__(cls)
        p._terms = d
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exponent: coeff} if coeff else {})

    @property
    def terms(self) -> dict:
        """A copy of the ``{exponent: coefficient}`` map."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __getitem__(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant(self) -> int:
        return self._terms.get(0, 0)

    def min_exponent(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def max_exponent(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def mirror(self) -> "LaurentPoly":
        """Substitute z -> 1/z."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def at_one(self) -> int:
        """Substitute z = 1."""
        return sum(self._terms.values())

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self._terms)
        for e, c in other._terms.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly._raw({})
        d: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def shift_z(self, k: int) -> "LaurentPoly":
        """Multiply by z**k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.items()!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s


ZERO = LaurentPoly()
ONE = LaurentPoly(1)


def zp_add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def zp_mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def _as_poly(c) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, int):
        return LaurentPoly(c)
    return LaurentPoly(c)


class QSeries:
    """Power series in q truncated after ``q**order``.

    ``coeffs[n]`` is the :class:`LaurentPoly` coefficient of ``q**n``.
    Binary operations require equal orders; a mismatch is a caller bug and
    raises :class:`ValueError`.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: Optional[int] = None):
        cs = [_as_poly(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list, order: int) -> "QSeries":
        s = cls.__new__(cls)
        s.order = order
        s.coeffs = tuple(coeffs)
        return s

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls._raw([ZERO] * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, n: int, order: int, coeff=1) -> "QSeries":
        """``coeff * q**n`` at the given order (vanishes if n > order)."""
        cs = [ZERO] * (order + 1)
        if 0 <= n <= order:
            cs[n] = _as_poly(coeff)
        return cls._raw(cs, order)

    def _check(self, other: "QSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def coeff(self, n: int) -> LaurentPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"q-exponent {n} outside 0..{self.order}")
        return self.coeffs[n]

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeff(n)

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        return QSeries._raw([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "QSeries":
        return QSeries._raw([-a for a in self.coeffs], self.order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        return QSeries._raw([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, LaurentPoly)):
            return QSeries._raw([a * other for a in self.coeffs], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        nz_a = [i for i in range(N + 1) if a[i]]
        nz_b = [j for j in range(N + 1) if b[j]]
        acc: list = [{} for _ in range(N + 1)]
        for i in nz_a:
            ai = a[i]._terms
            for j in nz_b:
                k = i + j
                if k > N:
                    break
                slot = acc[k]
                for e1, c1 in ai.items():
                    for e2, c2 in b[j]._terms.items():
                        e = e1 + e2
                        slot[e] = slot.get(e, 0) + c1 * c2
        out = [LaurentPoly._raw({e: c for e, c in d.items() if c}) for d in acc]
        return QSeries._raw(out, N)

    def __rmul__(self, other) -> "QSeries":
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return NotImplemented

    def invert(self) -> "QSeries":
        """Multiplicative inverse; the constant term must be exactly 1."""
        if self.coeffs[0] != ONE:
            raise ValueError(
                "series is not invertible over the integers: constant term "
                f"{self.coeffs[0]} is not 1"
            )
        N = self.order
        s = self.coeffs
        nz = [k for k in range(1, N + 1) if s[k]]
        t = [ONE]
        for n in range(1, N + 1):
            acc = ZERO
            for k in nz:
                if k > n:
                    break
                acc = acc + s[k] * t[n - k]
            t.append(-acc)
        return QSeries._raw(t, N)

    def truncate(self, order: int) -> "QSeries":
        """Discard coefficients above ``q**order`` (``order`` <= current)."""
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return QSeries._raw(list(self.coeffs[: order + 1]), order)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q**k`` (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("negative q-shifts are not representable")
        cs = [ZERO] * min(k, self.order + 1) + list(self.coeffs[: self.order + 1 - k])
        return QSeries._raw(cs, self.order)

    def dilate(self, k: int, order: Optional[int] = None) -> "QSeries":
        """Substitute q -> q**k; the result has order ``order`` (default k*N).

        The caller must make sure the input order is large enough, i.e.
        ``order <= k*self.order + k - 1``.
        """
        if k < 1:
            raise ValueError("dilation factor must be positive")
        if order is None:
            order = k * self.order
        if order > k * self.order + k - 1:
            raise ValueError("input order too small for requested output order")
        cs = [ZERO] * (order + 1)
        for n, c in enumerate(self.coeffs):
            if k * n > order:
                break
            cs[k * n] = c
        return QSeries._raw(cs, order)

    def subst_neg_q(self) -> "QSeries":
        for n, c in enumerate(self.coeffs):
            if not c.is_constant():
                raise ValueError(
                    f"q -> -q needs a z-free series; coefficient of q^{n} is {c}"
                )
        return QSeries._raw(
            [c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)], self.order
        )

    def dissect(self, modulus: int, residue: int) -> "QSeries":
        """Coefficients on the progression ``modulus*n + residue``."""
        if modulus < 1 or not 0 <= residue < modulus:
            raise ValueError("need modulus >= 1 and 0 <= residue < modulus")
        if residue > self.order:
            raise ValueError("residue exceeds the series order")
        return QSeries(self.coeffs[residue::modulus])

    def mirror(self) -> "QSeries":
        """Substitute z -> 1/z."""
        return QSeries._raw([c.mirror() for c in self.coeffs], self.order)

    def at_z_one(self) -> list:
        """Integer coefficients after setting z = 1."""
        return [c.at_one() for c in self.coeffs]

    def ints(self) -> list:
        """Integer coefficients of a z-free series."""
        out = []
        for n, c in enumerate(self.coeffs):
            if not c.is_constant():
                raise ValueError(f"coefficient of q^{n} depends on z: {c}")
            out.append(c.constant())
        return out

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}, coeffs={[c.items() for c in self.coeffs]!r})"

    def __str__(self) -> str:
        out = ""
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            qpow = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            neg = len(c) == 1 and next(iter(c._terms.values())) < 0
            body = str(-c if neg else c)
            if qpow:
                if len(c) > 1:
                    body = f"({body})"
                body = qpow if body == "1" else f"{body}*{qpow}"
            if out:
                out += (" - " if neg else " + ") + body
            else:
                out = ("-" if neg else "") + body
        tail = f"O(q^{self.order + 1})"
        return f"{out} + {tail}" if out else tail


def qs_add(s: QSeries, t: QSeries) -> QSeries:
    return s + t


def qs_mul(s: QSeries, t: QSeries) -> QSeries:
    return s * t


def qs_invert(s: QSeries) -> QSeries:
    return s.invert()


def qs_subst_neg_q(s: QSeries) -> QSeries:
    return s.subst_neg_q()


def qs_dissect(s: QSeries, modulus: int, residue: int) -> QSeries:
    return s.dissect(modulus, residue)


def qs_coeff(s: QSeries, n: int) -> LaurentPoly:
    return s.coeff(n)


@dataclass(frozen=True)
class PochSpec:
    """Factors ``(1 - c * z**e * q**(b + k*d))`` for ``k = 0..n-1``.

    ``n=None`` means the infinite product.  With ``a = c*z**e*q**b`` this is
    ``(a; q**d)_n``.
    """

    c: int = 1
    e: int = 0
    b: int = 1
    d: int = 1
    n: Optional[int] = None

    def __post_init__(self):
        if self.b < 1 or self.d < 1:
            raise ValueError("PochSpec needs b >= 1 and d >= 1")
        if self.n is not None and self.n < 0:
            raise ValueError("number of factors must be nonnegative")

    def exponents(self, order: int):
        """q-exponents of the factors visible at the given order."""
        k = 0
        while self.n is None or k < self.n:
            m = self.b + k * self.d
            if m > order:
                return
            yield m
            k += 1


def poch_product(spec: PochSpec, order: int) -> QSeries:
    """Expand the product described by ``spec`` modulo ``q**(order+1)``."""
    mono = LaurentPoly.monomial(spec.e, spec.c)
    cs = [ZERO] * (order + 1)
    cs[0] = ONE
    for m in spec.exponents(order):
        # multiply in place by (1 - mono*q^m), top-down so each term is used once
        for i in range(order, m - 1, -1):
            src = cs[i - m]
            if src:
                cs[i] = cs[i] - src * mono
    return QSeries._raw(cs, order)
