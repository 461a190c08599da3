"""Partition classes, overpartitions and their rank/crank statistics.

Partitions are plain tuples of positive ints in non-increasing order; the
empty tuple is the empty partition of 0.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, NamedTuple

Partition = tuple

CLASSES = ("unrestricted", "distinct", "odd", "even", "distinct-odd", "no-repeated-odd")


class Overpartition(NamedTuple):
    overlined: Partition
    plain: Partition

    @property
    def n(self) -> int:
        return sum(self.overlined) + sum(self.plain)


class OverTriple(NamedTuple):
    overlined: Partition
    plain_even: Partition
    plain_odd: Partition


class NoRepOddPair(NamedTuple):
    odd_distinct: Partition
    even: Partition


@dataclass(frozen=True)
class CountTable:
    """Tally of a statistic over all objects of size ``n``."""

    n: int
    statistic: str
    counts: dict = field(default_factory=dict)

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def nonzero(self) -> dict:
        return {m: c for m, c in sorted(self.counts.items()) if c}

    def sorted_items(self) -> list:
        return sorted(self.counts.items())


# -- enumeration -----------------------------------------------------------

def _rules(cls: str):
    """(allowed(part), may_repeat(part)) for a partition class."""
    if cls == "unrestricted":
        return (lambda k: True), (lambda k: True)
    if cls == "distinct":
        return (lambda k: True), (lambda k: False)
    if cls == "odd":
        return (lambda k: k % 2 == 1), (lambda k: True)
    if cls == "even":
        return (lambda k: k % 2 == 0), (lambda k: True)
    if cls == "distinct-odd":
        return (lambda k: k % 2 == 1), (lambda k: False)
    if cls == "no-repeated-odd":
        return (lambda k: True), (lambda k: k % 2 == 0)
    raise ValueError(f"unknown partition class {cls!r}; expected one of {CLASSES}")


def _descend(n: int, cap: int, allowed: Callable, may_repeat: Callable) -> Iterator[list]:
    if n == 0:
        yield []
        return
    for k in range(min(n, cap), 0, -1):
        if not allowed(k):
            continue
        nxt = k if may_repeat(k) else k - 1
        for rest in _descend(n - k, nxt, allowed, may_repeat):
            rest.insert(0, k)
            yield rest


@lru_cache(maxsize=None)
def _partition_list(n: int, cls: str) -> tuple:
    allowed, may_repeat = _rules(cls)
    return tuple(tuple(p) for p in _descend(n, n, allowed, may_repeat))


def gen_partitions(n: int, cls: str = "unrestricted") -> Iterator[Partition]:
    """Partitions of ``n`` in class ``cls``, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return iter(_partition_list(n, cls))


def is_member(p: Partition, cls: str) -> bool:
    allowed, may_repeat = _rules(cls)
    if any(a < b for a, b in zip(p, p[1:])) or any(k < 1 for k in p):
        return False
    for k, mult in Counter(p).items():
        if not allowed(k) or (mult > 1 and not may_repeat(k)):
            return False
    return True


def gen_overpartitions(n: int) -> Iterator[Overpartition]:
    """Every overpartition of ``n`` as an (overlined, plain) pair.

    Order: underlying partitions in descending lexicographic order; within
    one partition, the overline choices count up in binary with the largest
    distinct part as the lowest bit (4, 4̄, 3+1, 3̄+1, 3+1̄, 3̄+1̄, ...).
    """
    for p in gen_partitions(n):
        sizes = sorted(set(p), reverse=True)
        for mask in range(1 << len(sizes)):
            over = tuple(s for i, s in enumerate(sizes) if mask >> i & 1)
            plain = list(p)
            for s in over:
                plain.remove(s)
            yield Overpartition(over, tuple(plain))


def iter_overpartition_pairs(n: int) -> Iterator[tuple]:
    """Fast (overlined, plain) tuples of every overpartition of ``n``, unordered."""
    for k in range(n + 1):
        plains = _partition_list(n - k, "unrestricted")
        for over in _partition_list(k, "distinct"):
            for plain in plains:
                yield over, plain


def merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def to_triple(op: Overpartition) -> OverTriple:
    over, plain = op
    return OverTriple(
        tuple(over),
        tuple(k for k in plain if k % 2 == 0),
        tuple(k for k in plain if k % 2 == 1),
    )


def from_triple(t: OverTriple) -> Overpartition:
    return Overpartition(tuple(t.overlined), merge(t.plain_even, t.plain_odd))


def split_no_rep_odd(p: Partition) -> NoRepOddPair:
    return NoRepOddPair(
        tuple(k for k in p if k % 2 == 1), tuple(k for k in p if k % 2 == 0)
    )


def halve(p: Partition) -> Partition:
    if any(k % 2 for k in p):
        raise ValueError(f"cannot halve a partition with odd parts: {p}")
    return tuple(k // 2 for k in p)


# -- statistics ------------------------------------------------------------

def _require_distinct(p: Partition, what: str) -> None:
    if len(set(p)) != len(p):
        raise ValueError(f"{what} needs distinct parts, got {p}")


def crank(p: Partition) -> int:
    """Andrews-Garvan crank of a nonempty partition."""
    if not p:
        raise ValueError("crank of the empty partition is undefined")
    ones = p.count(1)
    if ones == 0:
        return p[0]
    return sum(1 for k in p if k > ones) - ones


def rank(p: Partition) -> int:
    """Dyson's rank: largest part minus number of parts."""
    if not p:
        raise ValueError("rank of the empty partition is undefined")
    return p[0] - len(p)


def lambda_stat(p: Partition) -> int:
    _require_distinct(p, "lambda")
    if not p:
        return 0
    top = p[0]
    return 0 if top - 1 in p else 1


def kappa_stat(p: Partition) -> int:
    if not p:
        raise ValueError("kappa of the empty partition is undefined")
    _require_distinct(p, "kappa")
    top = p[0]
    if top >= 4:
        return 0 if (top - 1 in p or top - 2 in p) else 1
    if top in (2, 3):
        return 1 if len(p) == 1 else 0
    return 0


def theta_stat(p: Partition) -> int:
    """θ on partitions into distinct odd parts; θ(∅) is taken to be 0."""
    _require_distinct(p, "theta")
    if any(k % 2 == 0 for k in p):
        raise ValueError(f"theta needs odd parts, got {p}")
    if not p:
        return 0
    if p[0] >= 5:
        return 0 if p[0] - 2 in p else 1
    return 0 if 1 in p else 1


def crank1(op) -> int:
    over, plain = op
    if plain:
        return crank(plain)
    return lambda_stat(over)


def crank2(op) -> int:
    over, plain = op
    evens = tuple(k // 2 for k in plain if k % 2 == 0)
    if evens:
        return crank(evens)
    if over:
        return kappa_stat(over)
    return 0


def m2crank(pr) -> int:
    odd_distinct, even = pr
    if even:
        return crank(halve(even))
    return theta_stat(odd_distinct)


def m2rank(pr) -> int:
    """Columns minus rows of the 2-modular diagram, via ceil(l/2) - #parts."""
    odd_distinct, even = pr
    parts = len(odd_distinct) + len(even)
    if not parts:
        raise ValueError("M2-rank of the empty partition is undefined")
    top = max(odd_distinct[:1] + even[:1])
    return (top + 1) // 2 - parts


def two_modular_diagram(p: Partition) -> list:
    """Rows of the 2-modular diagram: part k becomes ceil(k/2) cells of 2s,
    the last one a 1 when k is odd."""
    return [[2] * (k // 2) + [1] * (k % 2) for k in p]


def rank_over(op) -> int:
    """Overpartition rank: largest part minus number of parts."""
    over, plain = op
    parts = len(over) + len(plain)
    if not parts:
        raise ValueError("rank of the empty overpartition is undefined")
    return max(over[:1] + plain[:1]) - parts


# -- tallies ---------------------------------------------------------------

def _stat_crank(p):
    return crank(p) if p else 0


def _stat_rank(p):
    return rank(p) if p else 0


def _stat_rank_over(op):
    return rank_over(op) if op[0] or op[1] else 0


def _stat_m2crank(p):
    return m2crank(split_no_rep_odd(p))


def _stat_m2rank(p):
    return m2rank(split_no_rep_odd(p)) if p else 0


# statistic name -> (object family, evaluator on the family's raw objects)
STATISTICS = {
    "crank": ("partitions", _stat_crank),
    "rank": ("partitions", _stat_rank),
    "crank1": ("overpartitions", crank1),
    "crank2": ("overpartitions", crank2),
    "rank_over": ("overpartitions", _stat_rank_over),
    "m2crank": ("no-repeated-odd", _stat_m2crank),
    "m2rank": ("no-repeated-odd", _stat_m2rank),
}


def _objects(family: str, n: int):
    if family == "partitions":
        return _partition_list(n, "unrestricted")
    if family == "no-repeated-odd":
        return _partition_list(n, "no-repeated-odd")
    return iter_overpartition_pairs(n)


@lru_cache(maxsize=4096)
def _tally(n: int, stat: str) -> tuple:
    family, fn = STATISTICS[stat]
    counts = Counter(map(fn, _objects(family, n)))
    return tuple(sorted(counts.items()))


def count_statistic(n: int, stat: str) -> CountTable:
    """Distribution of ``stat`` over the objects of size ``n``.

    The single object of size 0 is given statistic 0.
    """
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {sorted(STATISTICS)}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return CountTable(n, stat, dict(_tally(n, stat)))


def count_residue(n: int, stat: str, modulus: int) -> CountTable:
    if modulus < 1:
        raise ValueError("modulus must be positive")
    table = count_statistic(n, stat)
    counts = {a: 0 for a in range(modulus)}
    for m, c in table.counts.items():
        counts[m % modulus] += c
    return CountTable(n, f"{stat} mod {modulus}", counts)


def blo_modified_count(n: int) -> CountTable:
    """Bringmann-Lovejoy-Osburn's adjusted first residual crank count.

    Each overpartition is scored by the crank of its non-overlined parts,
    with crank(∅) read as 0; when those parts are exactly ``1`` the
    overpartition is weighted -1 at m=0 and +1 at m=±1 instead.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    counts = Counter({0: 0})
    for _, plain in iter_overpartition_pairs(n):
        if plain == (1,):
            counts[0] -= 1
            counts[-1] += 1
            counts[1] += 1
        elif not plain:
            counts[0] += 1
        else:
            counts[crank(plain)] += 1
    return CountTable(n, "blo", dict(sorted(counts.items())))


def class_size(n: int, family: str) -> int:
    if family == "overpartitions":
        return sum(1 for _ in iter_overpartition_pairs(n))
    return len(_objects(family, n))
