"""Exact rank/crank statistics of overpartitions and partitions without
repeated odd parts, with a q-series identity checker."""

from .qseries import LaurentPoly, PochSpec, QSeries, poch_product
from .partitions import (
    CountTable,
    Overpartition,
    blo_modified_count,
    count_residue,
    count_statistic,
    gen_overpartitions,
    gen_partitions,
)
from .identities import registry, verify

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop memoized enumerations and series (for timing runs)."""
    from . import genfun, partitions

    partitions._partition_list.cache_clear()
    partitions._tally.cache_clear()
    for fn in genfun.BUILDERS.values():
        fn.cache_clear()
