"""Compactly supported frames on Lie groups.

Thin wrapper over the C++ core: catalog access, coadjoint charts and weights,
partition-of-unity windows, and frame verification helpers.
"""

from ._lieframe import (
    Entry,
    bspline,
    catalog_ids,
    onb_gram_residual,
    parseval_check,
    partition_window,
)

__all__ = [
    "Entry",
    "bspline",
    "catalog_ids",
    "onb_gram_residual",
    "parseval_check",
    "partition_window",
]
