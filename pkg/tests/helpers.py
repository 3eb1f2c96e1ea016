"""Shared test utilities: paths and random candidate generators."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from relrep import ColoredPartition, ElementSet, GroupSpec

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"


def random_symmetric_partition(group: GroupSpec, names, rng: np.random.Generator,
                               allow_empty: bool = True) -> ColoredPartition:
    """Assign each {x, -x} orbit of nonzero elements to a uniformly random atom."""
    buckets = {n: [] for n in names}
    for x in range(1, group.order):
        neg = group.neg(x)
        if x <= neg:
            pick = names[int(rng.integers(len(names)))]
            buckets[pick].append(x)
            if neg != x:
                buckets[pick].append(neg)
    if not allow_empty and any(not v for v in buckets.values()):
        return random_symmetric_partition(group, names, rng, allow_empty)
    return ColoredPartition(group, {
        n: ElementSet.from_indices(group, v) for n, v in buckets.items()})
