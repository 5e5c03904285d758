"""Shared generators for exhaustive and randomized tests."""

from __future__ import annotations

import random
from typing import Iterator

import pytest

from schurpaths import (
    Partition,
    PathFamily,
    SkewShape,
    family_from_paths,
    random_tableau,
    tableau_to_paths,
)


def partitions_up_to(max_size: int, max_part: int | None = None) -> Iterator[Partition]:
    """Every partition with at most ``max_size`` boxes, smallest first."""

    def gen(n: int, cap: int) -> Iterator[list[int]]:
        if n == 0:
            yield []
            return
        for k in range(min(n, cap), 0, -1):
            for rest in gen(n - k, k):
                yield [k] + rest

    for n in range(max_size + 1):
        cap = max_part if max_part is not None else n
        yield from (Partition(p) for p in gen(n, max(cap, 0) if n else 0))


def subpartitions(outer: Partition) -> Iterator[Partition]:
    """Every partition contained in ``outer``."""

    def gen(i: int, prev: int) -> Iterator[list[int]]:
        if i == len(outer):
            yield []
            return
        for v in range(min(outer[i], prev), -1, -1):
            for rest in gen(i + 1, v):
                yield [v] + rest

    yield from (Partition(p) for p in gen(0, outer[0] if outer else 0))


def shapes_up_to(max_outer: int) -> Iterator[SkewShape]:
    for outer in partitions_up_to(max_outer):
        for inner in subpartitions(outer):
            yield SkewShape(outer, inner)


class FamilySampler:
    """Seeded generator of random canonical path families at desk scale."""

    def __init__(self, seed: int, max_outer: int = 6) -> None:
        self.rng = random.Random(seed)
        self.max_outer = max_outer

    def partition(self) -> Partition:
        n = self.rng.randint(0, self.max_outer)
        parts: list[int] = []
        while n > 0:
            p = self.rng.randint(1, n)
            if parts and p > parts[-1]:
                p = parts[-1]
            parts.append(p)
            n -= p
        return Partition(parts)

    def shape(self) -> SkewShape:
        outer = self.partition()
        inner = []
        prev = None
        for o in outer:
            hi = min(o, prev) if prev is not None else o
            v = self.rng.randint(0, hi)
            inner.append(v)
            prev = v
        return SkewShape(outer, Partition(inner))

    def family(self, alphabet: int) -> PathFamily:
        while True:
            t = random_tableau(self.shape(), alphabet, self.rng)
            if t is None:
                continue
            fam = tableau_to_paths(t, self.rng.randint(-2, 2))
            return family_from_paths(fam.paths, alphabet)


@pytest.fixture
def sampler() -> FamilySampler:
    return FamilySampler(seed=20240)
