"""Partitions, skew shapes, and the boundary point model.

A partition with at most ``rows`` parts and an integer ``shift`` is encoded
by the strictly decreasing point set ``{part(i) - i + shift : 1 <= i <= rows}``
(parts padded with zeros).  Every border strip operation in this module is
defined as an insertion/removal of boundary points followed by rereading the
point set as a partition; the familiar row-wise descriptions are consequences
and are checked as properties in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    """Invalid partition data or an operation applied out of range."""


class NotWeaklyDecreasing(PartitionError):
    pass


class NegativePart(PartitionError):
    pass


class RowsTooSmall(PartitionError):
    pass


class NegativeResultingPart(PartitionError):
    """A point set that would decode to a row of negative length."""


class EmptyPartition(PartitionError):
    pass


class RowOutOfRange(PartitionError):
    pass


class BoxNumberOutOfRange(PartitionError):
    pass


class StripDoesNotFit(PartitionError):
    pass


class ConstraintViolated(PartitionError):
    """A strip sequence violating the construction constraints.

    The message names the offending constraint and the strip index.
    """


class Partition(tuple):
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are accepted on input and dropped, so ``len`` is always
    the number of positive parts.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        data = tuple(int(p) for p in parts)
        for a, b in zip(data, data[1:]):
            if b > a:
                raise NotWeaklyDecreasing(f"parts must weakly decrease: {a} before {b}")
        if data and data[-1] < 0:
            raise NegativePart(f"parts must be nonnegative: {data[-1]}")
        while data and data[-1] == 0:
            data = data[:-1]
        return super().__new__(cls, data)

    def part(self, i: int) -> int:
        """The ``i``-th part, 1-indexed, zero past the last stored part."""
        if i < 1:
            raise RowOutOfRange(f"row index must be positive: {i}")
        return self[i - 1] if i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    def contains(self, other: "Partition") -> bool:
        """Containment of Ferrers diagrams, row by row."""
        if len(other) > len(self):
            return False
        return all(other[i] <= self[i] for i in range(len(other)))

    def to_points(self, rows: int, shift: int = 0) -> "PointSet":
        return to_points(self, rows, shift)


@dataclass(frozen=True)
class PointSet:
    """Strictly decreasing integers encoding a partition at a fixed shift."""

    values: tuple[int, ...]
    shift: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        for a, b in zip(self.values, self.values[1:]):
            if b >= a:
                raise PartitionError(f"point set must strictly decrease: {a} then {b}")

    @property
    def rows(self) -> int:
        return len(self.values)

    def with_removed(self, value: int) -> "PointSet":
        if value not in self.values:
            raise PartitionError(f"point {value} not present")
        return PointSet(tuple(v for v in self.values if v != value), self.shift)

    def with_added(self, value: int) -> "PointSet":
        if value in self.values:
            raise PartitionError(f"point {value} already present")
        return PointSet(tuple(sorted(self.values + (value,), reverse=True)), self.shift)

    def partition(self) -> Partition:
        return from_points(self)


def to_points(p: Partition, rows: int, shift: int = 0) -> PointSet:
    """Boundary points ``part(i) - i + shift`` for ``i = 1..rows``."""
    p = Partition(p)
    if rows < len(p):
        raise RowsTooSmall(f"need at least {len(p)} rows, got {rows}")
    return PointSet(tuple(p.part(i) - i + shift for i in range(1, rows + 1)), shift)


def from_points(ps: PointSet) -> Partition:
    """Reread a point set as a partition; inverse of :func:`to_points`."""
    parts = []
    for i, v in enumerate(ps.values, start=1):
        part = v + i - ps.shift
        if part < 0:
            raise NegativeResultingPart(f"row {i} would have length {part}")
        parts.append(part)
    return Partition(parts)


@dataclass(frozen=True)
class SkewShape:
    """A pair of nested partitions, the cells of ``outer`` not in ``inner``."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise PartitionError(f"inner {self.inner} does not fit inside outer {self.outer}")

    @property
    def rows(self) -> int:
        return len(self.outer)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return len(self.inner) == 0

    def row_span(self, i: int) -> tuple[int, int]:
        """Half-open diagram column range of row ``i`` (0-indexed row)."""
        return self.inner.part(i + 1), self.outer.part(i + 1)

    def has_cell(self, i: int, j: int) -> bool:
        if not 0 <= i < self.rows:
            return False
        lo, hi = self.row_span(i)
        return lo <= j < hi

    def cells(self) -> Iterator[tuple[int, int]]:
        for i in range(self.rows):
            lo, hi = self.row_span(i)
            for j in range(lo, hi):
                yield (i, j)

    def column_heights(self) -> tuple[int, ...]:
        width = self.outer.part(1)
        heights = [0] * width
        for _, j in self.cells():
            heights[j] += 1
        return tuple(heights)

    @property
    def max_column_height(self) -> int:
        return max(self.column_heights(), default=0)

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, obj: dict) -> "SkewShape":
        return cls(Partition(obj["outer"]), Partition(obj.get("inner", ())))


@dataclass(frozen=True)
class StripSpec:
    """A partial border strip: ``boxes`` added in ``row``, spanning ``span`` rows.

    Bounds are context dependent and checked by :func:`add_strip` and
    :func:`build_nu`, not here.
    """

    boxes: int
    row: int
    span: int

    def to_json(self) -> dict:
        return {"t": self.boxes, "r": self.row, "m": self.span}

    @classmethod
    def from_json(cls, obj: dict) -> "StripSpec":
        return cls(int(obj["t"]), int(obj["r"]), int(obj["m"]))


def validate_partition(seq: Sequence[int]) -> Partition:
    """Checked constructor; rejects increasing runs and negative entries."""
    return Partition(seq)


def peel_complete(p: Partition) -> Partition:
    """Remove the full border strip, dropping the largest boundary point."""
    p = Partition(p)
    if not p:
        raise EmptyPartition("cannot peel the empty partition")
    ps = to_points(p, len(p))
    return ps.with_removed(ps.values[0]).partition()


def peel_down(p: Partition, i: int) -> Partition:
    """Remove the partial border strip running from row ``i`` downwards.

    Drops the boundary point of row ``i``; rows above ``i`` are untouched.
    """
    p = Partition(p)
    if not 1 <= i <= len(p):
        raise RowOutOfRange(f"row {i} outside 1..{len(p)}")
    ps = to_points(p, len(p))
    return ps.with_removed(ps.values[i - 1]).partition()


def peel_up(p: Partition, i: int, t: int) -> Partition:
    """Remove the partial border strip from row ``i`` up to row 1.

    The strip starts at the ``t``-th of the ``part(i) - part(i+1)`` possible
    boxes of row ``i``, numbered from the left.  On boundary points: the
    largest point goes, ``part(i+1) - (i+1) + t`` comes in.
    """
    p = Partition(p)
    if i < 1:
        raise RowOutOfRange(f"row index must be positive: {i}")
    if not 1 <= t <= p.part(i) - p.part(i + 1):
        raise BoxNumberOutOfRange(
            f"box {t} outside 1..{p.part(i) - p.part(i + 1)} for row {i}"
        )
    ps = to_points(p, len(p))
    return ps.with_removed(ps.values[0]).with_added(p.part(i + 1) - (i + 1) + t).partition()


def add_strip(p: Partition, s: StripSpec) -> Partition:
    """Add a partial border strip of ``s.boxes`` boxes in row ``s.row``.

    The strip spans rows ``s.row .. s.row + s.span - 1``.  On boundary
    points: ``part(row) - row + boxes`` comes in and the point of the last
    spanned row goes.
    """
    p = Partition(p)
    r, m, t = s.row, s.span, s.boxes
    if r < 2 or m < 1 or t < 1:
        raise StripDoesNotFit(f"need row >= 2, span >= 1, boxes >= 1: got {s}")
    if r + m - 1 > len(p):
        raise StripDoesNotFit(f"strip spans rows {r}..{r + m - 1}, partition has {len(p)}")
    if t > p.part(r - 1) - p.part(r):
        raise StripDoesNotFit(
            f"boxes {t} exceeds {p.part(r - 1)} - {p.part(r)} available in row {r}"
        )
    ps = to_points(p, len(p))
    ins = p.part(r) - r + t
    rem = p.part(r + m - 1) - (r + m - 1)
    return ps.with_added(ins).with_removed(rem).partition()


def build_nu(p: Partition, strips: Sequence[StripSpec]) -> Partition:
    """Apply a sequence of strips after checking the construction constraints.

    Rows must satisfy ``2 <= r_1 < ... < r_k <= len(p)`` with
    ``part(r_i - 1) > part(r_i)``, boxes ``1 <= t_i <= part(r_i-1) - part(r_i)``
    and spans ``1 <= m_i <= r_{i+1} - r_i``, where ``r_{k+1}`` is read as
    ``len(p) + 1``.  All bounds refer to the original partition.
    """
    p = Partition(p)
    strips = list(strips)
    for idx, s in enumerate(strips, start=1):
        if s.row < 2 or s.row > len(p):
            raise ConstraintViolated(f"strip {idx}: row {s.row} outside 2..{len(p)}")
        if idx > 1 and strips[idx - 2].row >= s.row:
            raise ConstraintViolated(f"strip {idx}: rows must strictly increase")
        gap = p.part(s.row - 1) - p.part(s.row)
        if gap <= 0:
            raise ConstraintViolated(f"strip {idx}: row {s.row} is not shorter than row {s.row - 1}")
        if not 1 <= s.boxes <= gap:
            raise ConstraintViolated(f"strip {idx}: boxes {s.boxes} outside 1..{gap}")
        nxt = strips[idx].row if idx < len(strips) else len(p) + 1
        if not 1 <= s.span <= nxt - s.row:
            raise ConstraintViolated(f"strip {idx}: span {s.span} outside 1..{nxt - s.row}")
    out = p
    for s in strips:
        out = add_strip(out, s)
    return out
