"""Semistandard skew Young tableaux: validation, enumeration, weights."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import SkewShape


class TableauError(ValueError):
    pass


class ShapeMismatch(TableauError):
    pass


class CellViolation(TableauError):
    """Carries the offending cell as 0-indexed (row, diagram column)."""

    def __init__(self, cell: tuple[int, int], message: str) -> None:
        super().__init__(message)
        self.cell = cell


class RowViolation(CellViolation):
    pass


class ColumnViolation(CellViolation):
    pass


class EntryOutOfRange(CellViolation):
    pass


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape with entries from ``1..alphabet``.

    ``rows[i]`` holds the entries of row ``i`` left to right; use
    :func:`validate_tableau` to construct from unchecked data.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]
    alphabet: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    def entry(self, i: int, j: int) -> int:
        """Entry at 0-indexed row ``i`` and diagram column ``j``."""
        lo, hi = self.shape.row_span(i)
        if not lo <= j < hi:
            raise ShapeMismatch(f"no cell at ({i}, {j})")
        return self.rows[i][j - lo]

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "rows": [list(r) for r in self.rows],
            "N": self.alphabet,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Tableau":
        return validate_tableau(SkewShape.from_json(obj["shape"]), obj["rows"], obj["N"])


def validate_tableau(shape: SkewShape, rows: Sequence[Sequence[int]], alphabet: int) -> Tableau:
    """Check dimensions, entry range, row and column conditions.

    Violations are reported with the exact cell, rows must weakly increase
    left to right and columns strictly increase top to bottom.
    """
    rows = tuple(tuple(int(v) for v in r) for r in rows)
    if len(rows) != shape.rows:
        raise ShapeMismatch(f"expected {shape.rows} rows, got {len(rows)}")
    for i in range(shape.rows):
        lo, hi = shape.row_span(i)
        if len(rows[i]) != hi - lo:
            raise ShapeMismatch(f"row {i} expected {hi - lo} entries, got {len(rows[i])}")
    for i in range(shape.rows):
        lo, hi = shape.row_span(i)
        for j in range(lo, hi):
            v = rows[i][j - lo]
            if not 1 <= v <= alphabet:
                raise EntryOutOfRange((i, j), f"entry {v} at ({i}, {j}) outside 1..{alphabet}")
            if j - 1 >= lo and v < rows[i][j - 1 - lo]:
                raise RowViolation((i, j), f"row {i} decreases at column {j}")
            if i > 0 and shape.has_cell(i - 1, j):
                above = rows[i - 1][j - shape.row_span(i - 1)[0]]
                if v <= above:
                    raise ColumnViolation((i, j), f"column {j} fails to increase at row {i}")
    return Tableau(shape, rows, alphabet)


def enumerate_ssyt(shape: SkewShape, alphabet: int) -> Iterator[Tableau]:
    """All semistandard fillings, in row-major lexicographic order.

    The empty shape yields exactly one empty tableau.  A shape with a column
    taller than ``alphabet`` yields nothing.
    """
    if alphabet < 1:
        raise ValueError(f"alphabet must be positive: {alphabet}")
    yield from _fill(shape, alphabet, lambda lo, hi: range(lo, hi + 1))


def weight(t: Tableau) -> tuple[int, ...]:
    """Exponent vector: position ``k`` counts the entries equal to ``k + 1``."""
    exps = [0] * t.alphabet
    for row in t.rows:
        for v in row:
            exps[v - 1] += 1
    return tuple(exps)


def _fill(shape, alphabet, candidates) -> Iterator[Tableau]:
    cells = list(shape.cells())
    acc: list[list[int]] = [[] for _ in range(shape.rows)]
    spans = [shape.row_span(i) for i in range(shape.rows)]
    # cells strictly below in the same column force an upper bound
    below = {}
    for i, j in cells:
        d = 0
        while shape.has_cell(i + d + 1, j):
            d += 1
        below[(i, j)] = d

    def rec(k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield Tableau(shape, tuple(tuple(r) for r in acc), alphabet)
            return
        i, j = cells[k]
        lo = 1
        if j - 1 >= spans[i][0]:
            lo = max(lo, acc[i][-1])
        if i > 0 and shape.has_cell(i - 1, j):
            lo = max(lo, acc[i - 1][j - spans[i - 1][0]] + 1)
        for v in candidates(lo, alphabet - below[(i, j)]):
            acc[i].append(v)
            yield from rec(k + 1)
            acc[i].pop()

    yield from rec(0)


def first_tableau(shape: SkewShape, alphabet: int) -> Tableau | None:
    """The lexicographically smallest filling, or None if none exists."""
    return next(enumerate_ssyt(shape, alphabet), None)


def last_tableau(shape: SkewShape, alphabet: int) -> Tableau | None:
    """The entrywise largest filling, or None if none exists.

    Filled greedily in reverse row-major order: each entry is as large as the
    right neighbour and the cell below allow.
    """
    rows: list[list[int]] = [[] for _ in range(shape.rows)]
    for i in range(shape.rows - 1, -1, -1):
        lo, hi = shape.row_span(i)
        for j in range(hi - 1, lo - 1, -1):
            v = alphabet
            if rows[i]:
                v = min(v, rows[i][0])
            if shape.has_cell(i + 1, j):
                v = min(v, rows[i + 1][j - shape.row_span(i + 1)[0]] - 1)
            rows[i].insert(0, v)
    try:
        return validate_tableau(shape, rows, alphabet)
    except TableauError:
        return None


def random_tableau(shape: SkewShape, alphabet: int, rng: random.Random) -> Tableau | None:
    """A filling found by backtracking with shuffled candidate values.

    Not uniform over all fillings, but cheap and reaches every filling with
    positive probability.
    """

    def shuffled(lo: int, hi: int):
        vals = list(range(lo, hi + 1))
        rng.shuffle(vals)
        return vals

    return next(_fill(shape, alphabet, shuffled), None)
