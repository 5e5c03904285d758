"""Exact skew Schur computations.

Two independent routes: symbolic expansion by summing tableau weights, and
integer evaluation through the determinant of complete homogeneous sums
(fraction-free elimination, exact arbitrary-precision arithmetic throughout).
The test suite cross-checks the two on every shape it can enumerate.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import SkewShape
from .tableaux import enumerate_ssyt, weight

Monomial = tuple[int, ...]


class VariableCountMismatch(ValueError):
    pass


class Polynomial:
    """Sparse multivariate polynomial with integer coefficients.

    Terms map exponent tuples of length ``nvars`` to nonzero coefficients.
    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Monomial, int] | None = None) -> None:
        self.nvars = nvars
        self.terms: dict[Monomial, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != nvars:
                    raise VariableCountMismatch(f"exponent {exp} has length != {nvars}")
                if coeff:
                    self.terms[tuple(exp)] = self.terms.get(tuple(exp), 0) + coeff
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise VariableCountMismatch(f"{self.nvars} variables vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return Polynomial(self.nvars, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, 0) - coeff
        return Polynomial(self.nvars, terms)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms: dict[Monomial, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {len(self.terms)} terms)"

    def evaluate(self, values: Sequence[int]) -> int:
        if len(values) != self.nvars:
            raise VariableCountMismatch(f"need {self.nvars} values, got {len(values)}")
        total = 0
        for exp, coeff in self.terms.items():
            m = coeff
            for v, e in zip(values, exp):
                m *= v**e
            total += m
        return total

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Descending lexicographic exponent order; the canonical term order."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def to_json(self) -> dict:
        return {
            "N": self.nvars,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        return cls(
            obj["N"], {tuple(t["exp"]): int(t["coeff"]) for t in obj["terms"]}
        )


@lru_cache(maxsize=None)
def skew_schur(shape: SkewShape, nvars: int) -> Polynomial:
    """Sum of tableau weights over all fillings with entries in ``1..nvars``."""
    terms: dict[Monomial, int] = {}
    for t in enumerate_ssyt(shape, nvars):
        exp = weight(t)
        terms[exp] = terms.get(exp, 0) + 1
    return Polynomial(nvars, terms)


def complete_homogeneous_values(values: Sequence[int], max_degree: int) -> list[int]:
    """h_d evaluated at ``values`` for d = 0..max_degree."""
    h = [0] * (max_degree + 1)
    h[0] = 1
    for v in values:
        for d in range(1, max_degree + 1):
            h[d] += v * h[d - 1]
    return h


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def skew_schur_eval(shape: SkewShape, values: Sequence[int]) -> int:
    """Independent oracle: det(h_{outer_i - inner_j - i + j}) at integer values.

    Out-of-range indices contribute h_d = 0 for d < 0; the empty shape gives 1.
    """
    lam, mu = shape.outer, shape.inner
    r = len(lam)
    if r == 0:
        return 1
    degrees = [
        [lam.part(i) - mu.part(j) - i + j for j in range(1, r + 1)] for i in range(1, r + 1)
    ]
    max_degree = max(max(row) for row in degrees)
    h = complete_homogeneous_values(values, max(max_degree, 0))
    m = [[h[d] if d >= 0 else 0 for d in row] for row in degrees]
    return bareiss_determinant(m)
