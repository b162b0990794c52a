"""Seeded random exponential polynomials and tensors for property suites."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .expoly import ExPoly
from .tensorcalc import Chart, DiffForm, MultiVector


class RandomSource:
    """Small random objects on a chart, fully determined by the seed.

    ``frequencies`` lists the exponential frequency vectors allowed in
    coefficients; by default only ``0`` (pure polynomials).
    """

    def __init__(self, chart: Chart, seed: int = 0, *, max_degree: int = 2, max_terms: int = 3,
                 frequencies: Sequence[Sequence] | None = None, coeff_range: int = 3):
        self.chart = chart
        self.rng = random.Random(seed)
        self.max_degree = max_degree
        self.max_terms = max_terms
        n = chart.n
        self.frequencies = [tuple(Fraction(v) for v in f) for f in (frequencies or [[0] * n])]
        self.coeff_range = coeff_range

    def rational(self) -> Fraction:
        r = self.rng
        while True:
            num = r.randint(-self.coeff_range, self.coeff_range)
            if num:
                return Fraction(num, r.choice((1, 1, 1, 2)))

    def monomial_exponents(self) -> tuple:
        n = self.chart.n
        deg = self.rng.randint(0, self.max_degree)
        alpha = [0] * n
        for _ in range(deg):
            alpha[self.rng.randrange(n)] += 1
        return tuple(alpha)

    def function(self, terms: int | None = None) -> ExPoly:
        n = self.chart.n
        count = terms if terms is not None else self.rng.randint(1, self.max_terms)
        out = {}
        for _ in range(count):
            key = (self.monomial_exponents(), self.rng.choice(self.frequencies))
            out[key] = out.get(key, 0) + self.rational()
        return ExPoly(n, out)

    def _tensor(self, cls, k: int, density: float = 0.5):
        n = self.chart.n
        if k > n:
            return cls.zero(self.chart, k)
        idxs = list(combinations(range(n), k))
        terms = {}
        for idx in idxs:
            if self.rng.random() < density or len(idxs) == 1:
                terms[idx] = self.function(self.rng.randint(1, 2))
        if not terms and idxs:
            terms[self.rng.choice(idxs)] = self.function(1)
        return cls(self.chart, k, terms)

    def form(self, k: int, density: float = 0.5) -> DiffForm:
        return self._tensor(DiffForm, k, density)

    def multivector(self, k: int, density: float = 0.5) -> MultiVector:
        return self._tensor(MultiVector, k, density)

    def vector_field(self) -> MultiVector:
        return self.multivector(1)

    def degree(self, lo: int = 0, hi: int | None = None) -> int:
        hi = self.chart.n if hi is None else hi
        return self.rng.randint(lo, hi)
