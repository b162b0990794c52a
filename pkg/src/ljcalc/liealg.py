"""Finite-dimensional Lie algebras from structure constants.

Chevalley-Eilenberg cohomology with trivial coefficients, the modular
character, linear Poisson structures, the induced Jacobi structure on the
unit sphere, and LJ dimensions of symplectic nilmanifolds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import linalg
from ._grassmann import merge
from .expoly import ExPoly, parse_rational
from .jacobi import JacobiStructure
from .tensorcalc import (
    Chart,
    MultiVector,
    form_into_multivector,
    one_form,
    vector_field,
    wedge,
)


class JacobiIdentityError(ValueError):
    pass


class LieAlgebra:
    """Structure constants ``c[i, j, k]`` with ``[e_i, e_j] = sum_k c[i,j,k] e_k``.

    Indices are zero-based and only ``i < j`` entries are stored.
    """

    def __init__(self, n: int, constants: Mapping[tuple, object] | None = None, name: str = ""):
        if n < 1:
            raise ValueError("dimension must be positive")
        self.n = n
        self.name = name
        c: dict = {}
        for (i, j, k), v in (constants or {}).items():
            v = parse_rational(v) if isinstance(v, str) else Fraction(v)
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise IndexError(f"structure constant index {(i, j, k)} out of range")
            if i == j:
                if v:
                    raise ValueError("c[i, i, k] must vanish")
                continue
            if i > j:
                i, j, v = j, i, -v
            key = (i, j, k)
            total = c.get(key, 0) + v
            if total:
                c[key] = total
            else:
                c.pop(key, None)
        self._c = c

    def c(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self._c.get((i, j, k), Fraction(0))
        return -self._c.get((j, i, k), Fraction(0))

    def constants(self) -> dict:
        return dict(self._c)

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * self.n
        for (i, j, k), c in self._c.items():
            w = u[i] * v[j] - u[j] * v[i]
            if w:
                out[k] += c * w
        return out

    def jacobi_defects(self) -> list[tuple]:
        n = self.n
        bad = []
        for i, j, k in combinations(range(n), 3):
            for l in range(n):
                s = Fraction(0)
                for m in range(n):
                    s += self.c(i, j, m) * self.c(m, k, l) + self.c(j, k, m) * self.c(m, i, l) + self.c(k, i, m) * self.c(m, j, l)
                if s:
                    bad.append((i, j, k, l, s))
        return bad

    def check_jacobi(self) -> None:
        bad = self.jacobi_defects()
        if bad:
            raise JacobiIdentityError(f"Jacobi identity fails at {bad[:3]}")

    def to_json(self) -> dict:
        return {
            "dim": self.n,
            "c": [{"i": i + 1, "j": j + 1, "k": k + 1, "v": str(v)} for (i, j, k), v in sorted(self._c.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping, name: str = "") -> "LieAlgebra":
        n = int(data["dim"])
        consts: dict = {}
        for entry in data.get("c", []):
            i, j, k = int(entry["i"]) - 1, int(entry["j"]) - 1, int(entry["k"]) - 1
            if i >= j:
                raise ValueError("algebra files list only entries with i < j")
            consts[(i, j, k)] = parse_rational(str(entry["v"]))
        return cls(n, consts, name)

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name or self.n}, {self._c})"


# -- built-in algebras --------------------------------------------------------------


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, f"abelian{n}")


def heisenberg() -> LieAlgebra:
    """``[e1, e2] = e3``."""
    return LieAlgebra(3, {(0, 1, 2): 1}, "h3")


def kodaira_thurston() -> LieAlgebra:
    """``h3 + R`` with basis dual to ``(alpha, beta, eta, gamma)``, ``d eta = -alpha ^ beta``."""
    return LieAlgebra(4, {(0, 1, 2): 1}, "kt")


def affine_line() -> LieAlgebra:
    """``[e1, e2] = e2``."""
    return LieAlgebra(2, {(0, 1, 1): 1}, "aff1")


def so3() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1}, "so3")


def sl2() -> LieAlgebra:
    """Basis ``(h, e, f)`` with ``[h,e] = 2e``, ``[h,f] = -2f``, ``[e,f] = h``."""
    return LieAlgebra(3, {(0, 1, 1): 2, (0, 2, 2): -2, (1, 2, 0): 1}, "sl2")


def builtin(name: str) -> LieAlgebra:
    name = name.lower()
    table = {
        "h3": heisenberg,
        "kt": kodaira_thurston,
        "h3+r": kodaira_thurston,
        "aff1": affine_line,
        "so3": so3,
        "sl2": sl2,
    }
    if name in table:
        return table[name]()
    if name.startswith("abelian"):
        n = int(name[len("abelian"):] or 0)
        if not 1 <= n <= 6:
            raise ValueError("built-in abelian algebras have dimension 1..6")
        return abelian(n)
    raise KeyError(f"unknown built-in algebra {name!r}")


BUILTIN_NAMES = ["abelian1", "abelian2", "abelian3", "abelian4", "abelian5", "abelian6", "h3", "kt", "aff1", "so3", "sl2"]


# -- Chevalley-Eilenberg complex -----------------------------------------------------------


Cochain = dict  # sorted index tuple -> Fraction


def ce_basis(n: int, k: int) -> list[tuple]:
    return list(combinations(range(n), k))


def ce_wedge(a: Cochain, b: Cochain) -> Cochain:
    out: dict = {}
    for i1, c1 in a.items():
        for i2, c2 in b.items():
            s, idx = merge(i1, i2)
            if s:
                v = out.get(idx, 0) + s * c1 * c2
                if v:
                    out[idx] = v
                else:
                    out.pop(idx, None)
    return out


def ce_d_generator(g: LieAlgebra, k: int) -> Cochain:
    """``d e^k = -sum_{i<j} c[i,j,k] e^i ^ e^j``."""
    return {(i, j): -c for (i, j, kk), c in g.constants().items() if kk == k}


def ce_d(g: LieAlgebra, a: Cochain) -> Cochain:
    """Coboundary, extended from generators as a graded derivation."""
    gens = [ce_d_generator(g, k) for k in range(g.n)]
    out: dict = {}
    for idx, c in a.items():
        for r, i in enumerate(idx):
            if not gens[i]:
                continue
            left = {idx[:r]: Fraction(-1 if r % 2 else 1) * c}
            piece = ce_wedge(ce_wedge(left, gens[i]), {idx[r + 1:]: Fraction(1)})
            for key, v in piece.items():
                w = out.get(key, 0) + v
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
    return out


def ce_matrix(g: LieAlgebra, k: int) -> list[list[Fraction]]:
    """Matrix of ``d: C^k -> C^{k+1}`` in the lexicographic bases (rows = targets)."""
    src = ce_basis(g.n, k)
    tgt = ce_basis(g.n, k + 1)
    pos = {idx: r for r, idx in enumerate(tgt)}
    mat = linalg.zeros(len(tgt), len(src))
    for col, idx in enumerate(src):
        for key, v in ce_d(g, {idx: Fraction(1)}).items():
            mat[pos[key]][col] = v
    return mat


def _vec(cochain: Cochain, basis: list[tuple]) -> list[Fraction]:
    pos = {idx: r for r, idx in enumerate(basis)}
    v = [Fraction(0)] * len(basis)
    for idx, c in cochain.items():
        v[pos[idx]] = c
    return v


def _cochain(vec: Sequence, basis: list[tuple]) -> Cochain:
    return {idx: Fraction(c) for idx, c in zip(basis, vec) if c}


@dataclass
class CohomologyTable:
    dims: list[int]
    cochain_dims: list[int] = field(default_factory=list)
    cocycle_dims: list[int] = field(default_factory=list)
    ranks: list[int] = field(default_factory=list)
    representatives: list[list[Cochain]] = field(default_factory=list)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.dims))


def _image_vectors(mat) -> list[list[Fraction]]:
    cols = linalg.transpose(mat) if mat else []
    return cols


def _quotient_representatives(cocycles: list[list[Fraction]], boundaries: list[list[Fraction]]) -> list[int]:
    """Indices of cocycles completing a basis of the boundaries, in order."""
    chosen = []
    current = [b for b in boundaries]
    r = linalg.span_rank(current)
    for i, z in enumerate(cocycles):
        trial = current + [z]
        r2 = linalg.span_rank(trial)
        if r2 > r:
            current, r = trial, r2
            chosen.append(i)
    return chosen


def ce_cohomology(g: LieAlgebra, representatives: bool = True) -> CohomologyTable:
    g.check_jacobi()
    n = g.n
    mats = [ce_matrix(g, k) for k in range(n + 1)]
    ranks = [linalg.bareiss_rank(m) if m and m[0] else 0 for m in mats]
    cdims = [len(ce_basis(n, k)) for k in range(n + 1)]
    zdims = [cdims[k] - ranks[k] for k in range(n + 1)]
    dims = [zdims[k] - (ranks[k - 1] if k else 0) for k in range(n + 1)]
    reps: list[list[Cochain]] = []
    if representatives:
        for k in range(n + 1):
            basis = ce_basis(n, k)
            Z = linalg.nullspace(mats[k], len(basis)) if mats[k] else [
                [Fraction(int(i == j)) for i in range(len(basis))] for j in range(len(basis))
            ]
            B = _image_vectors(mats[k - 1]) if k else []
            chosen = _quotient_representatives(Z, B)
            reps.append([_cochain(Z[i], basis) for i in chosen])
    return CohomologyTable(dims, cdims, zdims, ranks, reps)


def betti_numbers(g: LieAlgebra) -> list[int]:
    return ce_cohomology(g, representatives=False).dims


# -- Lefschetz-type maps and LJ dimensions ------------------------------------------------------


def cocycles(g: LieAlgebra, k: int) -> list[list[Fraction]]:
    basis = ce_basis(g.n, k)
    if k >= g.n:
        return [[Fraction(int(i == j)) for i in range(len(basis))] for j in range(len(basis))]
    return linalg.nullspace(ce_matrix(g, k), len(basis))


def coboundaries(g: LieAlgebra, k: int) -> list[list[Fraction]]:
    if k == 0:
        return []
    return _image_vectors(ce_matrix(g, k - 1))


def lefschetz_rank(g: LieAlgebra, Omega: Cochain, k: int) -> int:
    """Rank of ``[a] -> [a ^ Omega]`` from ``H^k`` to ``H^{k+2}``."""
    n = g.n
    if k < 0 or k + 2 > n:
        return 0
    src = ce_basis(n, k)
    tgt = ce_basis(n, k + 2)
    images = [_vec(ce_wedge(_cochain(z, src), Omega), tgt) for z in cocycles(g, k)]
    B = coboundaries(g, k + 2)
    return linalg.span_rank(images + B) - linalg.span_rank(B)


def check_symplectic_cochain(g: LieAlgebra, Omega: Cochain) -> None:
    if any(len(idx) != 2 for idx in Omega):
        raise ValueError("Omega must be a 2-cochain")
    if ce_d(g, Omega):
        raise ValueError("Omega is not a cocycle")
    if g.n % 2:
        raise ValueError("a nondegenerate 2-form needs even dimension")
    top: Cochain = {(): Fraction(1)}
    for _ in range(g.n // 2):
        top = ce_wedge(top, Omega)
    if not top:
        raise ValueError("Omega is degenerate")


def lj_dims_from_lefschetz(betti: Sequence[int], ranks: Sequence[int]) -> list[int]:
    """``dim H^k / Im L^{k-2} + dim ker L^{k-1}`` for ``k = 0..n+1``.

    ``ranks[k]`` is the rank of ``L^k: H^k -> H^{k+2}``.
    """
    n = len(betti) - 1

    def b(k):
        return betti[k] if 0 <= k <= n else 0

    def r(k):
        return ranks[k] if 0 <= k < len(ranks) else 0

    return [b(k) - r(k - 2) + b(k - 1) - r(k - 1) for k in range(n + 2)]


def nilmanifold_lj_dims(g: LieAlgebra, Omega: Cochain) -> list[int]:
    g.check_jacobi()
    check_symplectic_cochain(g, Omega)
    betti = betti_numbers(g)
    ranks = [lefschetz_rank(g, Omega, k) for k in range(g.n + 1)]
    return lj_dims_from_lefschetz(betti, ranks)


def default_symplectic_cochain(g: LieAlgebra) -> Cochain:
    """``e1^e3 + e2^e4`` for the Kodaira-Thurston algebra, ``sum e_{2i-1}^e_{2i}`` otherwise."""
    if g.name == "kt":
        return {(0, 2): Fraction(1), (1, 3): Fraction(1)}
    if g.n % 2:
        raise ValueError("odd-dimensional algebras carry no symplectic 2-cochain")
    return {(2 * i, 2 * i + 1): Fraction(1) for i in range(g.n // 2)}


# -- modular character and linear Poisson structures ----------------------------------------------


def modular_character(g: LieAlgebra) -> list[Fraction]:
    """``mu_i = trace(ad e_i) = sum_j c[i, j, j]``."""
    return [sum((g.c(i, j, j) for j in range(g.n)), Fraction(0)) for i in range(g.n)]


def is_unimodular(g: LieAlgebra) -> bool:
    return not any(modular_character(g))


def coordinate_chart(n: int) -> Chart:
    return Chart(tuple(f"x{i}" for i in range(1, n + 1)))


def lie_poisson(g: LieAlgebra) -> JacobiStructure:
    """``sum_{i<j} c[i,j,k] x_k d/dx_i ^ d/dx_j``."""
    g.check_jacobi()
    chart = coordinate_chart(g.n)
    xs = chart.coords()
    terms: dict = {}
    for (i, j, k), c in g.constants().items():
        terms[(i, j)] = terms.get((i, j), chart.zero()) + xs[k] * c
    return JacobiStructure.poisson(MultiVector(chart, 2, terms))


def radial_field(chart: Chart) -> MultiVector:
    return vector_field(chart, chart.coords())


def norm_squared(chart: Chart) -> ExPoly:
    return sum((x * x for x in chart.coords()), chart.zero())


def sphere_structure(g: LieAlgebra) -> JacobiStructure:
    """``(Lbar - A ^ i_a Lbar, i_a Lbar)`` with ``a = sum x_i dx_i``, constrained to the unit sphere."""
    lp = lie_poisson(g)
    chart = lp.chart
    A = radial_field(chart)
    a = one_form(chart, chart.coords())
    E = form_into_multivector(a, lp.lam)
    lam = lp.lam - wedge(A, E)
    return JacobiStructure(chart, lam, E, norm_squared(chart) - 1)
