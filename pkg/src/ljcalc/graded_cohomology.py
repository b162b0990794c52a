"""Exact cohomology of weight-homogeneous operators on polynomial multivectors.

If every coefficient of ``L`` (and ``E``) is homogeneous of degree ``q``
(resp. ``q - 1``), the operator maps multivectors of degree ``k`` with
coefficients of degree ``d`` into degree ``k + 1`` with coefficients of
degree ``d + q - 1``. Each such block is finite-dimensional, so its
cohomology is plain linear algebra over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable

from . import linalg
from .complexes import JetCochain, sigma, sigma_bar
from .expoly import ExPoly
from .jacobi import JacobiStructure
from .tensorcalc import Chart, MultiVector, schouten


class NotHomogeneous(ValueError):
    pass


class NotACocycle(ValueError):
    pass


def monomials(n: int, d: int) -> list[tuple]:
    """Exponent vectors of total degree ``d``, lexicographically descending."""
    if d < 0:
        return []
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(n - 1, d - a):
            out.append((a,) + rest)
    return out


def multivector_basis(chart: Chart, k: int, d: int) -> list[MultiVector]:
    n = chart.n
    if k < 0 or k > n:
        return []
    out = []
    for idx in combinations(range(n), k):
        for alpha in monomials(n, d):
            out.append(MultiVector(chart, k, {idx: ExPoly.monomial(n, 1, alpha)}))
    return out


def _homogeneous_degree(T: MultiVector) -> int | None:
    """Common coefficient degree, ``None`` for the zero tensor."""
    degs = set()
    for _, c in T.items():
        if not c.is_polynomial():
            raise NotHomogeneous("only polynomial coefficients are supported")
        degs.update(sum(alpha) for (alpha, _), _c in c.items())
    if not degs:
        return None
    if len(degs) > 1:
        raise NotHomogeneous(f"coefficients have mixed degrees {sorted(degs)}")
    return degs.pop()


def _mv_coords(T: MultiVector) -> dict:
    out = {}
    for idx, c in T.items():
        for (alpha, _), v in c.items():
            out[(idx, alpha)] = v
    return out


@dataclass(frozen=True, eq=False)
class GradedOperator:
    """A degree-raising operator with the data needed to cut it into blocks.

    ``basis(k, d)`` lists the source elements of block ``(k, d)``,
    ``coords`` expands an element into ``{key: coefficient}``, and
    ``block_of`` locates the block of a homogeneous element.
    """

    tag: str
    chart: Chart
    q: int
    apply: Callable
    basis: Callable[[int, int], list]
    coords: Callable[[object], dict]
    block_of: Callable[[object], tuple | None]

    def target(self, k: int, d: int) -> tuple[int, int]:
        return k + 1, d + self.q - 1

    def source_of(self, k: int, d: int) -> tuple[int, int]:
        return k - 1, d - self.q + 1


def sigma_bar_operator(lam: MultiVector) -> GradedOperator:
    """``P -> -[L, P]`` for a homogeneous Poisson 2-vector."""
    q = _homogeneous_degree(lam)
    if q is None:
        q = 1  # the zero structure preserves every block
    if not schouten(lam, lam).is_zero():
        raise ValueError("the 2-vector is not Poisson")
    chart = lam.chart

    def block_of(P):
        if P.is_zero():
            return None
        return P.degree, _homogeneous_degree(P)

    return GradedOperator("sigma_bar", chart, q, lambda P: sigma_bar(lam, P),
                          lambda k, d: multivector_basis(chart, k, d), _mv_coords, block_of)


def sigma_operator(J: JacobiStructure) -> GradedOperator:
    """The LJ operator on pairs ``(P, Q)``, blocks ``(P in V^k_d, Q in V^{k-1}_{d-1})``."""
    q = _homogeneous_degree(J.lam)
    qe = _homogeneous_degree(J.e)
    if q is None and qe is None:
        q = 1
    elif q is None:
        q = qe + 1
    elif qe is not None and qe != q - 1:
        raise NotHomogeneous(f"E has degree {qe}, expected {q - 1}")
    chart = J.chart

    def basis(k, d):
        if k < 0:
            return []
        out = [JetCochain(P, None if k == 0 else MultiVector.zero(chart, k - 1)) for P in multivector_basis(chart, k, d)]
        if k >= 1:
            out += [JetCochain(MultiVector.zero(chart, k), Q) for Q in multivector_basis(chart, k - 1, d - 1)]
        return out

    def coords(c):
        out = {("P",) + key: v for key, v in _mv_coords(c.P).items()}
        if c.Q is not None:
            out.update({("Q",) + key: v for key, v in _mv_coords(c.Q).items()})
        return out

    def block_of(c):
        if c.is_zero():
            return None
        dp = _homogeneous_degree(c.P)
        dq = None if c.Q is None else _homogeneous_degree(c.Q)
        if dp is not None and dq is not None and dq != dp - 1:
            raise NotHomogeneous("P and Q lie in different weight blocks")
        return c.degree, dp if dp is not None else dq + 1

    return GradedOperator("sigma", chart, q, lambda c: sigma(J, c), basis, coords, block_of)


@dataclass
class WeightBlock:
    tag: str
    k: int
    d: int
    source: list
    target_keys: list
    matrix: list[list[Fraction]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.target_keys), len(self.source)

    def rank(self) -> int:
        if not self.source or not self.target_keys:
            return 0
        return linalg.bareiss_rank(self.matrix)


def _target_keys(op: GradedOperator, k: int, d: int) -> list:
    keys = []
    for b in op.basis(k, d):
        keys.extend(sorted(op.coords(b)))
    return keys


def assemble(op: GradedOperator, k: int, d: int, reverse: bool = False) -> WeightBlock:
    """Matrix of ``op`` from block ``(k, d)`` to its target block.

    ``reverse`` enumerates both bases backwards (used to test that the
    results do not depend on the order).
    """
    source = op.basis(k, d)
    tk, td = op.target(k, d)
    keys = _target_keys(op, tk, td)
    if reverse:
        source = source[::-1]
        keys = keys[::-1]
    pos = {key: r for r, key in enumerate(keys)}
    mat = linalg.zeros(len(keys), len(source))
    for col, b in enumerate(source):
        for key, v in op.coords(op.apply(b)).items():
            if key not in pos:
                raise NotHomogeneous(f"image term {key} falls outside block {(tk, td)}")
            mat[pos[key]][col] = v
    return WeightBlock(op.tag, k, d, source, keys, mat)


def cohomology_dim(op: GradedOperator, k: int, d: int, reverse: bool = False) -> int:
    here = assemble(op, k, d, reverse)
    kernel = len(here.source) - here.rank()
    pk, pd = op.source_of(k, d)
    if pk < 0 or pd < 0:
        return kernel
    return kernel - assemble(op, pk, pd, reverse).rank()


@dataclass
class GradedTable:
    tag: str
    ks: list[int]
    ds: list[int]
    dims: dict = field(default_factory=dict)

    def row(self, k: int) -> list[int]:
        return [self.dims[(k, d)] for d in self.ds]

    def rows(self) -> list[dict]:
        return [{"k": k, "d": d, "dim": self.dims[(k, d)]} for k in self.ks for d in self.ds]


def cohomology_dims(op: GradedOperator, ks: Iterable[int], ds: Iterable[int], reverse: bool = False) -> GradedTable:
    ks, ds = list(ks), list(ds)
    ranks: dict = {}

    def rank(k, d):
        if k < 0 or d < 0:
            return 0
        if (k, d) not in ranks:
            ranks[(k, d)] = assemble(op, k, d, reverse).rank()
        return ranks[(k, d)]

    table = GradedTable(op.tag, ks, ds)
    for k in ks:
        for d in ds:
            size = len(op.basis(k, d))
            table.dims[(k, d)] = size - rank(k, d) - rank(*op.source_of(k, d))
    return table


@dataclass
class Exactness:
    exact: bool
    witness: object | None = None
    certificate: list[Fraction] | None = None
    block: tuple[int, int] | None = None


def is_exact(op: GradedOperator, cocycle) -> Exactness:
    """Decide whether ``cocycle`` is ``op`` of something in its unique preimage block.

    Returns a preimage when it is, otherwise a row vector annihilating the
    image of the block but not the cocycle.
    """
    if op.coords(op.apply(cocycle)):
        raise NotACocycle("op(cocycle) is not zero")
    blk = op.block_of(cocycle)
    if blk is None:
        return Exactness(True, None, None, None)
    k, d = blk
    pk, pd = op.source_of(k, d)
    coords = op.coords(cocycle)
    if pk < 0 or pd < 0:
        keys = sorted(coords)
        return Exactness(False, None, [Fraction(1) if key == keys[0] else Fraction(0) for key in keys], (pk, pd))
    block = assemble(op, pk, pd)
    pos = {key: r for r, key in enumerate(block.target_keys)}
    b = [Fraction(0)] * len(block.target_keys)
    for key, v in coords.items():
        b[pos[key]] = v
    x = linalg.solve(block.matrix, b, len(block.source))
    if x is None:
        cert = linalg.left_null_certificate(block.matrix, b, len(block.source))
        return Exactness(False, None, cert, (pk, pd))
    witness = None
    for coeff, src in zip(x, block.source):
        if coeff:
            term = src.scale(coeff)
            witness = term if witness is None else witness + term
    if witness is None:
        witness = block.source[0].scale(0) if block.source else None
    return Exactness(True, witness, None, (pk, pd))
