"""Coordinate models: symplectic, contact and l.c.s. Darboux charts and the
quadratic Poisson plane."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial

from .expoly import ExPoly
from .jacobi import JacobiStructure
from .tensorcalc import (
    Chart,
    DiffForm,
    MultiVector,
    coordinate_form,
    coordinate_vector,
    exterior_d,
    extend_multiplicatively,
    interior,
    pairing,
    power,
    wedge,
)


def _darboux_names(m: int) -> tuple[list[str], list[str]]:
    if m == 1:
        return ["q"], ["p"]
    return [f"q{i}" for i in range(1, m + 1)], [f"p{i}" for i in range(1, m + 1)]


def symplectic(m: int = 1) -> JacobiStructure:
    """``sum d/dq_i ^ d/dp_i`` on ``R^{2m}``."""
    qs, ps = _darboux_names(m)
    chart = Chart(tuple(qs + ps))
    lam = MultiVector.zero(chart, 2)
    for i in range(m):
        lam = lam + wedge(coordinate_vector(chart, i), coordinate_vector(chart, m + i))
    return JacobiStructure.poisson(lam)


def symplectic_form(m: int = 1) -> DiffForm:
    chart = symplectic(m).chart
    out = DiffForm.zero(chart, 2)
    for i in range(m):
        out = out + wedge(coordinate_form(chart, i), coordinate_form(chart, m + i))
    return out


def quadratic_plane() -> JacobiStructure:
    """``x y d/dx ^ d/dy`` on ``R^2``."""
    chart = Chart(("x", "y"))
    x, y = chart.coords()
    lam = wedge(coordinate_vector(chart, 0), coordinate_vector(chart, 1)).scale(x * y)
    return JacobiStructure.poisson(lam)


@dataclass(frozen=True)
class ContactModel:
    """Darboux chart ``(t, q, p)`` with ``eta = dt - sum p_i dq_i``."""

    m: int = 1

    @cached_property
    def chart(self) -> Chart:
        qs, ps = _darboux_names(self.m)
        return Chart(tuple(["t"] + qs + ps))

    def q(self, i: int) -> int:
        return 1 + i

    def p(self, i: int) -> int:
        return 1 + self.m + i

    @cached_property
    def eta(self) -> DiffForm:
        c = self.chart
        xs = c.coords()
        out = coordinate_form(c, 0)
        for i in range(self.m):
            out = out - coordinate_form(c, self.q(i), xs[self.p(i)])
        return out

    @cached_property
    def d_eta(self) -> DiffForm:
        return exterior_d(self.eta)

    @cached_property
    def structure(self) -> JacobiStructure:
        c = self.chart
        xs = c.coords()
        dt = coordinate_vector(c, 0)
        lam = MultiVector.zero(c, 2)
        for i in range(self.m):
            X = coordinate_vector(c, self.q(i)) + dt.scale(xs[self.p(i)])
            lam = lam + wedge(X, coordinate_vector(c, self.p(i)))
        return JacobiStructure(c, lam, dt)

    @property
    def reeb(self) -> MultiVector:
        return self.structure.e

    @cached_property
    def volume(self) -> DiffForm:
        """``eta ^ (d eta)^m``."""
        return wedge(self.eta, power(self.d_eta, self.m))

    @cached_property
    def _flat_images(self) -> list[DiffForm]:
        c = self.chart
        out = []
        for i in range(c.n):
            X = coordinate_vector(c, i)
            out.append(interior(X, self.d_eta) + self.eta.scale(pairing(self.eta, X)))
        return out

    def flat(self, P: MultiVector) -> DiffForm:
        """Multiplicative extension of ``X -> i_X d eta + eta(X) eta``."""
        return extend_multiplicatively(self._flat_images, P)


@dataclass(frozen=True)
class LcsModel:
    """l.c.s. Darboux chart with conformal factor ``e^{q1}``.

    ``Omega = e^{q1} sum dq_i ^ dp_i`` and Lee form ``omega = dq1``.
    """

    m: int = 1

    @cached_property
    def chart(self) -> Chart:
        qs, ps = _darboux_names(self.m)
        return Chart(tuple(qs + ps))

    def q(self, i: int) -> int:
        return i

    def p(self, i: int) -> int:
        return self.m + i

    @cached_property
    def factor(self) -> ExPoly:
        lam = [0] * (2 * self.m)
        lam[0] = 1
        return ExPoly.exp(2 * self.m, lam)

    @cached_property
    def Omega(self) -> DiffForm:
        c = self.chart
        out = DiffForm.zero(c, 2)
        for i in range(self.m):
            out = out + wedge(coordinate_form(c, self.q(i)), coordinate_form(c, self.p(i)))
        return out.scale(self.factor)

    @cached_property
    def omega(self) -> DiffForm:
        return coordinate_form(self.chart, 0)

    @cached_property
    def structure(self) -> JacobiStructure:
        c = self.chart
        inv = self.factor.inverse()
        lam = MultiVector.zero(c, 2)
        for i in range(self.m):
            lam = lam + wedge(coordinate_vector(c, self.q(i)), coordinate_vector(c, self.p(i)))
        E = coordinate_vector(c, self.p(0), -inv)
        return JacobiStructure(c, lam.scale(inv), E)

    @property
    def top_form(self) -> DiffForm:
        """``Omega^m / m!``."""
        return power(self.Omega, self.m) / factorial(self.m)

    @cached_property
    def volume(self) -> DiffForm:
        return power(self.Omega, self.m)

    @cached_property
    def _flat_images(self) -> list[DiffForm]:
        c = self.chart
        return [interior(coordinate_vector(c, i), self.Omega) for i in range(c.n)]

    def flat(self, P: MultiVector) -> DiffForm:
        """Multiplicative extension of ``X -> i_X Omega``."""
        return extend_multiplicatively(self._flat_images, P)
