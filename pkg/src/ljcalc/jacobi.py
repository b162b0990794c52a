"""Jacobi structures ``(L, E)``: verification, brackets, the 1-jet algebroid,
conformal changes, poissonization and modular data."""

from __future__ import annotations

from dataclasses import dataclass

from .expoly import ExPoly
from .tensorcalc import (
    Chart,
    DiffForm,
    MultiVector,
    Tensor,
    apply_vector,
    contract,
    coordinate_form,
    coordinate_vector,
    differential,
    evaluate,
    exterior_d,
    interior,
    lie_derivative,
    pairing,
    schouten,
    sharp,
    tensor_from_json,
    vector_field,
    wedge,
)


class NotJacobi(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class JacobiStructure:
    """A chart with a 2-vector ``lam`` and a vector field ``e``.

    ``constraint`` is an optional polynomial; when set, identities are read
    modulo the ideal it generates (used for structures restricted to a
    hypersurface such as the unit sphere).
    """

    chart: Chart
    lam: MultiVector
    e: MultiVector
    constraint: ExPoly | None = None

    def __post_init__(self):
        if self.lam.degree != 2 and self.lam:
            raise ValueError("lam must be a 2-vector")
        if self.e.degree != 1 and self.e:
            raise ValueError("e must be a vector field")
        if self.lam.chart != self.chart or self.e.chart != self.chart:
            raise ValueError("lam and e must live on the structure's chart")
        if self.lam.degree != 2:
            object.__setattr__(self, "lam", MultiVector.zero(self.chart, 2))
        if self.e.degree != 1:
            object.__setattr__(self, "e", MultiVector.zero(self.chart, 1))

    @classmethod
    def poisson(cls, lam: MultiVector) -> "JacobiStructure":
        return cls(lam.chart, lam, MultiVector.zero(lam.chart, 1))

    @property
    def n(self) -> int:
        return self.chart.n

    @property
    def is_poisson(self) -> bool:
        return self.e.is_zero()

    def d(self, f: ExPoly) -> DiffForm:
        return differential(f, self.chart)

    def to_json(self) -> dict:
        return {
            "chart": {"names": list(self.chart.names)},
            "lambda": self.lam.to_json(),
            "e": self.e.to_json(),
            "constraint": None if self.constraint is None else self.constraint.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "JacobiStructure":
        chart = Chart(tuple(data["chart"]["names"]))
        lam = tensor_from_json(chart, data["lambda"])
        e = tensor_from_json(chart, data["e"])
        if not isinstance(lam, MultiVector) or not isinstance(e, MultiVector):
            raise ValueError("lambda and e must be multivectors")
        if lam.degree != 2 or e.degree != 1:
            raise ValueError("lambda must have degree 2 and e degree 1")
        q = data.get("constraint")
        constraint = None if q is None else ExPoly.from_json(chart.n, q)
        return cls(chart, lam, e, constraint)


# -- verification -----------------------------------------------------------------


@dataclass
class JacobiReport:
    passed: bool
    r1: MultiVector
    r2: MultiVector
    modulo: ExPoly | None = None

    def residuals(self) -> list[str]:
        out = []
        if self.r1:
            out.append(f"[L,L] - 2 E^L = {self.r1}")
        if self.r2:
            out.append(f"[E,L] = {self.r2}")
        return out


def reduce_tensor(T: Tensor, q: ExPoly | None) -> Tensor:
    if q is None:
        return T
    if not T.is_polynomial():
        raise ValueError("reduction modulo the constraint needs polynomial coefficients")
    return T.reduce_mod(q)


def verify_jacobi(lam: MultiVector | JacobiStructure, e: MultiVector | None = None, q: ExPoly | None = None) -> JacobiReport:
    """Residuals ``[L,L] - 2 E^L`` and ``[E,L]``, reduced modulo ``q`` when given."""
    if isinstance(lam, JacobiStructure):
        J = lam
        lam, e = J.lam, J.e
        q = J.constraint if q is None else q
    if e is None:
        e = MultiVector.zero(lam.chart, 1)
    if lam.degree != 2 or (e and e.degree != 1):
        raise ValueError("verify_jacobi needs a 2-vector and a vector field")
    r1 = schouten(lam, lam) - wedge(e, lam).scale(2)
    r2 = schouten(e, lam) if e else MultiVector.zero(lam.chart, 2)
    r1 = reduce_tensor(r1, q)
    r2 = reduce_tensor(r2, q)
    return JacobiReport(not r1 and not r2, r1, r2, q)


def require_jacobi(J: JacobiStructure) -> None:
    rep = verify_jacobi(J)
    if not rep.passed:
        raise NotJacobi("; ".join(rep.residuals()))


# -- bracket and hamiltonian fields ---------------------------------------------------


def jacobi_bracket(J: JacobiStructure, f: ExPoly, g: ExPoly) -> ExPoly:
    """``{f,g} = L(df,dg) + f E(g) - g E(f)``."""
    out = evaluate(J.lam, [J.d(f), J.d(g)])
    if J.e:
        out = out + f * apply_vector(J.e, g) - g * apply_vector(J.e, f)
    return out


def hamiltonian_field(J: JacobiStructure, f: ExPoly) -> MultiVector:
    """``X_f = sharp(df) + f E``."""
    return sharp(J.lam, J.d(f)) + J.e.scale(f)


# -- the Lie algebroid of 1-jets ----------------------------------------------------


@dataclass(frozen=True, eq=False)
class Section1Jet:
    """A pair ``(alpha, f)`` of a 1-form and a function."""

    alpha: DiffForm
    f: ExPoly

    def __post_init__(self):
        if self.alpha.degree != 1 and self.alpha:
            raise ValueError("alpha must be a 1-form")
        if self.alpha.degree != 1:
            object.__setattr__(self, "alpha", DiffForm.zero(self.alpha.chart, 1))
        object.__setattr__(self, "f", ExPoly.coerce(self.alpha.chart.n, self.f))

    @classmethod
    def jet(cls, chart: Chart, f: ExPoly) -> "Section1Jet":
        """``j1 f = (df, f)``."""
        return cls(differential(f, chart), f)

    def __add__(self, other: "Section1Jet") -> "Section1Jet":
        return Section1Jet(self.alpha + other.alpha, self.f + other.f)

    def __sub__(self, other: "Section1Jet") -> "Section1Jet":
        return Section1Jet(self.alpha - other.alpha, self.f - other.f)

    def scale(self, g) -> "Section1Jet":
        return Section1Jet(self.alpha.scale(g), self.f * ExPoly.coerce(self.alpha.chart.n, g))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Section1Jet):
            return NotImplemented
        return self.alpha == other.alpha and self.f == other.f

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and self.f.is_zero()

    def __repr__(self) -> str:
        return f"Section1Jet({self.alpha}, {self.f})"


def anchor(J: JacobiStructure, s: Section1Jet) -> MultiVector:
    """``sharp(alpha) + f E``."""
    return sharp(J.lam, s.alpha) + J.e.scale(s.f)


def algebroid_bracket(J: JacobiStructure, s1: Section1Jet, s2: Section1Jet) -> Section1Jet:
    a, f = s1.alpha, s1.f
    b, g = s2.alpha, s2.f
    sa = sharp(J.lam, a)
    sb = sharp(J.lam, b)
    lam_ab = evaluate(J.lam, [a, b])
    gamma = lie_derivative(sa, b) - lie_derivative(sb, a) - J.d(lam_ab)
    h = pairing(a, sb) + apply_vector(sa, g) - apply_vector(sb, f)
    if J.e:
        E = J.e
        gamma = gamma + lie_derivative(E, b).scale(f) - lie_derivative(E, a).scale(g) - interior(E, wedge(a, b))
        h = h + f * apply_vector(E, g) - g * apply_vector(E, f)
    return Section1Jet(gamma, h)


# -- conformal changes and poissonization --------------------------------------------


def conformal_change(J: JacobiStructure, a: ExPoly) -> JacobiStructure:
    """``(a L, sharp(da) + a E)`` for a unit ``a`` of the coefficient ring."""
    if not a.is_unit():
        raise ValueError(f"conformal factor {a} must be a single exponential term")
    if a.terms()[0][0] <= 0:
        raise ValueError("conformal factor must be positive")
    return JacobiStructure(J.chart, J.lam.scale(a), hamiltonian_field(J, a), J.constraint)


def conformal_iso(a: ExPoly, s: Section1Jet) -> Section1Jet:
    """``(alpha/a - f da/a^2, f/a)``."""
    chart = s.alpha.chart
    inv = a.inverse()
    return Section1Jet(s.alpha.scale(inv) - differential(a, chart).scale(s.f * inv * inv), s.f * inv)


def poissonize(J: JacobiStructure, name: str = "t") -> JacobiStructure:
    """``e^{-t}(L + d/dt ^ E)`` on the chart extended by a new coordinate ``t``."""
    new = J.chart.extend(J.chart.fresh_name(name))
    lam = J.lam.extend_chart(new)
    e = J.e.extend_chart(new)
    dt = coordinate_vector(new, new.n - 1)
    weight = ExPoly.exp(new.n, [0] * J.n + [-1])
    return JacobiStructure(new, (lam + wedge(dt, e)).scale(weight), MultiVector.zero(new, 1))


# -- modular data -----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ModularPair:
    X: MultiVector
    g: ExPoly

    def __iter__(self):
        yield self.X
        yield self.g


def _volume_density(nu: DiffForm) -> ExPoly:
    n = nu.chart.n
    if nu.degree != n:
        raise ValueError("a volume form must have top degree")
    u = nu.coeff(tuple(range(n)))
    if not u.is_unit():
        raise ValueError(f"volume form coefficient {u} is not invertible")
    return u


def modular_vector_field(J: JacobiStructure, nu: DiffForm) -> MultiVector:
    """Field ``X`` with ``dx_i(X) nu = dx_i ^ d i(L) nu`` for each coordinate."""
    u_inv = _volume_density(nu).inverse()
    top = tuple(range(J.n))
    dinu = exterior_d(contract(J.lam, nu))
    comps = []
    for i in range(J.n):
        comps.append(wedge(coordinate_form(J.chart, i), dinu).coeff(top) * u_inv)
    return vector_field(J.chart, comps)


def divergence(J: JacobiStructure, nu: DiffForm, X: MultiVector | None = None) -> ExPoly:
    """``div_nu X`` from ``L_X nu = (div X) nu``; defaults to ``X = E``."""
    u_inv = _volume_density(nu).inverse()
    X = J.e if X is None else X
    if not X:
        return J.chart.zero()
    return lie_derivative(X, nu).coeff(tuple(range(J.n))) * u_inv


def modular_pair(J: JacobiStructure, nu: DiffForm) -> ModularPair:
    """``(X_nu - n E, div_nu E)``."""
    X = modular_vector_field(J, nu) - J.e.scale(J.n)
    return ModularPair(X, divergence(J, nu))


# -- the flat connection on the top jet bundle -------------------------------------------


@dataclass
class NablaReport:
    passed: bool
    lhs: DiffForm
    rhs: DiffForm


def nabla(J: JacobiStructure, s: Section1Jet, Phi: DiffForm) -> DiffForm:
    """Second component of ``nabla_(alpha,f)(0, Phi)`` for a top-degree ``Phi``."""
    d = exterior_d
    iE = interior(J.e, Phi)
    return d(iE).scale(s.f) + wedge(s.alpha, d(contract(J.lam, Phi)) - iE.scale(J.n))


def nabla_check(J: JacobiStructure, nu: DiffForm, s: Section1Jet) -> NablaReport:
    """Compare ``nabla_s(0, nu)`` with ``(f div E + alpha(X_nu - n E)) nu``."""
    lhs = nabla(J, s, nu)
    X, div = modular_pair(J, nu)
    rhs = nu.scale(s.f * div + pairing(s.alpha, X))
    return NablaReport(lhs == rhs, lhs, rhs)
