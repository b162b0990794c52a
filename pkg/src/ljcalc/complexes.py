"""Cochain and chain operators attached to a Jacobi structure, and the chain
maps relating them to de Rham type complexes on contact and l.c.s. charts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from ._grassmann import permutation_sign
from .expoly import ExPoly
from .jacobi import JacobiStructure, hamiltonian_field, jacobi_bracket
from .tensorcalc import (
    Chart,
    DiffForm,
    MultiVector,
    apply_vector,
    contract,
    coordinate_vector,
    d_omega,
    differential,
    evaluate,
    exterior_d,
    form_into_multivector,
    interior,
    lie_derivative,
    schouten,
    sharp,
    wedge,
    wedge_all,
)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# -- carriers -------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class JetCochain:
    """``(P, Q)`` with ``P`` a k-vector and ``Q`` a (k-1)-vector; ``Q`` is None at k = 0."""

    P: MultiVector
    Q: MultiVector | None = None

    def __post_init__(self):
        k = self.P.degree
        if not self.P and self.Q is not None and self.Q.degree + 1 != k:
            k = self.Q.degree + 1
            object.__setattr__(self, "P", MultiVector.zero(self.P.chart, k))
        if k == 0:
            if self.Q:
                raise ValueError("a degree-0 cochain has no second component")
            object.__setattr__(self, "Q", None)
        elif self.Q is None or (not self.Q and self.Q.degree != k - 1):
            object.__setattr__(self, "Q", MultiVector.zero(self.P.chart, k - 1))
        elif self.Q.degree != k - 1:
            raise ValueError(f"Q must have degree {k - 1}, got {self.Q.degree}")

    @classmethod
    def zero(cls, chart: Chart, k: int) -> "JetCochain":
        return cls(MultiVector.zero(chart, k), None if k == 0 else MultiVector.zero(chart, k - 1))

    @property
    def degree(self) -> int:
        return self.P.degree

    @property
    def chart(self) -> Chart:
        return self.P.chart

    def parts(self) -> tuple[MultiVector, MultiVector]:
        Q = self.Q if self.Q is not None else MultiVector.zero(self.chart, 0)
        return self.P, Q

    def is_zero(self) -> bool:
        return self.P.is_zero() and (self.Q is None or self.Q.is_zero())

    def __add__(self, other: "JetCochain") -> "JetCochain":
        if other.degree != self.degree:
            raise ValueError("degrees differ")
        Q = None if self.Q is None else self.Q + other.Q
        return JetCochain(self.P + other.P, Q)

    def __neg__(self) -> "JetCochain":
        return JetCochain(-self.P, None if self.Q is None else -self.Q)

    def __sub__(self, other: "JetCochain") -> "JetCochain":
        return self + (-other)

    def scale(self, f) -> "JetCochain":
        return JetCochain(self.P.scale(f), None if self.Q is None else self.Q.scale(f))

    def __eq__(self, other) -> bool:
        if not isinstance(other, JetCochain):
            return NotImplemented
        return (self - other).is_zero() if self.degree == other.degree else (self.is_zero() and other.is_zero())

    def __repr__(self) -> str:
        return f"JetCochain(k={self.degree}, P={self.P}, Q={self.Q})"


@dataclass(frozen=True, eq=False)
class JetChain:
    """``(alpha, beta)`` with ``alpha`` a k-form and ``beta`` a (k-1)-form; ``beta`` is None at k = 0."""

    alpha: DiffForm
    beta: DiffForm | None = None

    def __post_init__(self):
        k = self.alpha.degree
        if not self.alpha and self.beta is not None and self.beta.degree + 1 != k:
            k = self.beta.degree + 1
            object.__setattr__(self, "alpha", DiffForm.zero(self.alpha.chart, k))
        if k == 0:
            if self.beta:
                raise ValueError("a degree-0 chain has no second component")
            object.__setattr__(self, "beta", None)
        elif self.beta is None or (not self.beta and self.beta.degree != k - 1):
            object.__setattr__(self, "beta", DiffForm.zero(self.alpha.chart, k - 1))
        elif self.beta.degree != k - 1:
            raise ValueError(f"beta must have degree {k - 1}, got {self.beta.degree}")

    @classmethod
    def zero(cls, chart: Chart, k: int) -> "JetChain":
        return cls(DiffForm.zero(chart, k), None if k == 0 else DiffForm.zero(chart, k - 1))

    @property
    def degree(self) -> int:
        return self.alpha.degree

    @property
    def chart(self) -> Chart:
        return self.alpha.chart

    def parts(self) -> tuple[DiffForm, DiffForm]:
        beta = self.beta if self.beta is not None else DiffForm.zero(self.chart, 0)
        return self.alpha, beta

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and (self.beta is None or self.beta.is_zero())

    def __add__(self, other: "JetChain") -> "JetChain":
        if other.degree != self.degree:
            raise ValueError("degrees differ")
        beta = None if self.beta is None else self.beta + other.beta
        return JetChain(self.alpha + other.alpha, beta)

    def __neg__(self) -> "JetChain":
        return JetChain(-self.alpha, None if self.beta is None else -self.beta)

    def __sub__(self, other: "JetChain") -> "JetChain":
        return self + (-other)

    def scale(self, f) -> "JetChain":
        return JetChain(self.alpha.scale(f), None if self.beta is None else self.beta.scale(f))

    def __eq__(self, other) -> bool:
        if not isinstance(other, JetChain):
            return NotImplemented
        return (self - other).is_zero() if self.degree == other.degree else (self.is_zero() and other.is_zero())

    def __repr__(self) -> str:
        return f"JetChain(k={self.degree}, alpha={self.alpha}, beta={self.beta})"


# -- cohomology operators --------------------------------------------------------------


def _sigma_general(J: JacobiStructure, c: JetCochain, shift: int) -> JetCochain:
    k = c.degree
    L, E = J.lam, J.e
    P = c.P
    if k == 0:
        return JetCochain(-schouten(L, P) - wedge(E, P).scale(shift), schouten(E, P))
    Q = c.Q
    newP = -schouten(L, P) + wedge(E, P).scale(k - shift) + wedge(L, Q)
    newQ = schouten(L, Q) - wedge(E, Q).scale(k - 1 - shift) + schouten(E, P)
    return JetCochain(newP, newQ)


def sigma(J: JacobiStructure, c: JetCochain) -> JetCochain:
    """``(-[L,P] + k E^P + L^Q, [L,Q] - (k-1) E^Q + [E,P])``."""
    return _sigma_general(J, c, 0)


def sigma_tilde(J: JacobiStructure, c: JetCochain) -> JetCochain:
    """The 1-differentiable Chevalley-Eilenberg variant, with ``k-1`` and ``k-2``."""
    return _sigma_general(J, c, 1)


_poisson_cache: dict = {}


def sigma_bar(lam: MultiVector, P: MultiVector) -> MultiVector:
    """``-[L, P]`` for a Poisson bivector ``L``."""
    key = hash(lam)
    ok = _poisson_cache.get(key)
    if ok is None or ok[0] != lam:
        ok = (lam, schouten(lam, lam).is_zero())
        _poisson_cache[key] = ok
    if not ok[1]:
        raise ValueError("sigma_bar needs a Poisson bivector")
    return -schouten(lam, P)


def cochain_coordinates(c: JetCochain) -> dict:
    """Flat ``{(part, indices, alpha, lam): coefficient}`` expansion of a cochain."""
    out = {}
    for part, T in (("P", c.P), ("Q", c.Q)):
        if T is None:
            continue
        for idx, coeff in T.items():
            for (alpha, lam), v in coeff.items():
                out[(part, idx, alpha, lam)] = v
    return out


def sigma_preimage(J: JacobiStructure, c: JetCochain, candidates: Sequence[JetCochain]) -> JetCochain | None:
    """A combination ``b`` of ``candidates`` with ``sigma(b) = c``, or None if there is none."""
    images = [cochain_coordinates(sigma(J, b)) for b in candidates]
    target = cochain_coordinates(c)
    keys = sorted(set(target).union(*images), key=repr)
    pos = {key: r for r, key in enumerate(keys)}
    mat = linalg.zeros(len(keys), len(candidates))
    for col, img in enumerate(images):
        for key, v in img.items():
            mat[pos[key]][col] = v
    rhs = [target.get(key, Fraction(0)) for key in keys]
    x = linalg.solve(mat, rhs, len(candidates))
    if x is None:
        return None
    k = c.degree - 1
    out = JetCochain.zero(c.chart, k)
    for coeff, b in zip(x, candidates):
        if coeff:
            out = out + b.scale(coeff)
    return out


# -- homology operators -----------------------------------------------------------------


def delta(J: JacobiStructure, c: JetChain) -> JetChain:
    """Boundary operator on pairs ``(alpha, beta)`` of degrees ``(r, r-1)``."""
    r = c.degree
    if r == 0:
        raise ValueError("delta lowers the degree; degree-0 chains have no boundary")
    L, E = J.lam, J.e
    a, b = c.parts()
    sr = _sign(r)
    new_a = contract(L, exterior_d(a)) - exterior_d(contract(L, a))
    new_b = None
    if E:
        new_a = new_a + interior(E, a).scale(r)
    if r >= 1:
        if E:
            new_a = new_a + lie_derivative(E, b).scale(sr)
    if r >= 2:
        new_b = contract(L, exterior_d(b)) - exterior_d(contract(L, b)) + contract(L, a).scale(sr)
        if E:
            new_b = new_b + interior(E, b).scale(r - 1)
    return JetChain(new_a, new_b)


def delta_bar(lam: MultiVector, alpha: DiffForm) -> DiffForm:
    """``i(L) d alpha - d i(L) alpha``."""
    return contract(lam, exterior_d(alpha)) - exterior_d(contract(lam, alpha))


# -- H-Chevalley-Eilenberg chains ----------------------------------------------------------


@dataclass(frozen=True)
class HCEChain:
    """``f (x) (f1 ^ ... ^ fk)``."""

    f: ExPoly
    factors: tuple = ()

    @property
    def degree(self) -> int:
        return len(self.factors)


def _mono_key(key) -> tuple:
    alpha, lam = key
    return (sum(alpha), alpha, lam)


class HCESum:
    """Formal rational combination of chains, expanded multilinearly into
    exponential monomials so that equal elements have equal keys."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = terms or {}

    @classmethod
    def of(cls, chain: HCEChain, coeff=1) -> "HCESum":
        out = cls(chain.f.n)
        out.add_chain(chain, Fraction(coeff))
        return out

    def add_chain(self, chain: HCEChain, coeff: Fraction) -> None:
        expansions = [list(chain.f.items())] + [list(g.items()) for g in chain.factors]

        def rec(pos, acc_keys, acc_c):
            if pos == len(expansions):
                head, tail = acc_keys[0], acc_keys[1:]
                order = sorted(range(len(tail)), key=lambda i: _mono_key(tail[i]))
                sorted_tail = tuple(tail[i] for i in order)
                if len(set(sorted_tail)) != len(sorted_tail):
                    return
                s = permutation_sign(order)
                key = (head, sorted_tail)
                v = self.terms.get(key, 0) + s * acc_c
                if v:
                    self.terms[key] = v
                else:
                    self.terms.pop(key, None)
                return
            for k, c in expansions[pos]:
                rec(pos + 1, acc_keys + [k], acc_c * c)

        rec(0, [], coeff)

    def __add__(self, other: "HCESum") -> "HCESum":
        out = HCESum(self.n, dict(self.terms))
        for k, v in other.terms.items():
            w = out.terms.get(k, 0) + v
            if w:
                out.terms[k] = w
            else:
                out.terms.pop(k, None)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def chains(self) -> Iterable[tuple[Fraction, HCEChain]]:
        for (head, tail), c in self.terms.items():
            f = ExPoly._raw(self.n, {head: Fraction(1)})
            factors = tuple(ExPoly._raw(self.n, {t: Fraction(1)}) for t in tail)
            yield c, HCEChain(f, factors)


def _as_sum(c) -> HCESum:
    return c if isinstance(c, HCESum) else HCESum.of(c)


def delta_H(J: JacobiStructure, c: HCEChain | HCESum) -> HCESum:
    out = HCESum(J.n)
    for coeff, ch in _as_sum(c).chains():
        f, fs = ch.f, ch.factors
        k = len(fs)
        for i in range(k):
            rest = fs[:i] + fs[i + 1:]
            g = apply_vector(hamiltonian_field(J, fs[i]), f)
            if g:
                out.add_chain(HCEChain(g, rest), coeff * _sign(i + 1))
        for i, j in combinations(range(k), 2):
            rest = tuple(fs[m] for m in range(k) if m not in (i, j))
            b = jacobi_bracket(J, fs[i], fs[j])
            if b:
                out.add_chain(HCEChain(f, (b,) + rest), coeff * _sign(i + j + 2))
    return out


def pi_k(J: JacobiStructure, c: HCEChain | HCESum, k: int | None = None) -> JetChain:
    """``(f df1^...^dfk, sum_i (-1)^(i+k) f f_i df1^..^dfi^..^dfk)``."""
    chart = J.chart
    if k is None and isinstance(c, HCEChain):
        k = c.degree
    total = None
    for coeff, ch in _as_sum(c).chains():
        kk = ch.degree
        dfs = [differential(g, chart) for g in ch.factors]
        a = wedge_all(chart, DiffForm, dfs).scale(ch.f * coeff)
        b = None
        if kk:
            b = DiffForm.zero(chart, kk - 1)
            for i in range(kk):
                rest = dfs[:i] + dfs[i + 1:]
                b = b + wedge_all(chart, DiffForm, rest).scale(ch.f * ch.factors[i] * (coeff * _sign(i + 1 + kk)))
        piece = JetChain(a, b)
        total = piece if total is None else total + piece
    if total is None:
        if k is None:
            raise ValueError("degree of an empty sum is ambiguous; pass k")
        return JetChain.zero(chart, k)
    return total


# -- 1-differentiable cochains as multilinear maps ----------------------------------------


def j_cochain_eval(J: JacobiStructure, c: JetCochain, fs: Sequence[ExPoly]) -> ExPoly:
    """``P(df1..dfk) + sum_q (-1)^(q+1) f_q Q(df1..^dfq^..dfk)``."""
    k = c.degree
    if len(fs) != k:
        raise ValueError(f"a {k}-cochain takes {k} functions")
    chart = J.chart
    dfs = [differential(f, chart) for f in fs]
    if k == 0:
        return c.P.as_function()
    out = evaluate(c.P, dfs)
    for q in range(k):
        rest = dfs[:q] + dfs[q + 1:]
        val = evaluate(c.Q, rest) if k > 1 else c.Q.as_function()
        if val:
            out = out + fs[q] * val * _sign(q)
    return out


def partialH_of_j(J: JacobiStructure, c: JetCochain, fs: Sequence[ExPoly]) -> ExPoly:
    """H-Chevalley-Eilenberg coboundary of the cochain ``j(c)`` evaluated on ``fs``."""
    k = c.degree
    if len(fs) != k + 1:
        raise ValueError(f"the coboundary of a {k}-cochain takes {k + 1} functions")
    fs = list(fs)
    out = J.chart.zero()
    for i in range(k + 1):
        rest = fs[:i] + fs[i + 1:]
        out = out + apply_vector(hamiltonian_field(J, fs[i]), j_cochain_eval(J, c, rest)) * _sign(i)
    for i, j in combinations(range(k + 1), 2):
        rest = [fs[m] for m in range(k + 1) if m not in (i, j)]
        out = out + j_cochain_eval(J, c, [jacobi_bracket(J, fs[i], fs[j])] + rest) * _sign(i + j)
    return out


# -- exterior calculus on pairs --------------------------------------------------------------


def jet_wedge(x: JetChain, y: JetChain) -> JetChain:
    """``(a,b)^(a',b') = (a^a', a^b' + (-1)^r' b^a')``."""
    a, b = x.parts()
    a2, b2 = y.parts()
    r2 = y.degree
    second = None
    if x.degree + r2 >= 1:
        second = DiffForm.zero(x.chart, x.degree + r2 - 1)
        if y.beta is not None:
            second = second + wedge(a, b2)
        if x.beta is not None:
            second = second + wedge(b, a2).scale(_sign(r2))
    return JetChain(wedge(a, a2), second)


def iota(c: JetCochain, x: JetChain) -> JetChain:
    """Interior product ``(i(P)a + (-1)^(r-1) i(Q)b, i(P)b)``; zero when ``k > r``."""
    k, r = c.degree, x.degree
    if k > r:
        return JetChain.zero(x.chart, 0)
    P, Q = c.parts()
    a, b = x.parts()
    first = contract(P, a)
    second = None
    if r - k >= 1:
        second = contract(P, b)
    if k >= 1 and r >= 1:
        first = first + contract(Q, b).scale(_sign(r - 1))
    return JetChain(first, second)


# -- l.c.s. operators --------------------------------------------------------------------------


def lee_forms(m: int, omega: DiffForm) -> tuple[DiffForm, DiffForm]:
    """``(omega_0, omega_1) = (-m omega, -(m+1) omega)``."""
    return omega.scale(-m), omega.scale(-(m + 1))


def d_tilde(Omega: DiffForm, omega: DiffForm, c: JetChain) -> JetChain:
    """``(d_{omega_1} a - Omega^b, -d_{omega_0} b)``."""
    if exterior_d(Omega) != wedge(omega, Omega):
        raise ValueError("Omega does not satisfy d Omega = omega ^ Omega")
    chart = Omega.chart
    m = chart.n // 2
    w0, w1 = lee_forms(m, omega)
    a, b = c.parts()
    first = d_omega(w1, a)
    second = None
    if c.beta is not None:
        first = first - wedge(Omega, b)
        second = -d_omega(w0, b)
    else:
        second = DiffForm.zero(chart, 0)
    return JetChain(first, second)


def star_lcs(model, alpha: DiffForm) -> DiffForm:
    """``(-1)^k i(sharp alpha) Omega^m/m!``."""
    L = model.structure.lam
    return contract(sharp(L, alpha), model.top_form).scale(_sign(alpha.degree))


def phi_tilde(model, c: JetChain) -> JetChain:
    """``(star b, i_E star b - star a)``; sends degree k to ``2m + 1 - k``."""
    E = model.structure.e
    chart = model.chart
    top = chart.n
    k = c.degree
    a = c.alpha
    if c.beta is None:
        sb = DiffForm.zero(chart, top + 1 - k)
    else:
        sb = star_lcs(model, c.beta)
    second = interior(E, sb) - star_lcs(model, a) if c.beta is not None else -star_lcs(model, a)
    return JetChain(sb, second)


def phi_tilde_inverse(model, c: JetChain, k: int) -> JetChain:
    """Recover ``(a, b)`` of degree ``k`` from its image."""
    E = model.structure.e
    x, y = c.parts()
    b = star_lcs(model, x) if k >= 1 else None
    a = star_lcs(model, interior(E, x) - y) if c.beta is not None else star_lcs(model, -y)
    return JetChain(a, b)


# -- contact chain isomorphism ----------------------------------------------------------------


def contact_F(model, c: JetChain) -> JetCochain:
    """``(sharp a + E^sharp b, -sharp(i_E a) + E^sharp(i_E b))``."""
    L, E = model.structure.lam, model.structure.e
    a, b = c.parts()
    if c.beta is None:
        return JetCochain(sharp(L, a), None)
    P = sharp(L, a) + wedge(E, sharp(L, b))
    Q = -sharp(L, interior(E, a)) + wedge(E, sharp(L, interior(E, b)))
    return JetCochain(P, Q)


def contact_G(model, c: JetCochain) -> JetChain:
    """Inverse of :func:`contact_F`, built from the contact flat map."""
    eta = model.eta
    flat = model.flat
    k = c.degree
    P, Q = c.parts()
    if c.Q is None:
        return JetChain(flat(P), None)
    iP = form_into_multivector(eta, P)
    iQ = form_into_multivector(eta, Q)
    a = (flat(P) + wedge(eta, flat(Q)) - wedge(eta, flat(iP))).scale(_sign(k))
    b = (flat(iP) - wedge(eta, flat(iQ))).scale(_sign(k - 1))
    return JetChain(a, b)


def contact_chain_iso(model, direction: str, c):
    """``direction`` is ``"F"`` (forms to multivectors) or ``"G"`` (back)."""
    if direction == "F":
        return contact_F(model, c)
    if direction == "G":
        return contact_G(model, c)
    raise ValueError("direction must be 'F' or 'G'")


def de_rham_pair_d(c: JetChain) -> JetChain:
    """``(-d a, d b)``, the source differential of the contact chain map."""
    a, b = c.parts()
    return JetChain(-exterior_d(a), None if c.beta is None else exterior_d(b))


# -- l.c.s. exact sequence maps -------------------------------------------------------------------


def lcs_F(model, alpha: DiffForm) -> JetCochain:
    """``(sharp a, -sharp(i_E a))``."""
    L, E = model.structure.lam, model.structure.e
    if alpha.degree == 0:
        return JetCochain(sharp(L, alpha), None)
    return JetCochain(sharp(L, alpha), -sharp(L, interior(E, alpha)))


def lcs_G(model, c: JetCochain) -> DiffForm:
    """``(-1)^k (-flat Q + i_E flat P)``, a (k-1)-form."""
    E = model.structure.e
    k = c.degree
    if k == 0:
        return DiffForm.zero(model.chart, 0)
    P, Q = c.parts()
    return (interior(E, model.flat(P)) - model.flat(Q)).scale(_sign(k))


def lcs_sequence_maps(model, which: str, x):
    if which == "F":
        return lcs_F(model, x)
    if which == "G":
        return lcs_G(model, x)
    raise ValueError("which must be 'F' or 'G'")


# -- contact homotopy ---------------------------------------------------------------------------------


class NotACycle(ValueError):
    pass


def contact_homotopy(model, c: JetChain) -> JetChain:
    """A preimage ``h`` with ``delta h = c`` for a cycle ``c`` on a contact chart."""
    J = model.structure
    if c.degree >= 1 and not delta(J, c).is_zero():
        raise NotACycle("input is not a delta-cycle")
    eta = model.eta
    a, b = c.parts()
    scale = Fraction(1, model.m + 1)
    h = JetChain(wedge(eta, a).scale(scale), wedge(eta, b).scale(scale) if c.beta is not None else DiffForm.zero(model.chart, 0))
    if delta(J, h) != c:
        raise ArithmeticError("homotopy failed to reconstruct the cycle")
    return h


# -- lifting to the cone ---------------------------------------------------------------------------------


def lift_pair(c: JetCochain, name: str = "t") -> MultiVector:
    """``e^{-kt}(P + d/dt ^ Q)`` on the chart extended by ``t``."""
    chart = c.chart
    new = chart.extend(chart.fresh_name(name))
    k = c.degree
    P = c.P.extend_chart(new)
    out = P
    if c.Q is not None:
        dt = coordinate_vector(new, new.n - 1)
        out = out + wedge(dt, c.Q.extend_chart(new))
    return out.scale(ExPoly.exp(new.n, [0] * chart.n + [-k]))
