"""Multivector fields and differential forms on a coordinate chart.

Both kinds are stored as sparse maps from strictly increasing index tuples to
:class:`~ljcalc.expoly.ExPoly` coefficients.  ``(0, 2)`` means ``dx0^dx2`` for
a form and ``d/dx0 ^ d/dx2`` for a multivector.

Conventions:

* ``contract(X1^...^Xp, a) = i(Xp)(...(i(X1) a)...)``, each ``i(X)`` acting as
  a left derivation.
* ``sharp(L, a1^...^ak) = sharp(L, a1)^...^sharp(L, ak)`` with
  ``sharp(L, a)(b) = L(a, b)``.
* ``schouten`` is the Schouten-Nijenhuis bracket with ``[X, f] = X(f)``,
  ``[X, Y]`` the Lie bracket of vector fields and ``[P, Q] = (-1)^(pq) [Q, P]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from ._grassmann import merge, remove_left, remove_right
from .expoly import ExPoly


class ChartMismatch(ValueError):
    pass


class KindMismatch(TypeError):
    pass


@dataclass(frozen=True)
class Chart:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a chart needs at least one coordinate")
        if len(set(names)) != len(names):
            raise ValueError(f"coordinate names must be distinct: {names}")

    @classmethod
    def of(cls, *names: str) -> "Chart":
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def extend(self, name: str) -> "Chart":
        return Chart(self.names + (name,))

    def fresh_name(self, preferred: str = "t") -> str:
        name = preferred
        k = 0
        while name in self.names:
            k += 1
            name = f"{preferred}{k}"
        return name

    def coords(self) -> list[ExPoly]:
        return [ExPoly.var(self.n, i) for i in range(self.n)]

    def const(self, c) -> ExPoly:
        return ExPoly.const(self.n, c)

    def zero(self) -> ExPoly:
        return ExPoly.zero(self.n)

    def exp(self, lam: Sequence) -> ExPoly:
        return ExPoly.exp(self.n, lam)


def _add_into(out: dict, key, value: ExPoly) -> None:
    if not value:
        return
    cur = out.get(key)
    if cur is None:
        out[key] = value
    else:
        s = cur + value
        if s:
            out[key] = s
        else:
            del out[key]


class Tensor:
    """Common base of :class:`MultiVector` and :class:`DiffForm`."""

    kind = "tensor"
    __slots__ = ("chart", "degree", "terms")

    def __init__(self, chart: Chart, degree: int, terms: Mapping | None = None):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self.chart = chart
        self.degree = degree
        clean: dict = {}
        n = chart.n
        for idx, coeff in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} does not have length {degree}")
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index tuple {idx} is not strictly increasing")
            if idx and not (0 <= idx[0] and idx[-1] < n):
                raise IndexError(f"index tuple {idx} out of range for chart of dimension {n}")
            coeff = ExPoly.coerce(n, coeff)
            _add_into(clean, idx, coeff)
        self.terms = clean

    @classmethod
    def _raw(cls, chart: Chart, degree: int, terms: dict):
        obj = object.__new__(cls)
        obj.chart = chart
        obj.degree = degree
        obj.terms = terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, chart: Chart, degree: int):
        return cls._raw(chart, degree, {})

    @classmethod
    def scalar(cls, chart: Chart, f):
        f = ExPoly.coerce(chart.n, f)
        return cls._raw(chart, 0, {(): f} if f else {})

    @classmethod
    def basis(cls, chart: Chart, indices: Sequence[int], coeff=1):
        """``coeff * e_indices`` for arbitrary (possibly unsorted) indices."""
        sign, idx = 1, ()
        for i in indices:
            s, idx = merge(idx, (i,))
            sign *= s
        out = cls.zero(chart, len(tuple(indices)))
        if sign == 0:
            return out
        return cls(chart, len(idx), {idx: ExPoly.coerce(chart.n, coeff) * sign})

    # -- inspection ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, indices: Sequence[int]) -> ExPoly:
        return self.terms.get(tuple(indices), self.chart.zero())

    def as_function(self) -> ExPoly:
        if self.degree != 0:
            raise ValueError("only degree-0 tensors are functions")
        return self.terms.get((), self.chart.zero())

    def items(self):
        return sorted(self.terms.items())

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.terms.values())

    def _same(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor):
            raise TypeError(f"expected a tensor, got {type(other).__name__}")
        if other.chart != self.chart:
            raise ChartMismatch(f"charts differ: {self.chart.names} vs {other.chart.names}")
        if other.kind != self.kind:
            raise KindMismatch(f"cannot combine a {self.kind} with a {other.kind}")

    # -- vector-space structure ---------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Rational)) and other == 0:
            return self
        if isinstance(other, (int, Rational, ExPoly)) and self.degree == 0:
            other = type(self).scalar(self.chart, other)
        if not isinstance(other, Tensor):
            return NotImplemented
        self._same(other)
        if other.degree != self.degree:
            if not other.terms:
                return self
            if not self.terms:
                return other
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return type(self)._raw(self.chart, self.degree, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.chart, self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Rational)) and other == 0:
            return self
        if isinstance(other, (int, Rational, ExPoly)) and self.degree == 0:
            other = type(self).scalar(self.chart, other)
        if not isinstance(other, Tensor):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, f) -> "Tensor":
        """Multiply every coefficient by a function or rational."""
        if isinstance(f, (int, Rational)):
            f = Fraction(f)
            if not f:
                return type(self).zero(self.chart, self.degree)
            return type(self)._raw(self.chart, self.degree, {k: v.scale(f) for k, v in self.terms.items()})
        f = ExPoly.coerce(self.chart.n, f)
        out = {}
        for k, v in self.terms.items():
            p = v * f
            if p:
                out[k] = p
        return type(self)._raw(self.chart, self.degree, out)

    def __mul__(self, f):
        if isinstance(f, Tensor):
            return NotImplemented
        return self.scale(f)

    def __rmul__(self, f):
        if isinstance(f, Tensor):
            return NotImplemented
        return self.scale(f)

    def __truediv__(self, f):
        if isinstance(f, (int, Rational)):
            return self.scale(Fraction(1) / Fraction(f))
        return self.scale(ExPoly.coerce(self.chart.n, f).inverse())

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, Tensor):
            if other.chart != self.chart or other.kind != self.kind:
                return False
            if not self.terms and not other.terms:
                return True
            return self.degree == other.degree and self.terms == other.terms
        if isinstance(other, (int, Rational)) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.chart, self.degree, frozenset(self.terms.items())))

    def map_coeffs(self, fn) -> "Tensor":
        out = {}
        for k, v in self.terms.items():
            p = fn(v)
            if p:
                out[k] = p
        return type(self)._raw(self.chart, self.degree, out)

    def apply_coeff_partial(self, i: int) -> "Tensor":
        return self.map_coeffs(lambda c: c.partial(i))

    def reduce_mod(self, q: ExPoly) -> "Tensor":
        return self.map_coeffs(lambda c: c.reduce_mod_hypersurface(q))

    def extend_chart(self, chart: Chart) -> "Tensor":
        """View on a larger chart whose first ``n`` coordinates are these."""
        extra = chart.n - self.chart.n
        if extra < 0 or chart.names[: self.chart.n] != self.chart.names:
            raise ChartMismatch("target chart must extend this chart")
        return type(self)._raw(chart, self.degree, {k: v.extend(extra) for k, v in self.terms.items()})

    # -- text and JSON ------------------------------------------------------

    def _basis_name(self, idx) -> str:
        raise NotImplementedError

    def format(self) -> str:
        if not self.terms:
            return "0"
        names = self.chart.names
        parts = []
        for idx, c in self.items():
            body = self._basis_name(idx)
            cs = c.format(names)
            if not body:
                parts.append(cs)
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append("-" + body)
            elif len(c) > 1:
                parts.append(f"({cs})*{body}")
            else:
                parts.append(f"{cs}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}(deg={self.degree}, {self.format()!r})"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "terms": [{"indices": list(idx), "coeff": c.to_json()} for idx, c in self.items()],
        }


class MultiVector(Tensor):
    kind = "multivector"
    __slots__ = ()

    def _basis_name(self, idx) -> str:
        return "^".join(f"d/d{self.chart.names[i]}" for i in idx)

    def __call__(self, *forms) -> ExPoly:
        return evaluate(self, list(forms))


class DiffForm(Tensor):
    kind = "form"
    __slots__ = ()

    def _basis_name(self, idx) -> str:
        return "^".join(f"d{self.chart.names[i]}" for i in idx)


def tensor_from_json(chart: Chart, data: Mapping) -> Tensor:
    kind = data.get("kind")
    cls = {"form": DiffForm, "multivector": MultiVector}.get(kind)
    if cls is None:
        raise ValueError(f"unknown tensor kind {kind!r}")
    degree = int(data["degree"])
    terms: dict = {}
    for t in data.get("terms", []):
        idx = tuple(int(i) for i in t["indices"])
        if len(idx) != degree:
            raise ValueError(f"indices {idx} do not match degree {degree}")
        coeff = ExPoly.from_json(chart.n, t["coeff"])
        terms[idx] = terms.get(idx, chart.zero()) + coeff
    return cls(chart, degree, terms)


# -- basic builders -----------------------------------------------------------


def function(chart: Chart, f) -> MultiVector:
    return MultiVector.scalar(chart, f)


def coordinate_vector(chart: Chart, i: int, coeff=1) -> MultiVector:
    return MultiVector.basis(chart, (i,), coeff)


def coordinate_form(chart: Chart, i: int, coeff=1) -> DiffForm:
    return DiffForm.basis(chart, (i,), coeff)


def vector_field(chart: Chart, components: Sequence) -> MultiVector:
    if len(components) != chart.n:
        raise ValueError("need one component per coordinate")
    return MultiVector(chart, 1, {(i,): c for i, c in enumerate(components)})


def one_form(chart: Chart, components: Sequence) -> DiffForm:
    if len(components) != chart.n:
        raise ValueError("need one component per coordinate")
    return DiffForm(chart, 1, {(i,): c for i, c in enumerate(components)})


def volume_form(chart: Chart, coeff=1) -> DiffForm:
    return DiffForm.basis(chart, tuple(range(chart.n)), coeff)


def components(v: Tensor) -> list[ExPoly]:
    if v.degree != 1:
        raise ValueError("components are defined for degree-1 tensors")
    return [v.coeff((i,)) for i in range(v.chart.n)]


def as_tensor(kind_like: Tensor, f) -> Tensor:
    """Promote a function or rational to a degree-0 tensor of the same kind."""
    if isinstance(f, Tensor):
        return f
    return type(kind_like).scalar(kind_like.chart, f)


# -- algebra --------------------------------------------------------------------


def wedge(a: Tensor, b: Tensor) -> Tensor:
    if not isinstance(a, Tensor):
        a = as_tensor(b, a)
    if not isinstance(b, Tensor):
        b = as_tensor(a, b)
    a._same(b)
    out: dict = {}
    for i1, c1 in a.terms.items():
        for i2, c2 in b.terms.items():
            sign, idx = merge(i1, i2)
            if sign:
                p = c1 * c2
                _add_into(out, idx, p if sign > 0 else -p)
    return type(a)._raw(a.chart, a.degree + b.degree, out)


def wedge_all(chart: Chart, cls, factors: Iterable[Tensor]) -> Tensor:
    out = cls.scalar(chart, 1)
    for f in factors:
        out = wedge(out, f)
    return out


def power(a: Tensor, k: int) -> Tensor:
    out = type(a).scalar(a.chart, 1)
    for _ in range(k):
        out = wedge(out, a)
    return out


def exterior_d(alpha: DiffForm) -> DiffForm:
    if not isinstance(alpha, DiffForm):
        raise KindMismatch("exterior derivative needs a differential form")
    out: dict = {}
    n = alpha.chart.n
    for idx, c in alpha.terms.items():
        for i in range(n):
            if i in idx:
                continue
            dc = c.partial(i)
            if not dc:
                continue
            sign, new = merge((i,), idx)
            _add_into(out, new, dc if sign > 0 else -dc)
    return DiffForm._raw(alpha.chart, alpha.degree + 1, out)


def differential(f: ExPoly | DiffForm, chart: Chart | None = None) -> DiffForm:
    """``df`` for a function given either as an ExPoly or a 0-form."""
    if isinstance(f, Tensor):
        return exterior_d(DiffForm._raw(f.chart, 0, dict(f.terms)) if f.kind != "form" else f)
    if chart is None:
        raise ValueError("a chart is needed to differentiate a bare ExPoly")
    return exterior_d(DiffForm.scalar(chart, f))


def _apply_interior_chain(left_indices: tuple, idx: tuple) -> tuple[int, tuple]:
    # successive left derivatives by left_indices[0], left_indices[1], ...
    sign = 1
    for j in left_indices:
        s, idx = remove_left(idx, j)
        if not s:
            return 0, ()
        sign *= s
    return sign, idx


def contract(P: MultiVector, alpha: DiffForm) -> DiffForm:
    """``i(P) alpha``; ``i(X1^...^Xp) = i(Xp) o ... o i(X1)``."""
    if not isinstance(P, MultiVector) or not isinstance(alpha, DiffForm):
        raise KindMismatch("contract takes a multivector and a form")
    if P.chart != alpha.chart:
        raise ChartMismatch("charts differ")
    p, k = P.degree, alpha.degree
    if p > k:
        return DiffForm.zero(alpha.chart, max(k - p, 0))
    out: dict = {}
    for J, g in P.terms.items():
        for I, h in alpha.terms.items():
            sign, rest = _apply_interior_chain(J, I)
            if sign:
                v = g * h
                _add_into(out, rest, v if sign > 0 else -v)
    return DiffForm._raw(alpha.chart, k - p, out)


def interior(X: MultiVector, alpha: DiffForm) -> DiffForm:
    """``i_X alpha`` for a vector field (or function, which multiplies)."""
    if X.degree > 1:
        raise ValueError("interior expects a vector field; use contract for multivectors")
    return contract(X, alpha)


def form_into_multivector(alpha: DiffForm, P: MultiVector) -> MultiVector:
    """``i(alpha) P`` with the same left-first convention as :func:`contract`."""
    if not isinstance(P, MultiVector) or not isinstance(alpha, DiffForm):
        raise KindMismatch("form_into_multivector takes a form and a multivector")
    if P.chart != alpha.chart:
        raise ChartMismatch("charts differ")
    k, p = alpha.degree, P.degree
    if k > p:
        return MultiVector.zero(P.chart, 0)
    out: dict = {}
    for I, h in alpha.terms.items():
        for J, g in P.terms.items():
            sign, rest = _apply_interior_chain(I, J)
            if sign:
                v = g * h
                _add_into(out, rest, v if sign > 0 else -v)
    return MultiVector._raw(P.chart, p - k, out)


def pairing(alpha: DiffForm, P: MultiVector) -> ExPoly:
    if alpha.degree != P.degree:
        raise ValueError(f"pairing needs equal degrees, got {alpha.degree} and {P.degree}")
    return contract(P, alpha).as_function()


def evaluate(P: MultiVector, forms: Sequence[DiffForm]) -> ExPoly:
    """``P(a1, ..., ak)`` for 1-forms ``a_i``."""
    if len(forms) != P.degree:
        raise ValueError(f"a {P.degree}-vector needs {P.degree} arguments")
    return pairing(wedge_all(P.chart, DiffForm, forms), P)


def apply_vector(X: MultiVector, f: ExPoly) -> ExPoly:
    """Directional derivative ``X(f)``."""
    if X.degree != 1:
        raise ValueError("apply_vector needs a vector field")
    out = X.chart.zero()
    for (i,), c in X.terms.items():
        df = f.partial(i)
        if df:
            out = out + c * df
    return out


# -- brackets and derivatives ---------------------------------------------------


def schouten_graded(P: MultiVector, Q: MultiVector) -> MultiVector:
    """Schouten-Nijenhuis bracket in the graded-Lie sign convention.

    Written with odd coordinates ``th_i`` standing for ``d/dx_i``:
    ``[P,Q] = sum_i (P d<-/dth_i)(d_i Q) - (-1)^((p-1)(q-1)) (Q d<-/dth_i)(d_i P)``
    where ``d<-`` is the right derivative and products are wedges.  This
    bracket satisfies ``[P,Q] = -(-1)^((p-1)(q-1)) [Q,P]`` and the graded
    Jacobi identity of a Lie superalgebra on multivectors shifted by one.
    """
    if not isinstance(P, MultiVector) or not isinstance(Q, MultiVector):
        raise KindMismatch("schouten takes two multivectors")
    if P.chart != Q.chart:
        raise ChartMismatch("charts differ")
    p, q = P.degree, Q.degree
    deg = p + q - 1
    if deg < 0:
        return MultiVector.zero(P.chart, 0)
    out: dict = {}
    _schouten_half(P, Q, out, 1)
    _schouten_half(Q, P, out, -1 if ((p - 1) * (q - 1)) % 2 == 0 else 1)
    return MultiVector._raw(P.chart, deg, out)


def schouten(P: MultiVector, Q: MultiVector) -> MultiVector:
    """Schouten-Nijenhuis bracket ``[P, Q]`` in the Lichnerowicz convention.

    Equal to ``(-1)^(p-1)`` times :func:`schouten_graded`.  It keeps
    ``[X, f] = X(f)`` and the Lie bracket on vector fields, is symmetric up to
    ``[P,Q] = (-1)^(pq) [Q,P]``, and is the sign for which Jacobi pairs satisfy
    ``[L, L] = 2 E ^ L``.
    """
    out = schouten_graded(P, Q)
    return -out if (P.degree - 1) % 2 else out


def _schouten_half(A: MultiVector, B: MultiVector, out: dict, sign0: int) -> None:
    for I, a in A.terms.items():
        for i in I:
            s1, rest = remove_right(I, i)
            for J, b in B.terms.items():
                db = b.partial(i)
                if not db:
                    continue
                s2, idx = merge(rest, J)
                if not s2:
                    continue
                v = a * db
                _add_into(out, idx, v if s1 * s2 * sign0 > 0 else -v)


def lie_derivative(X: MultiVector, T: Tensor) -> Tensor:
    if not isinstance(X, MultiVector) or X.degree != 1:
        raise ValueError("Lie derivative needs a vector field")
    if isinstance(T, DiffForm):
        return interior(X, exterior_d(T)) + exterior_d(interior(X, T))
    return schouten(X, T)


# -- Poisson-type maps -------------------------------------------------------------


def _check_bivector(L: MultiVector) -> None:
    if not isinstance(L, MultiVector) or L.degree != 2:
        raise ValueError("expected a 2-vector")


def bivector_entry(L: MultiVector, i: int, j: int) -> ExPoly:
    """``L(dx_i, dx_j)``."""
    if i == j:
        return L.chart.zero()
    if i < j:
        return L.coeff((i, j))
    return -L.coeff((j, i))


def sharp_basis(L: MultiVector) -> list[MultiVector]:
    """``sharp(L, dx_i)`` for each coordinate."""
    _check_bivector(L)
    n = L.chart.n
    rows: list[dict] = [dict() for _ in range(n)]
    for (i, j), c in L.terms.items():
        _add_into(rows[i], (j,), c)
        _add_into(rows[j], (i,), -c)
    return [MultiVector._raw(L.chart, 1, r) for r in rows]


def sharp(L: MultiVector, alpha: DiffForm | ExPoly) -> MultiVector:
    """Extend ``sharp(L, a)(b) = L(a, b)`` multiplicatively to forms of any degree."""
    _check_bivector(L)
    if isinstance(alpha, ExPoly):
        return MultiVector.scalar(L.chart, alpha)
    if not isinstance(alpha, DiffForm):
        raise KindMismatch("sharp takes a form")
    if alpha.chart != L.chart:
        raise ChartMismatch("charts differ")
    if alpha.degree == 0:
        return MultiVector._raw(L.chart, 0, dict(alpha.terms))
    basis = sharp_basis(L)
    cache: dict = {}

    def image(idx):
        if idx not in cache:
            if len(idx) == 1:
                cache[idx] = basis[idx[0]]
            else:
                cache[idx] = wedge(image(idx[:-1]), basis[idx[-1]])
        return cache[idx]

    out = MultiVector.zero(L.chart, alpha.degree)
    for idx, c in alpha.terms.items():
        out = out + image(idx).scale(c)
    return out


def extend_multiplicatively(images: Sequence[DiffForm], X: MultiVector | ExPoly) -> DiffForm:
    """Map ``X1^...^Xk`` to ``b(X1)^...^b(Xk)`` given ``images[i] = b(d/dx_i)``."""
    chart = images[0].chart
    if isinstance(X, ExPoly):
        return DiffForm.scalar(chart, X)
    if X.degree == 0:
        return DiffForm._raw(chart, 0, dict(X.terms))
    cache: dict = {}

    def image(idx):
        if idx not in cache:
            cache[idx] = images[idx[0]] if len(idx) == 1 else wedge(image(idx[:-1]), images[idx[-1]])
        return cache[idx]

    out = DiffForm.zero(chart, X.degree)
    for idx, c in X.terms.items():
        out = out + image(idx).scale(c)
    return out


def flat(omega: DiffForm, X: MultiVector | ExPoly) -> DiffForm:
    """``X1^...^Xk -> i_X1 omega ^ ... ^ i_Xk omega`` for a 2-form ``omega``."""
    if omega.degree != 2:
        raise ValueError("flat needs a 2-form")
    chart = omega.chart
    images = [interior(coordinate_vector(chart, i), omega) for i in range(chart.n)]
    return extend_multiplicatively(images, X)


def d_omega(omega: DiffForm, alpha: DiffForm) -> DiffForm:
    """``d alpha + omega ^ alpha`` for a closed 1-form ``omega``."""
    if omega.degree != 1:
        raise ValueError("d_omega needs a 1-form")
    if exterior_d(omega):
        raise ValueError("d_omega needs a closed 1-form")
    return exterior_d(alpha) + wedge(omega, alpha)


def top_power_over_factorial(Omega: DiffForm, m: int) -> DiffForm:
    return power(Omega, m) / factorial(m)


def to_form(T: Tensor) -> DiffForm:
    """Reinterpret a degree-0 tensor as a 0-form."""
    if T.degree != 0:
        raise ValueError("only functions can switch kind")
    return DiffForm._raw(T.chart, 0, dict(T.terms))


def to_multivector(T: Tensor) -> MultiVector:
    if T.degree != 0:
        raise ValueError("only functions can switch kind")
    return MultiVector._raw(T.chart, 0, dict(T.terms))
