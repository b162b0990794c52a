"""Exact exponential-polynomial functions on a coordinate chart.

An :class:`ExPoly` is a finite sum of terms ``c * x**alpha * exp(lam . x)``
with ``c`` rational, ``alpha`` a tuple of non-negative integers and ``lam`` a
tuple of rationals.  The class is closed under sums, products and partial
derivatives, which is all the coordinate models need.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Key = tuple  # (alpha, lam)


class DimensionMismatch(ValueError):
    pass


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; ints and Fractions pass through."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot read a rational from {text!r}")
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        if int(den) <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(c: Fraction) -> str:
    return str(c)


def _zeros(n: int) -> tuple:
    return (0,) * n


class ExPoly:
    """Immutable exponential polynomial in ``n`` variables."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Key, Fraction] | None = None):
        self.n = n
        clean = {}
        if terms:
            for (alpha, lam), c in terms.items():
                if len(alpha) != n or len(lam) != n:
                    raise DimensionMismatch(f"term {alpha}, {lam} does not live in {n} variables")
                if c:
                    clean[(tuple(alpha), tuple(Fraction(v) for v in lam))] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "ExPoly":
        # trusted constructor: keys already canonical, no zero coefficients
        obj = object.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "ExPoly":
        return cls._raw(n, {})

    @classmethod
    def const(cls, n: int, c) -> "ExPoly":
        c = Fraction(c)
        if not c:
            return cls.zero(n)
        return cls._raw(n, {(_zeros(n), _zeros(n)): c})

    @classmethod
    def var(cls, n: int, i: int) -> "ExPoly":
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        alpha = tuple(1 if j == i else 0 for j in range(n))
        return cls._raw(n, {(alpha, _zeros(n)): Fraction(1)})

    @classmethod
    def exp(cls, n: int, lam: Sequence) -> "ExPoly":
        """``exp(lam . x)``."""
        if len(lam) != n:
            raise DimensionMismatch("frequency vector has wrong length")
        lam = tuple(Fraction(v) for v in lam)
        return cls._raw(n, {(_zeros(n), lam): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, c, alpha: Sequence[int], lam: Sequence | None = None) -> "ExPoly":
        lam = _zeros(n) if lam is None else lam
        if any(a < 0 for a in alpha):
            raise ValueError("exponents must be non-negative")
        return cls(n, {(tuple(alpha), tuple(lam)): Fraction(c)})

    @classmethod
    def coerce(cls, n: int, value) -> "ExPoly":
        if isinstance(value, ExPoly):
            if value.n != n:
                raise DimensionMismatch(f"expected {n} variables, got {value.n}")
            return value
        if isinstance(value, (int, Rational)):
            return cls.const(n, value)
        raise TypeError(f"cannot use {type(value).__name__} as an ExPoly")

    # -- inspection ---------------------------------------------------------

    def items(self):
        return self._terms.items()

    def terms(self) -> list[tuple[Fraction, tuple, tuple]]:
        """Canonical term list ``(c, alpha, lam)`` in descending graded-lex order."""
        keys = sorted(self._terms, key=_order_key, reverse=True)
        return [(self._terms[k], k[0], k[1]) for k in keys]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        return all(not any(lam) for _, lam in self._terms)

    def is_constant(self) -> bool:
        return all(not any(alpha) and not any(lam) for alpha, lam in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def is_unit(self) -> bool:
        """True for ``c * exp(lam . x)`` with ``c != 0``: invertible in the ring."""
        if len(self._terms) != 1:
            return False
        (alpha, _), = self._terms
        return not any(alpha)

    def inverse(self) -> "ExPoly":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit of the exponential-polynomial ring")
        ((alpha, lam), c), = self._terms.items()
        return ExPoly._raw(self.n, {(alpha, tuple(-v for v in lam)): 1 / c})

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(alpha) for alpha, _ in self._terms)

    def is_homogeneous(self, d: int) -> bool:
        return self.is_polynomial() and all(sum(alpha) == d for alpha, _ in self._terms)

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "ExPoly") -> None:
        if other.n != self.n:
            raise DimensionMismatch(f"ExPoly in {self.n} vs {other.n} variables")

    def __add__(self, other) -> "ExPoly":
        if not isinstance(other, ExPoly):
            if isinstance(other, (int, Rational)):
                other = ExPoly.const(self.n, other)
            else:
                return NotImplemented
        self._check(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v += c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return ExPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "ExPoly":
        return ExPoly._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "ExPoly":
        if not isinstance(other, ExPoly):
            if isinstance(other, (int, Rational)):
                other = ExPoly.const(self.n, other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExPoly":
        return (-self) + other

    def scale(self, c) -> "ExPoly":
        c = Fraction(c)
        if not c:
            return ExPoly.zero(self.n)
        if c == 1:
            return self
        return ExPoly._raw(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "ExPoly":
        if not isinstance(other, ExPoly):
            if isinstance(other, (int, Rational)):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        if not self._terms or not other._terms:
            return ExPoly.zero(self.n)
        out: dict = {}
        for (a1, l1), c1 in self._terms.items():
            l1_zero = not any(l1)
            for (a2, l2), c2 in other._terms.items():
                alpha = tuple(x + y for x, y in zip(a1, a2))
                if l1_zero:
                    lam = l2
                elif not any(l2):
                    lam = l1
                else:
                    lam = tuple(x + y for x, y in zip(l1, l2))
                k = (alpha, lam)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return ExPoly._raw(self.n, out)

    def __rmul__(self, other) -> "ExPoly":
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "ExPoly":
        if isinstance(other, (int, Rational)):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, ExPoly):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, e: int) -> "ExPoly":
        if e < 0:
            return self.inverse() ** (-e)
        out = ExPoly.const(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def partial(self, i: int) -> "ExPoly":
        """Partial derivative with respect to coordinate ``i``."""
        if not 0 <= i < self.n:
            raise IndexError(f"coordinate index {i} out of range for n={self.n}")
        out: dict = {}
        for (alpha, lam), c in self._terms.items():
            a = alpha[i]
            if a:
                da = alpha[:i] + (a - 1,) + alpha[i + 1:]
                k = (da, lam)
                v = out.get(k, 0) + c * a
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
            li = lam[i]
            if li:
                k = (alpha, lam)
                v = out.get(k, 0) + c * li
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return ExPoly._raw(self.n, out)

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, ExPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ExPoly.const(self.n, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # -- change of chart ----------------------------------------------------

    def extend(self, extra: int = 1) -> "ExPoly":
        """Same function viewed in ``n + extra`` variables (new ones appended)."""
        pad = (0,) * extra
        fpad = (Fraction(0),) * extra
        return ExPoly._raw(self.n + extra, {(a + pad, l + fpad): c for (a, l), c in self._terms.items()})

    def restrict(self, keep: int) -> "ExPoly":
        """Drop trailing variables that do not occur."""
        out = {}
        for (a, l), c in self._terms.items():
            if any(a[keep:]) or any(l[keep:]):
                raise ValueError("function depends on a dropped variable")
            out[(a[:keep], l[:keep])] = c
        return ExPoly._raw(keep, out)

    def substitute_zero(self, i: int) -> "ExPoly":
        """Set coordinate ``i`` to zero (exp factors become 1)."""
        out: dict = {}
        for (a, l), c in self._terms.items():
            if a[i]:
                continue
            k = (a, l[:i] + (Fraction(0),) + l[i + 1:])
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return ExPoly._raw(self.n, out)

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a rational point; polynomials only."""
        if not self.is_polynomial():
            raise ValueError("exact evaluation is only available for pure polynomials")
        if len(point) != self.n:
            raise DimensionMismatch("point has the wrong number of coordinates")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for (alpha, _), c in self._terms.items():
            t = c
            for x, a in zip(pt, alpha):
                if a:
                    t *= x ** a
            total += t
        return total

    # -- division by one polynomial ----------------------------------------

    def leading_key(self) -> Key:
        if not self._terms:
            raise ValueError("zero has no leading term")
        return max(self._terms, key=_order_key)

    def reduce_mod_hypersurface(self, q: "ExPoly") -> "ExPoly":
        """Remainder of multivariate division by ``q`` in graded-lex order."""
        self._check(q)
        if not self.is_polynomial() or not q.is_polynomial():
            raise ValueError("reduction modulo a hypersurface needs pure polynomials")
        if q.is_zero():
            raise ZeroDivisionError("cannot reduce modulo the zero polynomial")
        lead = q.leading_key()
        lead_alpha = lead[0]
        lead_c = q._terms[lead]
        zero_lam = lead[1]
        p = dict(self._terms)
        rem: dict = {}
        while p:
            k = max(p, key=_order_key)
            c = p[k]
            alpha = k[0]
            if all(a >= b for a, b in zip(alpha, lead_alpha)):
                shift = tuple(a - b for a, b in zip(alpha, lead_alpha))
                factor = c / lead_c
                for (qa, _), qc in q._terms.items():
                    kk = (tuple(s + t for s, t in zip(shift, qa)), zero_lam)
                    v = p.get(kk, 0) - factor * qc
                    if v:
                        p[kk] = v
                    else:
                        p.pop(kk, None)
            else:
                rem[k] = c
                del p[k]
        return ExPoly._raw(self.n, rem)

    # -- text and JSON ------------------------------------------------------

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = list(names) if names else [f"x{i}" for i in range(self.n)]
        pieces = []
        for c, alpha, lam in self.terms():
            factors = []
            for name, a in zip(names, alpha):
                if a == 1:
                    factors.append(name)
                elif a:
                    factors.append(f"{name}^{a}")
            if any(lam):
                expo = " + ".join(_lin(v, name) for v, name in zip(lam, names) if v)
                factors.append(f"e^({expo})")
            body = "*".join(factors)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append("-" + body)
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"ExPoly({self.n}, {self.format()!r})"

    def to_json(self) -> list:
        return [
            {"c": format_rational(c), "alpha": list(alpha), "lambda": [format_rational(v) for v in lam]}
            for c, alpha, lam in self.terms()
        ]

    @classmethod
    def from_json(cls, n: int, data: Iterable) -> "ExPoly":
        terms: dict = {}
        for t in data:
            alpha = tuple(int(a) for a in t["alpha"])
            lam = tuple(parse_rational(v) for v in t.get("lambda", ["0"] * n))
            if len(alpha) != n or len(lam) != n:
                raise DimensionMismatch(f"term {t} does not live in {n} variables")
            if any(a < 0 for a in alpha):
                raise ValueError("exponents must be non-negative")
            k = (alpha, lam)
            terms[k] = terms.get(k, 0) + parse_rational(t["c"])
        return cls(n, terms)


def _lin(v: Fraction, name: str) -> str:
    if v == 1:
        return name
    if v == -1:
        return "-" + name
    return f"{v}*{name}"


def _order_key(k: Key):
    alpha, lam = k
    return (sum(alpha), alpha, lam)


def variables(n: int) -> list[ExPoly]:
    return [ExPoly.var(n, i) for i in range(n)]


def sum_expolys(n: int, items: Iterable[ExPoly]) -> ExPoly:
    out: dict = {}
    for p in items:
        for k, c in p._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return ExPoly._raw(n, out)


def add(p: ExPoly, q: ExPoly) -> ExPoly:
    return p + q


def mul(p: ExPoly, q: ExPoly) -> ExPoly:
    return p * q


def neg(p: ExPoly) -> ExPoly:
    return -p


def partial(p: ExPoly, i: int) -> ExPoly:
    return p.partial(i)


def reduce_mod_hypersurface(p: ExPoly, q: ExPoly) -> ExPoly:
    return p.reduce_mod_hypersurface(q)
