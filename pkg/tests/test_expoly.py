from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ljcalc.expoly import (
    DimensionMismatch,
    ExPoly,
    add,
    format_rational,
    mul,
    neg,
    parse_rational,
    partial,
    reduce_mod_hypersurface,
    variables,
)

from _oracles import sympy_equal, symbols, to_sympy

N = 3


@st.composite
def expolys(draw, n=N, max_terms=4, polynomial=False):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        alpha = tuple(draw(st.integers(0, 2)) for _ in range(n))
        lam = (0,) * n if polynomial else tuple(draw(st.sampled_from([0, 0, 1, -1, Fraction(1, 2)])) for _ in range(n))
        c = Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3)))
        terms[(alpha, lam)] = terms.get((alpha, lam), 0) + c
    return ExPoly(n, terms)


x, y, z = variables(3)


def e(*lam):
    return ExPoly.exp(3, lam)


def test_difference_of_squares():
    assert (x + y) * (x - y) == x * x - y * y


def test_exponentials_cancel():
    assert e(1, 0, 0) * e(-1, 0, 0) == 1


def test_square_of_exp_monomial():
    t = e(0, 0, 1)
    assert (x * t) ** 2 == x ** 2 * e(0, 0, 2)


def test_partial_examples():
    assert (x ** 2).partial(0) == 2 * x
    assert e(1, 0, 0).partial(0) == e(1, 0, 0)
    assert (x ** 2).partial(1) == 0


def test_partial_index_out_of_range():
    with pytest.raises(IndexError):
        x.partial(3)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        x + ExPoly.var(2, 0)


def test_reduce_examples():
    q = x * x + y * y + z * z - 1
    assert reduce_mod_hypersurface(x * x + y * y + z * z, q) == 1
    assert reduce_mod_hypersurface(z * q, q) == 0
    assert reduce_mod_hypersurface(x * x, q) == 1 - y * y - z * z


def test_reduce_rejects_exponentials_and_zero():
    with pytest.raises(ValueError):
        reduce_mod_hypersurface(e(1, 0, 0), x)
    with pytest.raises((ValueError, ZeroDivisionError)):
        reduce_mod_hypersurface(x, ExPoly.zero(3))


def test_rational_grammar_round_trip():
    for text in ["3/2", "-7", "0", "4/6"]:
        assert parse_rational(format_rational(parse_rational(text))) == parse_rational(text)
    assert parse_rational("4/6") == Fraction(2, 3)
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_json_round_trip():
    p = x * e(Fraction(3, 2), 0, -1) - Fraction(5, 7) * y * y
    assert ExPoly.from_json(3, p.to_json()) == p


def test_unit_inverse():
    a = 3 * e(1, -2, 0)
    assert a.is_unit() and a * a.inverse() == 1
    assert not (x + 1).is_unit()


def test_module_level_aliases():
    assert add(x, y) == x + y and mul(x, y) == x * y and neg(x) == -x and partial(x * y, 1) == x


@given(expolys(), expolys(), expolys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(expolys(), expolys())
def test_canonical_form_is_unique(p, q):
    a = p * q + q
    b = q * (p + 1)
    assert a == b and hash(a) == hash(b) and a.terms() == b.terms()


@given(expolys(), expolys(), st.integers(0, N - 1), st.integers(0, N - 1))
def test_derivative_laws(p, q, i, j):
    assert p.partial(i).partial(j) == p.partial(j).partial(i)
    assert (p * q).partial(i) == p.partial(i) * q + p * q.partial(i)


@given(expolys(max_terms=3), expolys(max_terms=3), st.integers(0, N - 1))
def test_product_and_derivative_agree_with_sympy(p, q, i):
    xs = symbols(N)
    assert sympy_equal(to_sympy(p * q, xs), to_sympy(p, xs) * to_sympy(q, xs))
    assert sympy_equal(to_sympy(p.partial(i), xs), to_sympy(p, xs).diff(xs[i]))


@given(expolys(polynomial=True), expolys(polynomial=True), st.integers(-3, 3))
def test_reduction_idempotent_and_linear(p, r, c):
    q = x * x + y * y + z * z - 1
    rp = reduce_mod_hypersurface(p, q)
    assert reduce_mod_hypersurface(rp, q) == rp
    assert reduce_mod_hypersurface(p + r * c, q) == rp + reduce_mod_hypersurface(r, q) * c


@given(expolys(polynomial=True))
def test_reduction_remainder_is_congruent(p):
    import sympy

    q = x * x + y * y + z * z - 1
    xs = symbols(3)
    rem = to_sympy(reduce_mod_hypersurface(p, q), xs)
    _, expected = sympy.reduced(to_sympy(p, xs), [to_sympy(q, xs)], *xs, order="grlex")
    assert sympy.expand(rem - expected) == 0
