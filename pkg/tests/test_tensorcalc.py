from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ljcalc import liealg
from ljcalc.models import ContactModel, LcsModel, quadratic_plane, symplectic
from ljcalc.randgen import RandomSource
from ljcalc.tensorcalc import (
    Chart,
    ChartMismatch,
    DiffForm,
    MultiVector,
    contract,
    coordinate_form,
    coordinate_vector,
    d_omega,
    differential,
    exterior_d,
    form_into_multivector,
    interior,
    lie_derivative,
    pairing,
    schouten,
    schouten_graded,
    sharp,
    tensor_from_json,
    vector_field,
    volume_form,
    wedge,
)

C = Chart(("x", "y", "z"))
x, y, z = C.coords()
dx, dy, dz = (coordinate_form(C, i) for i in range(3))
px, py, pz = (coordinate_vector(C, i) for i in range(3))


def test_wedge_examples():
    assert wedge(dy, dx) == -wedge(dx, dy)
    assert wedge(px, px).is_zero()
    ex = C.exp([0, 1, 0])
    assert wedge(dx.scale(x), dy.scale(ex)) == wedge(dx, dy).scale(x * ex)


def test_wedge_chart_mismatch():
    other = Chart(("u", "v", "w"))
    with pytest.raises(ChartMismatch):
        wedge(dx, coordinate_form(other, 0))


def test_exterior_d_examples():
    assert exterior_d(dy.scale(x)) == wedge(dx, dy)
    M = ContactModel(1)
    assert M.d_eta == wedge(coordinate_form(M.chart, 1), coordinate_form(M.chart, 2))
    assert exterior_d(dy.scale(C.exp([1, 0, 0]))) == wedge(dx, dy).scale(C.exp([1, 0, 0]))


def test_contract_examples():
    assert interior(px, wedge(dx, dy)) == dy
    S = symplectic(1)
    dq, dp = (coordinate_form(S.chart, i) for i in range(2))
    assert contract(S.lam, wedge(dq, dp)) == DiffForm.scalar(S.chart, 1)
    M = ContactModel(1)
    dt, dq = (coordinate_form(M.chart, i) for i in range(2))
    assert contract(M.structure.lam, wedge(dt, dq)).is_zero()


def test_contract_order_convention():
    # i(X1 ^ X2) = i(X2) o i(X1)
    a = wedge(dx, dy)
    assert contract(wedge(px, py), a) == interior(py, interior(px, a))


def test_lie_derivative_examples():
    J = liealg.lie_poisson(liealg.so3())
    A = liealg.radial_field(J.chart)
    assert lie_derivative(A, J.lam) == -J.lam
    T = Chart(("t", "x"))
    f = T.exp([-1, 0])
    X = coordinate_vector(T, 1, f)
    assert lie_derivative(coordinate_vector(T, 0), X) == -X
    M = LcsModel(1)
    assert lie_derivative(M.structure.e, M.Omega).is_zero()


def test_schouten_examples():
    assert schouten(px, py).is_zero()
    assert schouten(px, wedge(px, py).scale(x)) == wedge(px, py)
    Q = quadratic_plane()
    assert schouten(Q.lam, Q.lam).is_zero()


def test_schouten_generators():
    f = x * x * y
    X = vector_field(C, [y, z * x, 1])
    Y = vector_field(C, [x, 0, y * y])
    assert schouten(X, MultiVector.scalar(C, f)) == MultiVector.scalar(C, X(differential(f, C)))
    # Lie bracket of vector fields in components
    comps = []
    for i in range(3):
        c = sum((X.coeff((j,)) * Y.coeff((i,)).partial(j) - Y.coeff((j,)) * X.coeff((i,)).partial(j) for j in range(3)), C.zero())
        comps.append(c)
    assert schouten(X, Y) == vector_field(C, comps)


def test_sharp_examples():
    S = symplectic(1)
    assert sharp(S.lam, coordinate_form(S.chart, 0)) == coordinate_vector(S.chart, 1)
    M = ContactModel(1)
    assert sharp(M.structure.lam, M.eta).is_zero()
    assert sharp(S.lam, S.chart.coords()[0]) == MultiVector.scalar(S.chart, S.chart.coords()[0])


def test_d_omega_examples():
    assert d_omega(dx, DiffForm.scalar(C, 1)) == dx
    assert d_omega(dx, dy) == wedge(dx, dy)
    f = x * y + z
    assert d_omega(dx, d_omega(dx, DiffForm.scalar(C, f))).is_zero()
    with pytest.raises(ValueError):
        d_omega(dy.scale(x), dx)


def test_pairing_examples():
    assert pairing(wedge(dx, dy), wedge(px, py)) == 1
    assert pairing(dx, py) == 0
    M = ContactModel(1)
    dq, dp = (coordinate_form(M.chart, i) for i in (1, 2))
    assert pairing(wedge(dq, dp), M.structure.lam) == 1
    with pytest.raises(ValueError):
        pairing(dx, wedge(px, py))


def test_tensor_json_round_trip():
    T = wedge(dx, dz).scale(x * C.exp([0, Fraction(1, 2), 0])) + wedge(dy, dz)
    assert tensor_from_json(C, T.to_json()) == T
    V = wedge(px, py).scale(y)
    assert tensor_from_json(C, V.to_json()) == V


MODELS = {
    "symplectic": (symplectic(1), None),
    "quadratic": (quadratic_plane(), None),
    "contact1": (ContactModel(1).structure, None),
    "contact2": (ContactModel(2).structure, None),
    "lcs1": (LcsModel(1).structure, [[0, 0], [-1, 0]]),
}

seeds = st.integers(0, 10 ** 6)


@settings(max_examples=200)
@given(seeds)
def test_d_squared(seed):
    R = RandomSource(C, seed, frequencies=[[0, 0, 0], [1, 0, -1]])
    a = R.form(R.degree(0, 2))
    assert exterior_d(exterior_d(a)).is_zero()


@settings(max_examples=200)
@given(seeds)
def test_cartan_formula(seed):
    R = RandomSource(C, seed, frequencies=[[0, 0, 0], [0, -1, 0]])
    X = R.vector_field()
    a = R.form(R.degree(0, 3))
    rhs = interior(X, exterior_d(a))
    if a.degree:
        rhs = rhs + exterior_d(interior(X, a))
    assert lie_derivative(X, a) == rhs


@settings(max_examples=100)
@given(seeds)
def test_graded_jacobi(seed):
    R = RandomSource(C, seed, max_terms=2)
    P, Q, S = (R.multivector(R.degree(1, 3)) for _ in range(3))
    p, q, s = P.degree - 1, Q.degree - 1, S.degree - 1
    total = schouten_graded(P, schouten_graded(Q, S)).scale((-1) ** (p * s))
    total = total + schouten_graded(Q, schouten_graded(S, P)).scale((-1) ** (q * p))
    total = total + schouten_graded(S, schouten_graded(P, Q)).scale((-1) ** (s * q))
    assert total.is_zero()


@given(seeds)
def test_graded_antisymmetry_and_symmetry(seed):
    R = RandomSource(C, seed)
    P, Q = R.multivector(R.degree(1, 3)), R.multivector(R.degree(1, 3))
    p, q = P.degree, Q.degree
    assert schouten_graded(P, Q) == schouten_graded(Q, P).scale(-((-1) ** ((p - 1) * (q - 1))))
    assert schouten(P, Q) == schouten(Q, P).scale((-1) ** (p * q))


@given(seeds)
def test_schouten_leibniz(seed):
    R = RandomSource(C, seed)
    P, Q, S = (R.multivector(R.degree(1, 2)) for _ in range(3))
    p, q = P.degree, Q.degree
    assert schouten(P, wedge(Q, S)) == wedge(schouten(P, Q), S) + wedge(Q, schouten(P, S)).scale((-1) ** ((p - 1) * q))


@given(seeds)
def test_interior_of_sharp_on_volume(seed):
    for J in (symplectic(1), symplectic(2), quadratic_plane()):
        R = RandomSource(J.chart, seed)
        a = R.form(1)
        nu = volume_form(J.chart)
        assert interior(sharp(J.lam, a), nu) == -wedge(a, contract(J.lam, nu))


@pytest.mark.parametrize("name", sorted(MODELS))
def test_reeb_commutes_with_sharp(name):
    J, freqs = MODELS[name]
    R = RandomSource(J.chart, 11, frequencies=freqs)
    for _ in range(20):
        k = R.degree(0, min(3, J.n))
        a = R.form(k)
        assert lie_derivative(J.e, sharp(J.lam, a)) == sharp(J.lam, lie_derivative(J.e, a))
        if k >= 1:
            lhs = -schouten(J.lam, sharp(J.lam, a)) + wedge(J.e, sharp(J.lam, a)).scale(k)
            rhs = -sharp(J.lam, exterior_d(a)) + wedge(sharp(J.lam, interior(J.e, a)), J.lam)
            assert lhs == rhs


@pytest.mark.parametrize("m", [1, 2])
def test_contact_sharp_flat(m):
    M = ContactModel(m)
    J = M.structure
    R = RandomSource(M.chart, 5 + m)
    for _ in range(20):
        k = R.degree(0, J.n)
        a = R.form(k)
        inner = sharp(J.lam, interior(J.e, a)) if k else MultiVector.zero(M.chart, 0)
        P = sharp(J.lam, a) - (wedge(J.e, inner) if k else 0)
        assert M.flat(P) == a.scale((-1) ** k)


@pytest.mark.parametrize("m", [1, 2])
def test_lcs_sharp_identities(m):
    M = LcsModel(m)
    J = M.structure
    R = RandomSource(M.chart, 3 + m, frequencies=[[0] * J.n, [1] + [0] * (J.n - 1)])
    for _ in range(20):
        k = R.degree(0, J.n)
        a = R.form(k)
        assert M.flat(sharp(J.lam, a)) == a.scale((-1) ** k)
        if k:
            assert sharp(J.lam, interior(J.e, a)) == form_into_multivector(M.omega, sharp(J.lam, a))
