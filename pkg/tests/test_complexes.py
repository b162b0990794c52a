import pytest

from ljcalc import complexes as cx
from ljcalc import liealg
from ljcalc.complexes import HCEChain, HCESum, JetChain, JetCochain
from ljcalc.jacobi import hamiltonian_field, jacobi_bracket, modular_pair
from ljcalc.models import ContactModel, LcsModel, quadratic_plane, symplectic
from ljcalc.randgen import RandomSource
from ljcalc.tensorcalc import (
    DiffForm,
    MultiVector,
    apply_vector,
    contract,
    coordinate_form,
    coordinate_vector,
    d_omega,
    differential,
    exterior_d,
    interior,
    lie_derivative,
    sharp,
    volume_form,
    wedge,
)

LCS_FREQ = {1: [[0, 0], [-1, 0]], 2: [[0, 0, 0, 0], [-1, 0, 0, 0]]}


def all_models():
    return [
        ("symplectic", symplectic(1), None),
        ("quadratic", quadratic_plane(), None),
        ("contact1", ContactModel(1).structure, None),
        ("contact2", ContactModel(2).structure, None),
        ("lcs1", LcsModel(1).structure, LCS_FREQ[1]),
        ("lcs2", LcsModel(2).structure, LCS_FREQ[2]),
    ]


POISSON = [("symplectic", symplectic(1)), ("symplectic2", symplectic(2)), ("quadratic", quadratic_plane()),
           ("so3", liealg.lie_poisson(liealg.so3()))]
IDS = [m[0] for m in all_models()]


def rand_cochain(R, k):
    return JetCochain(R.multivector(k), R.multivector(k - 1) if k else None)


def rand_chain(R, r, n):
    a = R.form(r) if r <= n else DiffForm.zero(R.chart, r)
    return JetChain(a, R.form(r - 1) if r >= 1 else None)


# -- sigma family ---------------------------------------------------------------------------


@pytest.mark.parametrize("name,J,freqs", all_models(), ids=IDS)
def test_sigma_examples(name, J, freqs):
    assert cx.sigma(J, JetCochain(MultiVector.scalar(J.chart, 1))).is_zero()
    assert cx.sigma(J, JetCochain(J.lam, MultiVector.zero(J.chart, 1))).is_zero()
    # the pair (L, E) itself is only a cocycle when E ^ L = 0
    out = cx.sigma(J, JetCochain(J.lam, J.e))
    assert out.P == wedge(J.e, J.lam) and out.Q.is_zero()
    # the shifted coefficient k - 1 acts on constants too
    assert cx.sigma_tilde(J, JetCochain(MultiVector.scalar(J.chart, 1))).P == -J.e


@pytest.mark.parametrize("name,J,freqs", all_models(), ids=IDS)
def test_sigma_squares_vanish(name, J, freqs):
    R = RandomSource(J.chart, 101, frequencies=freqs)
    for _ in range(100):
        c = rand_cochain(R, R.degree(0, J.n))
        assert cx.sigma(J, cx.sigma(J, c)).is_zero()
        assert cx.sigma_tilde(J, cx.sigma_tilde(J, c)).is_zero()


def test_sigma_tilde_matches_sigma_for_poisson():
    J = quadratic_plane()
    R = RandomSource(J.chart, 3)
    for _ in range(20):
        c = rand_cochain(R, R.degree(0, 2))
        assert cx.sigma(J, c) == cx.sigma_tilde(J, c)


def test_sigma_tilde_differs_on_contact():
    M = ContactModel(1)
    J = M.structure
    c = JetCochain(coordinate_vector(M.chart, 2), MultiVector.scalar(M.chart, 0))
    diff = cx.sigma(J, c) - cx.sigma_tilde(J, c)
    assert diff.P == wedge(J.e, coordinate_vector(M.chart, 2)) and not diff.is_zero()


@pytest.mark.parametrize("name,J", POISSON, ids=[p[0] for p in POISSON])
def test_sigma_bar(name, J):
    assert cx.sigma_bar(J.lam, J.lam).is_zero()
    assert cx.sigma_bar(J.lam, MultiVector.scalar(J.chart, 7)).is_zero()
    R = RandomSource(J.chart, 7)
    for _ in range(50):
        P = R.multivector(R.degree(0, J.n))
        assert cx.sigma_bar(J.lam, cx.sigma_bar(J.lam, P)).is_zero()
        a = R.form(R.degree(0, J.n - 1))
        assert cx.sigma_bar(J.lam, sharp(J.lam, a)) == -sharp(J.lam, exterior_d(a))


def test_sigma_bar_requires_poisson():
    J = ContactModel(1).structure
    with pytest.raises(ValueError):
        cx.sigma_bar(J.lam, J.e)


# -- delta family ---------------------------------------------------------------------------------


def test_delta_examples():
    S = symplectic(1)
    R = RandomSource(S.chart, 1)
    f = R.function()
    assert cx.delta(S, JetChain(differential(f, S.chart), DiffForm.zero(S.chart, 0))).is_zero()
    M = ContactModel(1)
    J = M.structure
    f = R.__class__(M.chart, 2).function()
    out = cx.delta(J, JetChain(differential(f, M.chart), DiffForm.zero(M.chart, 0)))
    assert out == JetChain(DiffForm.scalar(M.chart, apply_vector(J.e, f)))


@pytest.mark.parametrize("name,J,freqs", all_models(), ids=IDS)
def test_delta_squared(name, J, freqs):
    R = RandomSource(J.chart, 202, frequencies=freqs)
    for _ in range(100):
        d1 = cx.delta(J, rand_chain(R, R.degree(2, J.n + 1), J.n))
        assert cx.delta(J, d1).is_zero()


def test_delta_bar_examples():
    J = quadratic_plane()
    c = J.chart
    x, y = c.coords()
    R = RandomSource(c, 4)
    h, f, g = R.function(), R.function(), R.function()
    vol = volume_form(c)
    assert cx.delta_bar(J.lam, vol.scale(h)) == -differential(x * y * h, c)
    assert cx.delta_bar(J.lam, DiffForm.scalar(c, h)).is_zero()
    one = coordinate_form(c, 0).scale(f) + coordinate_form(c, 1).scale(g)
    assert cx.delta_bar(J.lam, one) == DiffForm.scalar(c, x * y * (g.partial(0) - f.partial(1)))


@pytest.mark.parametrize("name,J", POISSON, ids=[p[0] for p in POISSON])
def test_delta_bar_laws(name, J):
    R = RandomSource(J.chart, 9)
    for _ in range(100):
        a = R.form(R.degree(0, J.n))
        db = cx.delta_bar(J.lam, a)
        assert cx.delta_bar(J.lam, db).is_zero()
        assert (exterior_d(db) + cx.delta_bar(J.lam, exterior_d(a))).is_zero()


@pytest.mark.parametrize("name,J", POISSON, ids=[p[0] for p in POISSON])
def test_delta_splits_for_poisson(name, J):
    R = RandomSource(J.chart, 13)
    for _ in range(50):
        r = R.degree(1, J.n)
        x = rand_chain(R, r, J.n)
        a, b = x.parts()
        expected = JetChain(cx.delta_bar(J.lam, a), cx.delta_bar(J.lam, b) + contract(J.lam, a).scale((-1) ** r) if r >= 2 else None)
        if r == 1:
            expected = JetChain(cx.delta_bar(J.lam, a))
        assert cx.delta(J, x) == expected


def test_delta_rejects_degree_zero():
    S = symplectic(1)
    with pytest.raises(ValueError):
        cx.delta(S, JetChain(DiffForm.scalar(S.chart, 1)))


# -- HCE chains ---------------------------------------------------------------------------------


def test_delta_H_examples():
    J = ContactModel(1).structure
    R = RandomSource(J.chart, 5)
    f, g, h = R.function(), R.function(), R.function()
    assert cx.delta_H(J, HCEChain(J.chart.const(1), (g,))).is_zero()
    expected = HCESum.of(HCEChain(-apply_vector(hamiltonian_field(J, g), f), (h,)))
    expected = expected + HCESum.of(HCEChain(apply_vector(hamiltonian_field(J, h), f), (g,)))
    expected = expected + HCESum.of(HCEChain(-f, (jacobi_bracket(J, g, h),)))
    diff = cx.delta_H(J, HCEChain(f, (g, h))) + HCESum.of(HCEChain(f, ()), 0)
    neg = HCESum(J.n, {k: -v for k, v in expected.terms.items()})
    assert (diff + neg).is_zero()


@pytest.mark.parametrize("name,J,freqs", all_models(), ids=IDS)
def test_hce_compatibility(name, J, freqs):
    R = RandomSource(J.chart, 303, frequencies=freqs)
    for _ in range(50):
        k = R.degree(1, 3)
        ch = HCEChain(R.function(), tuple(R.function() for _ in range(k)))
        assert cx.delta(J, cx.pi_k(J, ch)) == cx.pi_k(J, cx.delta_H(J, ch), k - 1)
        assert cx.delta_H(J, cx.delta_H(J, ch)).is_zero()


def test_j_eval_examples():
    M = ContactModel(1)
    J = M.structure
    f = RandomSource(M.chart, 8).function()
    assert cx.j_cochain_eval(J, JetCochain(J.e, MultiVector.scalar(M.chart, 0)), [f]) == apply_vector(J.e, f)
    assert cx.j_cochain_eval(J, JetCochain(MultiVector.zero(M.chart, 1), MultiVector.scalar(M.chart, 1)), [f]) == f


@pytest.mark.parametrize("name,J,freqs", all_models(), ids=IDS)
def test_kj_identity(name, J, freqs):
    R = RandomSource(J.chart, 404, frequencies=freqs)
    for _ in range(50):
        k = R.degree(0, 2)
        c = rand_cochain(R, k)
        fs = [R.function() for _ in range(k + 1)]
        assert cx.partialH_of_j(J, c, fs) == cx.j_cochain_eval(J, cx.sigma(J, c), fs)


# -- l.c.s. operators ------------------------------------------------------------------------------


def test_d_tilde_examples():
    M = LcsModel(1)
    w0, w1 = cx.lee_forms(1, M.omega)
    one = DiffForm.scalar(M.chart, 1)
    assert cx.d_tilde(M.Omega, M.omega, JetChain(one)).alpha == w1
    out = cx.d_tilde(M.Omega, M.omega, JetChain(DiffForm.zero(M.chart, 1), one))
    assert out.alpha == -M.Omega and out.beta == -w0


def test_d_tilde_checks_lee_condition():
    M = LcsModel(2)
    with pytest.raises(ValueError):
        cx.d_tilde(M.Omega, coordinate_form(M.chart, 1), JetChain(DiffForm.scalar(M.chart, 1)))


@pytest.mark.parametrize("m", [1, 2])
def test_lcs_star_and_phi(m):
    M = LcsModel(m)
    J = M.structure
    n = J.n
    R = RandomSource(M.chart, 505 + m, frequencies=LCS_FREQ[m])
    st = lambda a: cx.star_lcs(M, a)
    one = DiffForm.scalar(M.chart, 1)
    assert st(one) == M.top_form and st(M.top_form) == one
    img = cx.phi_tilde(M, JetChain(DiffForm.zero(M.chart, 1), one))
    assert img.alpha == M.top_form and img.beta == interior(J.e, M.top_form)
    for _ in range(100):
        k = R.degree(0, n)
        a = R.form(k)
        sa = st(a)
        s = (-1) ** k
        assert st(sa) == a
        assert interior(J.e, sa) == st(wedge(M.omega, a)).scale(s)
        assert lie_derivative(J.e, sa) == st(lie_derivative(J.e, a))
        assert contract(J.lam, sa) == st(wedge(a, M.Omega))
        rhs = (exterior_d(sa) - wedge(M.omega, sa).scale(m - k + 1) - wedge(M.Omega, interior(J.e, sa))).scale(-s)
        assert st(cx.delta_bar(J.lam, a)) == rhs
        r = R.degree(1, n + 1)
        x = rand_chain(R, r, n)
        assert cx.phi_tilde(M, cx.delta(J, x)) == cx.d_tilde(M.Omega, M.omega, cx.phi_tilde(M, x)).scale((-1) ** r)
        assert cx.phi_tilde_inverse(M, cx.phi_tilde(M, x), r) == x
        z = rand_chain(R, k, n) if k else JetChain(R.form(0))
        assert cx.d_tilde(M.Omega, M.omega, cx.d_tilde(M.Omega, M.omega, z)).is_zero()


@pytest.mark.parametrize("m", [1, 2])
def test_lcs_sequence_maps(m):
    M = LcsModel(m)
    J = M.structure
    n = J.n
    F = cx.lcs_sequence_maps(M, "F", M.omega)
    assert F.P == -J.e and F.Q.is_zero()
    R = RandomSource(M.chart, 606 + m, frequencies=LCS_FREQ[m])
    for _ in range(100):
        k = R.degree(0, n)
        a = R.form(k)
        Fa = cx.lcs_F(M, a)
        assert cx.lcs_G(M, Fa).is_zero()
        if k < n:
            assert cx.lcs_F(M, exterior_d(a)) == -cx.sigma(J, Fa)
        c = rand_cochain(R, R.degree(1, n))
        assert cx.lcs_G(M, cx.sigma(J, c)) == d_omega(M.omega, cx.lcs_G(M, c))


@pytest.mark.parametrize("m", [1, 2])
def test_lcs_modular_pair(m):
    M = LcsModel(m)
    J = M.structure
    X, g = modular_pair(J, M.volume)
    assert cx.sigma(J, JetCochain(X, MultiVector.scalar(M.chart, g))).is_zero()


# -- contact maps ----------------------------------------------------------------------------------


def test_contact_F_of_eta():
    M = ContactModel(1)
    out = cx.contact_chain_iso(M, "F", JetChain(M.eta, DiffForm.zero(M.chart, 0)))
    assert out.P.is_zero() and out.Q == MultiVector.scalar(M.chart, -1)


@pytest.mark.parametrize("m", [1, 2])
def test_contact_chain_iso(m):
    M = ContactModel(m)
    J = M.structure
    R = RandomSource(M.chart, 707 + m)
    for _ in range(100):
        k = R.degree(1, J.n)
        x = JetChain(R.form(k), R.form(k - 1))
        F = cx.contact_chain_iso(M, "F", x)
        assert cx.contact_chain_iso(M, "G", F) == x
        c = rand_cochain(R, k)
        assert cx.contact_F(M, cx.contact_G(M, c)) == c
        assert cx.sigma(J, F) == cx.contact_F(M, cx.de_rham_pair_d(x))


@pytest.mark.parametrize("m", [1, 2])
def test_contact_contraction_identities(m):
    M = ContactModel(m)
    J = M.structure
    R = RandomSource(M.chart, 808 + m)
    for _ in range(100):
        k = R.degree(0, J.n)
        a = R.form(k)
        assert contract(J.lam, wedge(M.eta, a)) == wedge(M.eta, contract(J.lam, a))
        lhs = contract(J.lam, wedge(a, M.d_eta))
        if k >= 2:
            lhs = lhs - wedge(contract(J.lam, a), M.d_eta)
        assert lhs == a.scale(m - k) + wedge(M.eta, interior(J.e, a))


@pytest.mark.parametrize("m", [1, 2])
def test_contact_homotopy(m):
    M = ContactModel(m)
    J = M.structure
    zero = JetChain(DiffForm.zero(M.chart, 2), DiffForm.zero(M.chart, 1))
    assert cx.contact_homotopy(M, zero).is_zero()
    R = RandomSource(M.chart, 909 + m)
    for _ in range(50):
        c = cx.delta(J, rand_chain(R, R.degree(1, J.n + 1), J.n))
        h = cx.contact_homotopy(M, c)
        assert cx.delta(J, h) == c


def test_contact_homotopy_rejects_non_cycles():
    M = ContactModel(1)
    t = M.chart.coords()[0]
    with pytest.raises(cx.NotACycle):
        cx.contact_homotopy(M, JetChain(wedge(coordinate_form(M.chart, 0), coordinate_form(M.chart, 1)).scale(t), DiffForm.zero(M.chart, 1)))


# -- duality probe and lift ------------------------------------------------------------------------


def test_interior_of_cocycles_gives_cycles():
    J = symplectic(1)
    nu = volume_form(J.chart)
    top = JetChain(DiffForm.zero(J.chart, 3), nu)
    R = RandomSource(J.chart, 1001)
    cocycles = [JetCochain(MultiVector.scalar(J.chart, 1)), JetCochain(J.lam, MultiVector.zero(J.chart, 1))]
    X, g = modular_pair(J, nu)
    cocycles.append(JetCochain(X, MultiVector.scalar(J.chart, g)))
    for _ in range(40):
        c = cx.sigma(J, rand_cochain(R, R.degree(0, 1)))
        cocycles.append(c)
    checked = 0
    for c in cocycles:
        assert cx.sigma(J, c).is_zero()
        y = cx.iota(c, top)
        if y.degree >= 1:
            assert cx.delta(J, y).is_zero()
            checked += 1
    assert checked >= 40


def test_lift_examples():
    S = symplectic(1)
    c = S.chart
    q = c.coords()[0]
    assert cx.lift_pair(JetCochain(MultiVector.scalar(c, q))) == MultiVector.scalar(c, q).extend_chart(c.extend("t"))
    L = cx.lift_pair(JetCochain(coordinate_vector(c, 0), MultiVector.scalar(c, 0)))
    assert L == coordinate_vector(L.chart, 0, L.chart.exp([0, 0, -1]))
    L = cx.lift_pair(JetCochain(MultiVector.zero(c, 1), MultiVector.scalar(c, 1)))
    assert L == coordinate_vector(L.chart, 2, L.chart.exp([0, 0, -1]))


def test_lift_is_homogeneous_in_t():
    J = ContactModel(1).structure
    R = RandomSource(J.chart, 1102)
    for _ in range(20):
        k = R.degree(0, 3)
        L = cx.lift_pair(rand_cochain(R, k))
        dt = coordinate_vector(L.chart, L.chart.n - 1)
        assert lie_derivative(dt, L) == L.scale(-k)
