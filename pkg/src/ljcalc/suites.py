"""Named reproduction checks and seeded property suites.

Each check returns a ``CheckReport``; it passes exactly when no residual
was recorded.
"""

from __future__ import annotations

import os
import time
import traceback
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import complexes as cx
from . import graded_cohomology as gc
from . import liealg
from .complexes import JetChain, JetCochain
from .expoly import ExPoly
from .jacobi import (
    JacobiStructure,
    Section1Jet,
    algebroid_bracket,
    anchor,
    conformal_change,
    conformal_iso,
    hamiltonian_field,
    jacobi_bracket,
    modular_pair,
    nabla_check,
    poissonize,
    reduce_tensor,
    verify_jacobi,
)
from .models import ContactModel, LcsModel, quadratic_plane, symplectic
from .randgen import RandomSource
from .tensorcalc import (
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
    pairing,
    schouten,
    schouten_graded,
    sharp,
    vector_field,
    volume_form,
    wedge,
)

DEFAULT_SEED = 20240601

# Published dimensions for the Kodaira-Thurston manifold.
KT_BETTI = [1, 3, 4, 3, 1]
KT_LJ = [1, 3, 4, 5, 3, 1]


@dataclass
class CheckReport:
    name: str
    status: str = "pass"
    details: list[str] = field(default_factory=list)
    timing: float = 0.0
    info: list[str] = field(default_factory=list)
    seed: int | None = None

    def fail(self, msg: str) -> None:
        self.details.append(msg)

    def check(self, ok: bool, msg: str) -> bool:
        if not ok:
            self.details.append(msg)
        return ok

    def finish(self) -> "CheckReport":
        if self.status != "error":
            self.status = "fail" if self.details else "pass"
        return self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "details": list(self.details),
            "info": list(self.info),
            "timing": round(self.timing, 3),
            "seed": self.seed,
        }

    def render(self) -> str:
        lines = [f"{self.name}: {self.status.upper()} ({self.timing:.2f}s)"]
        lines += [f"  {x}" for x in self.info]
        if self.details and self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        lines += [f"  residual: {x}" for x in self.details]
        return "\n".join(lines)


def default_samples(fallback: int) -> int:
    env = os.environ.get("JACOBI_SAMPLES")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return fallback


def _run(name: str, body: Callable[[CheckReport], None], seed: int | None = None) -> CheckReport:
    rep = CheckReport(name, seed=seed)
    start = time.perf_counter()
    try:
        body(rep)
    except Exception as exc:  # reported, never swallowed silently
        rep.status = "error"
        rep.details.append(f"{type(exc).__name__}: {exc}")
        rep.details.extend(traceback.format_exc().strip().splitlines()[-3:])
    rep.timing = time.perf_counter() - start
    return rep.finish()


def _lcs_frequencies(n: int) -> list[list[int]]:
    return [[0] * n, [-1] + [0] * (n - 1)]


def _random_pair(R: RandomSource, r: int, n: int) -> JetChain:
    a = R.form(r) if r <= n else DiffForm.zero(R.chart, r)
    return JetChain(a, R.form(r - 1) if r >= 1 else None)


def _random_cochain(R: RandomSource, k: int) -> JetCochain:
    return JetCochain(R.multivector(k), R.multivector(k - 1) if k else None)


# -- criterion-level checks -------------------------------------------------------------------


def kodaira_thurston(rep: CheckReport) -> None:
    g = liealg.kodaira_thurston()
    betti = liealg.betti_numbers(g)
    lj = liealg.nilmanifold_lj_dims(g, liealg.default_symplectic_cochain(g))
    rep.info.append(f"betti {betti}")
    rep.info.append(f"lj dims {lj}")
    rep.check(betti == KT_BETTI, f"betti numbers {betti} != {KT_BETTI}")
    rep.check(lj == KT_LJ, f"LJ dims {lj} != stated {KT_LJ} (alternating sum of stated dims is "
                           f"{sum((-1) ** k * d for k, d in enumerate(KT_LJ))}, must be 0)")


def quadratic_r2(rep: CheckReport) -> None:
    J = quadratic_plane()
    x, y = J.chart.coords()
    rep.check(verify_jacobi(J).passed, "xy d/dx^d/dy is not Poisson")
    X, g = modular_pair(J, volume_form(J.chart))
    expected = vector_field(J.chart, [x, -y])
    rep.info.append(f"modular field {X.format()}")
    rep.check(X == expected and g.is_zero(), f"modular pair ({X}, {g}) != (x d/dx - y d/dy, 0)")
    op = gc.sigma_bar_operator(J.lam)
    res_l = gc.is_exact(op, J.lam)
    rep.info.append(f"L exact from linear fields: {res_l.exact}")
    rep.check(not res_l.exact, f"L reported exact with witness {res_l.witness}")
    res_x = gc.is_exact(op, expected)
    rep.info.append(f"[x d/dx - y d/dy] trivial in its weight block: {res_x.exact}")
    rep.check(not res_x.exact, "modular field reported exact")


def _con2_lhs(L: MultiVector, a: DiffForm, d_eta: DiffForm) -> DiffForm:
    out = contract(L, wedge(a, d_eta))
    if a.degree >= 2:
        out = out - wedge(contract(L, a), d_eta)
    return out


def contact_suite(m: int, cycles: int | None = None, forms: int | None = None, seed: int = DEFAULT_SEED):
    cycles = cycles or default_samples(50)
    forms = forms or default_samples(100)

    def body(rep: CheckReport) -> None:
        M = ContactModel(m)
        J = M.structure
        n = J.n
        v = verify_jacobi(J)
        rep.check(v.passed, "; ".join(v.residuals()))
        E = M.reeb
        rep.check(pairing(M.eta, E) == 1, "i_E eta != 1")
        rep.check(interior(E, M.d_eta).is_zero(), "i_E d eta != 0")
        X, g = modular_pair(J, M.volume)
        rep.info.append(f"modular pair ({X.format()}, {g})")
        rep.check(X == E.scale(-(m + 1)) and g.is_zero(), f"modular pair ({X}, {g}) != (-{m + 1}E, 0)")
        R = RandomSource(M.chart, seed + m)
        ok = 0
        for i in range(cycles):
            r = R.degree(1, n + 1)
            c = cx.delta(J, _random_pair(R, r, n))
            try:
                h = cx.contact_homotopy(M, c)
            except Exception as exc:
                rep.fail(f"homotopy sample {i} (degree {c.degree}): {exc}")
                continue
            ok += rep.check(cx.delta(J, h) == c, f"homotopy sample {i} not reconstructed")
        rep.info.append(f"homotopy reconstructed {ok}/{cycles} cycles")
        L, eta = J.lam, M.eta
        for i in range(forms):
            k = R.degree(0, n)
            a = R.form(k)
            rep.check(contract(L, wedge(eta, a)) == wedge(eta, contract(L, a)), f"con1 fails on sample {i}")
            rhs = a.scale(m - k) + wedge(eta, interior(E, a))
            rep.check(_con2_lhs(L, a, M.d_eta) == rhs, f"con2 fails on sample {i}")
        rep.info.append(f"con1/con2 on {forms} forms")

    return body


def _lcs_witness(M: LcsModel, J: JacobiStructure, diff: JetCochain) -> JetCochain | None:
    n = J.n
    inv = M.factor.inverse()
    cands = []
    for d in range(3):
        for alpha in gc.monomials(n, d):
            cands.append(JetCochain(MultiVector.scalar(M.chart, inv * ExPoly.monomial(n, 1, alpha))))
    return cx.sigma_preimage(J, diff, cands)


def lcs_suite(samples: int | None = None, seed: int = DEFAULT_SEED, ms=(1, 2)):
    samples = samples or default_samples(100)

    def body(rep: CheckReport) -> None:
        for m in ms:
            M = LcsModel(m)
            J = M.structure
            n = J.n
            v = verify_jacobi(J)
            rep.check(v.passed, f"m={m}: " + "; ".join(v.residuals()))
            R = RandomSource(M.chart, seed + 10 * m, frequencies=_lcs_frequencies(n))
            st = lambda a: cx.star_lcs(M, a)
            counts = dict.fromkeys(["star2", "4.15", "4.16", "4.17", "dtilde2"], 0)
            for i in range(samples):
                k = R.degree(0, n)
                a = R.form(k)
                sa = st(a)
                sgn = -1 if k % 2 else 1
                counts["star2"] += rep.check(st(sa) == a, f"m={m} star^2 != id, sample {i}")
                ok = interior(J.e, sa) == st(wedge(M.omega, a)).scale(sgn)
                ok &= lie_derivative(J.e, sa) == st(lie_derivative(J.e, a))
                ok &= contract(J.lam, sa) == st(wedge(a, M.Omega))
                counts["4.15"] += rep.check(ok, f"m={m} star identities fail, sample {i}")
                rhs = (exterior_d(sa) - wedge(M.omega, sa).scale(m - k + 1) - wedge(M.Omega, interior(J.e, sa))).scale(-sgn)
                counts["4.16"] += rep.check(st(cx.delta_bar(J.lam, a)) == rhs, f"m={m} star/delta_bar relation fails, sample {i}")
                r = R.degree(1, n + 1)
                x = _random_pair(R, r, n)
                lhs = cx.phi_tilde(M, cx.delta(J, x))
                rhs = cx.d_tilde(M.Omega, M.omega, cx.phi_tilde(M, x)).scale(-1 if r % 2 else 1)
                counts["4.17"] += rep.check(lhs == rhs, f"m={m} phi chain relation fails, degree {r}, sample {i}")
                z = _random_pair(R, k, n) if k else JetChain(R.form(0))
                dz = cx.d_tilde(M.Omega, M.omega, z)
                counts["dtilde2"] += rep.check(cx.d_tilde(M.Omega, M.omega, dz).is_zero(), f"m={m} d_tilde^2 != 0, sample {i}")
            rep.info.append(f"m={m}: " + ", ".join(f"{k} {v}/{samples}" for k, v in counts.items()))
            X, g = modular_pair(J, M.volume)
            pair = JetCochain(X, MultiVector.scalar(M.chart, g))
            rep.check(cx.sigma(J, pair).is_zero(), f"m={m} modular pair is not a cocycle")
            diff = pair - JetCochain(J.e.scale(-(m + 1)), MultiVector.scalar(M.chart, 0))
            w = _lcs_witness(M, J, diff)
            if w is None:
                rep.fail(f"m={m}: no witness in span e^(-q1)*monomials(deg<=2); residual {diff}")
            else:
                rep.info.append(f"m={m}: modular pair ({X.format()}, {g}); exactness witness {w.P.format()}")

    return body


LIE_POISSON_ALGEBRAS = ("so3", "h3", "aff1")


def lie_poisson_suite(rep: CheckReport) -> None:
    for name in LIE_POISSON_ALGEBRAS:
        g = liealg.builtin(name)
        J = liealg.lie_poisson(g)
        rep.check(verify_jacobi(J).passed, f"{name}: Lie-Poisson tensor fails the Jacobi check")
        A = liealg.radial_field(J.chart)
        rep.check(lie_derivative(A, J.lam) == -J.lam, f"{name}: L_A L != -L")
        X, div = modular_pair(J, volume_form(J.chart))
        mu = liealg.modular_character(g)
        rep.check(X == vector_field(J.chart, [J.chart.const(c) for c in mu]) and div.is_zero(),
                  f"{name}: modular field {X} != mu0 {mu}")
        rep.info.append(f"{name}: mu0 = {[str(c) for c in mu]}, modular field {X.format()}")


SO3_GRID = {0: [1, 0, 1, 0, 1], 1: [0] * 5, 2: [0] * 5, 3: [1, 0, 1, 0, 1]}


def so3_graded(rep: CheckReport) -> None:
    op = gc.sigma_bar_operator(liealg.lie_poisson(liealg.so3()).lam)
    table = gc.cohomology_dims(op, range(4), range(5))
    for k in range(4):
        row = table.row(k)
        rep.info.append(f"k={k}: {row}")
        rep.check(row == SO3_GRID[k], f"k={k}: {row} != {SO3_GRID[k]}")


def sphere_suite(name: str):
    def body(rep: CheckReport) -> None:
        g = liealg.builtin(name)
        S = liealg.sphere_structure(g)
        chart, q = S.chart, S.constraint
        xs = chart.coords()
        exact = verify_jacobi(S.lam, S.e)
        rep.check(exact.passed, f"not Jacobi on the whole algebra: {exact.residuals()}")
        rep.check(schouten(liealg.radial_field(chart), S.e) == S.e, "[A, E'] != E'")
        N = liealg.norm_squared(chart)
        rep.check(apply_vector(S.e, N).reduce_mod_hypersurface(q).is_zero(), "E' is not tangent to the sphere")
        rep.check(reduce_tensor(form_into_multivector(S.d(N), S.lam), q).is_zero(), "L' is not tangent to the sphere")
        for i, j in combinations(range(chart.n), 2):
            lhs = jacobi_bracket(S, xs[i], xs[j])
            rhs = sum((xs[k] * g.c(i, j, k) for k in range(chart.n)), chart.zero())
            rep.check((lhs - rhs).reduce_mod_hypersurface(q).is_zero(), f"bracket of x{i + 1}, x{j + 1} != <[e{i + 1},e{j + 1}],.>")
        if name == "so3":
            rep.check(S.e.is_zero(), f"E' = {S.e} for so(3)")
        rep.info.append(f"E' = {S.e.format()}")
        cochains = [JetCochain(S.lam, S.e), JetCochain(S.e, MultiVector.scalar(chart, 1))]
        for c in cochains:
            k = c.degree
            L = cx.lift_pair(c)
            dt = coordinate_vector(L.chart, L.chart.n - 1)
            rep.check(lie_derivative(dt, L) == L.scale(-k), f"lift of degree {k} is not homogeneous in t")
            et = ExPoly.exp(L.chart.n, [0] * chart.n + [1])
            for idx in combinations(range(chart.n), k):
                forms = [differential(et * xs[i].extend(1), L.chart) for i in idx]
                lhs = evaluate(L, forms)
                rhs = cx.j_cochain_eval(S, c, [xs[i] for i in idx]).extend(1)
                rep.check(lhs == rhs, f"lift evaluation differs on {idx}")

    return body


def conformal_suite(samples: int | None = None, seed: int = DEFAULT_SEED):
    samples = samples or default_samples(50)

    def body(rep: CheckReport) -> None:
        for mname, J, freqs in _models():
            R = RandomSource(J.chart, seed, frequencies=freqs)
            n = J.n
            for i in range(samples):
                lam = [R.rng.randint(-1, 1) for _ in range(n)]
                a = ExPoly.exp(n, lam) * R.rng.randint(1, 3)
                Ja = conformal_change(J, a)
                rep.check(verify_jacobi(Ja).passed, f"{mname}: conformal change by {a} not Jacobi")
                back = conformal_change(Ja, a.inverse())
                rep.check(back.lam == J.lam and back.e == J.e, f"{mname}: change by {a} then 1/a is not the identity")
                s1 = Section1Jet(R.form(1), R.function())
                s2 = Section1Jet(R.form(1), R.function())
                rep.check(anchor(Ja, conformal_iso(a, s1)) == anchor(J, s1), f"{mname}: anchor not intertwined")
                lhs = algebroid_bracket(Ja, conformal_iso(a, s1), conformal_iso(a, s2))
                rep.check(lhs == conformal_iso(a, algebroid_bracket(J, s1, s2)), f"{mname}: bracket not intertwined")
            rep.info.append(f"{mname}: {samples} conformal factors")

    return body


def poissonize_suite(rep: CheckReport) -> None:
    for mname, J, _ in _models():
        P = poissonize(J)
        rep.check(P.e.is_zero() and verify_jacobi(P).passed, f"{mname}: poissonization is not Poisson")
    M = ContactModel(1)
    P = poissonize(M.structure)
    sq = wedge(P.lam, P.lam)
    terms = list(sq.items())
    ok = len(terms) == 1 and terms[0][1].is_unit()
    rep.check(ok, f"contact m=1: L~^L~ = {sq} is not a single unit term")
    rep.info.append(f"contact m=1: L~^L~ = {sq.format()}")


def hce_suite(samples: int | None = None, seed: int = DEFAULT_SEED):
    samples = samples or default_samples(50)

    def body(rep: CheckReport) -> None:
        for mname, J, freqs in _models():
            R = RandomSource(J.chart, seed, frequencies=freqs)
            for i in range(samples):
                k = R.degree(1, 3)
                ch = cx.HCEChain(R.function(), tuple(R.function() for _ in range(k)))
                rep.check(cx.delta(J, cx.pi_k(J, ch)) == cx.pi_k(J, cx.delta_H(J, ch), k - 1),
                          f"{mname}: delta o pi != pi o delta_H, sample {i}")
                rep.check(cx.delta_H(J, cx.delta_H(J, ch)).is_zero(), f"{mname}: delta_H^2 != 0, sample {i}")
                kc = R.degree(0, 2)
                c = _random_cochain(R, kc)
                fs = [R.function() for _ in range(kc + 1)]
                rep.check(cx.partialH_of_j(J, c, fs) == cx.j_cochain_eval(J, cx.sigma(J, c), fs),
                          f"{mname}: partial_H o j != j o sigma, sample {i}")
            rep.info.append(f"{mname}: {samples} samples")

    return body


# -- property suites ------------------------------------------------------------------------------


def _models() -> list[tuple[str, JacobiStructure, list | None]]:
    out = [
        ("symplectic", symplectic(1), None),
        ("quadratic", quadratic_plane(), None),
        ("contact1", ContactModel(1).structure, None),
        ("contact2", ContactModel(2).structure, None),
        ("lcs1", LcsModel(1).structure, _lcs_frequencies(2)),
        ("lcs2", LcsModel(2).structure, _lcs_frequencies(4)),
    ]
    return out


def property_suite(samples: int | None = None, seed: int = DEFAULT_SEED):
    """Operator identities on random inputs for every model."""
    samples = samples or default_samples(50)

    def body(rep: CheckReport) -> None:
        for mname, J, freqs in _models():
            R = RandomSource(J.chart, seed, frequencies=freqs)
            n = J.n
            nu = volume_form(J.chart)
            fails_before = len(rep.details)
            for i in range(samples):
                tag = f"{mname} sample {i}"
                k = R.degree(0, n)
                c = _random_cochain(R, k)
                rep.check(cx.sigma(J, cx.sigma(J, c)).is_zero(), f"{tag}: sigma^2 != 0")
                r = R.degree(1, n + 1)
                x = _random_pair(R, r, n)
                dx = cx.delta(J, x)
                if dx.degree >= 1:
                    rep.check(cx.delta(J, dx).is_zero(), f"{tag}: delta^2 != 0")
                if k <= 2:
                    fs = [R.function() for _ in range(k + 1)]
                    rep.check(cx.partialH_of_j(J, c, fs) == cx.j_cochain_eval(J, cx.sigma(J, c), fs), f"{tag}: kj fails")
                kk = R.degree(1, 3)
                ch = cx.HCEChain(R.function(), tuple(R.function() for _ in range(kk)))
                rep.check(cx.delta(J, cx.pi_k(J, ch)) == cx.pi_k(J, cx.delta_H(J, ch), kk - 1), f"{tag}: 62' fails")
                f, g = R.function(), R.function()
                lhs = schouten(hamiltonian_field(J, f), hamiltonian_field(J, g))
                rep.check(lhs == hamiltonian_field(J, jacobi_bracket(J, f, g)), f"{tag}: [X_f,X_g] != X_{{f,g}}")
                X = R.vector_field()
                a = R.form(R.degree(0, n - 1))
                cartan = interior(X, exterior_d(a)) + exterior_d(interior(X, a)) if a.degree else interior(X, exterior_d(a))
                rep.check(lie_derivative(X, a) == cartan, f"{tag}: Cartan formula fails")
                P, Q, S = (R.multivector(R.degree(1, 3)) for _ in range(3))
                p, q, s = P.degree - 1, Q.degree - 1, S.degree - 1
                jac = schouten_graded(P, schouten_graded(Q, S)).scale((-1) ** (p * s))
                jac = jac + schouten_graded(Q, schouten_graded(S, P)).scale((-1) ** (q * p))
                jac = jac + schouten_graded(S, schouten_graded(P, Q)).scale((-1) ** (s * q))
                rep.check(jac.is_zero(), f"{tag}: graded Jacobi identity fails")
                ka = R.degree(0, min(3, n))
                al = R.form(ka)
                rep.check(lie_derivative(J.e, sharp(J.lam, al)) == sharp(J.lam, lie_derivative(J.e, al)), f"{tag}: L_E commutes with sharp fails")
                if ka >= 1:
                    lhs = -schouten(J.lam, sharp(J.lam, al)) + wedge(J.e, sharp(J.lam, al)).scale(ka)
                    rhs = -sharp(J.lam, exterior_d(al)) + wedge(sharp(J.lam, interior(J.e, al)), J.lam)
                    rep.check(lhs == rhs, f"{tag}: sigma-bar/sharp relation fails")
                if J.is_poisson:
                    a1 = R.form(1)
                    rep.check(interior(sharp(J.lam, a1), nu) == -wedge(a1, contract(J.lam, nu)), f"{tag}: i_(sharp a) nu fails")
                s1 = Section1Jet(R.form(1), R.function())
                rep.check(nabla_check(J, nu, s1).passed, f"{tag}: connection identity fails")
            rep.info.append(f"{mname}: {samples} samples, {len(rep.details) - fails_before} failures")
        _chain_map_properties(rep, samples, seed)

    return body


def _chain_map_properties(rep: CheckReport, samples: int, seed: int) -> None:
    for m in (1, 2):
        M = ContactModel(m)
        J = M.structure
        R = RandomSource(M.chart, seed + m)
        for i in range(samples):
            k = R.degree(1, J.n)
            x = JetChain(R.form(k), R.form(k - 1))
            F = cx.contact_F(M, x)
            rep.check(cx.contact_G(M, F) == x, f"contact{m} sample {i}: G o F != id")
            c = _random_cochain(R, k)
            rep.check(cx.contact_F(M, cx.contact_G(M, c)) == c, f"contact{m} sample {i}: F o G != id")
            rep.check(cx.sigma(J, F) == cx.contact_F(M, cx.de_rham_pair_d(x)), f"contact{m} sample {i}: F not a chain map")
        rep.info.append(f"contact{m}: F/G laws on {samples} samples")
    for m in (1, 2):
        M = LcsModel(m)
        J = M.structure
        n = J.n
        R = RandomSource(M.chart, seed + 10 * m, frequencies=_lcs_frequencies(n))
        for i in range(samples):
            k = R.degree(0, n)
            a = R.form(k)
            F = cx.lcs_F(M, a)
            rep.check(cx.lcs_G(M, F).is_zero(), f"lcs{m} sample {i}: G o F != 0")
            if k < n:
                rep.check(cx.lcs_F(M, exterior_d(a)) == -cx.sigma(J, F), f"lcs{m} sample {i}: F not a chain map")
            kc = R.degree(1, n)
            c = _random_cochain(R, kc)
            rep.check(cx.lcs_G(M, cx.sigma(J, c)) == d_omega(M.omega, cx.lcs_G(M, c)), f"lcs{m} sample {i}: G not a chain map")
        rep.info.append(f"lcs{m}: F/G laws on {samples} samples")


# -- registry ---------------------------------------------------------------------------------


def reproduce(name: str, seed: int = DEFAULT_SEED, samples: int | None = None) -> CheckReport:
    table: dict[str, Callable[[], Callable[[CheckReport], None]]] = {
        "kodaira-thurston": lambda: kodaira_thurston,
        "quadratic-r2": lambda: quadratic_r2,
        "contact-m1": lambda: contact_suite(1, samples, samples, seed),
        "contact-m2": lambda: contact_suite(2, samples, samples, seed),
        "lcs-darboux": lambda: lcs_suite(samples, seed),
        "so3-liepoisson": lambda: lie_poisson_suite,
        "so3-graded": lambda: so3_graded,
        "sphere-so3": lambda: sphere_suite("so3"),
        "sphere-h3": lambda: sphere_suite("h3"),
        "conformal": lambda: conformal_suite(samples, seed),
        "poissonize": lambda: poissonize_suite,
        "hce-compat": lambda: hce_suite(samples, seed),
    }
    if name not in table:
        raise KeyError(name)
    return _run(name, table[name](), seed)


REPRODUCE_NAMES = [
    "kodaira-thurston", "quadratic-r2", "contact-m1", "contact-m2", "lcs-darboux", "so3-liepoisson",
    "so3-graded", "sphere-so3", "sphere-h3", "conformal", "poissonize", "hce-compat",
]


def run_properties(seed: int = DEFAULT_SEED, samples: int | None = None) -> CheckReport:
    return _run("properties", property_suite(samples, seed), seed)
