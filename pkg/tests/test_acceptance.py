"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (the lines are repeated in the terminal summary) or
directly with ``python tests/test_acceptance.py``.
"""

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from ljcalc import graded_cohomology as gc
from ljcalc import liealg, suites

from _oracles import sympy_rank
from test_liealg import oracle_betti, oracle_lj_dims

LINES: list[str] = []


def _record(num: int, title: str, limit: float, reports, extra=()):
    """Combine suite reports and extra ``(ok, message)`` pairs into one verdict line."""
    elapsed = sum(r.timing for r in reports)
    problems = [f"{r.name}: {d}" for r in reports for d in r.details]
    problems += [msg for ok, msg in extra if not ok]
    if elapsed >= limit:
        problems.append(f"runtime {elapsed:.2f}s exceeds {limit:g}s")
    status = "PASS" if not problems else "FAIL"
    line = f"criterion {num} {status}  {title}  ({elapsed:.2f}s, limit {limit:g}s)"
    LINES.append(line)
    print(line)
    for p in problems:
        print(f"    {p}")
    return status == "PASS", problems


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def criterion_1():
    rep = suites.reproduce("kodaira-thurston")
    g = liealg.kodaira_thurston()
    omega = liealg.default_symplectic_cochain(g)
    extra = [
        (oracle_betti(g) == suites.KT_BETTI, f"oracle betti {oracle_betti(g)} != {suites.KT_BETTI}"),
        (oracle_lj_dims(g, omega) == liealg.nilmanifold_lj_dims(g, omega), "oracle LJ dims disagree with the library"),
    ]
    return _record(1, "Kodaira-Thurston Betti numbers and LJ dimensions", 1, [rep], extra)


def criterion_2():
    return _record(2, "quadratic plane modular field and non-exactness", 1, [suites.reproduce("quadratic-r2")])


def criterion_3():
    reps = [suites.reproduce("contact-m1"), suites.reproduce("contact-m2")]
    return _record(3, "contact models m=1,2", 30, reps)


def criterion_4():
    return _record(4, "l.c.s. Darboux models m=1,2", 60, [suites.reproduce("lcs-darboux")])


def criterion_5():
    return _record(5, "Lie-Poisson so(3), h3, aff(1)", 5, [suites.reproduce("so3-liepoisson")])


def criterion_6():
    rep = suites.reproduce("so3-graded")
    op = gc.sigma_bar_operator(liealg.lie_poisson(liealg.so3()).lam)
    extra = []
    for k in range(4):
        for d in range(5):
            block = gc.assemble(op, k, d)
            extra.append((block.rank() == sympy_rank(block.matrix), f"block ({k},{d}) rank disagrees with sympy"))
    return _record(6, "so(3) graded Lie-Poisson grid", 30, [rep], extra)


def criterion_7():
    reps = [suites.reproduce("sphere-so3"), suites.reproduce("sphere-h3")]
    return _record(7, "sphere structures for so(3) and h3", 10, reps)


def criterion_8():
    reps = [suites.run_properties(), suites.reproduce("conformal"), suites.reproduce("poissonize"),
            suites.reproduce("hce-compat")]
    return _record(8, "operator and property suites", 300, reps)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i + 1}" for i in range(len(CRITERIA))])
def test_criterion(criterion):
    ok, problems = criterion()
    assert ok, "; ".join(problems)


if __name__ == "__main__":
    results = [c()[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
