"""Acceptance criteria, one test per criterion.

Each test prints (and records for the terminal summary) a single
``PASS``/``FAIL`` line with the measured runtime against its budget.
Sub-checks are all evaluated before the verdict so that a failure line
lists every check that did not hold.
"""

import math
import random
import sys
import time

import pytest
import sympy

from frobpp.classic import fermat_test, lucas_test, strong_lucas_test
from frobpp.frobenius import Step, frobenius_test, strong_frobenius_test
from frobpp.harness.crossval import cross_validate
from frobpp.harness.search import Family, RangeJob, TestSpec, challenge_scan, search_pseudoprimes
from frobpp.ring import IntPoly, ModPoly, discriminant, jacobi, poly_compose_mod, poly_powmod

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


class Checks:
    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.failed = []
        self.start = time.perf_counter()

    def check(self, label, ok):
        if not ok:
            self.failed.append(label)

    def finish(self):
        elapsed = time.perf_counter() - self.start
        if elapsed >= self.budget:
            self.failed.append(f"runtime {elapsed:.1f}s >= {self.budget}s")
        status = "PASS" if not self.failed else "FAIL"
        line = f"{status} criterion {self.number}: {self.title} ({elapsed:.2f}s, budget {self.budget}s)"
        if self.failed:
            line += " -- failed: " + "; ".join(self.failed)
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert not self.failed, line


def mp(n, *coeffs):
    return ModPoly(n, coeffs)


def test_criterion_1_quartic_mod_89():
    c = Checks(1, "x^4+12x+1 modulo 89, exact", 1)
    f = IntPoly.parse("x^4+12x+1")
    rep = frobenius_test(89, f)
    F = rep.F
    c.check("F1 = x+78", F[0] == mp(89, 78, 1))
    c.check("f1 = x^3+11x^2+32x+8", rep.chain[1] == mp(89, 8, 32, 11, 1))
    c.check("F2 = 1", F[1].is_one())
    c.check("F3 = f2", F[2] == rep.chain[2] and F[2].degree == 3)
    c.check("F4 = 1", F[3].is_one())
    c.check("S = 0", rep.S == 0)
    c.check("jacobi(-559616, 89) = +1", discriminant(f) == -559616 and jacobi(-559616, 89) == 1)
    c.check("verdict probable prime", rep.verdict.probable_prime)
    F3 = mp(89, 8, 32, 11, 1)
    c.check("F3(25x^2+x+59) = 0", poly_compose_mod(F3, mp(89, 59, 1, 25), F3).is_zero())
    c.check("x^(89^2) - x = 64x^2+86x+19 mod f1",
            poly_powmod(mp(89, 0, 1), 89**2, F3) - mp(89, 0, 1) == mp(89, 19, 86, 64))
    power = poly_powmod(mp(89, 0, 1), 89, f.mod(89))
    c.check("x^89 - x = 59x^3+51x^2+20x+86",
            power - mp(89, 0, 1) == mp(89, 86, 20, 51, 59))
    c.finish()


def test_criterion_2_fibonacci_323():
    c = Checks(2, "x^2-x-1: 323 fails the Frobenius step; first pseudoprime search", 10)
    f = IntPoly.quadratic(1, -1)
    rep = frobenius_test(323, f)
    c.check("323 composite", rep.verdict.composite)
    c.check("failing step frobenius", rep.failed_step is Step.FROBENIUS)
    c.check("F1 = 1", rep.F[0].is_one())
    c.check("F2 = x^2-x-1", rep.F[1] == f.mod(323))
    c.check("jacobi(5, 323) = -1", jacobi(5, 323) == -1)
    c.check("F2(x+322) = 321x+2", rep.frobenius_images == ((2, mp(323, 2, 321)),))
    c.check("lucas(323, 1, -1) probable prime", lucas_test(323, 1, -1))
    found = [fd.n for fd in search_pseudoprimes(RangeJob(3, 6000, TestSpec(Family.FROBENIUS, f.coeffs)))]
    c.check(f"first Frobenius pseudoprime in [3, 6000] is 5777 (found {found})",
            bool(found) and found[0] == 5777)
    c.finish()


def test_criterion_3_cubic_1537():
    c = Checks(3, "1537 passes for (x-1341)(x-513)(x-545) but fails Fermat at each root", 1)
    f = IntPoly.parse("(x-1341)(x-513)(x-545)")
    c.check("frobenius probable prime", frobenius_test(1537, f).verdict.probable_prime)
    for a in (1341, 513, 545):
        c.check(f"fermat(1537, {a}) composite", not fermat_test(1537, a))
    c.finish()


def test_criterion_4_strong_294409():
    c = Checks(4, "294409: strong Frobenius pass, strong Lucas fail, Jacobi +1", 5)
    P, Q = 1185, 56437
    c.check("strong frobenius probable prime",
            strong_frobenius_test(294409, IntPoly.quadratic(P, Q)).verdict.probable_prime)
    c.check("strong lucas composite", not strong_lucas_test(294409, P, Q))
    c.check("jacobi = +1", jacobi(P * P - 4 * Q, 294409) == 1)
    c.finish()


def test_criterion_5_primes_always_pass():
    c = Checks(5, "200 random primes x random monic f pass both tests", 60)
    rng = random.Random(20240501)
    failures = 0
    for _ in range(200):
        p = sympy.prevprime(rng.randint(4, 10**6))
        while True:
            d = rng.randint(1, 5)
            f = IntPoly(tuple(rng.randint(-50, 50) for _ in range(d)) + (1,))
            delta = discriminant(f)
            if math.gcd(p, 2 * f(0) * delta) == 1:
                break
        for test in (frobenius_test, strong_frobenius_test):
            rep = test(p, f)
            ok = (rep.verdict.probable_prime
                  and sum(rep.degrees) == f.degree
                  and all(deg % i == 0 for i, deg in enumerate(rep.degrees, start=1))
                  and (-1) ** rep.S == jacobi(delta, p))
            if not ok:
                failures += 1
                c.check(f"{test.__name__}({p}, {f})", False)
    c.check("zero failures", failures == 0)
    c.finish()


def _suites(c, plan):
    for suite, lo, hi in plan:
        rep = cross_validate(lo, hi, suite)
        c.check(f"{suite} checked something", rep.checked > 0)
        c.check(f"{suite}: {len(rep.violations)} violations", rep.ok)


def test_criterion_6_equivalence_suites():
    c = Checks(6, "equivalence suites, zero violations", 120)
    _suites(c, [
        ("fermat-equivalence", 3, 9999),
        ("strong-equivalence", 3, 9999),
        ("lehmer-equivalence", 3, 2999),
        ("quadratic-fast-path", 3, 9999),
    ])
    c.finish()


def test_criterion_7_implication_suites():
    c = Checks(7, "implication suites, zero violations", 180)
    _suites(c, [
        ("fermat-base-f0", 3, 99999),
        ("lucas-implication", 3, 9999),
        ("product-closure", 3, 9999),
        ("perrin-signature", 3, 9999),
        ("szekeres-implication", 3, 9999),
        ("extra-strong-implication", 3, 9999),
        ("carmichael-split", 3, 9999),
    ])
    c.finish()


def test_criterion_8_challenge_scan():
    c = Checks(8, "no x^2+5x+5 pseudoprime = 2, 3 mod 5 below 10^6", 600)
    found = [fd.n for fd in challenge_scan(10**6)]
    c.check(f"empty stream (found {found[:5]})", not found)
    c.finish()


def test_criterion_9_out_of_scope():
    line = ("SKIP criterion 9: asymptotic error and counting bounds are not checked at desk scale; "
            "criteria 1-8 exercise the definitions they rest on")
    print(line)
    ACCEPTANCE_LINES.append(line)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
