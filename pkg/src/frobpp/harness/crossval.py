"""Cross-validation of the Frobenius tests against the classical tests.

Each suite walks the odd integers of a range, runs a pair of tests on every
fixture parameter, and records any ``n`` where the expected implication or
equivalence between them fails.  Inputs a test rejects as inadmissible are
skipped, not counted.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .. import classic
from ..frobenius import Step, frobenius_test, quadratic_fast_test, strong_frobenius_test
from ..ring import IntPoly, InvalidInput, discriminant, jacobi
from . import fixtures
from .oracle import ORACLE_BOUND, OracleTooLarge, smallest_factors


@dataclass(frozen=True)
class Violation:
    n: int
    params: str
    detail: str


@dataclass
class CrossvalReport:
    suite: str
    lo: int
    hi: int
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    # documented behaviour worth showing that is not a violation
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.suite} [{self.lo}, {self.hi}]: {self.checked} checked, {status}"


def _odd(lo: int, hi: int) -> range:
    lo = max(lo, 3)
    return range(lo | 1, hi + 1, 2)


def _odd_composites(lo: int, hi: int) -> Iterator[int]:
    lo = max(lo, 3)
    if lo > hi:
        return
    spf = smallest_factors(lo, hi)
    for n in _odd(lo, hi):
        if spf[n - lo]:
            yield n


def _linear(a: int) -> IntPoly:
    return IntPoly((-a, 1))


def _pp(report) -> bool:
    return report.verdict.probable_prime


# -- equivalences ---------------------------------------------------------------

def _fermat_linear(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for a in fixtures.FERMAT_BASES:
            if math.gcd(n, 2 * a) != 1:
                continue
            rep.checked += 1
            fermat = classic.fermat_test(n, a)
            frob = _pp(frobenius_test(n, _linear(a)))
            if fermat != frob:
                rep.violations.append(Violation(n, f"a={a}", f"fermat {fermat}, frobenius {frob}"))


def _strong_linear(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for a in fixtures.FERMAT_BASES:
            if math.gcd(n, 2 * a) != 1:
                continue
            rep.checked += 1
            strong = classic.strong_test(n, a)
            frob = _pp(strong_frobenius_test(n, _linear(a)))
            if strong != frob:
                rep.violations.append(
                    Violation(n, f"a={a}", f"strong {strong}, strong frobenius {frob}")
                )


def _lehmer_lucas(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for L, Q in fixtures.LEHMER_PAIRS:
            if math.gcd(n, 2 * L * Q * (L - 4 * Q)) != 1:
                continue
            rep.checked += 1
            direct = classic.lehmer_test_direct(n, L, Q)
            via = classic.lucas_test(n, L, L * Q)
            if direct != via:
                rep.violations.append(
                    Violation(n, f"L={L},Q={Q}", f"recurrence {direct}, lucas(L, LQ) {via}")
                )


def _quadratic_fast(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for P, Q in fixtures.QUADRATIC_PAIRS:
            fast = quadratic_fast_test(n, P, Q)
            if fast.step is Step.PRECHECK:
                continue
            rep.checked += 1
            full = frobenius_test(n, IntPoly.quadratic(P, Q)).verdict
            if fast.probable_prime != full.probable_prime:
                rep.violations.append(
                    Violation(n, f"P={P},Q={Q}", f"fast {fast.outcome.value}, full {full.outcome.value}")
                )


# -- implications ---------------------------------------------------------------

def _fermat_base_f0(rep: CrossvalReport) -> None:
    polys = [IntPoly.parse(t) for t in fixtures.FERMAT_F0_POLYS]
    for n in _odd_composites(rep.lo, rep.hi):
        for f in polys:
            if not _pp(frobenius_test(n, f)):
                continue
            rep.checked += 1
            if not classic.fermat_test(n, f(0)):
                rep.violations.append(Violation(n, str(f), f"not a Fermat pseudoprime base {f(0)}"))


def _split_quadratic(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for a, b in fixtures.SPLIT_QUADRATIC_ROOTS:
            f = IntPoly.from_roots((a, b))
            if not _pp(frobenius_test(n, f)):
                continue
            rep.checked += 1
            if not (classic.fermat_test(n, a) and classic.fermat_test(n, b)):
                rep.violations.append(Violation(n, str(f), f"fails Fermat base {a} or {b}"))


def _product_closure(rep: CrossvalReport) -> None:
    polys = [IntPoly.parse(t) for t in fixtures.PRODUCT_POLYS]
    pairs = [(f, g, f * g) for f, g in itertools.combinations(polys, 2)]
    pairs = [(f, g, h, 2 * h(0) * discriminant(h)) for f, g, h in pairs]
    for n in _odd(rep.lo, rep.hi):
        for f, g, h, bad in pairs:
            if math.gcd(n, bad) != 1:
                continue
            if not (_pp(frobenius_test(n, f)) and _pp(frobenius_test(n, g))):
                continue
            rep.checked += 1
            if not _pp(frobenius_test(n, h)):
                rep.violations.append(Violation(n, f"({f})({g})", "product fails"))


def _lucas_implication(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for P, Q in fixtures.QUADRATIC_PAIRS:
            if not _pp(frobenius_test(n, IntPoly.quadratic(P, Q))):
                continue
            rep.checked += 1
            if not classic.lucas_test(n, P, Q):
                rep.violations.append(Violation(n, f"P={P},Q={Q}", "not a Lucas probable prime"))


def _expected_signature(F) -> classic.SignatureKind | None:
    degs = [F_i.degree for F_i in F]
    if degs[0] == 3:
        return classic.SignatureKind.S
    if degs[2] == 3:
        return classic.SignatureKind.I
    if degs[0] == 1 and degs[1] == 2:
        return classic.SignatureKind.Q
    return None


def _perrin_signature(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for r, s in fixtures.PERRIN_PARAMS:
            params = classic.PerrinParams(r, s)
            report = frobenius_test(n, params.poly)
            if not _pp(report):
                continue
            want = _expected_signature(report.F)
            if want is None:
                continue
            rep.checked += 1
            root = None
            if want is classic.SignatureKind.Q:
                root = (-report.F[0].coeffs[0]) % n
            sig = classic.perrin_signature(n, r, s)
            try:
                got = classic.classify_signature(sig, r, s, n, root).kind
            except classic.MissingRootHint:
                got = None
            if got is not want:
                rep.violations.append(
                    Violation(n, f"r={r},s={s}", f"expected {want.value}, got {got and got.value}")
                )
            elif not classic.perrin_test(n, r, s):
                rep.violations.append(Violation(n, f"r={r},s={s}", "perrin test rejects"))


def _szekeres(rep: CrossvalReport) -> None:
    polys = [IntPoly.parse(t) for t in fixtures.SZEKERES_POLYS]
    for n in _odd(rep.lo, rep.hi):
        for f in polys:
            if not _pp(frobenius_test(n, f)):
                continue
            rep.checked += 1
            if not classic.szekeres_check(n, f):
                rep.violations.append(Violation(n, str(f), "fails the Szekeres check"))


def _euler_implication(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for a in fixtures.FERMAT_BASES:
            if math.gcd(n, 2 * a) != 1 or not _pp(strong_frobenius_test(n, _linear(a))):
                continue
            rep.checked += 1
            if not classic.euler_test(n, a):
                rep.violations.append(Violation(n, f"a={a}", "not an Euler probable prime"))


def _strong_lucas_implication(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for P, Q in fixtures.QUADRATIC_PAIRS:
            if jacobi(P * P - 4 * Q, n) != -1:
                continue
            if not _pp(strong_frobenius_test(n, IntPoly.quadratic(P, Q))):
                continue
            rep.checked += 1
            if not classic.strong_lucas_test(n, P, Q):
                rep.violations.append(Violation(n, f"P={P},Q={Q}", "not a strong Lucas probable prime"))
    n, (P, Q) = fixtures.DOCUMENTED_NON_EXAMPLES["strong-lucas"]
    frob = _pp(strong_frobenius_test(n, IntPoly.quadratic(P, Q)))
    lucas = classic.strong_lucas_test(n, P, Q)
    rep.notes.append(
        f"{n} with (P, Q) = ({P}, {Q}): strong frobenius {frob}, strong lucas {lucas}, "
        f"jacobi(disc, n) = {jacobi(P * P - 4 * Q, n)}; the Jacobi restriction is needed"
    )


def _extra_strong(rep: CrossvalReport) -> None:
    for n in _odd(rep.lo, rep.hi):
        for b in fixtures.EXTRA_STRONG_BASES:
            if not _pp(strong_frobenius_test(n, IntPoly.quadratic(b, 1))):
                continue
            rep.checked += 1
            if not classic.extra_strong_lucas_test(n, b):
                rep.violations.append(Violation(n, f"b={b}", "not an extra strong Lucas probable prime"))


def is_carmichael(n: int) -> bool:
    """Brute force over every coprime base; for small ``n`` only."""
    if n < 3 or n % 2 == 0:
        return False
    spf = smallest_factors(n, n)
    if not spf[0]:
        return False
    return all(pow(a, n - 1, n) == 1 for a in range(2, n) if math.gcd(a, n) == 1)


def split_polynomials(n: int, count: int = 5) -> list[IntPoly]:
    """The first ``count`` fixture split polynomials admissible for ``n``."""
    out = []
    for roots in fixtures.SPLIT_ROOT_SETS:
        f = IntPoly.from_roots(roots)
        if math.gcd(n, 2 * f(0) * discriminant(f)) == 1:
            out.append(f)
            if len(out) == count:
                break
    return out


def _carmichael_split(rep: CrossvalReport) -> None:
    for n in fixtures.CARMICHAELS:
        if not is_carmichael(n):
            rep.violations.append(Violation(n, "", "fixture is not a Carmichael number"))
            continue
        for f in split_polynomials(n):
            rep.checked += 1
            report = frobenius_test(n, f)
            if not _pp(report) or report.F[0].degree != f.degree:
                rep.violations.append(Violation(n, str(f), f"verdict {report.verdict.outcome.value}"))


def _field_polynomials(D: int) -> list[IntPoly]:
    # x^2 - c^2 D - ... : a few quadratics whose roots lie in Q(sqrt D)
    return [IntPoly((-D, 0, 1)), IntPoly((1 - D, -2, 1)), IntPoly((9 - 4 * D, -6, 1))]


def _carmichael_frobenius(rep: CrossvalReport) -> None:
    for n, D in fixtures.CARMICHAEL_FIELDS:
        primes = []
        m = n
        while m > 1:
            p = int(smallest_factors(m, m)[0]) or m
            primes.append(p)
            m //= p
        if not is_carmichael(n) or any(jacobi(D, p) != 1 for p in primes):
            rep.violations.append(Violation(n, f"D={D}", "fixture does not meet the hypotheses"))
            continue
        for f in _field_polynomials(D):
            if math.gcd(n, 2 * f(0) * discriminant(f)) != 1:
                continue
            rep.checked += 1
            report = frobenius_test(n, f)
            if not _pp(report) or report.F[0].degree != 2:
                rep.violations.append(Violation(n, str(f), f"verdict {report.verdict.outcome.value}"))


Suite = Callable[[CrossvalReport], None]

SUITES: dict[str, tuple[Suite, str]] = {
    "fermat-equivalence": (_fermat_linear, "Fermat base a <=> Frobenius wrt x - a"),
    "strong-equivalence": (_strong_linear, "strong base a <=> strong Frobenius wrt x - a"),
    "lehmer-equivalence": (_lehmer_lucas, "Lehmer recurrence <=> Lucas with (L, LQ)"),
    "quadratic-fast-path": (_quadratic_fast, "quadratic shortcut <=> full Frobenius test"),
    "fermat-base-f0": (_fermat_base_f0, "Frobenius pseudoprime => Fermat pseudoprime base f(0)"),
    "split-quadratic-bases": (_split_quadratic, "Frobenius wrt (x - a)(x - b) => Fermat bases a and b"),
    "product-closure": (_product_closure, "Frobenius wrt f and g => Frobenius wrt fg"),
    "lucas-implication": (_lucas_implication, "quadratic Frobenius => Lucas"),
    "perrin-signature": (_perrin_signature, "cubic Frobenius => predicted Perrin signature"),
    "szekeres-implication": (_szekeres, "Frobenius => Szekeres symmetric-function check"),
    "euler-implication": (_euler_implication, "strong Frobenius wrt x - a => Euler base a"),
    "strong-lucas-implication": (
        _strong_lucas_implication,
        "strong Frobenius with (disc | n) = -1 => strong Lucas",
    ),
    "extra-strong-implication": (_extra_strong, "strong Frobenius wrt x^2 - bx + 1 => extra strong Lucas"),
    "carmichael-split": (_carmichael_split, "Carmichael n, split f => Frobenius probable prime"),
    "carmichael-frobenius": (
        _carmichael_frobenius,
        "Carmichael n, primes split in Q(sqrt D) => Frobenius wrt quadratics over that field",
    ),
}


def cross_validate(lo: int, hi: int, suite: str) -> CrossvalReport:
    if suite not in SUITES:
        raise InvalidInput(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if hi > ORACLE_BOUND:
        raise OracleTooLarge(f"{hi} exceeds the oracle bound {ORACLE_BOUND}")
    if lo > hi:
        raise InvalidInput(f"empty range [{lo}, {hi}]")
    rep = CrossvalReport(suite, lo, hi)
    SUITES[suite][0](rep)
    return rep
