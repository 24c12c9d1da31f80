"""Frobenius and strong Frobenius probable prime tests.

All computation happens in (Z/nZ)[x].  Every run produces a
:class:`FrobeniusReport` holding the distinct-degree pieces ``F_i``, the
Jacobi statistic and the verdict, so that a result can be audited or fed
into the implication checks in :mod:`frobpp.harness`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .ring import (
    FactorFound,
    IntPoly,
    InvalidInput,
    ModPoly,
    _compose,
    _divmod,
    _gcmd,
    _mul,
    _powmod,
    _rem_monic,
    _sub,
    discriminant,
    jacobi,
)


class Step(str, Enum):
    PRECHECK = "precheck"
    FACTORIZATION = "factorization"
    FROBENIUS = "frobenius"
    JACOBI = "jacobi"
    SQUARE_ROOT = "square_root"


class Outcome(str, Enum):
    PROBABLE_PRIME = "probable_prime"
    COMPOSITE = "composite"
    INVALID_INPUT = "invalid_input"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    step: Optional[Step] = None
    factor: Optional[int] = None
    # gcd(n, 2 f(0) disc f) for rejected inputs
    g: Optional[int] = None

    @property
    def probable_prime(self) -> bool:
        return self.outcome is Outcome.PROBABLE_PRIME

    @property
    def composite(self) -> bool:
        return self.outcome is Outcome.COMPOSITE


PROBABLE_PRIME = Verdict(Outcome.PROBABLE_PRIME)


def _composite(step: Step, n: int, factor: Optional[int] = None) -> Verdict:
    if factor is not None:
        assert 1 < factor < n and n % factor == 0
    return Verdict(Outcome.COMPOSITE, step, factor)


@dataclass(frozen=True)
class FrobeniusReport:
    n: int
    f: IntPoly
    delta: int
    verdict: Verdict
    # F[i - 1] is the piece of degree-i factors
    F: tuple[ModPoly, ...] = ()
    # f_0, f_1, ... as far as the factorization step got
    chain: tuple[ModPoly, ...] = ()
    xn: Optional[ModPoly] = None
    frobenius_images: tuple[tuple[int, ModPoly], ...] = ()
    S: Optional[int] = None
    jacobi: Optional[int] = None
    sqrt_pieces: dict[int, tuple[ModPoly, ...]] = field(default_factory=dict)
    steps: tuple[tuple[Step, bool], ...] = ()

    @property
    def degrees(self) -> list[int]:
        return [F_i.degree for F_i in self.F]

    @property
    def failed_step(self) -> Optional[Step]:
        return self.verdict.step if self.verdict.composite else None

    def to_record(self) -> dict:
        """Plain-data view with a fixed key order; big integers as decimal strings."""
        v = self.verdict
        return {
            "n": str(self.n),
            "f": [str(c) for c in self.f.coeffs],
            "delta": str(self.delta),
            "steps": {s.value: ok for s, ok in self.steps},
            "degrees": self.degrees,
            "S": self.S,
            "jacobi": self.jacobi,
            "verdict": v.outcome.value,
            "failed_step": v.step.value if v.step else None,
            "factor": str(v.factor) if v.factor is not None else None,
        }


def precheck(n: int, f: IntPoly, delta: Optional[int] = None) -> Optional[Verdict]:
    """Admissibility of ``(n, f)``; ``None`` means the test may proceed."""
    if not f.monic or f.degree < 1:
        raise InvalidInput(f"f must be monic of degree >= 1, got {f}")
    if n <= 1 or n % 2 == 0:
        return Verdict(Outcome.INVALID_INPUT, Step.PRECHECK)
    if delta is None:
        delta = discriminant(f)
    g = math.gcd(n, 2 * f(0) * delta)
    if g == 1:
        return None
    if g < n:
        return _composite(Step.PRECHECK, n, g)
    return Verdict(Outcome.INVALID_INPUT, Step.PRECHECK, g=g)


@dataclass(frozen=True)
class FactorizationResult:
    passed: bool
    F: tuple[ModPoly, ...]
    chain: tuple[ModPoly, ...]
    xn: Optional[ModPoly]
    factor: Optional[int] = None


def factorization_step(n: int, f: IntPoly) -> FactorizationResult:
    """Distinct-degree splitting ``F_i = gcmd(x^(n^i) - x, f_{i-1})``.

    ``x^(n^i)`` is never formed from scratch: the residue for ``i - 1`` is
    reduced modulo ``f_{i-1}`` (which divides ``f_{i-2}``) and raised to
    the ``n``-th power.
    """
    d = f.degree
    cur = list(f.mod(n).coeffs)
    chain = [ModPoly(n, cur)]
    pieces: list[ModPoly] = []
    r = [0, 1]
    xn = None
    for i in range(1, d + 1):
        if len(cur) == 1:
            pieces.append(ModPoly(n, (1,)))
            chain.append(chain[-1])
            continue
        r = _powmod(_rem_monic(list(r), cur, n), n, cur, n)
        if i == 1:
            xn = ModPoly(n, r)
        try:
            F_i = _gcmd(_sub(r, [0, 1], n), cur, n)
        except FactorFound as e:
            return FactorizationResult(False, tuple(pieces), tuple(chain), xn, e.factor)
        q, rem = _divmod(cur, F_i, n)
        assert not rem, "gcmd does not divide its argument"
        pieces.append(ModPoly(n, F_i))
        cur = q
        chain.append(ModPoly(n, cur))
    return FactorizationResult(cur == [1], tuple(pieces), tuple(chain), xn)


def frobenius_step(
    n: int, F: Sequence[ModPoly], xn: Optional[ModPoly] = None
) -> tuple[bool, tuple[tuple[int, ModPoly], ...]]:
    """Check that ``F_i(x^n)`` vanishes modulo ``F_i`` for every ``i >= 2``.

    ``xn`` is ``x^n`` modulo a multiple of every ``F_i`` (normally ``f``);
    without it the power is recomputed per piece.
    """
    images = []
    for i, F_i in enumerate(F, start=1):
        if i < 2 or F_i.degree < 1:
            continue
        Fc = F_i.coeffs
        if xn is not None:
            b = _rem_monic(list(xn.coeffs), Fc, n)
        else:
            b = _powmod([0, 1], n, Fc, n)
        image = ModPoly(n, _compose(Fc, b, Fc, n))
        images.append((i, image))
        if not image.is_zero():
            return False, tuple(images)
    return True, tuple(images)


def jacobi_statistic(F: Sequence[ModPoly]) -> int:
    return sum(F_i.degree // i for i, F_i in enumerate(F, start=1) if i % 2 == 0)


def jacobi_step(F: Sequence[ModPoly], delta: int, n: int) -> tuple[int, int, bool]:
    """Return ``(S, jacobi(delta, n), passed)``."""
    S = jacobi_statistic(F)
    j = jacobi(delta, n)
    return S, j, (-1) ** S == j


def _two_adic(m: int) -> tuple[int, int]:
    """``m = 2**r * s`` with ``s`` odd."""
    r = (m & -m).bit_length() - 1
    return r, m >> r


def sqrt_step(
    n: int, F: Sequence[ModPoly]
) -> tuple[bool, dict[int, tuple[ModPoly, ...]], Optional[int]]:
    """Split each ``F_i`` along ``x^(n^i - 1) - 1 = (x^s - 1) prod_j (x^(2^(j-1) s) + 1)``.

    Returns ``(passed, pieces, factor)``; ``pieces[i]`` lists
    ``F_{i,0}, ..., F_{i,r}`` and ``factor`` is set when a gcmd exposed a
    divisor of ``n``.
    """
    pieces: dict[int, tuple[ModPoly, ...]] = {}
    for i, F_i in enumerate(F, start=1):
        if F_i.degree < 1:
            continue
        Fc = list(F_i.coeffs)
        r, s = _two_adic(n**i - 1)
        u = _powmod([0, 1], s, Fc, n)
        parts = []
        try:
            parts.append(_gcmd(Fc, _sub(u, [1], n), n))
            for _ in range(r):
                parts.append(_gcmd(Fc, _sub(u, [n - 1], n), n))
                u = _rem_monic(_mul(u, u, n), Fc, n)
        except FactorFound as e:
            pieces[i] = tuple(ModPoly(n, p) for p in parts)
            return False, pieces, e.factor
        pieces[i] = tuple(ModPoly(n, p) for p in parts)
        prod = [1]
        for p in parts:
            prod = _mul(prod, p, n)
        if prod != Fc or any((len(p) - 1) % i for p in parts):
            return False, pieces, None
    return True, pieces, None


def _run(n: int, f: IntPoly, strong: bool) -> FrobeniusReport:
    delta = discriminant(f)
    rejected = precheck(n, f, delta)
    if rejected is not None:
        return FrobeniusReport(n, f, delta, rejected, steps=((Step.PRECHECK, False),))
    steps = [(Step.PRECHECK, True)]

    fac = factorization_step(n, f)
    steps.append((Step.FACTORIZATION, fac.passed))
    common = dict(F=fac.F, chain=fac.chain, xn=fac.xn)
    if not fac.passed:
        verdict = _composite(Step.FACTORIZATION, n, fac.factor)
        return FrobeniusReport(n, f, delta, verdict, steps=tuple(steps), **common)

    ok, images = frobenius_step(n, fac.F, fac.xn)
    steps.append((Step.FROBENIUS, ok))
    common["frobenius_images"] = images
    if not ok:
        verdict = _composite(Step.FROBENIUS, n)
        return FrobeniusReport(n, f, delta, verdict, steps=tuple(steps), **common)

    S, j, ok = jacobi_step(fac.F, delta, n)
    steps.append((Step.JACOBI, ok))
    common.update(S=S, jacobi=j)
    if not ok:
        verdict = _composite(Step.JACOBI, n)
        return FrobeniusReport(n, f, delta, verdict, steps=tuple(steps), **common)

    if strong:
        ok, pieces, factor = sqrt_step(n, fac.F)
        steps.append((Step.SQUARE_ROOT, ok))
        common["sqrt_pieces"] = pieces
        if not ok:
            verdict = _composite(Step.SQUARE_ROOT, n, factor)
            return FrobeniusReport(n, f, delta, verdict, steps=tuple(steps), **common)

    return FrobeniusReport(n, f, delta, PROBABLE_PRIME, steps=tuple(steps), **common)


def frobenius_test(n: int, f: IntPoly) -> FrobeniusReport:
    """Frobenius probable prime test of ``n`` with respect to the monic ``f``."""
    return _run(n, f, strong=False)


def strong_frobenius_test(n: int, f: IntPoly) -> FrobeniusReport:
    """Frobenius test followed by the square root step."""
    return _run(n, f, strong=True)


def quadratic_fast_test(n: int, P: int, Q: int) -> Verdict:
    """Quadratic shortcut needing only ``x^n`` modulo ``x^2 - P x + Q``.

    Probable prime iff ``x^n = x`` when ``(disc | n) = 1`` or
    ``x^n = P - x`` when ``(disc | n) = -1``.  A mismatch is reported
    against the Frobenius step.
    """
    f = IntPoly.quadratic(P, Q)
    delta = P * P - 4 * Q
    rejected = precheck(n, f, delta)
    if rejected is not None:
        return rejected
    eps = jacobi(delta, n)
    y = _powmod([0, 1], n, list(f.mod(n).coeffs), n)
    target = [0, 1] if eps == 1 else [P % n, n - 1]
    if y == list(ModPoly(n, target).coeffs):
        return PROBABLE_PRIME
    return _composite(Step.FROBENIUS, n)
