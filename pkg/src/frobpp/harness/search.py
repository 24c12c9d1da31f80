"""Pseudoprime range search, the x^2+5x+5 challenge scan and record emission."""

from __future__ import annotations

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterable, Iterator, Optional

from .. import classic
from ..frobenius import (
    Outcome,
    frobenius_test,
    quadratic_fast_test,
    strong_frobenius_test,
)
from ..ring import IntPoly, InvalidInput
from .oracle import ORACLE_BOUND, OracleTooLarge, is_composite_oracle, smallest_factors


class Family(str, Enum):
    FERMAT = "fermat"
    EULER = "euler"
    STRONG = "strong"
    LUCAS = "lucas"
    STRONG_LUCAS = "strong-lucas"
    EXTRA_STRONG_LUCAS = "extra-strong-lucas"
    LEHMER = "lehmer"
    STRONG_LEHMER = "strong-lehmer"
    PERRIN = "perrin"
    SZEKERES = "szekeres"
    FROBENIUS = "frobenius"
    STRONG_FROBENIUS = "strong-frobenius"
    QUADRATIC_FAST = "quadratic-fast"


POLY_FAMILIES = {Family.SZEKERES, Family.FROBENIUS, Family.STRONG_FROBENIUS}

ARITY = {
    Family.FERMAT: 1,
    Family.EULER: 1,
    Family.STRONG: 1,
    Family.LUCAS: 2,
    Family.STRONG_LUCAS: 2,
    Family.EXTRA_STRONG_LUCAS: 1,
    Family.LEHMER: 2,
    Family.STRONG_LEHMER: 2,
    Family.PERRIN: 2,
    Family.QUADRATIC_FAST: 2,
}

_INT_TESTS = {
    Family.FERMAT: classic.fermat_test,
    Family.EULER: classic.euler_test,
    Family.STRONG: classic.strong_test,
    Family.LUCAS: classic.lucas_test,
    Family.STRONG_LUCAS: classic.strong_lucas_test,
    Family.EXTRA_STRONG_LUCAS: classic.extra_strong_lucas_test,
    Family.LEHMER: classic.lehmer_test,
    Family.STRONG_LEHMER: classic.strong_lehmer_test,
    Family.PERRIN: classic.perrin_test,
}


@dataclass(frozen=True)
class Evaluation:
    n: int
    outcome: Outcome
    failed_step: Optional[str] = None
    factor: Optional[int] = None
    degrees: Optional[list] = None
    S: Optional[int] = None
    jacobi: Optional[int] = None

    @property
    def probable_prime(self) -> bool:
        return self.outcome is Outcome.PROBABLE_PRIME


@dataclass(frozen=True)
class TestSpec:
    """Which test to run and with what parameters.

    Polynomial families keep the coefficients of ``f`` low degree first in
    ``params``; all other families keep their integer parameters in order.
    """

    __test__ = False

    family: Family
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.family in POLY_FAMILIES:
            f = IntPoly(self.params)
            if not f.monic or f.degree < 1:
                raise InvalidInput(f"{self.family.value} needs a monic polynomial")
        elif len(self.params) != ARITY[self.family]:
            raise InvalidInput(
                f"{self.family.value} takes {ARITY[self.family]} parameters, "
                f"got {len(self.params)}"
            )

    @classmethod
    def parse(cls, family: str, params: str) -> "TestSpec":
        fam = Family(family)
        if fam in POLY_FAMILIES:
            return cls(fam, IntPoly.parse(params).coeffs)
        return cls(fam, tuple(int(p) for p in params.replace(" ", "").split(",") if p))

    @classmethod
    def poly(cls, family: Family, f: "IntPoly | str") -> "TestSpec":
        if isinstance(f, str):
            f = IntPoly.parse(f)
        return cls(family, f.coeffs)

    @property
    def polynomial(self) -> IntPoly:
        return IntPoly(self.params)

    @property
    def params_text(self) -> str:
        if self.family in POLY_FAMILIES:
            return str(self.polynomial)
        return ",".join(str(p) for p in self.params)

    def evaluate(self, n: int) -> Evaluation:
        fam = self.family
        if fam in (Family.FROBENIUS, Family.STRONG_FROBENIUS):
            test = frobenius_test if fam is Family.FROBENIUS else strong_frobenius_test
            rep = test(n, self.polynomial)
            v = rep.verdict
            return Evaluation(
                n, v.outcome, v.step.value if v.step and v.composite else None,
                v.factor, rep.degrees, rep.S, rep.jacobi,
            )
        if fam is Family.QUADRATIC_FAST:
            v = quadratic_fast_test(n, *self.params)
            return Evaluation(n, v.outcome, v.step.value if v.composite else None, v.factor)
        try:
            if fam is Family.SZEKERES:
                ok = classic.szekeres_check(n, self.polynomial)
            else:
                ok = _INT_TESTS[fam](n, *self.params)
        except InvalidInput:
            return Evaluation(n, Outcome.INVALID_INPUT)
        return Evaluation(n, Outcome.PROBABLE_PRIME if ok else Outcome.COMPOSITE)


@dataclass(frozen=True)
class Finding:
    n: int
    spec: TestSpec
    evaluation: Evaluation
    # smallest prime factor from the oracle: the compositeness certificate
    factor: int
    timestamp: float = field(default_factory=time.time, compare=False)

    def to_record(self) -> dict:
        ev = self.evaluation
        return {
            "n": str(self.n),
            "family": self.spec.family.value,
            "params": self.spec.params_text,
            "verdict": ev.outcome.value,
            "failed_step": ev.failed_step,
            "degrees": ev.degrees,
            "S": ev.S,
            "jacobi": ev.jacobi,
            "factor": str(self.factor),
        }


@dataclass(frozen=True)
class RangeJob:
    lo: int
    hi: int
    spec: TestSpec
    filter_mod: Optional[int] = None
    filter_residues: tuple[int, ...] = ()

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidInput(f"empty range [{self.lo}, {self.hi}]")
        if self.filter_mod is not None:
            if self.filter_mod < 1:
                raise InvalidInput("filter modulus must be positive")
            residues = tuple(sorted({r % self.filter_mod for r in self.filter_residues}))
            object.__setattr__(self, "filter_residues", residues)

    def admits(self, n: int) -> bool:
        return self.filter_mod is None or n % self.filter_mod in self.filter_residues

    def split(self, parts: int) -> list["RangeJob"]:
        """Contiguous sub-jobs covering the same range."""
        parts = max(1, min(parts, self.hi - self.lo + 1))
        width = -(-(self.hi - self.lo + 1) // parts)
        jobs = []
        for k in range(parts):
            lo = self.lo + k * width
            hi = min(self.hi, lo + width - 1)
            if lo <= hi:
                jobs.append(RangeJob(lo, hi, self.spec, self.filter_mod, self.filter_residues))
        return jobs


CHALLENGE_POLY = IntPoly((5, 5, 1))  # x^2 + 5x + 5
CHALLENGE_FILTER = (5, (2, 3))


def _scan(job: RangeJob) -> list[Finding]:
    lo = max(job.lo, 3)
    if lo > job.hi:
        return []
    spf = smallest_factors(lo, job.hi)
    found = []
    start = lo | 1
    for n in range(start, job.hi + 1, 2):
        factor = int(spf[n - lo])
        if not factor or not job.admits(n):
            continue
        ev = job.spec.evaluate(n)
        if ev.probable_prime:
            found.append(Finding(n, job.spec, ev, factor))
    return found


def search_pseudoprimes(job: RangeJob, workers: int = 1) -> Iterator[Finding]:
    """Every odd composite in the job's range that the test declares probable prime.

    Results come out in ascending order whatever the number of workers.
    """
    if job.hi > ORACLE_BOUND:
        raise OracleTooLarge(f"{job.hi} exceeds the oracle bound {ORACLE_BOUND}")
    if workers <= 1:
        yield from _scan(job)
        return
    chunks = job.split(workers * 4)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for batch in pool.map(_scan, chunks):
            yield from batch


def challenge_scan(limit: int, use_filter: bool = True, workers: int = 1) -> Iterator[Finding]:
    """Frobenius pseudoprimes for x^2 + 5x + 5 that are 2 or 3 mod 5, up to ``limit``."""
    spec = TestSpec(Family.FROBENIUS, CHALLENGE_POLY.coeffs)
    if use_filter:
        job = RangeJob(3, max(limit, 3), spec, *CHALLENGE_FILTER)
    else:
        job = RangeJob(3, max(limit, 3), spec)
    return search_pseudoprimes(job, workers)


def verify_finding(finding: Finding) -> None:
    """Re-run the oracle and the test; raise if the finding does not hold up."""
    oracle = is_composite_oracle(finding.n)
    if not oracle.composite or finding.n % finding.factor or not 1 < finding.factor < finding.n:
        raise AssertionError(f"{finding.n} is not certified composite")
    if not finding.spec.evaluate(finding.n).probable_prime:
        raise AssertionError(f"{finding.n} no longer passes {finding.spec.family.value}")


def emit_finding(finding: Finding, sink: IO[str], verify: bool = True) -> None:
    """Append one JSON line describing ``finding`` to ``sink``."""
    if verify:
        verify_finding(finding)
    sink.write(json.dumps(finding.to_record()) + "\n")


CSV_FIELDS = ["n", "family", "params", "verdict", "degrees", "S", "jacobi", "factor"]


def write_csv(findings: Iterable[Finding], sink: IO[str]) -> int:
    writer = csv.DictWriter(sink, fieldnames=CSV_FIELDS, extrasaction="ignore")
    writer.writeheader()
    count = 0
    for f in findings:
        row = f.to_record()
        row["degrees"] = " ".join(map(str, row["degrees"] or []))
        writer.writerow(row)
        count += 1
    return count
