"""Integer and polynomial arithmetic over Z/nZ.

Polynomials are stored low degree first.  ``ModPoly`` is the public,
canonical value type; the ``_``-prefixed helpers work on plain lists and
are what the hot loops in the tests call.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class InvalidInput(ValueError):
    """Raised when an argument falls outside a test's admissible domain."""


class NonzeroRemainder(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class FactorFound(ArithmeticError):
    """A proper factor of the modulus turned up during a computation.

    Raised by :func:`gcmd` when the Euclidean algorithm meets a leading
    coefficient that is not invertible modulo ``n``.
    """

    def __init__(self, factor: int, n: int):
        if not (1 < factor < n and n % factor == 0):
            raise AssertionError(f"{factor} is not a proper factor of {n}")
        super().__init__(f"{factor} divides {n}")
        self.factor = factor
        self.n = n


class GcmdNotExist(FactorFound):
    """The ideal generated by two polynomials has no monic generator mod ``n``.

    ``factor`` is the proper divisor of ``n`` whose components disagreed.
    """


def check_modulus(n: int) -> int:
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise InvalidInput(f"modulus must be an odd integer >= 3, got {n!r}")
    return n


# -- list level helpers -----------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _reduce(c: Iterable[int], n: int) -> list[int]:
    return _trim([x % n for x in c])


def _add(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = (out[i] + y) % n
    return _trim(out)


def _sub(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % n
    return _trim(out)


def _mul(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _reduce(out, n)


def _rem_monic(a: list[int], f: Sequence[int], n: int) -> list[int]:
    """Remainder of ``a`` modulo the monic ``f``; consumes ``a``."""
    d = len(f) - 1
    if len(a) <= d:
        return _reduce(a, n)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % n
        if c:
            base = i - d
            for j in range(d):
                a[base + j] -= c * f[j]
    return _reduce(a[:d], n)


def _mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], n: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _rem_monic(out, f, n)


def _powmod(base: Sequence[int], e: int, f: Sequence[int], n: int) -> list[int]:
    if e < 0:
        raise ValueError("negative exponent")
    b = _rem_monic(list(base), f, n)
    if e == 0:
        return _rem_monic([1], f, n)
    result = list(b)
    for bit in bin(e)[3:]:
        result = _mulmod(result, result, f, n)
        if bit == "1":
            result = _mulmod(result, b, f, n)
    return result


def _compose(g: Sequence[int], h: Sequence[int], f: Sequence[int], n: int) -> list[int]:
    h = _rem_monic(list(h), f, n)
    acc: list[int] = []
    for c in reversed(g):
        acc = _mulmod(acc, h, f, n)
        acc = _add(acc, [c % n], n) if c % n else acc
    return acc


def _inverse(a: int, n: int) -> int:
    """Inverse of ``a`` mod ``n``; raises FactorFound on a proper common factor."""
    g = math.gcd(a, n)
    if g == 1:
        return pow(a, -1, n)
    if g == n:
        raise ZeroDivisionError(f"{a} is zero modulo {n}")
    raise FactorFound(g, n)


def _divmod(a: Sequence[int], b: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Polynomial long division; the leading coefficient of ``b`` must be a unit."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = _inverse(b[-1], n)
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], _reduce(r, n)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % n
        if c:
            q[i - db] = c
            base = i - db
            for j in range(db + 1):
                r[base + j] = (r[base + j] - c * b[j]) % n
    return _trim(q), _reduce(r[:db], n)


def _euclid(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    a, b = list(a), list(b)
    if not a and not b:
        raise ValueError("gcmd of two zero polynomials")
    while b:
        _, r = _divmod(a, b, n)
        a, b = b, r
    inv = _inverse(a[-1], n)
    return [c * inv % n for c in a]


def _coprime_split(n: int, d: int) -> tuple[int, int]:
    """``n = m1 * m2`` with ``m1`` built from the primes of ``d`` and ``gcd(m1, m2) = 1``."""
    m1, rest = 1, n
    h = math.gcd(rest, d)
    while h > 1:
        m1 *= h
        rest //= h
        h = math.gcd(rest, h)
    return m1, rest


def _gcmd(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    try:
        return _euclid(a, b, n)
    except GcmdNotExist:
        raise
    except FactorFound as e:
        d = e.factor
    m1, m2 = _coprime_split(n, d)
    if m2 == 1:
        # every prime of n divides d (e.g. a prime power): no way to split further
        raise GcmdNotExist(d, n)
    parts = []
    for m in (m1, m2):
        am, bm = _reduce(a, m), _reduce(b, m)
        if not am and not bm:
            raise GcmdNotExist(m, n)
        parts.append(_gcmd(am, bm, m))
    g1, g2 = parts
    if len(g1) != len(g2):
        raise GcmdNotExist(d, n)
    # CRT, coefficientwise
    t = pow(m1, -1, m2)
    return [(c1 + m1 * ((c2 - c1) * t % m2)) % n for c1, c2 in zip(g1, g2)]


# -- public value types -------------------------------------------------------

def _format_terms(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        body = "" if (mag == 1 and k > 0) else str(mag)
        if k >= 1:
            body += var if k == 1 else f"{var}^{k}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class ModPoly:
    """A polynomial over Z/nZ with coefficients in ``[0, n)`` and no leading zeros."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_reduce(self.coeffs, self.n)))

    @classmethod
    def x(cls, n: int) -> "ModPoly":
        return cls(n, (0, 1))

    @classmethod
    def constant(cls, c: int, n: int) -> "ModPoly":
        return cls(n, (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lead == 1

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._same_ring(other)
        return ModPoly(self.n, _add(self.coeffs, other.coeffs, self.n))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._same_ring(other)
        return ModPoly(self.n, _sub(self.coeffs, other.coeffs, self.n))

    def __neg__(self) -> "ModPoly":
        return ModPoly(self.n, [-c for c in self.coeffs])

    def __mul__(self, other: "ModPoly | int") -> "ModPoly":
        if isinstance(other, int):
            return ModPoly(self.n, [c * other for c in self.coeffs])
        self._same_ring(other)
        return ModPoly(self.n, _mul(self.coeffs, other.coeffs, self.n))

    __rmul__ = __mul__

    def __call__(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.n
        return acc

    def monic(self) -> "ModPoly":
        """Scale by the inverse of the leading coefficient."""
        inv = _inverse(self.lead, self.n)
        return ModPoly(self.n, [c * inv for c in self.coeffs])

    def lift(self) -> "IntPoly":
        return IntPoly(self.coeffs)

    def __str__(self) -> str:
        return _format_terms(self.coeffs)

    def _same_ring(self, other: "ModPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"moduli differ: {self.n} vs {other.n}")


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*x(?:\s*\^\s*(\d+))?)?")


@dataclass(frozen=True)
class IntPoly:
    """A polynomial with integer coefficients, low degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) for c in self.coeffs])))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def quadratic(cls, P: int, Q: int) -> "IntPoly":
        """x^2 - P x + Q."""
        return cls((Q, -P, 1))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse ``"x^4+12x+1"``, ``"(x-1341)(x-513)(x-545)"`` and the like."""
        text = text.strip()
        factors = re.findall(r"\(([^()]*)\)", text)
        rest = re.sub(r"\([^()]*\)", "", text).replace("*", "").strip()
        if factors and rest:
            raise ValueError(f"cannot mix bare terms and factors: {text!r}")
        if not factors:
            return cls._parse_sum(text)
        p = cls((1,))
        for body in factors:
            p = p * cls._parse_sum(body)
        return p

    @classmethod
    def _parse_sum(cls, text: str) -> "IntPoly":
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"bad polynomial term at {s[pos:]!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                k = int(m.group(4)) if m.group(4) else 1
            else:
                k = 0
            coeffs[k] = coeffs.get(k, 0) + sign * c
            pos = m.end()
        top = max(coeffs)
        return cls(tuple(coeffs.get(k, 0) for k in range(top + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPoly(out)

    def derivative(self) -> "IntPoly":
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def mod(self, n: int) -> ModPoly:
        return ModPoly(n, self.coeffs)

    def __str__(self) -> str:
        return _format_terms(self.coeffs)


# -- operations ---------------------------------------------------------------

def poly_normalize(coeffs: Sequence[int], n: int) -> ModPoly:
    check_modulus(n)
    return ModPoly(n, tuple(coeffs))


def _require_monic(f: ModPoly) -> None:
    if f.degree < 1 or not f.is_monic():
        raise ValueError(f"expected a monic polynomial of degree >= 1, got {f}")


def poly_mulmod(a: ModPoly, b: ModPoly, f: ModPoly) -> ModPoly:
    a._same_ring(b)
    a._same_ring(f)
    _require_monic(f)
    return ModPoly(f.n, _mulmod(a.coeffs, b.coeffs, f.coeffs, f.n))


def poly_powmod(base: ModPoly, e: int, f: ModPoly) -> ModPoly:
    """``base**e`` in (Z/nZ)[x]/(f), left-to-right square and multiply."""
    base._same_ring(f)
    _require_monic(f)
    return ModPoly(f.n, _powmod(base.coeffs, e, f.coeffs, f.n))


def poly_compose_mod(g: ModPoly, h: ModPoly, f: ModPoly) -> ModPoly:
    """``g(h(x))`` reduced modulo ``f``, by Horner's rule."""
    g._same_ring(h)
    g._same_ring(f)
    _require_monic(f)
    return ModPoly(f.n, _compose(g.coeffs, h.coeffs, f.coeffs, f.n))


def poly_exact_div(f: ModPoly, g: ModPoly) -> ModPoly:
    f._same_ring(g)
    if not g.is_monic():
        raise ValueError("divisor must be monic")
    q, r = _divmod(f.coeffs, g.coeffs, f.n)
    if r:
        raise NonzeroRemainder(f"{g} does not divide {f} modulo {f.n}")
    return ModPoly(f.n, q)


def poly_divmod(f: ModPoly, g: ModPoly) -> tuple[ModPoly, ModPoly]:
    f._same_ring(g)
    q, r = _divmod(f.coeffs, g.coeffs, f.n)
    return ModPoly(f.n, q), ModPoly(f.n, r)


def euclid_gcmd(g1: ModPoly, g2: ModPoly) -> ModPoly:
    """Plain Euclidean algorithm over Z/nZ.

    Returns the monic last nonzero remainder, or raises :class:`FactorFound`
    as soon as a remainder has a leading coefficient that is not a unit.
    """
    g1._same_ring(g2)
    return ModPoly(g1.n, _euclid(g1.coeffs, g2.coeffs, g1.n))


def gcmd(g1: ModPoly, g2: ModPoly) -> ModPoly:
    """Greatest common monic divisor: the monic generator of the ideal ``(g1, g2)``.

    Runs the Euclidean algorithm; when it stalls on a leading coefficient
    sharing a factor ``d`` with ``n``, the modulus is split into coprime
    parts along ``d``, each part is solved on its own and the results are
    glued back together by CRT.  Raises :class:`GcmdNotExist` (carrying a
    proper factor of ``n``) when the parts have different degrees or a
    part cannot be split further.
    """
    g1._same_ring(g2)
    return ModPoly(g1.n, _gcmd(g1.coeffs, g2.coeffs, g1.n))


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a | n) for odd positive n, binary algorithm."""
    if n <= 0 or n % 2 == 0:
        raise InvalidInput(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _bareiss_det(m: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    size = len(m)
    if size == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix of two integer polynomials given low degree first."""
    m, k = len(f) - 1, len(g) - 1
    size = m + k
    fr, gr = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(k):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - k - 1 - i))
    return rows


def resultant(f: IntPoly, g: IntPoly) -> int:
    if f.degree < 0 or g.degree < 0:
        return 0
    return _bareiss_det(sylvester_matrix(f.coeffs, g.coeffs))


def discriminant(f: IntPoly) -> int:
    """Discriminant as ``(-1)^(d(d-1)/2) Res(f, f') / lc(f)``."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(f, f.derivative())
    q, r = divmod(res, f.coeffs[-1])
    assert r == 0
    return -q if (d * (d - 1) // 2) % 2 else q
