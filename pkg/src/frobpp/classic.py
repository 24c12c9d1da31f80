"""Classical probable prime tests: Fermat, Euler, strong, the Lucas family,
Lehmer (by delegation to Lucas), Perrin signatures and the Szekeres check.

Test functions return ``True`` for "probable prime" and ``False`` for
"composite".  Inputs outside a test's domain raise :class:`InvalidInput`
(``NotCoprime`` when the base shares a factor with ``n``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .ring import (
    FactorFound,
    IntPoly,
    InvalidInput,
    _gcmd,
    _powmod,
    _rem_monic,
    _sub,
    discriminant,
    jacobi,
)


class NotCoprime(InvalidInput):
    def __init__(self, n: int, a: int):
        self.gcd = math.gcd(a, n)
        super().__init__(f"gcd({a}, {n}) = {self.gcd}")


class MissingRootHint(ValueError):
    pass


def _odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise InvalidInput(f"n must be an odd integer > 1, got {n}")


def _coprime_base(n: int, a: int) -> None:
    _odd(n)
    if math.gcd(a, n) != 1:
        raise NotCoprime(n, a)


def _split_twos(m: int) -> tuple[int, int]:
    r = (m & -m).bit_length() - 1
    return r, m >> r


# -- base-a tests -------------------------------------------------------------

def fermat_test(n: int, a: int) -> bool:
    _coprime_base(n, a)
    return pow(a, n - 1, n) == 1


def euler_test(n: int, a: int) -> bool:
    _coprime_base(n, a)
    return pow(a, (n - 1) // 2, n) == jacobi(a, n) % n


def strong_test(n: int, a: int) -> bool:
    _coprime_base(n, a)
    r, s = _split_twos(n - 1)
    y = pow(a, s, n)
    if y == 1 or y == n - 1:
        return True
    for _ in range(r - 1):
        y = y * y % n
        if y == n - 1:
            return True
    return False


# -- Lucas sequences ----------------------------------------------------------

class LucasParams(NamedTuple):
    P: int
    Q: int

    @property
    def delta(self) -> int:
        return self.P * self.P - 4 * self.Q


class LucasPair(NamedTuple):
    U: int
    V: int
    Qk: int


def _half(x: int, n: int) -> int:
    return (x if x % 2 == 0 else x + n) // 2 % n


def lucas_uv(k: int, P: int, Q: int, n: int) -> LucasPair:
    """``(U_k, V_k, Q^k)`` modulo odd ``n`` by the binary doubling ladder.

    Doubling uses ``U_2k = U_k V_k`` and ``V_2k = V_k^2 - 2 Q^k``; an odd bit
    steps ``k -> k + 1`` with ``U = (P U + V) / 2`` and ``V = (D U + P V) / 2``.
    """
    if n % 2 == 0 or n < 1:
        raise InvalidInput("the ladder halves, so n must be odd")
    if k < 0:
        raise ValueError("k must be non-negative")
    P %= n
    Q %= n
    D = (P * P - 4 * Q) % n
    U, V, Qk = 0, 2 % n, 1 % n
    for bit in bin(k)[2:]:
        U, V, Qk = U * V % n, (V * V - 2 * Qk) % n, Qk * Qk % n
        if bit == "1":
            U, V = _half(P * U + V, n), _half(D * U + P * V, n)
            Qk = Qk * Q % n
    return LucasPair(U, V, Qk)


def _lucas_admissible(n: int, P: int, Q: int) -> int:
    _odd(n)
    D = P * P - 4 * Q
    if math.gcd(n, 2 * Q * D) != 1:
        raise InvalidInput(f"gcd({n}, 2QD) != 1 for (P, Q) = ({P}, {Q})")
    return D


def lucas_test(n: int, P: int, Q: int) -> bool:
    D = _lucas_admissible(n, P, Q)
    return lucas_uv(n - jacobi(D, n), P, Q, n).U == 0


def strong_lucas_test(n: int, P: int, Q: int) -> bool:
    D = _lucas_admissible(n, P, Q)
    r, s = _split_twos(n - jacobi(D, n))
    U, V, Qk = lucas_uv(s, P, Q, n)
    if U == 0 or V == 0:
        return True
    for _ in range(r - 1):
        V, Qk = (V * V - 2 * Qk) % n, Qk * Qk % n
        if V == 0:
            return True
    return False


def extra_strong_lucas_test(n: int, b: int) -> bool:
    """Parameters ``(b, 1)``; the ``V`` chain stops one short at ``t < r - 1``."""
    _odd(n)
    D = b * b - 4
    if math.gcd(n, 2 * D) != 1:
        raise InvalidInput(f"gcd({n}, 2(b^2 - 4)) != 1 for b = {b}")
    r, s = _split_twos(n - jacobi(D, n))
    U, V, _ = lucas_uv(s, b, 1, n)
    if U == 0 and V in (2 % n, n - 2):
        return True
    for t in range(r - 1):
        if V == 0:
            return True
        V = (V * V - 2) % n
    return False


# -- Lehmer ---------------------------------------------------------------------

def _lehmer_admissible(n: int, L: int, Q: int) -> None:
    _odd(n)
    if math.gcd(n, 2 * L * (L - 4 * Q)) != 1:
        raise InvalidInput(f"gcd({n}, 2L(L - 4Q)) != 1 for (L, Q) = ({L}, {Q})")


def lehmer_test(n: int, L: int, Q: int) -> bool:
    """Lehmer test via its Lucas twin with parameters ``(L, L Q)``."""
    _lehmer_admissible(n, L, Q)
    return lucas_test(n, L, L * Q)


def strong_lehmer_test(n: int, L: int, Q: int) -> bool:
    _lehmer_admissible(n, L, Q)
    return strong_lucas_test(n, L, L * Q)


def lehmer_u(k: int, L: int, Q: int, n: int) -> int:
    """Lehmer ``U_k`` mod ``n`` by the raw recurrence, ``O(k)``.  Slow on purpose:
    it is the independent reference for :func:`lehmer_test`."""
    if k == 0:
        return 0
    prev, cur = 0, 1
    for j in range(2, k + 1):
        mult = L if j % 2 else 1
        prev, cur = cur, (mult * cur - Q * prev) % n
    return cur % n


def lehmer_test_direct(n: int, L: int, Q: int) -> bool:
    _lehmer_admissible(n, L, Q)
    eps = jacobi(L * (L - 4 * Q), n)
    return lehmer_u(n - eps, L, Q, n) == 0


# -- Perrin-type cubic recurrences --------------------------------------------

class PerrinParams(NamedTuple):
    r: int
    s: int

    @property
    def poly(self) -> IntPoly:
        return IntPoly((-1, self.s, -self.r, 1))

    @property
    def delta(self) -> int:
        return discriminant(self.poly)


Matrix = tuple[tuple[int, int, int], ...]


def _mat_mul(a: Matrix, b: Matrix, n: int) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) % n for j in range(3))
        for i in range(3)
    )


def _mat_pow(m: Matrix, e: int, n: int) -> Matrix:
    result: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for bit in bin(e)[2:]:
        result = _mat_mul(result, result, n)
        if bit == "1":
            result = _mat_mul(result, m, n)
    return result


def _adjugate(m: Matrix) -> Matrix:
    def minor(i, j):
        rows = [r for k, r in enumerate(m) if k != i]
        (a, b), (c, d) = [[x for l, x in enumerate(row) if l != j] for row in rows]
        return a * d - b * c

    return tuple(tuple((-1) ** (i + j) * minor(j, i) for j in range(3)) for i in range(3))


def _companion(r: int, s: int) -> Matrix:
    # (A_k, A_{k-1}, A_{k-2}) -> (A_{k+1}, A_k, A_{k-1})
    return ((r, -s, 1), (1, 0, 0), (0, 1, 0))


def _perrin_state(k: int, r: int, s: int, n: int) -> tuple[int, int, int]:
    """``(A_k, A_{k-1}, A_{k-2})`` mod ``n``; negative ``k`` through the adjugate."""
    m = _companion(r, s)
    if k < 0:
        # det = 1, so the adjugate is the exact inverse
        m = _adjugate(m)
        k = -k
    m = tuple(tuple(x % n for x in row) for row in m)
    p = _mat_pow(m, k, n)
    v0 = (3, s, s * s - 2 * r)
    return tuple(sum(p[i][j] * v0[j] for j in range(3)) % n for i in range(3))


def perrin_term(k: int, r: int, s: int, n: int) -> int:
    """``A_k(r, s)`` mod ``n``, where ``A_{-1} = s, A_0 = 3, A_1 = r``."""
    return _perrin_state(k, r, s, n)[0]


class PerrinSignature(NamedTuple):
    a_neg_n_minus_1: int
    a_neg_n: int
    a_neg_n_plus_1: int
    a_n_minus_1: int
    a_n: int
    a_n_plus_1: int


def perrin_signature(n: int, r: int, s: int) -> PerrinSignature:
    fwd = _perrin_state(n + 1, r, s, n)
    back = _perrin_state(-n + 1, r, s, n)
    return PerrinSignature(back[2], back[1], back[0], fwd[2], fwd[1], fwd[0])


class SignatureKind(str, Enum):
    S = "S"
    Q = "Q"
    I = "I"  # noqa: E741
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class SignatureClass:
    kind: SignatureKind
    a: Optional[int] = None
    D: Optional[int] = None
    D_prime: Optional[int] = None


def classify_signature(
    sig: PerrinSignature, r: int, s: int, n: int, root: Optional[int] = None
) -> SignatureClass:
    """Match a signature against the S, I and Q patterns, in that order.

    The Q pattern needs a root ``a`` of ``x^3 - r x^2 + s x - 1`` mod ``n``;
    if the signature has the Q shape and no usable root is supplied,
    :class:`MissingRootHint` is raised.
    """
    sig = PerrinSignature(*(x % n for x in sig))
    A = lambda k: perrin_term(k, r, s, n)  # noqa: E731
    if tuple(sig) == (A(-2), A(-1), A(0), A(0), A(1), A(2)):
        return SignatureClass(SignatureKind.S)

    rr, ss = r % n, s % n
    delta = PerrinParams(r, s).delta
    if sig[0] == rr and sig[1] == ss and sig[4] == rr and sig[5] == ss:
        Dp, D = sig[2], sig[3]
        if (Dp + D - (r * s - 3)) % n == 0 and ((Dp - D) ** 2 - delta) % n == 0:
            return SignatureClass(SignatureKind.I, D=D, D_prime=Dp)

    q_shape = sig[1] == ss and sig[4] == rr and sig[2] == sig[3]
    if not q_shape:
        return SignatureClass(SignatureKind.UNCLASSIFIED)
    f = PerrinParams(r, s).poly
    if root is None or f(root) % n or math.gcd(root, n) != 1:
        raise MissingRootHint("Q-shaped signature needs a root of f modulo n")
    a = root % n
    ainv = pow(a, -1, n)
    want_A = (ainv * ainv + 2 * a) % n
    want_B = (-r * a * a + (r * r - s) * a) % n
    want_C = (a * a + 2 * ainv) % n
    if (sig[0], sig[2], sig[5]) == (want_A, want_B, want_C):
        return SignatureClass(SignatureKind.Q, a=a)
    return SignatureClass(SignatureKind.UNCLASSIFIED)


def find_linear_root(n: int, f: IntPoly) -> Optional[int]:
    """A root of ``f`` mod ``n`` read off ``gcmd(x^n - x, f)`` when that is linear."""
    fc = list(f.mod(n).coeffs)
    xn = _powmod([0, 1], n, fc, n)
    try:
        g = _gcmd(_sub(xn, [0, 1], n), fc, n)
    except FactorFound:
        return None
    if len(g) != 2:
        return None
    return (-g[0]) % n


def perrin_test(n: int, r: int, s: int) -> bool:
    """Signature test: S or I signature when ``(disc | n) = 1``, Q when ``-1``."""
    _odd(n)
    delta = PerrinParams(r, s).delta
    if math.gcd(n, delta) != 1:
        raise InvalidInput(f"gcd({n}, disc) != 1 for (r, s) = ({r}, {s})")
    sig = perrin_signature(n, r, s)
    eps = jacobi(delta, n)
    if eps == 1:
        try:
            cls = classify_signature(sig, r, s, n)
        except MissingRootHint:
            return False
        return cls.kind in (SignatureKind.S, SignatureKind.I)
    root = find_linear_root(n, PerrinParams(r, s).poly)
    try:
        cls = classify_signature(sig, r, s, n, root)
    except MissingRootHint:
        return False
    return cls.kind is SignatureKind.Q


# -- Szekeres -------------------------------------------------------------------

def berkowitz(m: list[list[int]], n: int) -> list[int]:
    """Characteristic polynomial ``det(t I - m)`` mod ``n``, highest degree first.

    Division free, so it is safe over Z/nZ for composite ``n``.
    """
    size = len(m)
    poly = [1]
    for k in range(size):
        # leading (k+1)x(k+1) block: [[A, C], [R, a]]
        a = m[k][k]
        R = m[k][:k]
        C = [m[i][k] for i in range(k)]
        col = [1, -a % n]
        vec = C
        for _ in range(k):
            col.append(-sum(x * y for x, y in zip(R, vec)) % n)
            vec = [sum(m[i][j] * vec[j] for j in range(k)) % n for i in range(k)]
        poly = [
            sum(col[i - j] * poly[j] for j in range(min(i, k) + 1)) % n
            for i in range(k + 2)
        ]
    return poly


def szekeres_check(n: int, f: IntPoly) -> bool:
    """Do the roots raised to the ``n``-th power have the same symmetric functions?

    Computes the characteristic polynomial of multiplication by ``x^n`` on
    Z[x]/(n, f) and compares it with ``f``.
    """
    _odd(n)
    if not f.monic or f.degree < 1:
        raise InvalidInput("f must be monic")
    if math.gcd(n, f(0) * discriminant(f)) != 1:
        raise InvalidInput(f"gcd({n}, f(0) disc f) != 1")
    fc = list(f.mod(n).coeffs)
    d = f.degree
    y = _powmod([0, 1], n, fc, n)
    cols = []
    col = y
    for _ in range(d):
        cols.append(col + [0] * (d - len(col)))
        col = _rem_monic([0] + col, fc, n)
    m = [[cols[j][i] for j in range(d)] for i in range(d)]
    return berkowitz(m, n) == [c % n for c in reversed(f.coeffs)]
