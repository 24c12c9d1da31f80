import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from frobpp import classic
from frobpp.classic import (
    MissingRootHint,
    NotCoprime,
    PerrinParams,
    SignatureKind,
    berkowitz,
    classify_signature,
    euler_test,
    extra_strong_lucas_test,
    fermat_test,
    find_linear_root,
    lehmer_test,
    lehmer_test_direct,
    lucas_test,
    lucas_uv,
    perrin_signature,
    perrin_term,
    perrin_test,
    strong_lehmer_test,
    strong_lucas_test,
    strong_test,
    szekeres_check,
)
from frobpp.frobenius import frobenius_test
from frobpp.ring import IntPoly, InvalidInput, jacobi


def direct_lucas(k, P, Q, n):
    U, V = [0, 1], [2, P]
    for _ in range(2, k + 1):
        U.append(P * U[-1] - Q * U[-2])
        V.append(P * V[-1] - Q * V[-2])
    return U[k] % n, V[k] % n


def direct_perrin(lo, hi, r, s):
    """A_k for lo <= k <= hi from A_-1 = s, A_0 = 3, A_1 = r."""
    A = {-1: s, 0: 3, 1: r}
    for k in range(2, hi + 1):
        A[k] = r * A[k - 1] - s * A[k - 2] + A[k - 3]
    for k in range(-2, lo - 1, -1):
        A[k] = A[k + 3] - r * A[k + 2] + s * A[k + 1]
    return A


# -- base-a tests ---------------------------------------------------------------

def test_fermat_examples():
    assert pow(2, 90, 91) == 64 and not fermat_test(91, 2)
    assert fermat_test(341, 2)
    assert fermat_test(91, 1)


def test_fermat_needs_coprime_base():
    with pytest.raises(NotCoprime) as e:
        fermat_test(21, 3)
    assert e.value.gcd == 3


def test_fermat_needs_odd_n():
    with pytest.raises(InvalidInput):
        fermat_test(10, 3)


def test_euler_examples():
    assert pow(2, 170, 341) == 1 and jacobi(2, 341) == -1
    assert not euler_test(341, 2)
    # 561 slips past the Euler test base 2 but not the strong test
    assert pow(2, 280, 561) == 1 and jacobi(2, 561) == 1
    assert euler_test(561, 2) and not strong_test(561, 2)


def test_strong_examples():
    assert strong_test(2047, 2)
    assert pow(2, 85, 341) == 32
    assert not strong_test(341, 2)


def test_first_strong_pseudoprime_base_2():
    first = next(n for n in range(9, 3000, 2)
                 if not sympy.isprime(n) and strong_test(n, 2))
    assert first == 2047


@pytest.mark.parametrize("a", [2, 3, 5, 7])
def test_strong_implies_euler_implies_fermat(a):
    for n in range(3, 20000, 2):
        if math.gcd(n, a) != 1:
            continue
        if strong_test(n, a):
            assert euler_test(n, a), n
        if euler_test(n, a):
            assert fermat_test(n, a), n


@pytest.mark.parametrize("p", list(sympy.primerange(3, 400)))
def test_primes_pass_base_tests(p):
    for a in (2, 3, 5, 7, 10):
        if a % p:
            assert fermat_test(p, a) and euler_test(p, a) and strong_test(p, a)


# -- Lucas ----------------------------------------------------------------------

def test_lucas_uv_small():
    assert lucas_uv(10, 1, -1, 11).U == 0
    assert lucas_uv(0, 3, 5, 7) == (0, 2, 1)
    assert lucas_uv(1, 3, 5, 7) == (1, 3, 5)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 300), st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 500))
def test_ladder_matches_recurrence(k, P, Q, h):
    n = 2 * h + 1
    got = lucas_uv(k, P, Q, n)
    assert (got.U, got.V) == direct_lucas(k, P, Q, n)
    assert got.Qk == pow(Q, k, n)


def test_lucas_examples():
    assert lucas_test(323, 1, -1)
    assert not lucas_test(341, 1, -1)
    assert lucas_test(5777, 1, -1)


def test_first_fibonacci_lucas_pseudoprime():
    first = next(n for n in range(9, 400, 2)
                 if n % 5 and not sympy.isprime(n) and lucas_test(n, 1, -1))
    assert first == 323


def test_strong_lucas_examples():
    assert not strong_lucas_test(294409, 1185, 56437)
    assert strong_lucas_test(5777, 1, -1)


def test_lucas_inadmissible():
    with pytest.raises(InvalidInput):
        lucas_test(15, 1, -1)  # 5 | disc


def _extra_strong_direct(n, b):
    D = b * b - 4
    eps = jacobi(D, n)
    m = n - eps
    r = (m & -m).bit_length() - 1
    s = m >> r
    U, V = direct_lucas(s, b, 1, n)
    if U == 0 and V in (2 % n, n - 2):
        return True
    for _ in range(r - 1):
        if V == 0:
            return True
        V = (V * V - 2) % n
    return False


def test_extra_strong_matches_direct_oracle():
    assert extra_strong_lucas_test(341, 3) == _extra_strong_direct(341, 3)
    for n in range(3, 1500, 2):
        for b in (3, 4, 5, 7):
            if math.gcd(n, 2 * (b * b - 4)) == 1:
                assert extra_strong_lucas_test(n, b) == _extra_strong_direct(n, b), (n, b)


def test_extra_strong_implies_strong_lucas():
    for n in range(3, 20000, 2):
        for b in (3, 4, 5):
            if math.gcd(n, 2 * (b * b - 4)) == 1 and extra_strong_lucas_test(n, b):
                assert strong_lucas_test(n, b, 1), (n, b)


@pytest.mark.parametrize("p", list(sympy.primerange(3, 2000)))
def test_primes_pass_lucas_family(p):
    for P, Q in [(1, -1), (3, 1), (5, 3), (1185, 56437), (4, -1)]:
        if math.gcd(p, 2 * Q * (P * P - 4 * Q)) == 1:
            assert lucas_test(p, P, Q) and strong_lucas_test(p, P, Q)
    for b in (3, 4, 5, 7):
        if math.gcd(p, 2 * (b * b - 4)) == 1:
            assert extra_strong_lucas_test(p, b)


# -- Lehmer ---------------------------------------------------------------------

def test_lehmer_fibonacci_323():
    assert lehmer_test(323, 1, -1)
    assert lehmer_test_direct(323, 1, -1)


def test_lehmer_delegation_matches_recurrence():
    for n in range(3, 3000, 2):
        if math.gcd(n, 2 * 3 * (3 - 4)) == 1:
            assert lehmer_test(n, 3, 1) == lehmer_test_direct(n, 3, 1), n


def test_strong_lehmer_delegates():
    assert strong_lehmer_test(294409, 5, 3) == strong_lucas_test(294409, 5, 15)


def test_lehmer_inadmissible():
    with pytest.raises(InvalidInput):
        lehmer_test(15, 5, 1)


@pytest.mark.parametrize("p", list(sympy.primerange(3, 500)))
def test_primes_pass_lehmer(p):
    for L, Q in [(1, -1), (3, 1), (5, 3), (7, -3)]:
        if math.gcd(p, 2 * L * Q * (L - 4 * Q)) == 1:
            assert lehmer_test(p, L, Q) and strong_lehmer_test(p, L, Q)
            assert lehmer_test_direct(p, L, Q)


# -- Perrin ---------------------------------------------------------------------

def test_perrin_terms():
    assert perrin_term(13, 0, -1, 13) == 0
    assert perrin_term(0, 0, -1, 7) == 3
    assert perrin_term(-1, 2, 5, 101) == 5
    assert perrin_term(1, 2, 5, 101) == 2


@pytest.mark.parametrize("r,s", [(0, -1), (1, 0), (2, -1), (-1, -2), (3, 4)])
def test_perrin_terms_match_recurrence_both_ways(r, s):
    A = direct_perrin(-40, 40, r, s)
    for k in range(-40, 41):
        assert perrin_term(k, r, s, 1009) == A[k] % 1009, k


def test_perrin_signature_7():
    A = direct_perrin(-8, 8, 0, -1)
    sig = perrin_signature(7, 0, -1)
    assert tuple(sig) == tuple(A[k] % 7 for k in (-8, -7, -6, 6, 7, 8))
    assert tuple(sig)[3:] == (5, 0, 3)


def test_perrin_signature_3():
    A = direct_perrin(-4, 4, 0, -1)
    assert tuple(perrin_signature(3, 0, -1)) == tuple(A[k] % 3 for k in (-4, -3, -2, 2, 3, 4))


def test_perrin_composite_25():
    assert not perrin_test(25, 0, -1)


@pytest.mark.parametrize("r,s", [(0, -1), (1, 0), (1, -1), (2, -1)])
def test_perrin_primes(r, s):
    delta = PerrinParams(r, s).delta
    for p in sympy.primerange(3, 3000):
        if delta % p:
            assert perrin_test(p, r, s), p


def test_classify_by_degree_pattern():
    seen = set()
    for r, s in [(0, -1), (1, 0), (2, -1)]:
        f = PerrinParams(r, s).poly
        for p in sympy.primerange(5, 600):
            if PerrinParams(r, s).delta % p == 0:
                continue
            rep = frobenius_test(p, f)
            degs = rep.degrees
            sig = perrin_signature(p, r, s)
            if degs[0] == 3:
                want, root = SignatureKind.S, None
            elif degs[2] == 3:
                want, root = SignatureKind.I, None
            else:
                want, root = SignatureKind.Q, (-rep.F[0].coeffs[0]) % p
            assert classify_signature(sig, r, s, p, root).kind is want, (p, r, s)
            seen.add(want)
    assert seen == {SignatureKind.S, SignatureKind.I, SignatureKind.Q}


def test_q_signature_needs_root():
    r, s = 0, -1
    f = PerrinParams(r, s).poly
    p = next(p for p in sympy.primerange(5, 200)
             if frobenius_test(p, f).degrees[:2] == [1, 2])
    with pytest.raises(MissingRootHint):
        classify_signature(perrin_signature(p, r, s), r, s, p)
    root = find_linear_root(p, f)
    assert f(root) % p == 0


# -- Szekeres -------------------------------------------------------------------

@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.lists(st.integers(-20, 20), min_size=25, max_size=25),
       st.sampled_from([7, 15, 89, 323, 1001]))
def test_berkowitz_matches_sympy(size, entries, n):
    m = [entries[i * size:(i + 1) * size] for i in range(size)]
    want = sympy.Matrix(m).charpoly(sympy.Symbol("t")).all_coeffs()
    assert berkowitz(m, n) == [int(c) % n for c in want]


def test_szekeres_323_is_false():
    # x^323 = x - 1 on (323, x^2 - x - 1): trace -1, norm -1, so T^2 + T - 1
    assert not szekeres_check(323, IntPoly.quadratic(1, -1))


@pytest.mark.parametrize("text", ["x-2", "x^2-x-1", "x^2+5x+5", "x^3-x-1", "x^4+12x+1",
                                  "(x-1341)(x-513)(x-545)"])
def test_szekeres_primes(text):
    f = IntPoly.parse(text)
    from frobpp.ring import discriminant
    bad = f(0) * discriminant(f)
    for p in sympy.primerange(3, 10**4):
        if bad % p:
            assert szekeres_check(p, f), p
