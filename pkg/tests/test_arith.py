"""Tests for exact factored-integer arithmetic.

The reference oracles here are deliberately naive: plain trial division,
plain power loops, and plain integer gcds on fully expanded values.
"""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coprimax.arith import (
    ONE,
    FactoredInt,
    PrimePower,
    factor_q_power_pm1,
    factorize,
    fi_divides,
    fi_gcd,
    fi_mul,
    gcd_q_powers,
    is_prime,
    mult_order,
    p_part,
    parse_prime_power,
)


def naive_factor(v):
    """Trial-division oracle."""
    out = {}
    d = 2
    while d * d <= v:
        while v % d == 0:
            out[d] = out.get(d, 0) + 1
            v //= d
        d += 1
    if v > 1:
        out[v] = out.get(v, 0) + 1
    return out


# ---------------------------------------------------------------------------
# factorize


def test_factorize_one_is_empty_product():
    assert factorize(1) == ONE
    assert factorize(1).value() == 1
    assert factorize(1).factored_str() == "1"


def test_factorize_examples():
    assert factorize(660).factors == {2: 2, 3: 1, 5: 1, 11: 1}
    assert factorize(253).factors == {11: 1, 23: 1}


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_matches_naive_oracle_exhaustive_small():
    for v in range(1, 20000):
        assert factorize(v).factors == naive_factor(v), v


def test_factorize_roundtrip_sampled_to_1e6():
    rng = random.Random(20230517)
    values = [rng.randrange(1, 10**6) for _ in range(4000)]
    values += [2**20, 3**12, 999983, 999966000289, 2 * 3 * 5 * 7 * 11 * 13 * 17]
    for v in values:
        f = factorize(v)
        assert f.value() == v
        assert factorize(f.value()) == f


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=300, deadline=None)
def test_factorize_roundtrip_property(v):
    assert factorize(v).value() == v


def test_factorize_large_semiprime():
    p, q = 1000003, 1000033
    assert factorize(p * q).factors == {p: 1, q: 1}


def test_factorize_perfect_power_of_big_prime():
    p = 1000000007
    assert factorize(p**3).factors == {p: 3}


def test_keys_strictly_increasing_and_prime():
    f = factorize(2**3 * 97 * 11)
    primes = f.primes()
    assert list(primes) == sorted(primes)
    assert all(is_prime(p) for p in primes)


def test_constructor_validates():
    with pytest.raises(ValueError):
        FactoredInt({4: 1})
    with pytest.raises(ValueError):
        FactoredInt({3: 0})


def test_roundtrip_below_2_63():
    for v in [2**62 + 2**31, 2**63 - 1, 4611686018427387904]:
        assert factorize(v).value() == v


# ---------------------------------------------------------------------------
# multiplicative structure


def test_gcd_examples():
    assert fi_gcd(factorize(253), factorize(64512)) == ONE
    assert math.gcd(253, 64512) == 1
    x = factorize(123456)
    assert fi_gcd(x, x) == x


def test_mul_example():
    assert fi_mul(factorize(2), factorize(6)).factors == {2: 2, 3: 1}


def test_divides():
    assert fi_divides(factorize(12), factorize(60))
    assert not fi_divides(factorize(8), factorize(60))


def test_div_exact():
    a, b = factorize(5760), factorize(96)
    assert a.div_exact(b).value() == 60
    with pytest.raises(ValueError):
        b.div_exact(a)


@given(st.integers(min_value=1, max_value=2**40), st.integers(min_value=1, max_value=2**40))
@settings(max_examples=200, deadline=None)
def test_gcd_matches_integer_gcd(a, b):
    assert fi_gcd(factorize(a), factorize(b)).value() == math.gcd(a, b)


@given(st.integers(min_value=1, max_value=2**30), st.integers(min_value=1, max_value=2**30))
@settings(max_examples=100, deadline=None)
def test_mul_matches_integer_product(a, b):
    assert fi_mul(factorize(a), factorize(b)).value() == a * b


def test_is_odd_and_coprime():
    assert factorize(253).is_odd
    assert not factorize(12).is_odd
    assert factorize(253).is_coprime(factorize(64512))
    assert not factorize(6).is_coprime(factorize(10))


def test_factored_str_format():
    assert factorize(64512).factored_str() == "2^10 * 3^2 * 7"
    assert factorize(23).factored_str() == "23"


# ---------------------------------------------------------------------------
# p-part


def test_p_part_examples():
    assert p_part(48, 2).value == 16
    assert p_part(12, 3).value == 3
    # the unitary dimension-3 test value at q = 11
    assert p_part(11 + 1, 3).value == 3


def test_p_part_unit():
    assert p_part(5, 2).value == 1
    assert p_part(5, 2).e == 0


def test_p_part_rejects_composite_p():
    with pytest.raises(ValueError):
        p_part(48, 6)


def test_prime_power_type():
    pp = parse_prime_power(49)
    assert (pp.p, pp.e, pp.value) == (7, 2, 49)
    with pytest.raises(ValueError):
        parse_prime_power(12)
    with pytest.raises(ValueError):
        parse_prime_power(1)
    with pytest.raises(ValueError):
        PrimePower(10, 2)


# ---------------------------------------------------------------------------
# multiplicative order


def naive_order(a, n):
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def test_mult_order_examples():
    assert mult_order(2, 5) == 4
    assert mult_order(2, 7) == 3
    assert mult_order(11, 23) == 22


def test_mult_order_matches_naive():
    for n in [5, 7, 9, 12, 23, 45, 101]:
        for a in range(2, n):
            if math.gcd(a, n) == 1:
                assert mult_order(a, n) == naive_order(a, n), (a, n)


def test_mult_order_divides_n_minus_1_fermat():
    primes = [p for p in range(3, 201) if is_prime(p)]
    for n in primes:
        for q in range(2, 51):
            if q % n != 0:
                assert (n - 1) % mult_order(q, n) == 0, (q, n)


def test_mult_order_rejects_non_coprime():
    with pytest.raises(ValueError):
        mult_order(6, 9)


# ---------------------------------------------------------------------------
# gcd of q^k -+ 1 (the lemma-based fast path)


def test_gcd_q_powers_examples():
    assert gcd_q_powers(2, 6, "-", 4, "-").value() == 3
    assert gcd_q_powers(2, 4, "-", 2, "+").value() == 5
    # equal 2-parts, plus/plus: gcd(3^3+1, 3^5+1) = gcd(28, 244) = 4
    assert gcd_q_powers(3, 3, "+", 5, "+").value() == 4
    assert math.gcd(28, 244) == 4


def test_gcd_q_powers_exhaustive_against_direct_gcd():
    # acceptance criterion: every branch agrees with the expanded gcd
    for q in range(2, 13):
        for k in range(1, 15):
            for m in range(1, 15):
                for sk in "+-":
                    for sm in "+-":
                        a = q**k + (1 if sk == "+" else -1)
                        b = q**m + (1 if sm == "+" else -1)
                        got = gcd_q_powers(q, k, sk, m, sm).value()
                        assert got == math.gcd(a, b), (q, k, sk, m, sm)


def test_factor_q_power_pm1():
    for q in (2, 3, 5, 7, 11):
        for k in range(1, 12):
            assert factor_q_power_pm1(q, k, "-").value() == q**k - 1
            assert factor_q_power_pm1(q, k, "+").value() == q**k + 1


def test_factor_q_power_rejects_bad_sign():
    with pytest.raises(ValueError):
        factor_q_power_pm1(2, 3, "*")


# ---------------------------------------------------------------------------
# primality test itself


def test_is_prime_small():
    assert [p for p in range(2, 50) if is_prime(p)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    ]


def test_is_prime_carmichael_and_large():
    assert not is_prime(561)
    assert not is_prime(1)
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)
    assert is_prime(170141183460469231731687303715884105727)  # 2^127 - 1


def test_is_prime_agrees_with_gmpy2_when_available():
    gmpy2 = pytest.importorskip("gmpy2")
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(3, 2**64)
        assert is_prime(n) == bool(gmpy2.is_prime(n, 30)), n
