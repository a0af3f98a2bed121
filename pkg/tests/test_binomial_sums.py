"""Lacunary binomial congruences, checked against exact big-integer binomials."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gausspow.arith import primes_up_to
from gausspow.binomial_sums import (
    binom_mod_p,
    dilcher_sum,
    hermite_sum,
    signed_lacunary_sum,
)

ODD_PRIMES_TO_23 = [3, 5, 7, 11, 13, 17, 19, 23]


class TestLucas:
    def test_examples(self):
        assert comb(8, 2) == 28
        assert binom_mod_p(8, 2, 3) == 28 % 3 == 1
        assert binom_mod_p(17, 0, 5) == 1
        assert binom_mod_p(5, 7, 11) == 0

    def test_rejects_composite_modulus(self):
        with pytest.raises(ValueError):
            binom_mod_p(10, 2, 9)

    @given(
        st.integers(min_value=0, max_value=400),
        st.integers(min_value=0, max_value=400),
        st.sampled_from([2, 3, 5, 7, 11, 13, 31, 47]),
    )
    def test_matches_exact_binomial(self, n, m, p):
        assert binom_mod_p(n, m, p) == comb(n, m) % p


def hermite_oracle(k, p):
    return sum(comb(k, j) for j in range(p - 1, k, p - 1)) % p


def dilcher_oracle(k, p):
    return sum((-1) ** j * comb(k * (p - 1), j * (p - 1)) for j in range(k + 1)) % p


def lacunary_oracle(n, p):
    total = sum(
        (-1) ** (j * (p - 1) // 2) * comb(n, j * (p - 1))
        for j in range(1, n // (p - 1))
    )
    return total % p


class TestHermite:
    def test_hand_example(self):
        assert comb(5, 2) + comb(5, 4) == 15
        assert hermite_sum(5, 3) == 0

    def test_empty_sum_below_p(self):
        for p in (5, 7, 13):
            for k in range(1, p):
                assert hermite_sum(k, p) == 0

    def test_large_k(self):
        assert hermite_sum(100, 7) == 0

    def test_vanishes_on_full_range(self):
        for p in primes_up_to(50):
            for k in range(1, 301):
                assert hermite_sum(k, p) == 0, (k, p)

    def test_matches_exact_oracle(self):
        for p in (3, 5, 7):
            for k in range(1, 60):
                assert hermite_sum(k, p) == hermite_oracle(k, p)


class TestDilcher:
    def test_hand_examples(self):
        # k=2, p=3: 1 - C(4,2) + 1 = -4
        assert dilcher_sum(2, 3) == (-4) % 3 == 2
        # k=4, p=3: 1 - 28 + 70 - 28 + 1 = 16; p+1 = 4 | 4
        assert 1 - comb(8, 2) + comb(8, 4) - comb(8, 6) + 1 == 16
        assert dilcher_sum(4, 3) == 16 % 3 == 1
        assert dilcher_sum(3, 5) == 0

    def test_rejects_p_two(self):
        with pytest.raises(ValueError):
            dilcher_sum(4, 2)

    def test_case_table_full_range(self):
        for p in ODD_PRIMES_TO_23:
            for k in range(1, 61):
                got = dilcher_sum(k, p)
                if k % 2 == 1:
                    assert got == 0, (k, p)
                elif k % (p + 1) == 0:
                    assert got == 1 % p, (k, p)
                else:
                    assert got == 2 % p, (k, p)

    def test_matches_exact_oracle(self):
        for p in (3, 5, 7):
            for k in range(1, 25):
                assert dilcher_sum(k, p) == dilcher_oracle(k, p)


class TestSignedLacunary:
    def test_hand_examples(self):
        # n=8, p=3: -C(8,2) + C(8,4) - C(8,6) = -28 + 70 - 28 = 14
        assert -comb(8, 2) + comb(8, 4) - comb(8, 6) == 14
        assert signed_lacunary_sum(8, 3) == 14 % 3 == 2  # i.e. -1 mod 3
        # n=4, p=3: -C(4,2) = -6
        assert signed_lacunary_sum(4, 3) == 0
        # p = 1 mod 4: never alternates, always 0
        for n in range(4, 21, 4):
            assert signed_lacunary_sum(n, 5) == 0

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            signed_lacunary_sum(7, 3)  # 2 does not divide 7
        with pytest.raises(ValueError):
            signed_lacunary_sum(8, 2)

    def test_case_table_full_range(self):
        for p in ODD_PRIMES_TO_23:
            for mult in range(1, 61):
                n = mult * (p - 1)
                got = signed_lacunary_sum(n, p)
                if p % 4 == 3 and mult % (p + 1) == 0:
                    assert got == p - 1, (n, p)
                else:
                    assert got == 0, (n, p)

    def test_matches_exact_oracle(self):
        for p in (3, 7, 11):
            for mult in range(1, 20):
                n = mult * (p - 1)
                assert signed_lacunary_sum(n, p) == lacunary_oracle(n, p)

    def test_consistency_with_dilcher(self):
        # For p = 3 (mod 4) the signed sum is the alternating sum minus the
        # j = 0 and j = k boundary terms.
        for p in (3, 7, 11, 19, 23):
            for mult in range(1, 40):
                n = mult * (p - 1)
                expected = (dilcher_sum(mult, p) - 1 - (-1) ** mult) % p
                assert signed_lacunary_sum(n, p) == expected, (n, p)
