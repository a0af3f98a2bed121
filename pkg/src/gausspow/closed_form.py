"""Closed-form evaluation of the Gaussian power sum sigma_k(n) mod n.

Writing sigma_k(n) for the sum of (a+bi)^k over the square 1 <= a, b <= n,
the closed form is driven by the witness primes

    W(k, n) = { p prime : p || n (exactly divides), p^2 - 1 | k, p = 3 (mod 4) }

and reads

    sigma_k(n) =  (n/2)(1+i)                    if k > 1 odd and n = 2 (mod 4),
                  - sum_{p in W(k,n)} n^2/p^2   otherwise (purely real).

Three independent evaluation routes live here and are cross-tested: the
closed form above, a mid-level route through the binomial expansion of
(a+bi)^k against classical power sums, and case-split real/imaginary parts
recombined by CRT.  `gaussian.sigma_brute` is the fourth, ground-truth route.
"""

from __future__ import annotations

from math import comb, lcm

from .arith import crt, factorize
from .gaussian import GaussianResidue
from .power_sums import s_mod_naive


def witness_primes(k: int, n: int) -> tuple[int, ...]:
    """Primes p with p || n, p^2 - 1 | k and p = 3 (mod 4), ascending."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    return tuple(
        p
        for p, e in factorize(n)
        if e == 1 and p % 4 == 3 and k % (p * p - 1) == 0
    )


def is_half_epsilon_case(k: int, n: int) -> bool:
    """The only case where sigma_k(n) is not real mod n: odd k > 1, n = 2 (mod 4)."""
    return k > 1 and k % 2 == 1 and n % 4 == 2


def sigma_closed(k: int, n: int) -> GaussianResidue:
    """sigma_k(n) mod n by the closed formula."""
    if is_half_epsilon_case(k, n):
        return GaussianResidue(n // 2, n // 2, n)
    total = sum(n * n // (p * p) for p in witness_primes(k, n))
    return GaussianResidue(-total % n, 0, n)


def sigma_expansion(k: int, n: int) -> GaussianResidue:
    """sigma_k(n) mod n through the binomial expansion of (a+bi)^k.

    Expanding and splitting by parity of the i-exponent gives, with
    S_m(n) = 1^m + ... + n^m,

        Re = sum_{j} (-1)^j C(k, 2j)   S_{2j}(n)   S_{k-2j}(n)
        Im = sum_{j} (-1)^j C(k, 2j+1) S_{2j+1}(n) S_{k-2j-1}(n)

    evaluated mod n with exact integer binomials.  Slower than the closed
    form but independent of it; it sits between brute force and the formula
    in the oracle stack.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    s = [s_mod_naive(m, n) for m in range(k + 1)]
    re = im = 0
    for j in range(k // 2 + 1):
        term = comb(k, 2 * j) % n * s[2 * j] % n * s[k - 2 * j] % n
        re += -term if j % 2 else term
    for j in range((k - 1) // 2 + 1):
        term = comb(k, 2 * j + 1) % n * s[2 * j + 1] % n * s[k - 2 * j - 1] % n
        im += -term if j % 2 else term
    return GaussianResidue(re % n, im % n, n)


def imag_part_closed(k: int, n: int) -> int:
    """Im(sigma_k(n)) mod n: n/2 in the half-epsilon case, else 0."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    return n // 2 if is_half_epsilon_case(k, n) else 0


def real_part_closed(k: int, n: int) -> int:
    """Re(sigma_k(n)) mod n by the per-prime-power case split and CRT.

    Kept separate from `sigma_closed` on purpose: this route assembles the
    real part from one congruence per prime power dividing n, the other
    negates a single divisor sum; agreement between them is a test target.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if is_half_epsilon_case(k, n):
        return n // 2
    if k % 2 == 1 or n == 1:  # covers k = 1 and odd k > 1 with n != 2 mod 4
        return 0
    residues = []
    for p, e in factorize(n):
        if e == 1 and p % 4 == 3 and k % (p * p - 1) == 0:
            residues.append((-(n * n // (p * p)) % p, p))
        else:
            residues.append((0, p**e))
    return crt(residues)


def sigma_by_parts(k: int, n: int) -> GaussianResidue:
    """sigma_k(n) mod n recombined from the separate real/imaginary closed parts."""
    return GaussianResidue(real_part_closed(k, n), imag_part_closed(k, n), n)


def closed_period(n: int) -> int:
    """L such that sigma_k(n) = sigma_{k+L}(n) for k of fixed parity.

    The witness set depends on k only through the divisibilities p^2 - 1 | k,
    so the lcm of p^2 - 1 over inert primes dividing n is a period.
    """
    L = 1
    for p, _ in factorize(n):
        if p % 4 == 3:
            L = lcm(L, p * p - 1)
    return L
