"""Membership predicates for the zero sets of the Gaussian power-sum table.

Three sets of interest, all defined by sigma_k(n) = 0 (mod n):

  * the zero moduli of a fixed exponent row (n varies, k fixed),
  * the zero exponents of a fixed modulus column (k varies, n fixed),
  * the diagonal zeros (k = n), whose complement is witnessed by a single
    prime p = 3 (mod 4) with p^3 - p | n and p^2 not dividing n.

Each membership test below is decided from a *description* of the set
(progression unions, witness primes), never by evaluating sigma itself, so
they can be cross-checked against the evaluation routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, inert_primes_up_to, is_prime
from .closed_form import is_half_epsilon_case


def divides_sigma(k: int, n: int) -> bool:
    """Whether n | sigma_k(n), decided set-theoretically.

    False exactly when a prime p | n has p = 3 (mod 4), p^2 - 1 | k and
    p^2 not dividing n, or when k > 1 is odd with n = 2 (mod 4).
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if is_half_epsilon_case(k, n):
        return False
    return not any(
        e == 1 and p % 4 == 3 and k % (p * p - 1) == 0 for p, e in factorize(n)
    )


def _row_witness_candidates(k: int) -> list[int]:
    """Primes p = 3 (mod 4) with p^2 - 1 | k (so p <= sqrt(k+1))."""
    out = []
    p = 3
    while p * p - 1 <= k:
        if is_prime(p) and p % 4 == 3 and k % (p * p - 1) == 0:
            out.append(p)
        p += 2
    return out


def outside_row_zeros(n: int, k: int) -> bool:
    """n outside the zero set of row k, via the progression-union description.

    For even k (or k = 1) the complement is the union over qualifying p of
    the multiples of p that are not multiples of p^2; for odd k > 1 it is
    exactly the residue class 2 mod 4.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if k > 1 and k % 2 == 1:
        return n % 4 == 2
    return any(
        n % p == 0 and n % (p * p) != 0 for p in _row_witness_candidates(k)
    )


def outside_column_zeros(k: int, n: int) -> bool:
    """k outside the zero set of column n, via the multiples-of-(p^2-1) description.

    The union of multiples of p^2 - 1 over primes p || n, p = 3 (mod 4)
    always applies; for n = 2 (mod 4) the odd exponents k > 1 are excluded
    as well.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if n % 4 == 2 and k > 1 and k % 2 == 1:
        return True
    return any(
        e == 1 and p % 4 == 3 and k % (p * p - 1) == 0 for p, e in factorize(n)
    )


def eight_multiple_exclusion(n: int, k_limit: int = 10_000) -> tuple[bool, bool]:
    """Range-checked column structure for n divisible by 3 but not 9.

    Returns (subset_holds, equality_holds): whether every positive multiple
    of 8 up to k_limit falls outside the column-n zero set, and whether the
    converse also holds on the range (which additionally needs n != 2 mod 4,
    since that class excludes odd exponents too).  The sets are unions of
    arithmetic progressions, so a bounded check at this scale is conclusive
    in practice.
    """
    if n < 1 or n % 3 != 0 or n % 9 == 0:
        raise ValueError("requires 3 | n and 9 not dividing n")
    subset_holds = all(
        outside_column_zeros(k, n) for k in range(8, k_limit + 1, 8)
    )
    equality_holds = n % 4 != 2 and all(
        not outside_column_zeros(k, n) for k in range(1, k_limit + 1) if k % 8
    )
    return subset_holds, equality_holds


@dataclass(frozen=True, slots=True)
class WitnessReport:
    """Smallest diagonal witness prime for n, or None when n | sigma_n(n)."""

    n: int
    witness: int | None


def diagonal_witness(n: int) -> WitnessReport:
    """Smallest prime p = 3 (mod 4) with p^3 - p | n and p^2 not dividing n.

    p^3 - p | n forces p^3 - p <= n, so only primes up to about n^(1/3) can
    witness; absence of a witness means sigma_n(n) = 0 (mod n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = 3
    while p * p * p - p <= n:
        if (
            p % 4 == 3
            and is_prime(p)
            and n % (p * p * p - p) == 0
            and n % (p * p) != 0
        ):
            return WitnessReport(n, p)
        p += 2
    return WitnessReport(n, None)


def witness_forces_24(n: int) -> bool:
    """Structural check: a diagonal witness for n implies 24 | n."""
    return diagonal_witness(n).witness is None or n % 24 == 0


def diagonal_nonzero_up_to(limit: int) -> list[int]:
    """All n <= limit whose diagonal entry sigma_n(n) is nonzero mod n.

    Walks the witness progressions directly instead of testing every n:
    candidates are multiples of p^3 - p not killed by p^2.
    """
    hits = set()
    for p in inert_primes_up_to(max(3, round(limit ** (1 / 3)) + 2)):
        u = p * p * p - p
        for m in range(u, limit + 1, u):
            if m % (p * p) != 0:
                hits.add(m)
    return sorted(hits)
