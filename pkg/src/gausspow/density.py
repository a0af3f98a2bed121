"""Exact asymptotic densities for the power-sum congruence sets.

All densities are exact rationals.  The heavy operation is the union density
of the witness progressions

    U_p = { n : p^3 - p | n, p^2 does not divide n },   p = 3 (mod 4),

computed by inclusion-exclusion over all nonempty subsets of a prime family.
A subset containing a pair q < p with q^2 | p^2 - 1 has empty intersection
and is pruned together with its whole subtree; every surviving subset
contributes phi/lcm with phi the product of q-1 and lcm taken over q^4 - q^2.
Partial results are accumulated as integer numerators over one fixed common
denominator and merged at the end, so no gcd reduction happens per term; the
enumeration parallelizes over fixed prefix patterns.

A float "preview" variant exists for quick looks and is never used by any
verification path.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .arith import (
    inert_primes_up_to,
    is_prime,
    sieve_inert_primes,
    validate_prime_family,
)

MAX_UNION_PRIMES = 34

# Sum of 1/p^3 over primes p = 3 (mod 4), to 40 digits (OEIS A085992).
INERT_CUBE_RECIPROCAL_SUM = Fraction(
    410075565664730319288865488519600259243, 10**40
)

# Upper bound for the tail sum of 1/p^3 over inert primes beyond the sieve
# limit; valid whenever the limit is at least 10^6 (the bound tightens as the
# limit grows, so larger limits stay covered).
TAIL_REMAINDER = Fraction(2, 10**14)
TAIL_REMAINDER_MIN_LIMIT = 10**6


def zero_row_density(k: int) -> Fraction:
    """Density of moduli n with sigma_k(n) = 0 (mod n).

    3/4 for odd k > 1; otherwise the product of (p^2 - p + 1)/p^2 over
    primes p = 3 (mod 4) with p^2 - 1 | k (empty product = 1).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > 1 and k % 2 == 1:
        return Fraction(3, 4)
    out = Fraction(1)
    p = 3
    while p * p - 1 <= k:
        if p % 4 == 3 and is_prime(p) and k % (p * p - 1) == 0:
            out *= Fraction(p * p - p + 1, p * p)
        p += 2
    return out


def witness_density(p: int) -> Fraction:
    """Density of U_p, exactly 1/(p^2 (1+p))."""
    if not is_prime(p) or p % 4 != 3:
        raise ValueError(f"{p} is not a prime congruent to 3 mod 4")
    return Fraction(1, p * p * (1 + p))


def incompatible(q: int, p: int) -> bool:
    """Whether U_q and U_p cannot intersect: true iff q^2 | p^2 - 1."""
    if not (2 < q < p) or not is_prime(q) or not is_prime(p):
        raise ValueError("requires odd primes q < p")
    return (p * p - 1) % (q * q) == 0


def intersection_density(primes) -> Fraction:
    """Exact density of the intersection of U_q over the family.

    Zero as soon as one pair is incompatible; otherwise the intersection is
    a union of prod(q-1) progressions of common difference lcm(q^4 - q^2).
    """
    fam = validate_prime_family(primes)
    if not fam:
        raise ValueError("prime family must be non-empty")
    for i, q in enumerate(fam):
        for p in fam[i + 1 :]:
            if incompatible(q, p):
                return Fraction(0)
    phi = 1
    common = 1
    for q in fam:
        phi *= q - 1
        common = lcm(common, q**4 - q**2)
    return Fraction(phi, common)


def squarefree_term(m: int) -> Fraction:
    """Intersection density addressed by a squarefree product of inert primes."""
    if m <= 1:
        raise ValueError("m must be > 1")
    from .arith import factorize

    pairs = factorize(m)
    if any(e != 1 for _, e in pairs) or any(p % 4 != 3 for p, _ in pairs):
        raise ValueError("m must be squarefree with all factors = 3 (mod 4)")
    return intersection_density([p for p, _ in pairs])


def _conflict_masks(fam: tuple[int, ...]) -> list[int]:
    masks = []
    for j, p in enumerate(fam):
        m = 0
        for i in range(j):
            if (p * p - 1) % (fam[i] * fam[i]) == 0:
                m |= 1 << i
        masks.append(m)
    return masks


def _subtree_sum(us, qm1, conflicts, total_lcm, start, L, phi, sign, mask):
    """Signed sum of phi(S) * (total_lcm // lcm(L, u(S))) over nonempty
    compatible subsets S of indices >= start, relative to the chosen mask."""
    total = 0
    n = len(us)
    for j in range(start, n):
        if conflicts[j] & mask:
            continue
        u = us[j]
        L2 = L // gcd(L, u) * u
        phi2 = phi * qm1[j]
        total += sign * phi2 * (total_lcm // L2)
        total += _subtree_sum(
            us, qm1, conflicts, total_lcm, j + 1, L2, phi2, -sign, mask | (1 << j)
        )
    return total


def _subtree_task(args):
    return _subtree_sum(*args)


def _preview_subtree(us, qm1, conflicts, start, L, phi, sign, mask):
    total = 0.0
    n = len(us)
    for j in range(start, n):
        if conflicts[j] & mask:
            continue
        u = us[j]
        L2 = L // gcd(L, u) * u
        phi2 = phi * qm1[j]
        total += sign * (phi2 / L2)
        total += _preview_subtree(
            us, qm1, conflicts, start=j + 1, L=L2, phi=phi2, sign=-sign,
            mask=mask | (1 << j),
        )
    return total


def union_density(primes, workers: int | None = None) -> Fraction:
    """Exact density of the union of U_p over the family, by inclusion-exclusion.

    Enumerates all nonempty subsets with conflict pruning.  With `workers`
    greater than one, subtrees below a fixed prefix depth run in separate
    processes; integer partial sums merge exactly, so the result does not
    depend on scheduling.
    """
    fam = validate_prime_family(primes)
    if not fam:
        raise ValueError("prime family must be non-empty")
    if len(fam) > MAX_UNION_PRIMES:
        raise ValueError(f"at most {MAX_UNION_PRIMES} primes supported")
    us = [p**4 - p**2 for p in fam]
    qm1 = [p - 1 for p in fam]
    conflicts = _conflict_masks(fam)
    total_lcm = 1
    for u in us:
        total_lcm = lcm(total_lcm, u)

    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(fam) < 16:
        num = _subtree_sum(us, qm1, conflicts, total_lcm, 0, 1, 1, 1, 0)
        return Fraction(num, total_lcm)

    split = min(6, len(fam) - 10)
    prefix_num = 0
    tasks = []
    for pattern in range(1 << split):
        L, phi, mask, size, ok = 1, 1, 0, 0, True
        for j in range(split):
            if pattern >> j & 1:
                if conflicts[j] & mask:
                    ok = False
                    break
                L = L // gcd(L, us[j]) * us[j]
                phi *= qm1[j]
                mask |= 1 << j
                size += 1
        if not ok:
            continue
        sign = -1 if size % 2 else 1  # (-1)^size, tail terms flip from here
        if size:
            prefix_num += -sign * phi * (total_lcm // L)
        tasks.append((us, qm1, conflicts, total_lcm, split, L, phi, sign, mask))

    with ProcessPoolExecutor(max_workers=workers) as pool:
        num = prefix_num + sum(pool.map(_subtree_task, tasks))
    return Fraction(num, total_lcm)


def union_density_preview(primes) -> float:
    """Float approximation of `union_density`; display only, never verified."""
    fam = validate_prime_family(primes)
    if not fam or len(fam) > MAX_UNION_PRIMES:
        raise ValueError("prime family empty or too large")
    us = [p**4 - p**2 for p in fam]
    qm1 = [p - 1 for p in fam]
    conflicts = _conflict_masks(fam)
    return _preview_subtree(us, qm1, conflicts, 0, 1, 1, 1, 0)


def _merge_sum(terms: list[tuple[int, int]]) -> tuple[int, int]:
    """Sum fractions given as (num, den) pairs by balanced pairwise merging,
    leaving the result unreduced (one final reduction beats one per add)."""
    if not terms:
        return (0, 1)
    while len(terms) > 1:
        nxt = []
        for i in range(0, len(terms) - 1, 2):
            n1, d1 = terms[i]
            n2, d2 = terms[i + 1]
            nxt.append((n1 * d2 + n2 * d1, d1 * d2))
        if len(terms) % 2:
            nxt.append(terms[-1])
        terms = nxt
    return terms[0]


def tail_bound(p_min: int, p_limit: int) -> Fraction:
    """Exact sum of 1/(p^3 + p^2) over primes p = 3 (mod 4), p_min < p <= p_limit."""
    if p_min >= p_limit:
        raise ValueError("requires p_min < p_limit")
    if p_limit > 2 * 10**7:
        raise ValueError("sieve limit capped at 2e7")
    terms = [
        (1, p * p * (p + 1))
        for p in inert_primes_up_to(p_limit)
        if p > p_min
    ]
    num, den = _merge_sum(terms)
    return Fraction(num, den)


@dataclass(frozen=True)
class DensityInterval:
    """Exact rational bracket [lower, upper] containing a density."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper <= 1:
            raise ValueError("interval must satisfy 0 <= lower <= upper <= 1")

    def width(self) -> Fraction:
        return self.upper - self.lower


@dataclass(frozen=True)
class DiagonalBracket:
    """Bracket for the density of n dividing sigma_n(n), with its ingredients."""

    interval: DensityInterval
    union: Fraction  # exact union density over the primes used
    tail: Fraction  # tail sum bound beyond the largest prime used
    primes_used: tuple[int, ...]


def diagonal_bracket(
    num_primes: int, p_limit: int, workers: int | None = None
) -> DiagonalBracket:
    """Bracket the density of the diagonal zero set from a finite prime family.

    lower = 1 - union - tail and upper = 1 - union, where union is the exact
    inclusion-exclusion density over the first `num_primes` inert primes and
    tail bounds the contribution of all larger witness primes: the exact sum
    to p_limit plus the stored remainder beyond it.
    """
    if not 1 <= num_primes <= MAX_UNION_PRIMES:
        raise ValueError(f"num_primes must be in [1, {MAX_UNION_PRIMES}]")
    if p_limit < TAIL_REMAINDER_MIN_LIMIT:
        raise ValueError(
            f"p_limit below {TAIL_REMAINDER_MIN_LIMIT} invalidates the stored remainder"
        )
    fam = sieve_inert_primes(num_primes)
    ell = union_density(fam, workers=workers)
    tail = tail_bound(fam[-1], p_limit) + TAIL_REMAINDER
    interval = DensityInterval(1 - ell - tail, 1 - ell)
    return DiagonalBracket(interval, ell, tail, fam)


def sieve_complement_count(limit: int, primes, chunk: int = 1 << 24) -> int:
    """Count n <= limit lying in some U_p, by direct progression marking.

    Independent oracle for `union_density`: marks multiples of p^3 - p and
    unmarks those of p(p^3 - p) in boolean chunks, then counts the union.
    """
    if limit < 1 or limit > 10**9:
        raise ValueError("limit must be in [1, 1e9]")
    fam = validate_prime_family(primes)
    steps = [(p**3 - p, p * (p**3 - p)) for p in fam]
    count = 0
    marked = np.zeros(chunk, dtype=bool)
    single = np.zeros(chunk, dtype=bool)
    for lo in range(1, limit + 1, chunk):
        hi = min(lo + chunk, limit + 1)
        width = hi - lo
        marked[:width] = False
        for u, pu in steps:
            if u >= hi:
                continue
            single[:width] = False
            first = (lo + u - 1) // u * u
            if first < hi:
                single[first - lo : width : u] = True
            first = (lo + pu - 1) // pu * pu
            if first < hi:
                single[first - lo : width : pu] = False
            marked[:width] |= single[:width]
        count += int(np.count_nonzero(marked[:width]))
    return count


def digit_count(x: int) -> int:
    """Number of decimal digits of |x| (0 counts as one digit)."""
    return len(str(abs(x)))
