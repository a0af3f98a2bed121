"""Gaussian-integer arithmetic and the brute-force power-sum oracles.

`GaussianResidue` is an element of Z[i]/nZ[i] kept in canonical form (both
parts in [0, n)); `GaussianInt` is an exact Gaussian integer on Python's
arbitrary-precision ints.  `sigma_brute` evaluates the defining double sum
sum over 1 <= a, b <= n of (a+bi)^k literally and is the ground-truth oracle
everything faster is measured against.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """Exact Gaussian integer a + bi."""

    re: int = 0
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, k: int) -> "GaussianInt":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        re, im = _pow_exact(self.re, self.im, k)
        return GaussianInt(re, im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def reduce(self, n: int) -> "GaussianResidue":
        return GaussianResidue(self.re % n, self.im % n, n)

    def __str__(self) -> str:
        return f"{self.re}{self.im:+}i"


class GaussianResidue:
    """Element of Z[i]/nZ[i] with both components canonicalized to [0, n)."""

    __slots__ = ("re", "im", "n")

    def __init__(self, re: int, im: int, n: int):
        if n < 1:
            raise ValueError("modulus must be >= 1")
        self.n = n
        self.re = re % n
        self.im = im % n

    def _check(self, other: "GaussianResidue") -> None:
        if self.n != other.n:
            raise ValueError(f"modulus mismatch: {self.n} != {other.n}")

    def __add__(self, other: "GaussianResidue") -> "GaussianResidue":
        self._check(other)
        return GaussianResidue(self.re + other.re, self.im + other.im, self.n)

    def __mul__(self, other: "GaussianResidue") -> "GaussianResidue":
        self._check(other)
        re, im = _mul_mod(self.re, self.im, other.re, other.im, self.n)
        return GaussianResidue(re, im, self.n)

    def __pow__(self, k: int) -> "GaussianResidue":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        re, im = _pow_mod(self.re, self.im, k, self.n)
        return GaussianResidue(re, im, self.n)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GaussianResidue)
            and (self.re, self.im, self.n) == (other.re, other.im, other.n)
        )

    def __hash__(self) -> int:
        return hash((self.re, self.im, self.n))

    def __repr__(self) -> str:
        return f"GaussianResidue({self.re}, {self.im}, mod {self.n})"

    def __str__(self) -> str:
        return f"{self.re}+{self.im}i (mod {self.n})"


def _mul_mod(a: int, b: int, c: int, d: int, n: int) -> tuple[int, int]:
    return (a * c - b * d) % n, (a * d + b * c) % n


def _pow_mod(a: int, b: int, k: int, n: int) -> tuple[int, int]:
    ra, rb = 1 % n, 0
    while k:
        if k & 1:
            ra, rb = (ra * a - rb * b) % n, (ra * b + rb * a) % n
        a, b = (a * a - b * b) % n, 2 * a * b % n
        k >>= 1
    return ra, rb


def _pow_exact(a: int, b: int, k: int) -> tuple[int, int]:
    ra, rb = 1, 0
    while k:
        if k & 1:
            ra, rb = ra * a - rb * b, ra * b + rb * a
        a, b = a * a - b * b, 2 * a * b
        k >>= 1
    return ra, rb


def gauss_mul(x: GaussianResidue, y: GaussianResidue) -> GaussianResidue:
    return x * y


def gauss_pow(x: GaussianResidue, k: int) -> GaussianResidue:
    return x**k


def sigma_brute(k: int, n: int) -> GaussianResidue:
    """Sum of (a+bi)^k over the full square 1 <= a, b <= n, reduced mod n.

    O(n^2 log k); meant as an oracle for moderate n, not for production use.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    sre = sim = 0
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            re, im = _pow_mod(a, b, k, n)
            sre += re
            sim += im
    return GaussianResidue(sre, sim, n)


def sigma_brute_rows(n: int, k_max: int) -> list[GaussianResidue]:
    """[sigma_brute(k, n) for k in 1..k_max] sharing one incremental power pass."""
    if k_max < 1 or n < 1:
        raise ValueError("k_max and n must be >= 1")
    acc = [[0, 0] for _ in range(k_max)]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ca, cb = 1, 0
            for k in range(k_max):
                ca, cb = (ca * a - cb * b) % n, (ca * b + cb * a) % n
                acc[k][0] += ca
                acc[k][1] += cb
    return [GaussianResidue(re, im, n) for re, im in acc]


def sigma_exact(k: int, m: int) -> GaussianInt:
    """Exact, unreduced sum of (a+bi)^k over 1 <= a, b <= m."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    sre = sim = 0
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            re, im = _pow_exact(a, b, k)
            sre += re
            sim += im
    return GaussianInt(sre, sim)


def sigma_exact_rows(m: int, k_max: int) -> list[GaussianInt]:
    """[sigma_exact(k, m) for k in 1..k_max] sharing one incremental power pass."""
    acc = [[0, 0] for _ in range(k_max)]
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            ca, cb = 1, 0
            for k in range(k_max):
                ca, cb = ca * a - cb * b, ca * b + cb * a
                acc[k][0] += ca
                acc[k][1] += cb
    return [GaussianInt(re, im) for re, im in acc]
