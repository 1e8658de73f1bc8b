"""Exact arithmetic in Z[e], e a primitive m-th root of unity.

Elements are kept as canonical residues modulo the m-th cyclotomic polynomial,
so equality and zero testing are plain structural comparisons. All integers
are arbitrary precision; nothing here ever touches a float.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import InvalidParameterError


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_divmod_exact(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of integer polynomials; den must be monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, d in enumerate(den):
            num[i - dd + j] -= c * d
    rem = num[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


@dataclass(frozen=True)
class CycPolynomial:
    """The m-th cyclotomic polynomial, coefficients from constant term up, monic."""
    m: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@functools.lru_cache(maxsize=None)
def _cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    # x^m - 1 divided by the cyclotomic polynomials of all proper divisors of m.
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_exact(poly, list(_cyclotomic_coeffs(d)))
            assert not rem
    return tuple(poly)


def cyclotomic_polynomial(m: int) -> CycPolynomial:
    """The m-th cyclotomic polynomial for m >= 2, computed by exact division."""
    if m < 2:
        raise InvalidParameterError(f"modulus must be >= 2, got {m}")
    return CycPolynomial(m, _cyclotomic_coeffs(m))


def phi(m: int) -> int:
    """Euler totient of m, read off as the degree of the cyclotomic polynomial."""
    if m < 2:
        raise InvalidParameterError(f"modulus must be >= 2, got {m}")
    return len(_cyclotomic_coeffs(m)) - 1


def _reduce_raw(m: int, raw) -> tuple[int, ...]:
    """Canonical residue of sum(raw[i] * x^i) modulo the m-th cyclotomic polynomial."""
    den = _cyclotomic_coeffs(m)
    deg = len(den) - 1
    _, rem = _poly_divmod_exact(list(raw), list(den))
    return tuple(rem) + (0,) * (deg - len(rem))


@dataclass(frozen=True)
class CycInt:
    """A cyclotomic integer in the canonical basis e^0 .. e^(phi(m)-1).

    Two CycInt values are equal exactly when their fields are equal, so the
    dataclass equality is the ring equality.
    """
    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise InvalidParameterError(f"modulus must be >= 2, got {self.m}")
        if len(self.coeffs) != phi(self.m):
            raise InvalidParameterError(
                f"canonical coefficient vector must have length {phi(self.m)}")

    @classmethod
    def zero(cls, m: int) -> CycInt:
        return cls(m, (0,) * phi(m))

    @classmethod
    def one(cls, m: int) -> CycInt:
        return cls(m, (1,) + (0,) * (phi(m) - 1))

    @classmethod
    def from_integer(cls, m: int, value: int) -> CycInt:
        return cls(m, (value,) + (0,) * (phi(m) - 1))

    @classmethod
    def unit_root(cls, m: int, k: int) -> CycInt:
        """e^k as a canonical element."""
        raw = [0] * m
        raw[k % m] = 1
        return cls(m, _reduce_raw(m, raw))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _check(self, other: CycInt) -> None:
        if self.m != other.m:
            raise InvalidParameterError(f"modulus mismatch: {self.m} vs {other.m}")

    def __add__(self, other: CycInt) -> CycInt:
        self._check(other)
        return CycInt(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycInt) -> CycInt:
        self._check(other)
        return CycInt(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycInt:
        return CycInt(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.m, tuple(other * a for a in self.coeffs))
        self._check(other)
        prod = _poly_mul(list(self.coeffs), list(other.coeffs))
        return CycInt(self.m, _reduce_raw(self.m, prod))

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            unit = "" if k == 0 else ("e" if k == 1 else f"e^{k}")
            if not unit:
                term = str(c)
            elif c == 1:
                term = unit
            elif c == -1:
                term = f"-{unit}"
            else:
                term = f"{c}{unit}"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts) if parts else "0"


def cyc_reduce(m: int, raw) -> CycInt:
    """Canonicalize a length-m vector of powers-of-e coefficients."""
    raw = tuple(raw)
    if len(raw) != m:
        raise InvalidParameterError(f"raw vector must have length {m}, got {len(raw)}")
    return CycInt(m, _reduce_raw(m, raw))


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def cyc_is_zero(a: CycInt) -> bool:
    return a.is_zero()
