"""The unique interpolating polynomial of an m-ary function, exactly.

Unity alphabet: coefficients are character sums over the label grid, kept
m^n-scaled in Z[e] so that degree extraction is a chain of exact zero tests
and no cyclotomic division ever happens. Integer alphabet: tensor Lagrange
interpolation over the nodes 0..m-1 with rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .config import DEFAULT, Config
from .cyclotomic import CycInt, cyc_is_zero, cyc_reduce
from .errors import CapacityExceededError, InvalidParameterError
from .functions import (INTEGER, UNITY, MAryFunction, all_vertices, block_sensitivity,
                        index_vertex, sensitivity, shift_function)

Rational = Fraction  # exact rational scalar type for the integer alphabet


@dataclass(eq=True)
class RepresentingPolynomial:
    """Sparse exact polynomial with per-variable degree at most m-1.

    terms maps exponent tuples to nonzero coefficients: CycInt (scaled by
    `scale` = m^n) for the unity alphabet, Fraction (scale 1) for integers.
    """
    m: int
    n: int
    alphabet: str
    scale: int
    terms: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficient(self, exps):
        exps = tuple(exps)
        if exps in self.terms:
            return self.terms[exps]
        return CycInt.zero(self.m) if self.alphabet == UNITY else Fraction(0)

    def format_text(self) -> str:
        lines = [f"# polynomial m={self.m} n={self.n} alphabet={self.alphabet}"]
        if self.alphabet == UNITY:
            lines.append(f"# coefficients scaled by m^n = {self.scale}")
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            factors = []
            for j, a in enumerate(exps, start=1):
                if a == 1:
                    factors.append(f"x{j}")
                elif a > 1:
                    factors.append(f"x{j}^{a}")
            coeff = str(self.terms[exps])
            lines.append(f"{coeff} * {' '.join(factors)}" if factors else coeff)
        if not self.terms:
            lines.append("0")
        return "\n".join(lines) + "\n"


def _require_dense(f: MAryFunction, config: Config):
    if not f.is_dense:
        raise InvalidParameterError("interpolation needs a dense table")
    if f.m ** f.n > config.max_dense_size:
        raise CapacityExceededError(
            f"m^n = {f.m ** f.n} exceeds max_dense_size = {config.max_dense_size}")


def _axis_indices(m: int, n: int, axis: int):
    stride = m ** (n - 1 - axis)
    for base in range(0, m ** n, stride * m):
        for off in range(base, base + stride):
            yield off, stride


def character_counts(f: MAryFunction) -> list[tuple[int, ...]]:
    """For every exponent vector a (in table index order) the length-m vector
    counting each power of e in sum_x e^(f(x) - <a,x>), via one transform pass
    per coordinate. Entries are plain counts, not yet reduced mod the
    cyclotomic polynomial."""
    m, n = f.m, f.n
    work: list[tuple[int, ...]] = []
    for label in f.table:
        unit = [0] * m
        unit[label] = 1
        work.append(tuple(unit))
    zero = (0,) * m
    for axis in range(n):
        for off, stride in _axis_indices(m, n, axis):
            olds = [work[off + t * stride] for t in range(m)]
            for a in range(m):
                acc = list(zero)
                for t, old in enumerate(olds):
                    s = (a * t) % m  # multiply by e^(-a*t): rotate counts down by s
                    for i in range(m):
                        acc[i] += old[(i + s) % m]
                work[off + a * stride] = tuple(acc)
    return work


def naive_character_counts(f: MAryFunction) -> list[tuple[int, ...]]:
    """O(m^2n) reference for character_counts, used as an independent oracle."""
    m, n = f.m, f.n
    vertices = list(all_vertices(m, n))
    out = []
    for a in vertices:
        counts = [0] * m
        for x, label in zip(vertices, f.table):
            dot = sum(ai * xi for ai, xi in zip(a, x))
            counts[(label - dot) % m] += 1
        out.append(tuple(counts))
    return out


def _interpolate_unity(f: MAryFunction) -> RepresentingPolynomial:
    m, n = f.m, f.n
    terms = {}
    for idx, counts in enumerate(character_counts(f)):
        c = cyc_reduce(m, counts)
        if not c.is_zero():
            terms[index_vertex(idx, m, n)] = c
    return RepresentingPolynomial(m, n, UNITY, m ** n, terms)


def _lagrange_inverse(m: int) -> list[list[Fraction]]:
    """Matrix V with V[e][t] = coefficient of x^e in the Lagrange basis poly
    through the nodes 0..m-1 that is 1 at node t."""
    cols = []
    for t in range(m):
        poly = [Fraction(1)]
        denom = 1
        for u in range(m):
            if u == t:
                continue
            denom *= t - u
            new = [Fraction(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                new[i + 1] += c
                new[i] -= u * c
            poly = new
        cols.append([c / denom for c in poly])
    return [[cols[t][e] for t in range(m)] for e in range(m)]


def _interpolate_integer(f: MAryFunction) -> RepresentingPolynomial:
    m, n = f.m, f.n
    vinv = _lagrange_inverse(m)
    work = [Fraction(v) for v in f.table]
    for axis in range(n):
        for off, stride in _axis_indices(m, n, axis):
            olds = [work[off + t * stride] for t in range(m)]
            for e in range(m):
                work[off + e * stride] = sum(vinv[e][t] * olds[t] for t in range(m))
    terms = {index_vertex(idx, m, n): c for idx, c in enumerate(work) if c != 0}
    return RepresentingPolynomial(m, n, INTEGER, 1, terms)


def interpolate(f: MAryFunction, config: Config = DEFAULT) -> RepresentingPolynomial:
    """The unique representing polynomial with per-variable degree <= m-1."""
    _require_dense(f, config)
    if f.alphabet == UNITY:
        return _interpolate_unity(f)
    return _interpolate_integer(f)


def degree(f: MAryFunction, config: Config = DEFAULT) -> int:
    """Smallest total degree of a polynomial agreeing with f on its grid."""
    return interpolate(f, config).degree


def evaluate(poly: RepresentingPolynomial, x):
    """Exact value at a grid point (labels 0..m-1 for both alphabets).

    Unity alphabet: returns the m^n-scaled CycInt, i.e. scale * e^f(x).
    Integer alphabet: returns the Fraction f(x).
    """
    m = poly.m
    if len(x) != poly.n or any(not 0 <= v < m for v in x):
        raise InvalidParameterError(f"point {x} is not on the [0,{m - 1}]^{poly.n} grid")
    if poly.alphabet == UNITY:
        raw = [0] * m
        for exps, c in poly.terms.items():
            k = sum(e * v for e, v in zip(exps, x)) % m
            rot = CycInt.unit_root(m, k) * c
            acc = cyc_reduce(m, raw) + rot if False else None
            rawt = raw  # accumulate in the canonical basis instead
            del acc, raw t
        # accumulate canonically (simpler and exact)
        total = CycInt.zero(m)
        for exps, c in poly.terms.items():
            k = sum(e * v for e, v in zip(exps, x)) % m
            total = total + CycInt.unit_root(m, k) * c
        return total
    total = Fraction(0)
    for exps, c in poly.terms.items():
        prod = c
        for e, v in zip(exps, x):
            if e:
                prod *= v ** e
        total += prod
    return total


def reduce_exponents(m: int, n: int, terms: dict, scale: int = 1) -> RepresentingPolynomial:
    """Reduce arbitrary exponent vectors mod m and merge like terms exactly.

    Valid for the unity alphabet only (uses e^m = 1). Coefficients may be
    ints or CycInt; the result is canonical with zero terms dropped.
    """
    merged: dict[tuple[int, ...], CycInt] = {}
    for exps, c in terms.items():
        if len(exps) != n:
            raise InvalidParameterError(f"exponent vector {exps} does not have length {n}")
        if isinstance(c, int):
            c = CycInt.from_integer(m, c)
        key = tuple(e % m for e in exps)
        merged[key] = merged[key] + c if key in merged else c
    merged = {k: c for k, c in merged.items() if not c.is_zero()}
    return RepresentingPolynomial(m, n, UNITY, scale, merged)


def average(f: MAryFunction) -> CycInt:
    """m^n times the average of e^f(x) over the grid, as a canonical CycInt."""
    if f.alphabet != UNITY:
        raise InvalidParameterError("averages are defined for the unity alphabet")
    counts = [0] * f.m
    if f.is_dense:
        for label in f.table:
            counts[label] += 1
    else:
        for x in all_vertices(f.m, f.n):
            counts[f.oracle(x)] += 1
    return cyc_reduce(f.m, counts)


@dataclass(frozen=True)
class TopCoefficientCheck:
    constant_term: CycInt
    top_coefficient: CycInt
    matches: bool
    full_degree_iff_nonzero_average: bool

    @property
    def ok(self) -> bool:
        return self.matches and self.full_degree_iff_nonzero_average


def top_coefficient_identity(f: MAryFunction, config: Config = DEFAULT) -> TopCoefficientCheck:
    """Check that the constant term of f's interpolant equals the coefficient
    of (x1...xn)^(m-1) in the interpolant of the (m-1)-shifted function, and
    that the shifted function has full degree exactly when the average of f
    is nonzero."""
    if f.alphabet != UNITY:
        raise InvalidParameterError("identity is specific to the unity alphabet")
    m, n = f.m, f.n
    base = interpolate(f, config)
    shifted = interpolate(shift_function(f, m - 1), config)
    const = base.coefficient((0,) * n)
    top = shifted.coefficient((m - 1,) * n)
    full_degree = shifted.degree == (m - 1) * n
    avg_nonzero = not cyc_is_zero(average(f))
    return TopCoefficientCheck(const, top, const == top, full_degree == avg_nonzero)


@dataclass(frozen=True)
class BoundsReport:
    m: int
    n: int
    sensitivity: int
    block_sensitivity: int
    degree: int
    chain_ok: bool              # s <= (m-1) * bs and bs <= n
    sensitivity_degree_ok: bool  # s <= 2 (m-1)^3 deg^2
    block_degree_ok: bool        # 2 ((m-1) deg)^2 >= bs

    @property
    def all_ok(self) -> bool:
        return self.chain_ok and self.sensitivity_degree_ok and self.block_degree_ok


def bounds_report(f: MAryFunction, config: Config = DEFAULT) -> BoundsReport:
    """Exact s, bs, deg of a small function plus the three inequality checks."""
    s = sensitivity(f, config)
    bs = block_sensitivity(f, config)
    d = degree(f, config)
    m, n = f.m, f.n
    return BoundsReport(
        m, n, s, bs, d,
        chain_ok=(s <= (m - 1) * bs <= (m - 1) * n),
        sensitivity_degree_ok=(s <= 2 * (m - 1) ** 3 * d * d),
        block_degree_ok=(2 * ((m - 1) * d) ** 2 >= bs),
    )
