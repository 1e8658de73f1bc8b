"""m-ary functions on [0,m-1]^n and their combinatorial complexity measures.

A function is stored either as a dense label table (index order: coordinate 1
most significant) or as a deterministic membership oracle for arities too
large to tabulate. Labels are always integers in [0, m-1]; the alphabet kind
only records whether label j stands for the j-th root of unity or for the
integer j.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass

from .config import DEFAULT, Config
from .errors import CapacityExceededError, FormatError, InvalidParameterError

UNITY = "unity"
INTEGER = "int"
_ALPHABETS = (UNITY, INTEGER)


def vertex_index(x, m: int) -> int:
    """Dense-table index of a vertex, first coordinate most significant."""
    idx = 0
    for v in x:
        idx = idx * m + v
    return idx


def index_vertex(idx: int, m: int, n: int) -> tuple[int, ...]:
    digits = [0] * n
    for j in range(n - 1, -1, -1):
        idx, digits[j] = divmod(idx, m)
    return tuple(digits)


def all_vertices(m: int, n: int):
    return itertools.product(range(m), repeat=n)


@functools.lru_cache(maxsize=8)
def _vertex_table(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(all_vertices(m, n))


class MAryFunction:
    """An m-ary function f: [0,m-1]^n -> [0,m-1]."""

    __slots__ = ("m", "n", "alphabet", "table", "oracle")

    def __init__(self, m, n, alphabet, table=None, oracle=None):
        if m < 2:
            raise InvalidParameterError(f"alphabet size must be >= 2, got {m}")
        if n < 1:
            raise InvalidParameterError(f"arity must be >= 1, got {n}")
        if alphabet not in _ALPHABETS:
            raise InvalidParameterError(f"alphabet must be one of {_ALPHABETS}")
        if (table is None) == (oracle is None):
            raise InvalidParameterError("exactly one of table and oracle is required")
        if table is not None:
            table = tuple(table)
            if len(table) != m ** n:
                raise InvalidParameterError(
                    f"dense table must have m^n = {m ** n} entries, got {len(table)}")
            for i, v in enumerate(table):
                if not 0 <= v < m:
                    raise InvalidParameterError(f"label {v} at index {i} outside [0,{m - 1}]")
        self.m = m
        self.n = n
        self.alphabet = alphabet
        self.table = table
        self.oracle = oracle

    @classmethod
    def from_table(cls, m, n, values, alphabet=UNITY):
        return cls(m, n, alphabet, table=values)

    @classmethod
    def from_oracle(cls, m, n, fn, alphabet=UNITY):
        return cls(m, n, alphabet, oracle=fn)

    @classmethod
    def from_callable(cls, m, n, fn, alphabet=UNITY, config: Config = DEFAULT):
        """Materialize fn into a dense table (subject to the dense-size limit)."""
        if m ** n > config.max_dense_size:
            raise CapacityExceededError(
                f"m^n = {m ** n} exceeds max_dense_size = {config.max_dense_size}")
        return cls(m, n, alphabet, table=[fn(x) % m for x in all_vertices(m, n)])

    @property
    def is_dense(self) -> bool:
        return self.table is not None

    def value(self, x) -> int:
        if self.table is not None:
            return self.table[vertex_index(x, self.m)]
        return self.oracle(x)

    def densified(self, config: Config = DEFAULT) -> MAryFunction:
        if self.is_dense:
            return self
        return MAryFunction.from_callable(self.m, self.n, self.oracle, self.alphabet, config)

    def __eq__(self, other):
        if not isinstance(other, MAryFunction):
            return NotImplemented
        if self.table is None or other.table is None:
            return NotImplemented
        return (self.m, self.n, self.alphabet, self.table) == \
            (other.m, other.n, other.alphabet, other.table)

    def __hash__(self):
        return hash((self.m, self.n, self.alphabet, self.table))

    def __repr__(self):
        kind = "dense" if self.is_dense else "oracle"
        return f"MAryFunction(m={self.m}, n={self.n}, alphabet={self.alphabet}, {kind})"


@dataclass(frozen=True)
class ShiftBlock:
    """A sensitive-block candidate: coordinates with their nonzero shifts mod m.

    Multiplicities that are multiples of m have no effect, so blocks are kept
    normalized: shifts lie in [1, m-1] and the support is nonempty.
    """
    m: int
    shifts: tuple[tuple[int, int], ...]  # (coordinate, shift), sorted by coordinate

    def __post_init__(self):
        if not self.shifts:
            raise InvalidParameterError("a shift block needs a nonempty support")
        for coord, shift in self.shifts:
            if coord < 0:
                raise InvalidParameterError(f"coordinate {coord} out of range")
            if not 1 <= shift <= self.m - 1:
                raise InvalidParameterError(f"shift {shift} outside [1,{self.m - 1}]")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(c for c, _ in self.shifts)

    @classmethod
    def from_shifts(cls, m, mapping) -> ShiftBlock | None:
        """Normalize a coordinate->shift mapping; None if every shift cancels."""
        kept = sorted((c, s % m) for c, s in mapping.items() if s % m != 0)
        if not kept:
            return None
        return cls(m, tuple(kept))

    @classmethod
    def from_multiset(cls, m, coords) -> ShiftBlock | None:
        """Normalize a multiset of coordinates (multiplicity = shift)."""
        counts: dict[int, int] = {}
        for c in coords:
            counts[c] = counts.get(c, 0) + 1
        return cls.from_shifts(m, counts)


def apply_block(x, block: ShiftBlock) -> tuple[int, ...]:
    """Shift the block's coordinates of x by their amounts, mod m."""
    m = block.m
    y = list(x)
    for coord, shift in block.shifts:
        if coord >= len(y):
            raise InvalidParameterError(f"coordinate {coord} out of range for arity {len(y)}")
        y[coord] = (y[coord] + shift) % m
    return tuple(y)


def local_sensitivity(f: MAryFunction, x) -> int:
    """Number of distance-1 neighbors of x where f takes a different value."""
    fx = f.value(x)
    m = f.m
    count = 0
    y = list(x)
    for j, xj in enumerate(x):
        for v in range(m):
            if v == xj:
                continue
            y[j] = v
            if f.value(tuple(y)) != fx:
                count += 1
        y[j] = xj
    return count


def sensitivity(f: MAryFunction, config: Config = DEFAULT) -> int:
    """Exact max of local sensitivity over all m^n vertices."""
    size = f.m ** f.n
    if not f.is_dense and size > config.max_dense_size:
        raise CapacityExceededError(
            f"exhaustive sensitivity needs {size} oracle points, limit {config.max_dense_size}; "
            "use sampled_sensitivity for a lower bound")
    if f.is_dense:
        return _sensitivity_dense(f.m, f.n, f.table)
    return max(local_sensitivity(f, x) for x in all_vertices(f.m, f.n))


def _sensitivity_dense(m: int, n: int, table) -> int:
    best = 0
    top = (m - 1) * n
    strides = [m ** (n - 1 - j) for j in range(n)]
    for idx, x in enumerate(_vertex_table(m, n)):
        fx = table[idx]
        count = 0
        for j, stride in enumerate(strides):
            base = idx - x[j] * stride
            for v in range(m):
                if v != x[j] and table[base + v * stride] != fx:
                    count += 1
        if count > best:
            best = count
            if best == top:
                break
    return best


def sampled_sensitivity(f: MAryFunction, samples: int, seed: int = 0) -> int:
    """LOWER BOUND on s(f) from `samples` random vertices; not the exact value."""
    rng = random.Random(seed)
    best = 0
    for _ in range(samples):
        x = tuple(rng.randrange(f.m) for _ in range(f.n))
        best = max(best, local_sensitivity(f, x))
    return best


def local_block_sensitivity(f: MAryFunction, x, config: Config = DEFAULT) -> int:
    """Exact maximum packing of disjoint sensitive blocks at x.

    A support set S admits a sensitive block iff some vertex differing from x
    exactly on S has a different value, so: mark the difference masks of all
    value-changing vertices, close under supersets, then pack disjoint covered
    masks by DP over subsets.
    """
    if not f.is_dense:
        raise InvalidParameterError("block sensitivity needs a dense table")
    n = f.n
    if n > config.max_block_n:
        raise CapacityExceededError(f"arity {n} above bitmask limit {config.max_block_n}")
    m = f.m
    table = f.table
    fx = f.value(x)
    full = (1 << n) - 1

    covered = bytearray(1 << n)
    for idx, y in enumerate(_vertex_table(m, n)):
        if table[idx] != fx:
            mask = 0
            for j in range(n):
                if y[j] != x[j]:
                    mask |= 1 << j
            covered[mask] = 1

    for mask in range(1, 1 << n):
        if not covered[mask]:
            bits = mask
            while bits:
                low = bits & -bits
                if covered[mask ^ low]:
                    covered[mask] = 1
                    break
                bits ^= low

    best = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        top = best[mask ^ low]
        sub = mask
        while sub:
            if sub & low and covered[sub]:
                cand = 1 + best[mask ^ sub]
                if cand > top:
                    top = cand
            sub = (sub - 1) & mask
        best[mask] = top
    return best[full]


def block_sensitivity(f: MAryFunction, config: Config = DEFAULT) -> int:
    """Exact max of local block sensitivity over all vertices."""
    best = 0
    for x in all_vertices(f.m, f.n):
        best = max(best, local_block_sensitivity(f, x, config))
        if best == f.n:
            break
    return best


def shift_function(f: MAryFunction, i: int) -> MAryFunction:
    """The function x -> f(x) + i * sum(x) mod m (a bijection on functions)."""
    m = f.m
    i %= m
    if f.is_dense:
        table = [(fv + i * sum(x)) % m
                 for fv, x in zip(f.table, all_vertices(m, f.n))]
        return MAryFunction(m, f.n, f.alphabet, table=table)
    inner = f.oracle
    return MAryFunction(m, f.n, f.alphabet,
                        oracle=lambda x: (inner(x) + i * sum(x)) % m)


def relabel(f: MAryFunction, target: str) -> MAryFunction:
    """Same label table under the other alphabet; s and bs are unchanged."""
    if target not in _ALPHABETS:
        raise InvalidParameterError(f"alphabet must be one of {_ALPHABETS}")
    return MAryFunction(f.m, f.n, target, table=f.table, oracle=f.oracle)


# -- .mfun text format --------------------------------------------------------

def format_mfun(f: MAryFunction, per_line: int = 20) -> str:
    if not f.is_dense:
        raise InvalidParameterError("only dense functions can be serialized")
    lines = [f"mfun m={f.m} n={f.n} alphabet={f.alphabet}"]
    for i in range(0, len(f.table), per_line):
        lines.append(" ".join(map(str, f.table[i:i + per_line])))
    return "\n".join(lines) + "\n"


def _parse_header(line: str, expected: str) -> dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != expected:
        raise FormatError(f"expected header to start with {expected!r}", line=1)
    fields = {}
    for tok in parts[1:]:
        if "=" not in tok:
            raise FormatError(f"malformed header token {tok!r}", line=1)
        key, _, value = tok.partition("=")
        fields[key] = value
    return fields


def _parse_labelled_table(text: str, keyword: str):
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input", line=1)
    fields = _parse_header(lines[0], keyword)
    try:
        m = int(fields["m"])
        n = int(fields["n"])
    except (KeyError, ValueError):
        raise FormatError("header needs integer fields m= and n=", line=1) from None
    values = []
    for tok in " ".join(lines[1:]).split():
        try:
            values.append(int(tok))
        except ValueError:
            raise FormatError(f"non-integer label {tok!r} at position {len(values) + 1}") from None
    expected = m ** n
    if len(values) != expected:
        raise FormatError(f"expected {expected} labels, got {len(values)}")
    for pos, v in enumerate(values, start=1):
        if not 0 <= v < m:
            raise FormatError(f"label {v} at position {pos} outside [0,{m - 1}]")
    return m, n, fields, values


def parse_mfun(text: str) -> MAryFunction:
    m, n, fields, values = _parse_labelled_table(text, "mfun")
    alphabet = fields.get("alphabet", UNITY)
    if alphabet not in _ALPHABETS:
        raise FormatError(f"unknown alphabet {alphabet!r}", line=1)
    return MAryFunction(m, n, alphabet, table=values)


def read_mfun(path) -> MAryFunction:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_mfun(fh.read())


def write_mfun(f: MAryFunction, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_mfun(f))
