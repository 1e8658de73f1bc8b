"""Capacity limits and run configuration.

Every expensive operation takes an optional Config; the module-level DEFAULT
is used when none is given, so library callers never have to thread one
through unless they want different limits.
"""
from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .errors import FormatError


@dataclass(frozen=True)
class Config:
    max_dense_size: int = 1_000_000     # largest m**n a dense table may have
    max_block_n: int = 16               # bitmask DP limit for block sensitivity
    enumeration_budget: int = 10_000_000  # function-evaluation budget for exhaustive runs
    seed: int = 0
    verbosity: int = 1

    def __post_init__(self):
        for f in fields(self):
            if f.name != "verbosity" and getattr(self, f.name) < 0:
                raise FormatError(f"config value {f.name} must be non-negative")


DEFAULT = Config()

_INT_KEYS = {f.name for f in fields(Config)}


def parse_config(text: str, base: Config = DEFAULT) -> Config:
    """Parse `key=value` lines (blank lines and #-comments allowed) on top of `base`."""
    updates = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FormatError(f"expected key=value, got {line!r}", line=lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _INT_KEYS:
            raise FormatError(f"unknown config key {key!r}", line=lineno)
        try:
            updates[key] = int(value.strip())
        except ValueError:
            raise FormatError(f"config value for {key!r} is not an integer", line=lineno) from None
    return replace(base, **updates)


def as_lines(cfg: Config) -> list[str]:
    """The effective configuration as `key=value` lines, for report headers."""
    return [f"{f.name}={getattr(cfg, f.name)}" for f in fields(Config)]
