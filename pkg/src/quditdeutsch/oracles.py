"""Oracle tables: Boolean constant/balanced functions, hidden-string linear
functions, and multivalued parity functions, plus classification, random and
exhaustive generation, and versioned JSON (de)serialization.

Oracles are immutable lookup tables. Query counting (shared by the quantum
drivers and the classical baselines) goes through CountedOracle: one call to
``value(x)`` is one classical query, one call to ``table()`` is one gate
application, i.e. one quantum query.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Union

import numpy as np

from .hadamard import bitwise_inner, is_power_of_two

MAX_ENUMERATION_DIM = 16  # C(16, 8) = 12870 tables


class OracleClass(Enum):
    CONSTANT = "constant"
    BALANCED = "balanced"
    NEITHER = "neither"


class ParityClass(Enum):
    CONSTANT_PARITY = "constant-parity"
    BALANCED_PARITY = "balanced-parity"
    NEITHER = "neither"


class OracleFormatError(ValueError):
    """Raised for malformed oracle files; the message names the defect."""


class OracleDimensionError(OracleFormatError):
    """Dimension/range defects in an oracle file: d not a power of two,
    values length != d, values out of range. Distinct from pure schema
    errors so callers can map them to distinct diagnostics/exit codes."""


def _check_dim(dim: int) -> None:
    if not is_power_of_two(dim) or dim < 2:
        raise ValueError(f"oracle domain size must be a power of two >= 2, got {dim}")


@dataclass(frozen=True, eq=False)
class BooleanOracle:
    """Total function {0..d-1} -> {0,1} as a lookup table."""

    dim: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        _check_dim(self.dim)
        v = np.asarray(self.values, dtype=np.int64)
        if v.shape != (self.dim,):
            raise ValueError(f"values has shape {v.shape}, expected ({self.dim},)")
        if np.any((v != 0) & (v != 1)):
            raise ValueError("Boolean oracle values must be 0 or 1")
        v = np.ascontiguousarray(v, dtype=np.int8)
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def value(self, x: int) -> int:
        return int(self.values[x])

    def table(self) -> np.ndarray:
        return self.values

    def __eq__(self, other):
        return (isinstance(other, BooleanOracle) and self.dim == other.dim
                and np.array_equal(self.values, other.values))


@dataclass(frozen=True)
class BVOracle:
    """Linear function f_a(x) = a . x (bitwise inner product) on n bits."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.a < (1 << self.n):
            raise ValueError(f"a = {self.a} out of range [0, 2^{self.n})")

    @property
    def dim(self) -> int:
        return 1 << self.n

    def value(self, x: int) -> int:
        return bitwise_inner(self.a, x, self.n)

    def table(self) -> np.ndarray:
        xs = np.arange(self.dim, dtype=np.int64)
        return (np.bitwise_count(xs & self.a) & 1).astype(np.int8)


@dataclass(frozen=True, eq=False)
class MultiOracle:
    """Total function {0..d_c-1} -> {0..d_a-1} as a lookup table."""

    dim: int
    dim_aux: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        _check_dim(self.dim)
        _check_dim(self.dim_aux)
        v = np.asarray(self.values, dtype=np.int64)
        if v.shape != (self.dim,):
            raise ValueError(f"values has shape {v.shape}, expected ({self.dim},)")
        if np.any(v < 0) or np.any(v >= self.dim_aux):
            raise ValueError(f"multivalued oracle values must lie in [0, {self.dim_aux})")
        v = v.copy()  # never freeze a caller-owned buffer
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def value(self, x: int) -> int:
        return int(self.values[x])

    def table(self) -> np.ndarray:
        return self.values

    def parity_oracle(self) -> BooleanOracle:
        """Boolean table of the value parities (even -> 0, odd -> 1)."""
        return BooleanOracle(self.dim, self.values & 1)

    def __eq__(self, other):
        return (isinstance(other, MultiOracle) and self.dim == other.dim
                and self.dim_aux == other.dim_aux
                and np.array_equal(self.values, other.values))


Oracle = Union[BooleanOracle, BVOracle, MultiOracle]


class CountedOracle:
    """Query-counting wrapper around a table lookup.

    The same counter serves both sides of the comparison: classical
    algorithms pay one query per value(x), quantum pipelines pay one query
    per table() (the full-table read is a single oracle-gate application).
    """

    def __init__(self, oracle: Oracle):
        self.oracle = oracle
        self.queries = 0

    def value(self, x: int) -> int:
        self.queries += 1
        return self.oracle.value(x)

    def table(self) -> np.ndarray:
        self.queries += 1
        return self.oracle.table()


def classify_boolean(oracle: BooleanOracle) -> OracleClass:
    """Constant if all values equal, balanced if exactly d/2 ones, else neither."""
    v = oracle.values
    if np.all(v == v[0]):
        return OracleClass.CONSTANT
    if int(np.sum(v)) == oracle.dim // 2:
        return OracleClass.BALANCED
    return OracleClass.NEITHER


def classify_parity(oracle: MultiOracle) -> ParityClass:
    """Constant parity if all values share one parity, balanced if exactly half are even."""
    parities = oracle.values & 1
    if np.all(parities == parities[0]):
        return ParityClass.CONSTANT_PARITY
    if int(np.sum(parities == 0)) == oracle.dim // 2:
        return ParityClass.BALANCED_PARITY
    return ParityClass.NEITHER


def bv_expand(oracle: BVOracle) -> BooleanOracle:
    """Full truth table of f_a over x = 0..2^n - 1."""
    return BooleanOracle(oracle.dim, oracle.table())


def random_oracle(dim: int, oracle_class: OracleClass, seed: int) -> BooleanOracle:
    """Uniformly random oracle of the requested class; deterministic per seed."""
    _check_dim(dim)
    rng = np.random.default_rng(seed)
    if oracle_class is OracleClass.CONSTANT:
        return BooleanOracle(dim, np.full(dim, rng.integers(0, 2)))
    if oracle_class is OracleClass.BALANCED:
        values = np.zeros(dim, dtype=np.int64)
        values[rng.permutation(dim)[: dim // 2]] = 1
        return BooleanOracle(dim, values)
    raise ValueError("random_oracle generates Constant or Balanced oracles only")


def random_parity_oracle(dim: int, dim_aux: int, parity_class: ParityClass,
                         seed: int) -> MultiOracle:
    """Random multivalued oracle with the requested parity class."""
    _check_dim(dim)
    _check_dim(dim_aux)
    rng = np.random.default_rng(seed)
    if parity_class is ParityClass.CONSTANT_PARITY:
        parities = np.full(dim, rng.integers(0, 2))
    elif parity_class is ParityClass.BALANCED_PARITY:
        parities = np.zeros(dim, dtype=np.int64)
        parities[rng.permutation(dim)[: dim // 2]] = 1
    else:
        raise ValueError("random_parity_oracle generates ConstantParity or "
                         "BalancedParity oracles only")
    # Uniform value of the chosen parity: twice a random half-range draw
    # plus the parity bit.
    values = 2 * rng.integers(0, dim_aux // 2, size=dim) + parities
    return MultiOracle(dim, dim_aux, values)


def enumerate_balanced(dim: int) -> list[BooleanOracle]:
    """All C(d, d/2) balanced tables in deterministic (lexicographic) order."""
    _check_dim(dim)
    if dim > MAX_ENUMERATION_DIM:
        raise ValueError(f"enumeration limited to dim <= {MAX_ENUMERATION_DIM}, got {dim}")
    out = []
    for ones in combinations(range(dim), dim // 2):
        values = np.zeros(dim, dtype=np.int64)
        values[list(ones)] = 1
        out.append(BooleanOracle(dim, values))
    return out


# ---------------------------------------------------------------------------
# Versioned JSON oracle files.
#
#   {"version": 1, "kind": "boolean",     "d": int, "values": [int, ...]}
#   {"version": 1, "kind": "multivalued", "d": int, "d_aux": int, "values": [...]}
#   {"version": 1, "kind": "bv",          "d": int, "a": int, "n": int}
#
# Unknown fields are rejected; values length must equal d.
# ---------------------------------------------------------------------------

_FIELDS = {
    "boolean": {"version", "kind", "d", "values"},
    "multivalued": {"version", "kind", "d", "d_aux", "values"},
    "bv": {"version", "kind", "d", "a", "n"},
}


def _is_int(v) -> bool:
    # JSON true/false parse as bool, which is an int subclass; reject them.
    return isinstance(v, int) and not isinstance(v, bool)


def oracle_to_dict(oracle: Oracle) -> dict:
    if isinstance(oracle, BooleanOracle):
        return {"version": 1, "kind": "boolean", "d": oracle.dim,
                "values": [int(v) for v in oracle.values]}
    if isinstance(oracle, MultiOracle):
        return {"version": 1, "kind": "multivalued", "d": oracle.dim,
                "d_aux": oracle.dim_aux, "values": [int(v) for v in oracle.values]}
    if isinstance(oracle, BVOracle):
        return {"version": 1, "kind": "bv", "d": oracle.dim,
                "a": oracle.a, "n": oracle.n}
    raise TypeError(f"not an oracle: {oracle!r}")


def oracle_from_dict(doc: dict) -> Oracle:
    if not isinstance(doc, dict):
        raise OracleFormatError("oracle file must hold a JSON object")
    if doc.get("version") != 1:
        raise OracleFormatError(f"unsupported oracle file version: {doc.get('version')!r}")
    kind = doc.get("kind")
    if kind not in _FIELDS:
        raise OracleFormatError(f"unknown oracle kind: {kind!r}")
    unknown = set(doc) - _FIELDS[kind]
    if unknown:
        raise OracleFormatError(f"unknown field(s) for kind {kind!r}: {sorted(unknown)}")
    missing = _FIELDS[kind] - set(doc)
    if missing:
        raise OracleFormatError(f"missing field(s) for kind {kind!r}: {sorted(missing)}")
    d = doc["d"]
    if not _is_int(d) or not is_power_of_two(d) or d < 2:
        raise OracleDimensionError(f"d must be a power of two >= 2, got {d!r}")
    if kind == "bv":
        n, a = doc["n"], doc["a"]
        if not _is_int(n) or n < 1:
            raise OracleFormatError(f"n must be a positive integer, got {n!r}")
        if d != 1 << n:
            raise OracleDimensionError(f"d = {d} inconsistent with n = {n} (expected {1 << n})")
        if not _is_int(a) or not 0 <= a < d:
            raise OracleDimensionError(f"a = {a!r} out of range [0, {d})")
        return BVOracle(n=n, a=a)
    values = doc["values"]
    if not isinstance(values, list) or not all(_is_int(v) for v in values):
        raise OracleFormatError("values must be a list of integers")
    if len(values) != d:
        raise OracleDimensionError(f"values length {len(values)} does not equal d = {d}")
    if kind == "boolean":
        if any(v not in (0, 1) for v in values):
            raise OracleDimensionError("boolean values must be 0 or 1")
        return BooleanOracle(d, np.array(values))
    d_aux = doc["d_aux"]
    if not _is_int(d_aux) or not is_power_of_two(d_aux) or d_aux < 2:
        raise OracleDimensionError(f"d_aux must be a power of two >= 2, got {d_aux!r}")
    if any(not 0 <= v < d_aux for v in values):
        raise OracleDimensionError(f"multivalued values must lie in [0, {d_aux})")
    return MultiOracle(d, d_aux, np.array(values))


def save_oracle(oracle: Oracle, path_or_stream) -> None:
    """Write an oracle to its versioned JSON form (deterministic bytes)."""
    text = json.dumps(oracle_to_dict(oracle), sort_keys=True, indent=None,
                      separators=(",", ":")) + "\n"
    if hasattr(path_or_stream, "write"):
        path_or_stream.write(text)
    else:
        with open(path_or_stream, "w", encoding="utf-8") as fh:
            fh.write(text)


def load_oracle(path_or_stream) -> Oracle:
    """Read an oracle file; raises OracleFormatError naming any defect."""
    if hasattr(path_or_stream, "read"):
        text = path_or_stream.read()
    else:
        with open(path_or_stream, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OracleFormatError(f"malformed JSON: {exc}") from exc
    return oracle_from_dict(doc)
