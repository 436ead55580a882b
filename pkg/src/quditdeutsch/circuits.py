"""Oracle gates and the one-query classification pipelines.

Three interchangeable oracle-gate forms:

* FULL_SHIFT  -- two registers; |x>|y> -> |x>|y + f(x) mod d_a>.
* AUX_QUBIT   -- the auxiliary register is a single qubit (d_a = 2); the
                 gate is the f-controlled NOT. Boolean tables only.
* PHASE_ONLY  -- single register; |x> -> (-1)^f(x) |x> (parity of f(x) for
                 multivalued tables). This is the form that scales: the
                 whole pipeline is O(d log d) time and a few length-d
                 buffers.

The pipeline is always: prepare |0>(|1>), Hadamard everything, one oracle
gate, then read the control register either by applying a final Hadamard
and measuring in the computational basis or by measuring directly in the
Hadamard basis {|x_H>}. Both readouts produce the same numbers (H is
self-inverse); results record which convention was used.

All circuit states here are real-valued, so the drivers run on float64
buffers; the public gate operations work on the complex state types.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

import numpy as np

from .hadamard import fwht_inplace
from .oracles import (
    BooleanOracle,
    BVOracle,
    CountedOracle,
    MultiOracle,
    OracleClass,
    ParityClass,
)
from .states import JointState, QuditState

# The ideal outcomes are probability exactly 0 or 1; the tolerance only
# absorbs floating-point noise.
DECISION_TOL = 1e-9

# FULL_SHIFT materializes the d_c x d_a joint state; beyond this many
# entries use AUX_QUBIT or PHASE_ONLY.
MAX_JOINT_ENTRIES = 1 << 24


class OracleMode(Enum):
    FULL_SHIFT = "full-shift"
    AUX_QUBIT = "aux-qubit"
    PHASE_ONLY = "phase-only"


class MeasurementBasis(Enum):
    COMPUTATIONAL = "computational"      # final Hadamard, then computational readout
    HADAMARD_FILTER = "hadamard-filter"  # direct readout in the {|x_H>} basis


@dataclass(frozen=True)
class BVRecovery:
    """Verdict of the hidden-string algorithm: the recovered integer."""

    a: int


Verdict = Union[OracleClass, ParityClass, BVRecovery]


@dataclass(frozen=True, eq=False)
class MeasurementDistribution:
    dim: int
    probs: np.ndarray = field(repr=False)

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float)
        if p.shape != (self.dim,):
            raise ValueError(f"probs has shape {p.shape}, expected ({self.dim},)")
        if np.any(p < -1e-12):
            raise ValueError("probabilities must be nonnegative")
        total = float(p.sum())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        p = np.ascontiguousarray(p)
        p.flags.writeable = False
        object.__setattr__(self, "probs", p)

    @property
    def argmax(self) -> int:
        return int(np.argmax(self.probs))


@dataclass(frozen=True)
class ClassificationResult:
    verdict: Verdict
    distribution: MeasurementDistribution
    quantum_queries: int
    basis: MeasurementBasis


# ---------------------------------------------------------------------------
# Oracle gates on the public state types.
# ---------------------------------------------------------------------------

def _oracle_table(oracle, domain: int) -> np.ndarray:
    table = oracle.table()
    if table.shape != (domain,):
        raise ValueError(
            f"oracle domain size {table.shape[0]} does not match register dim {domain}")
    return table


def apply_controlled_shift(state: JointState, oracle) -> JointState:
    """f-controlled SHIFT: |x>|y> -> |x>|y + f(x) mod d_a>.

    A permutation per control index, hence unitary. The oracle may be a
    BooleanOracle, MultiOracle, or a CountedOracle wrapper (one call here
    is one oracle query).
    """
    table = _oracle_table(oracle, state.dim_control)
    if int(table.max()) >= state.dim_aux:
        raise ValueError(
            f"oracle range (max {int(table.max())}) does not fit in aux dim {state.dim_aux}")
    amps = _shift_rows(np.array(state.amps), table)
    return JointState(state.dim_control, state.dim_aux, amps)


def _shift_rows(amps: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Roll row x of amps by table[x] along the aux axis, grouped by shift."""
    out = np.empty_like(amps)
    for s in np.unique(table):
        rows = table == s
        out[rows] = np.roll(amps[rows], int(s), axis=1)
    return out


def apply_phase_oracle(state: QuditState, oracle) -> QuditState:
    """Single-register oracle gate: |x> -> (-1)^f(x) |x>.

    For multivalued tables the exponent is f(x) itself, so the sign is the
    parity of f(x).
    """
    table = _oracle_table(oracle, state.dim)
    signs = 1.0 - 2.0 * (table & 1)
    return QuditState(state.dim, state.amps * signs)


def measure(state: QuditState, basis: MeasurementBasis = MeasurementBasis.COMPUTATIONAL,
            ) -> MeasurementDistribution:
    """Outcome distribution of a projective measurement of `state`.

    COMPUTATIONAL reads |amps[x]|^2. HADAMARD_FILTER reads the probability
    of finding the system in |x_H>, obtained by applying H (self-inverse)
    and reading computational probabilities.
    """
    if basis is MeasurementBasis.HADAMARD_FILTER:
        amps = np.array(state.amps)
        fwht_inplace(amps, axis=0)
        probs = np.abs(amps) ** 2
    else:
        probs = state.probabilities()
    return MeasurementDistribution(state.dim, probs)


def sample(dist: MeasurementDistribution, seed: int, shots: int) -> dict[int, int]:
    """Seeded outcome histogram: {outcome: count}, only nonzero counts kept."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    rng = np.random.default_rng(seed)
    p = dist.probs / dist.probs.sum()
    counts = rng.multinomial(shots, p)
    hits = np.flatnonzero(counts)
    return {int(x): int(counts[x]) for x in hits}


# ---------------------------------------------------------------------------
# The Fig.-style pipeline on real float64 buffers (every state this circuit
# family produces is real).
# ---------------------------------------------------------------------------

def _pipeline_distribution(counted: CountedOracle, dim: int, mode: OracleMode,
                           dim_aux: int | None) -> np.ndarray:
    """Final control-register distribution after one oracle query."""
    if mode is OracleMode.PHASE_ONLY:
        buf = np.zeros(dim)
        buf[0] = 1.0
        fwht_inplace(buf)                        # |0_H>
        table = counted.table()                  # the one query
        np.multiply(buf, 1 - 2 * (table & 1).astype(np.int8), out=buf)
        fwht_inplace(buf)                        # final H / basis rotation
        np.multiply(buf, buf, out=buf)           # buf is now the distribution
        return buf

    assert dim_aux is not None
    if dim * dim_aux > MAX_JOINT_ENTRIES:
        raise ValueError(
            f"{mode.value} joint state has {dim}x{dim_aux} entries; "
            f"use phase-only or aux-qubit mode at this scale")
    joint = np.zeros((dim, dim_aux))
    joint[0, 1] = 1.0                            # |0>|1>
    fwht_inplace(joint, axis=0)
    fwht_inplace(joint, axis=1)                  # |0_H>|1_H>
    table = counted.table()                      # the one query
    if int(table.max()) >= dim_aux:
        raise ValueError(
            f"oracle range (max {int(table.max())}) does not fit in aux dim {dim_aux}")
    joint = _shift_rows(joint, table)
    fwht_inplace(joint, axis=0)                  # final H on the control
    return np.einsum("xy,xy->x", joint, joint)   # control marginal


def _decide(p0: float, constant: Verdict, balanced: Verdict, neither: Verdict) -> Verdict:
    if p0 > 1.0 - DECISION_TOL:
        return constant
    if p0 < DECISION_TOL:
        return balanced
    return neither  # promise violated


def _resolve_aux_dim(oracle, mode: OracleMode) -> int | None:
    if mode is OracleMode.PHASE_ONLY:
        return None
    if mode is OracleMode.AUX_QUBIT:
        if isinstance(oracle, MultiOracle) and int(oracle.values.max()) > 1:
            raise ValueError(
                "aux-qubit mode shifts modulo 2 and would alias multivalued "
                "outputs; it requires values in {0, 1}")
        return 2
    if isinstance(oracle, MultiOracle):
        return oracle.dim_aux
    return oracle.dim  # both qudits share dimension d


def run_deutsch(oracle: BooleanOracle, mode: OracleMode = OracleMode.FULL_SHIFT,
                basis: MeasurementBasis = MeasurementBasis.COMPUTATIONAL,
                ) -> ClassificationResult:
    """One-query constant-vs-balanced classification.

    Verdict is CONSTANT iff the outcome-0 probability is ~1, BALANCED iff
    it is ~0, NEITHER when the promise was violated.
    """
    counted = CountedOracle(oracle)
    probs = _pipeline_distribution(counted, oracle.dim, mode,
                                   _resolve_aux_dim(oracle, mode))
    verdict = _decide(float(probs[0]), OracleClass.CONSTANT, OracleClass.BALANCED,
                      OracleClass.NEITHER)
    return ClassificationResult(
        verdict=verdict,
        distribution=MeasurementDistribution(oracle.dim, probs),
        quantum_queries=counted.queries,
        basis=basis,
    )


def run_bernstein_vazirani(oracle: BVOracle,
                           mode: OracleMode = OracleMode.PHASE_ONLY,
                           ) -> ClassificationResult:
    """Recover the hidden string a of f_a(x) = a . x with one query.

    The post-oracle control state is H|a>, so the final Hadamard maps it
    back to |a> and the computational readout is deterministic. Default
    mode is PHASE_ONLY, the form that runs at d = 2^20.
    """
    counted = CountedOracle(oracle)
    probs = _pipeline_distribution(counted, oracle.dim, mode,
                                   _resolve_aux_dim(oracle, mode))
    recovered = int(np.argmax(probs))
    return ClassificationResult(
        verdict=BVRecovery(recovered),
        distribution=MeasurementDistribution(oracle.dim, probs),
        quantum_queries=counted.queries,
        basis=MeasurementBasis.COMPUTATIONAL,
    )


def run_parity(oracle: MultiOracle, mode: OracleMode = OracleMode.FULL_SHIFT,
               basis: MeasurementBasis = MeasurementBasis.COMPUTATIONAL,
               ) -> ClassificationResult:
    """One-query constant-vs-balanced parity classification of a multivalued table."""
    counted = CountedOracle(oracle)
    probs = _pipeline_distribution(counted, oracle.dim, mode,
                                   _resolve_aux_dim(oracle, mode))
    verdict = _decide(float(probs[0]), ParityClass.CONSTANT_PARITY,
                      ParityClass.BALANCED_PARITY, ParityClass.NEITHER)
    return ClassificationResult(
        verdict=verdict,
        distribution=MeasurementDistribution(oracle.dim, probs),
        quantum_queries=counted.queries,
        basis=basis,
    )


def aux_minus_amplitudes(dim_aux: int) -> np.ndarray:
    """Amplitudes of |1_H>: alternating +/- 1/sqrt(d_a)."""
    signs = 1.0 - 2.0 * (np.arange(dim_aux) & 1)
    return signs.astype(complex) / math.sqrt(dim_aux)
