"""Complex-amplitude states for single and two-qudit systems.

A qudit is a d-level system with computational basis |0>,...,|d-1>. Single
systems are held as a normalized complex vector, two-qudit systems as a
d_c x d_a matrix whose [x, y] entry is the coefficient of |x>|y>. All values
are immutable after construction; operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

NORM_TOL = 1e-9
SCHMIDT_TOL = 1e-9


def _as_state_vector(amps, dim: int) -> np.ndarray:
    a = np.asarray(amps, dtype=complex)
    if a.shape != (dim,):
        raise ValueError(f"amplitude vector has shape {a.shape}, expected ({dim},)")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("amplitudes must be finite (no NaN/inf)")
    norm_sq = float(np.vdot(a, a).real)
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise ValueError(f"state not normalized: sum |a|^2 = {norm_sq!r}")
    a = a.copy()
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class QuditState:
    """Normalized pure state of a single d-level system."""

    dim: int
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dim must be >= 2, got {self.dim}")
        object.__setattr__(self, "amps", _as_state_vector(self.amps, self.dim))

    def probabilities(self) -> np.ndarray:
        """|amps[x]|^2 for each computational outcome x."""
        return np.abs(self.amps) ** 2


@dataclass(frozen=True, eq=False)
class JointState:
    """Normalized pure state of a control (x) auxiliary qudit pair.

    amps[x, y] is the coefficient of |x>|y>.
    """

    dim_control: int
    dim_aux: int
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.dim_control < 2 or self.dim_aux < 2:
            raise ValueError("both dimensions must be >= 2")
        a = np.asarray(self.amps, dtype=complex)
        if a.shape != (self.dim_control, self.dim_aux):
            raise ValueError(
                f"amplitude matrix has shape {a.shape}, "
                f"expected ({self.dim_control}, {self.dim_aux})"
            )
        if not np.all(np.isfinite(a.view(float))):
            raise ValueError("amplitudes must be finite (no NaN/inf)")
        norm_sq = float(np.sum(np.abs(a) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state not normalized: sum |a|^2 = {norm_sq!r}")
        a = a.copy()
        a.flags.writeable = False
        object.__setattr__(self, "amps", a)

    def control_probabilities(self) -> np.ndarray:
        """Marginal computational-basis distribution of the control qudit."""
        return np.sum(np.abs(self.amps) ** 2, axis=1)


@dataclass(frozen=True)
class SchmidtReport:
    """Schmidt spectrum of a bipartite state.

    rank counts singular values >= SCHMIDT_TOL; a product (unentangled)
    state has rank 1.
    """

    rank: int
    singular_values: tuple[float, ...]
    is_product: bool


def basis_state(dim: int, x: int) -> QuditState:
    """Computational basis state |x> of a d-level system."""
    if not 0 <= x < dim:
        raise IndexError(f"basis index {x} out of range for dim {dim}")
    amps = np.zeros(dim, dtype=complex)
    amps[x] = 1.0
    return QuditState(dim, amps)


def tensor(control: QuditState, aux: QuditState) -> JointState:
    """Product state |control>|aux> as a JointState."""
    return JointState(control.dim, aux.dim, np.outer(control.amps, aux.amps))


def schmidt_analyze(state: JointState) -> SchmidtReport:
    """Schmidt decomposition of a two-qudit state via SVD of its amplitude matrix."""
    sv = np.linalg.svd(state.amps, compute_uv=False)
    sv = np.sort(sv)[::-1]
    rank = int(np.count_nonzero(sv >= SCHMIDT_TOL))
    is_product = bool(np.all(sv[1:] < SCHMIDT_TOL))
    return SchmidtReport(rank=rank, singular_values=tuple(float(s) for s in sv),
                         is_product=is_product)


def fidelity(a: QuditState, b: QuditState) -> float:
    """Overlap probability |<a|b>|^2."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")
    return float(abs(np.vdot(a.amps, b.amps)) ** 2)


def states_equal_up_to_phase(a: QuditState, b: QuditState, tol: float = 1e-12) -> bool:
    """Entrywise equality after fixing each state's first nonzero amplitude to be positive real.

    Global phase is unobservable; this is the comparison used wherever the
    algebra produces an overall sign (e.g. the all-ones constant function).
    """
    if a.dim != b.dim:
        return False
    return np.allclose(_phase_fixed(a.amps), _phase_fixed(b.amps), atol=tol, rtol=0.0)


def _phase_fixed(amps: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(np.abs(amps) > 1e-14)
    if nz.size == 0:
        return amps
    lead = amps[nz[0]]
    return amps * (abs(lead) / lead)
