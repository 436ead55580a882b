"""Shared test fixtures and independent oracles.

The dense-matrix machinery here is deliberately built from nothing but
np.kron and the 2x2 Hadamard so it cross-checks the library's butterfly
transform and gate implementations without sharing code with them.
"""
from __future__ import annotations

import numpy as np

from quditdeutsch import QuditState

# Frozen 4- and 8-dimensional Hadamard fixtures (times sqrt(d)).
H4_SIGNS = np.array([
    [1,  1,  1,  1],
    [1, -1,  1, -1],
    [1,  1, -1, -1],
    [1, -1, -1,  1],
], dtype=float)

H8_SIGNS = np.array([
    [1,  1,  1,  1,  1,  1,  1,  1],
    [1, -1,  1, -1,  1, -1,  1, -1],
    [1,  1, -1, -1,  1,  1, -1, -1],
    [1, -1, -1,  1,  1, -1, -1,  1],
    [1,  1,  1,  1, -1, -1, -1, -1],
    [1, -1,  1, -1, -1,  1, -1,  1],
    [1,  1, -1, -1, -1, -1,  1,  1],
    [1, -1, -1,  1, -1,  1,  1, -1],
], dtype=float)

# The two reference d=8 multivalued tables (constant / balanced parity).
CONSTANT_PARITY_TABLE = (4, 2, 0, 0, 0, 6, 2, 4)
BALANCED_PARITY_TABLE = (4, 2, 0, 0, 1, 1, 7, 5)


def dense_hadamard(d: int) -> np.ndarray:
    """n-fold Kronecker power of the 2x2 Hadamard (independent construction)."""
    h2 = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)
    h = np.array([[1.0]])
    while h.shape[0] < d:
        h = np.kron(h, h2)
    assert h.shape == (d, d)
    return h


def popcount_parity(x: int, y: int) -> int:
    """Independent bitwise-inner-product oracle."""
    return bin(x & y).count("1") % 2


def shift_gate_matrix(table, d_aux: int) -> np.ndarray:
    """Permutation matrix of |x>|y> -> |x>|y + f(x) mod d_aux> on the kron basis."""
    d = len(table)
    u = np.zeros((d * d_aux, d * d_aux))
    for x in range(d):
        for y in range(d_aux):
            u[x * d_aux + (y + int(table[x])) % d_aux, x * d_aux + y] = 1.0
    return u


def dense_pipeline_probs(table, d_aux: int) -> np.ndarray:
    """Full two-register pipeline by explicit matrix mechanics.

    |0>|1>  ->  (H (x) H)  ->  U_f  ->  (H (x) I)  ->  control marginal.
    """
    d = len(table)
    psi = np.zeros(d * d_aux)
    psi[0 * d_aux + 1] = 1.0
    psi = np.kron(dense_hadamard(d), dense_hadamard(d_aux)) @ psi
    psi = shift_gate_matrix(table, d_aux) @ psi
    psi = np.kron(dense_hadamard(d), np.eye(d_aux)) @ psi
    return (psi.reshape(d, d_aux) ** 2).sum(axis=1)


def dense_phase_pipeline_probs(table) -> np.ndarray:
    """Single-register pipeline: H, sign flip by f parity, H, probabilities."""
    d = len(table)
    h = dense_hadamard(d)
    psi = h[:, 0].copy()
    psi *= np.array([(-1) ** int(v) for v in table], dtype=float)
    psi = h @ psi
    return psi ** 2


def random_qudit_state(dim: int, rng: np.random.Generator) -> QuditState:
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    amps /= np.linalg.norm(amps)
    return QuditState(dim, amps)


def all_boolean_tables(d: int):
    """Every f: {0..d-1} -> {0,1}, as tuples, in numeric order."""
    return [tuple((bits >> x) & 1 for x in range(d)) for bits in range(1 << d)]
