"""The qudit Hadamard transform H_d for d = 2^n.

H_d has entries (-1)^(x . x') / sqrt(d) where x . x' is the bitwise inner
product (parity of popcount(x AND x')), bit i being the coefficient of 2^i.
It is real, symmetric, orthogonal, self-inverse, and equals the n-fold
tensor power of H_2. The dense matrix is provided for verification at small
d; everything else goes through the O(d log d) in-place butterfly.
"""
from __future__ import annotations

import numpy as np

from .states import QuditState

# Dense-matrix guard: 4096^2 doubles = 128 MB is already silly for a
# verification-only artifact.
MAX_DENSE_DIM = 4096


def is_power_of_two(d: int) -> bool:
    return d >= 1 and (d & (d - 1)) == 0


def _require_power_of_two(d: int) -> int:
    if not is_power_of_two(d) or d < 2:
        raise ValueError(f"dimension must be a power of two >= 2, got {d}")
    return int(d).bit_length() - 1


def bitwise_inner(x, x_prime, n: int | None = None):
    """Parity of the bitwise AND of x and x' (the mod-2 sum of x_i * x'_i).

    Accepts scalars or integer arrays. When n is given, inputs must lie in
    [0, 2^n).
    """
    x = np.asarray(x)
    xp = np.asarray(x_prime)
    if n is not None:
        hi = 1 << n
        if np.any(x < 0) or np.any(xp < 0) or np.any(x >= hi) or np.any(xp >= hi):
            raise ValueError(f"arguments must lie in [0, 2^{n})")
    out = np.bitwise_count(np.bitwise_and(x, xp)) & 1
    if out.ndim == 0:
        return int(out)
    return out


def hadamard_matrix(dim: int) -> np.ndarray:
    """Dense H_d with entries (-1)^(x . x') / sqrt(d).

    Verification-only; algorithms use the fast transform.
    """
    n = _require_power_of_two(dim)
    if dim > MAX_DENSE_DIM:
        raise ValueError(f"dense matrix limited to dim <= {MAX_DENSE_DIM}, got {dim}")
    xs = np.arange(dim)
    signs = 1.0 - 2.0 * bitwise_inner(xs[:, None], xs[None, :], n)
    return signs / np.sqrt(dim)


def fwht_inplace(a: np.ndarray, axis: int = 0) -> None:
    """Orthonormal Walsh-Hadamard transform of `a` along `axis`, in place.

    Standard butterfly: log2(d) passes, O(d log d) time, no auxiliary
    allocations of order d (the 1/sqrt(d) normalization is a final in-place
    scaling, so the transform is an involution). `a` must be C-contiguous
    and float or complex; the transform axis length must be a power of two.
    """
    d = a.shape[axis]
    _require_power_of_two(d)
    if not a.flags.c_contiguous:
        raise ValueError("fwht_inplace requires a C-contiguous array")
    if not np.issubdtype(a.dtype, np.inexact):
        raise ValueError(f"fwht_inplace requires a float or complex array, got {a.dtype}")
    axis = axis % a.ndim
    head, tail = a.shape[:axis], a.shape[axis + 1:]
    h = 1
    while h < d:
        # Split the transform axis into (blocks, 2, h); splitting an axis of
        # a C-contiguous array always yields a view.
        v = a.reshape(head + (d // (2 * h), 2, h) + tail)
        x = v[(slice(None),) * (axis + 1) + (0,)]
        y = v[(slice(None),) * (axis + 1) + (1,)]
        x += y        # x = x0 + y0
        y *= -2.0
        y += x        # y = (x0 + y0) - 2*y0 = x0 - y0
        h *= 2
    a *= 1.0 / np.sqrt(d)


def apply_hadamard(state: QuditState) -> QuditState:
    """H_d |state> through the fast transform."""
    out = np.array(state.amps)  # writable output buffer
    fwht_inplace(out, axis=0)
    return QuditState(state.dim, out)
