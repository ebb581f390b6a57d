"""Four-vector and 4x4 matrix kernel with the Minkowski metric.

Conventions, fixed once for the whole package: natural units with c = 1,
metric signature (+, -, -, -), time component first, matrices act on column
four-vectors (element (r, c) multiplies component c).
"""

from __future__ import annotations

import numpy as np

from .errors import SingularMatrixError

#: Metric matrix diag(1, -1, -1, -1); index lowering is explicit
#: left-multiplication by this matrix.
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)


def four_vector(x) -> np.ndarray:
    """Coerce to a finite float array of shape (4,)."""
    v = np.asarray(x, dtype=float)
    if v.shape != (4,):
        raise ValueError(f"expected 4 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("four-vector components must be finite")
    return v


def three_vector(x) -> np.ndarray:
    """Coerce to a finite float array of shape (3,)."""
    v = np.asarray(x, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("three-vector components must be finite")
    return v


def matrix4(m) -> np.ndarray:
    """Coerce to a finite float array of shape (4, 4)."""
    a = np.asarray(m, dtype=float)
    if a.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def minkowski_dot(a, b) -> float:
    """Bilinear form a0*b0 - a1*b1 - a2*b2 - a3*b3."""
    a = four_vector(a)
    b = four_vector(b)
    return float(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3])


def mat_apply(m, u) -> np.ndarray:
    """Matrix-vector product M @ u."""
    return matrix4(m) @ four_vector(u)


def mat_mul(a, b) -> np.ndarray:
    """Matrix product A @ B."""
    return matrix4(a) @ matrix4(b)


def mat_inverse(a) -> np.ndarray:
    """Inverse of a nonsingular 4x4 matrix."""
    a = matrix4(a)
    try:
        return np.linalg.inv(a)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError("matrix is singular, cannot invert") from exc
