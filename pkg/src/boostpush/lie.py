"""Lorentz-group generators and Lie-algebra machinery.

The six generators are the boost triple K_1..K_3 (symmetric, mixing the time
axis with one spatial axis) and the rotation triple S_1..S_3 (antisymmetric,
purely spatial).  An algebra element is identified by two parameter triples,
a boost rate epsilon and a rotation rate b, and takes the fixed matrix form

    [[0,   e1,  e2,  e3],
     [e1,  0,   b3, -b2],
     [e2, -b3,  0,   b1],
     [e3,  b2, -b1,  0]]

which is epsilon . K - b . S.  All conversions between parameter triples and
matrices go through :func:`lie_matrix` / :func:`extract_params`, so the sign
convention lives in exactly one place.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import MatrixExpOverflowError, NotLieElementError
from .minkowski import mat_inverse, matrix4, three_vector


def boost_generator(axis: int) -> np.ndarray:
    """Boost generator K_axis: 1 at (0, axis) and (axis, 0), zero elsewhere."""
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")
    k = np.zeros((4, 4))
    k[0, axis] = 1.0
    k[axis, 0] = 1.0
    return k


def rotation_generator(axis: int) -> np.ndarray:
    """Rotation generator S_axis, acting in the spatial plane orthogonal to the axis."""
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")
    s = np.zeros((4, 4))
    i, j = {1: (2, 3), 2: (3, 1), 3: (1, 2)}[axis]
    s[i, j] = -1.0
    s[j, i] = 1.0
    return s


BOOST_GENERATORS = tuple(boost_generator(i) for i in (1, 2, 3))
ROTATION_GENERATORS = tuple(rotation_generator(i) for i in (1, 2, 3))
for _g in BOOST_GENERATORS + ROTATION_GENERATORS:
    _g.setflags(write=False)
del _g


class LieParams:
    """Boost/rotation parameter triples identifying a Lorentz-algebra element."""

    __slots__ = ("boost", "rotation")

    def __init__(self, boost=(0.0, 0.0, 0.0), rotation=(0.0, 0.0, 0.0)):
        self.boost = three_vector(boost)
        self.rotation = three_vector(rotation)

    def __repr__(self) -> str:
        return (
            f"LieParams(boost={tuple(map(float, self.boost))}, "
            f"rotation={tuple(map(float, self.rotation))})"
        )


def lie_matrix(p: LieParams) -> np.ndarray:
    """Matrix of the algebra element boost . K - rotation . S."""
    e1, e2, e3 = p.boost
    b1, b2, b3 = p.rotation
    return np.array(
        [
            [0.0, e1, e2, e3],
            [e1, 0.0, b3, -b2],
            [e2, -b3, 0.0, b1],
            [e3, b2, -b1, 0.0],
        ]
    )


def extract_params(m, tol: float = 1e-9) -> LieParams:
    """Read the parameter triples back off an algebra-element matrix.

    The matrix must have the :func:`lie_matrix` shape within the absolute
    tolerance ``tol``: zero diagonal, symmetric time row/column and
    antisymmetric spatial block.  Entries are read off directly, without a
    symmetrizing average.
    """
    m = matrix4(m)
    spatial = m[1:, 1:]
    deviation = max(
        float(np.max(np.abs(np.diag(m)))),
        float(np.max(np.abs(m[0, 1:] - m[1:, 0]))),
        float(np.max(np.abs(spatial + spatial.T))),
    )
    if deviation > tol:
        raise NotLieElementError(
            "not a Lorentz-algebra element in the boost/rotation basis: "
            f"shape deviation {deviation:.3e} exceeds tolerance {tol:.3e}"
        )
    return LieParams(
        (m[0, 1], m[0, 2], m[0, 3]),
        (m[2, 3], -m[1, 3], m[1, 2]),
    )


#: Arguments with inf-norm beyond this are rejected rather than silently
#: losing accuracy to repeated squaring.
_EXP_NORM_LIMIT = 32.0


def mat_exp(m, t: float = 1.0) -> np.ndarray:
    """exp(t * M) for a 4x4 matrix.

    Scaling-and-squaring on a truncated series, with closed forms for pure
    boost and pure rotation generators; both routes agree to better than
    1e-13.  Raises :class:`MatrixExpOverflowError` when ||t*M|| exceeds the
    range for which that accuracy can be guaranteed.
    """
    a = matrix4(m) * float(t)
    norm = float(np.linalg.norm(a, np.inf))
    if not math.isfinite(norm) or norm > _EXP_NORM_LIMIT:
        raise MatrixExpOverflowError(
            f"matrix exponential argument norm {norm:.3e} exceeds limit {_EXP_NORM_LIMIT}"
        )
    closed = _exp_closed_form(a)
    if closed is not None:
        return closed
    return _exp_series(a, norm)


def _exp_closed_form(a: np.ndarray):
    # Exact-zero structure tests: generator matrices built from field values
    # have exact zeros in the complementary block, so no tolerance is needed.
    if np.any(np.diag(a) != 0.0):
        return None
    spatial = a[1:, 1:]
    if not spatial.any() and np.array_equal(a[0, 1:], a[1:, 0]):
        # Pure boost: (n.K)^3 = n.K for a unit direction n.
        zeta = float(np.linalg.norm(a[0, 1:]))
        if zeta == 0.0:
            return np.eye(4)
        g = a / zeta
        # cosh(z) - 1 written as 2*sinh(z/2)^2 to keep small entries accurate.
        return np.eye(4) + math.sinh(zeta) * g + (2.0 * math.sinh(0.5 * zeta) ** 2) * (g @ g)
    if (
        not a[0].any()
        and not a[:, 0].any()
        and np.array_equal(spatial.T, -spatial)
    ):
        # Pure rotation: the spatial block is a cross-product matrix, so the
        # angle-axis (Rodrigues) form applies.
        theta = math.sqrt(a[3, 2] ** 2 + a[1, 3] ** 2 + a[2, 1] ** 2)
        if theta == 0.0:
            return np.eye(4)
        g = a / theta
        return np.eye(4) + math.sin(theta) * g + (2.0 * math.sin(0.5 * theta) ** 2) * (g @ g)
    return None


def _exp_series(a: np.ndarray, norm: float) -> np.ndarray:
    squarings = 0
    if norm > 0.5:
        squarings = max(0, int(math.ceil(math.log2(norm / 0.5))))
        a = a / (2.0**squarings)
    out = np.eye(4)
    term = np.eye(4)
    for n in range(1, 40):
        term = (a @ term) / n
        out = out + term
        if float(np.max(np.abs(term))) < 1e-18:
            break
    for _ in range(squarings):
        out = out @ out
    return out


def commutator(a, b) -> np.ndarray:
    """AB - BA."""
    a = matrix4(a)
    b = matrix4(b)
    return a @ b - b @ a


def adjoint(l, m) -> np.ndarray:
    """Conjugation L @ M @ inv(L): the element M as seen through the frame map L.

    When M is an algebra element and L a Lorentz transformation, the result
    is again an algebra element of the same basis shape.
    """
    l = matrix4(l)
    m = matrix4(m)
    return l @ m @ mat_inverse(l)
