"""Finite Lorentz boosts and parameter transformations between inertial frames.

The central operation conjugates an infinitesimal boost/rotation element by a
finite boost, answering how a small change in a particle's four-velocity set
up in one inertial frame is described in another.  A worked two-frame
scenario poses the same question as an explicit overdetermined linear system
and serves as an independent cross-check on the adjoint route.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    DegenerateSystemError,
    InternalConsistencyError,
    SuperluminalVelocityError,
)
from .lie import LieParams, adjoint, extract_params, lie_matrix
from .minkowski import four_vector, three_vector


def finite_boost(v) -> np.ndarray:
    """Finite boost matrix for frame velocity v, |v| < 1.

    Maps four-vector components measured in a frame moving with velocity v
    to components in the observer frame: the rest four-velocity (1, 0, 0, 0)
    goes to (gamma, gamma*v).  Equals exp(zeta * n.K) with rapidity
    zeta = atanh(|v|) along the unit direction n.
    """
    v = three_vector(v)
    speed = float(np.linalg.norm(v))
    if not speed < 1.0:
        raise SuperluminalVelocityError(f"boost speed {speed} >= 1")
    out = np.eye(4)
    if speed == 0.0:
        return out
    g = 1.0 / math.sqrt(1.0 - speed * speed)
    n = v / speed
    out[0, 0] = g
    out[0, 1:] = g * v
    out[1:, 0] = g * v
    out[1:, 1:] += (g - 1.0) * np.outer(n, n)
    return out


def transform_params(p: LieParams, frame_velocity, tol: float = 1e-9) -> LieParams:
    """Boost/rotation parameters of the same infinitesimal change, one frame over.

    Conjugates the element by ``finite_boost(frame_velocity)``.  For an
    axis-1 frame velocity this reproduces the closed forms: longitudinal
    components pass through unchanged while the transverse ones mix with a
    factor gamma, exactly as electric and magnetic fields do.
    """
    boost = finite_boost(frame_velocity)
    return extract_params(adjoint(boost, lie_matrix(p)), tol=tol)


_SCENARIO_RESIDUAL_LIMIT = 1e-10


def scenario_transverse_boost(v: float, u_moving, delta_v2: float) -> tuple[float, float]:
    """Two-frame experiment relating a small transverse boost across frames.

    A test particle lives in a frame that moves at +v along axis 1 relative
    to the observer.  In its frame it has four-velocity ``u_moving`` of the
    form (u0, 0, u2, 0) and receives a small axis-2 velocity change through
    the first-order boost operator I + delta_v2 * K_2.  Both four-velocities
    are mapped to the observer frame, and the infinitesimal element
    dv2 * K_2 - dphi3 * S_3 accounting for the observed change is solved for
    by least squares over the three non-trivial component equations.

    Returns ``(dv2, dphi3)`` as seen by the observer.  The 3x2 system is
    consistent by construction; its residual is asserted below 1e-10.  A
    rank-deficient system (u2 = 0 leaves the rotation angle indeterminate)
    is reported as underdetermined.
    """
    v = float(v)
    if not abs(v) < 1.0:
        raise SuperluminalVelocityError(f"frame velocity |{v}| >= 1")
    u = four_vector(u_moving)
    if u[1] != 0.0 or u[3] != 0.0:
        raise ValueError("u_moving must have zero components along axes 1 and 3")
    d = float(delta_v2)

    step = np.eye(4)
    step[0, 2] = d
    step[2, 0] = d
    u_next = step @ u

    boost = finite_boost((v, 0.0, 0.0))
    w = boost @ u
    w_next = boost @ u_next
    dw = w_next - w

    system = np.array([[w[2], 0.0], [0.0, w[2]], [w[0], -w[1]]])
    rhs = dw[:3]
    solution, _, rank, _ = np.linalg.lstsq(system, rhs, rcond=None)
    if rank < 2:
        raise DegenerateSystemError(
            "underdetermined system: the rotation angle is indeterminate for this input"
        )
    residual = float(np.linalg.norm(system @ solution - rhs))
    if residual > _SCENARIO_RESIDUAL_LIMIT:
        raise InternalConsistencyError(
            f"scenario linear-system residual {residual:.3e} exceeds {_SCENARIO_RESIDUAL_LIMIT}"
        )
    return float(solution[0]), float(solution[1])
