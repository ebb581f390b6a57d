"""Structure-preserving relativistic charged-particle dynamics.

Evolves a particle's four-velocity with exponentials of Lorentz-group
generators: the electric field sources infinitesimal boosts, the magnetic
field infinitesimal spatial rotations.  Frame-transformation machinery
verifies that the boost/rotation parameter transformation laws and the
classic electric/magnetic field transformation laws are the same map.
"""

from .dynamics import (
    InvariantReport,
    ParticleState,
    STEPPER_KINDS,
    Trajectory,
    circular_orbit_speed,
    invariant_report,
    simulate,
    step_euler,
    step_expmap,
    step_rk4,
)
from .errors import (
    ConfigError,
    DegenerateSystemError,
    FieldSingularityError,
    InternalConsistencyError,
    MatrixExpOverflowError,
    NotLieElementError,
    PhysicsError,
    SingularMatrixError,
    SuperluminalVelocityError,
)
from .fields import (
    CoulombField,
    EMField,
    SuperposedField,
    UniformField,
    coulomb_field,
    covariant_field_tensor,
    field_matrix,
    transform_field_axis1,
    transform_field_general,
)
from .frames import finite_boost, scenario_transverse_boost, transform_params
from .lie import (
    BOOST_GENERATORS,
    ROTATION_GENERATORS,
    LieParams,
    adjoint,
    boost_generator,
    commutator,
    extract_params,
    lie_matrix,
    mat_exp,
    rotation_generator,
)
from .minkowski import (
    METRIC,
    four_vector,
    mat_apply,
    mat_inverse,
    mat_mul,
    matrix4,
    minkowski_dot,
    three_vector,
)

__version__ = "0.1.0"

__all__ = [
    "BOOST_GENERATORS",
    "ConfigError",
    "CoulombField",
    "DegenerateSystemError",
    "EMField",
    "FieldSingularityError",
    "InternalConsistencyError",
    "InvariantReport",
    "LieParams",
    "METRIC",
    "MatrixExpOverflowError",
    "NotLieElementError",
    "ParticleState",
    "PhysicsError",
    "ROTATION_GENERATORS",
    "STEPPER_KINDS",
    "SingularMatrixError",
    "SuperluminalVelocityError",
    "SuperposedField",
    "Trajectory",
    "UniformField",
    "adjoint",
    "boost_generator",
    "circular_orbit_speed",
    "commutator",
    "coulomb_field",
    "covariant_field_tensor",
    "extract_params",
    "field_matrix",
    "finite_boost",
    "four_vector",
    "invariant_report",
    "lie_matrix",
    "mat_apply",
    "mat_exp",
    "mat_inverse",
    "mat_mul",
    "matrix4",
    "minkowski_dot",
    "rotation_generator",
    "scenario_transverse_boost",
    "simulate",
    "step_euler",
    "step_expmap",
    "step_rk4",
    "three_vector",
    "transform_field_axis1",
    "transform_field_general",
    "transform_params",
]
