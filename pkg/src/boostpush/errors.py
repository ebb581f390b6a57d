"""Exception types shared across the package."""


class PhysicsError(Exception):
    """A physical precondition or numerical guard failed at run time."""


class SuperluminalVelocityError(PhysicsError):
    """A frame or boost velocity has magnitude >= 1 (natural units, c = 1)."""


class SingularMatrixError(PhysicsError):
    """Inverse requested for a singular matrix."""


class FieldSingularityError(PhysicsError):
    """A field provider was evaluated inside its singular region."""


class MatrixExpOverflowError(PhysicsError):
    """Matrix exponential argument too large for the accuracy contract."""


class NotLieElementError(PhysicsError):
    """Matrix does not have the boost/rotation generator-basis shape."""


class DegenerateSystemError(PhysicsError):
    """A linear system that should determine the parameters is rank-deficient."""


class InternalConsistencyError(PhysicsError):
    """A residual that must vanish by construction failed its check."""


class ConfigError(ValueError):
    """Invalid scenario configuration; the message names the line and key."""
