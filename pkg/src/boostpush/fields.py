"""Electromagnetic field values, tensors, frame transformations and providers.

A field value (E, B) is identified with the Lorentz-algebra element whose
boost triple is E and whose rotation triple is B; the resulting matrix is the
mixed-index field tensor driving the equation of motion du/dtau = k * F @ u.
That identification makes the frame-transformation law for fields literally
the adjoint action on algebra elements, which this module exposes both as
the classic axis-aligned closed form and as the general conjugation route.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import FieldSingularityError, SuperluminalVelocityError
from .frames import finite_boost
from .lie import LieParams, adjoint, extract_params, lie_matrix
from .minkowski import METRIC, four_vector, three_vector


_ZERO3 = np.zeros(3)
_ZERO3.setflags(write=False)


class EMField:
    """Electric and magnetic field triples at an event (natural units, c = 1)."""

    __slots__ = ("E", "B")

    def __init__(self, E=(0.0, 0.0, 0.0), B=(0.0, 0.0, 0.0)):
        self.E = three_vector(E)
        self.B = three_vector(B)

    @classmethod
    def _unchecked(cls, e: np.ndarray, b: np.ndarray) -> "EMField":
        # Hot-loop constructor for providers that already hold float arrays.
        obj = object.__new__(cls)
        obj.E = e
        obj.B = b
        return obj

    def __repr__(self) -> str:
        return f"EMField(E={tuple(map(float, self.E))}, B={tuple(map(float, self.B))})"

    def __eq__(self, other):
        if not isinstance(other, EMField):
            return NotImplemented
        return np.array_equal(self.E, other.E) and np.array_equal(self.B, other.B)

    __hash__ = None


def field_matrix(f: EMField) -> np.ndarray:
    """Mixed-index field tensor: the algebra element with boost=E, rotation=B."""
    return lie_matrix(LieParams(f.E, f.B))


def covariant_field_tensor(f: EMField) -> np.ndarray:
    """Fully covariant field tensor, metric @ field_matrix; antisymmetric."""
    return METRIC @ field_matrix(f)


def transform_field_axis1(f: EMField, v: float) -> EMField:
    """Closed-form field transformation for a frame moving at +v along axis 1.

    ``f`` holds the fields in the moving frame; the result holds them in the
    observer frame.  Longitudinal components are unchanged; the transverse
    ones mix with factor gamma:

        E1 = E1',  E2 = g*(E2' + v*B3'),  E3 = g*(E3' - v*B2')
        B1 = B1',  B2 = g*(B2' - v*E3'),  B3 = g*(B3' + v*E2')
    """
    v = float(v)
    if not abs(v) < 1.0:
        raise SuperluminalVelocityError(f"frame velocity |{v}| >= 1")
    g = 1.0 / math.sqrt(1.0 - v * v)
    e1, e2, e3 = f.E
    b1, b2, b3 = f.B
    return EMField(
        (e1, g * (e2 + v * b3), g * (e3 - v * b2)),
        (b1, g * (b2 - v * e3), g * (b3 + v * e2)),
    )


def transform_field_general(f: EMField, frame_velocity) -> EMField:
    """Field transformation for an arbitrary frame velocity via the adjoint action.

    Conjugates the field's algebra element by the finite boost and reads the
    transformed (E, B) back off.  For axis-1 velocities this agrees with
    :func:`transform_field_axis1` to rounding; the adjoint preserves the
    algebra shape, so the extraction cannot fail for a valid boost.
    """
    boost = finite_boost(frame_velocity)
    transformed = extract_params(adjoint(boost, field_matrix(f)), tol=1e-9)
    return EMField(transformed.boost, transformed.rotation)


def coulomb_field(event, q: float, r_min: float = 1e-6) -> EMField:
    """Radial inverse-square electric field of a point source at the spatial origin.

    ``q`` sets the field strength at unit radius.  Evaluation closer to the
    source than ``r_min`` raises :class:`FieldSingularityError`; there is no
    silent softening.
    """
    event = four_vector(event)
    r_vec = event[1:]
    r = float(np.linalg.norm(r_vec))
    if r < r_min:
        raise FieldSingularityError(
            f"field evaluated at radius {r:.3e}, inside the cutoff r_min={r_min:.3e}"
        )
    return EMField(q * r_vec / r**3, (0.0, 0.0, 0.0))


class UniformField:
    """Position-independent field."""

    __slots__ = ("value",)

    def __init__(self, E=(0.0, 0.0, 0.0), B=(0.0, 0.0, 0.0)):
        self.value = EMField(E, B)

    def __repr__(self) -> str:
        return (
            f"UniformField(E={tuple(map(float, self.value.E))}, "
            f"B={tuple(map(float, self.value.B))})"
        )

    def field_at(self, event) -> EMField:
        return self.value


class CoulombField:
    """Point-source provider centred at the spatial origin; see :func:`coulomb_field`."""

    __slots__ = ("q", "r_min")

    def __init__(self, q: float, r_min: float = 1e-6):
        if not r_min > 0.0:
            raise ValueError("r_min must be positive")
        self.q = float(q)
        self.r_min = float(r_min)

    def __repr__(self) -> str:
        return f"CoulombField(q={self.q}, r_min={self.r_min})"

    def field_at(self, event) -> EMField:
        # Same computation as coulomb_field, minus revalidation of events
        # that simulation loops construct themselves.
        r_vec = np.asarray(event, dtype=float)[1:]
        r = float(np.linalg.norm(r_vec))
        if r < self.r_min:
            raise FieldSingularityError(
                f"field evaluated at radius {r:.3e}, inside the cutoff r_min={self.r_min:.3e}"
            )
        return EMField._unchecked(self.q * r_vec / r**3, _ZERO3)


class SuperposedField:
    """Sum of the fields of several providers."""

    __slots__ = ("providers",)

    def __init__(self, providers):
        self.providers = tuple(providers)
        if not self.providers:
            raise ValueError("superposition needs at least one provider")

    def __repr__(self) -> str:
        return f"SuperposedField({list(self.providers)!r})"

    def field_at(self, event) -> EMField:
        values = [p.field_at(event) for p in self.providers]
        e = np.sum([f.E for f in values], axis=0)
        b = np.sum([f.B for f in values], axis=0)
        return EMField._unchecked(e, b)
