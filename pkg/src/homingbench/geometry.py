"""Planar frames, headings, and egocentric home-vector math.

Frame conventions used throughout the package:

* World frame: x points east, y points north, all distances in meters.
* A heading/gaze angle is the angle of a horizontal direction vector
  measured from the north vector [0, 1], counterclockwise positive
  (east is -pi/2, west is +pi/2), normalized to (-pi, pi].
* Egocentric frame: y is forward along the gaze, x is lateral.  The
  home label for an agent whose gaze points straight at the nest is
  [0, 1] by construction.

The label transform is ``rel = R(-omega) @ world`` with

    R(-omega) = [[ cos w,  sin w],
                 [-sin w,  cos w]]

which is the inverse of the standard counterclockwise rotation used by
:func:`rotate2`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

# Samples closer to the nest than this are rejected: the home direction
# is undefined at the nest itself.
NEST_EXCLUSION_RADIUS = 1e-9


class DegenerateLabelError(ValueError):
    """Raised when a home label is requested at (or within 1 nm of) the nest."""


class UndefinedDirectionError(ValueError):
    """Raised when an angle is requested for a zero-length vector."""


def normalize_angle(omega: float) -> float:
    """Wrap an angle in radians into (-pi, pi]."""
    r = math.remainder(omega, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    return r


def angle_difference_deg(a_rad: float, b_rad: float) -> float:
    """Absolute wrapped difference between two angles, in degrees, in [0, 180]."""
    return abs(math.degrees(normalize_angle(a_rad - b_rad)))


@dataclass(frozen=True)
class Position2D:
    """A world-frame position in meters (x east, y north)."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"position components must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: "Position2D") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=np.float64)


@dataclass(frozen=True)
class HeadingAngle:
    """Heading measured from north, counterclockwise positive, in (-pi, pi]."""

    omega: float

    def __post_init__(self):
        if not math.isfinite(self.omega):
            raise ValueError(f"heading must be finite, got {self.omega}")
        object.__setattr__(self, "omega", normalize_angle(self.omega))

    def degrees(self) -> float:
        return math.degrees(self.omega)

    def direction(self) -> np.ndarray:
        """Unit world-frame direction vector for this heading."""
        return np.array([-math.sin(self.omega), math.cos(self.omega)])


@dataclass(frozen=True)
class HomeVector:
    """Egocentric home direction (y forward along gaze, x lateral).

    Ground-truth labels are unit length; raw network outputs may have any
    norm up to sqrt(2) since each component lies in [-1, 1].
    """

    x: float
    y: float

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=np.float64)


def _vec2(v) -> tuple[float, float]:
    if isinstance(v, HomeVector):
        return v.x, v.y
    a = np.asarray(v, dtype=np.float64).reshape(-1)
    if a.size != 2:
        raise ValueError(f"expected a 2-vector, got shape {np.shape(v)}")
    return float(a[0]), float(a[1])


def gaze_angle(gaze_vector) -> HeadingAngle:
    """Heading of a world-frame gaze vector, measured from north.

    Raises :class:`UndefinedDirectionError` for a zero vector.
    """
    gx, gy = _vec2(gaze_vector)
    if gx == 0.0 and gy == 0.0:
        raise UndefinedDirectionError("gaze vector must be nonzero")
    if not (math.isfinite(gx) and math.isfinite(gy)):
        raise ValueError(f"gaze vector must be finite, got ({gx}, {gy})")
    return HeadingAngle(math.atan2(-gx, gy))


def rotate2(v, omega: float) -> np.ndarray:
    """Rotate a 2-vector counterclockwise by ``omega`` radians."""
    x, y = _vec2(v)
    c, s = math.cos(omega), math.sin(omega)
    return np.array([c * x - s * y, s * x + c * y])


def relative_home_vector(pos: Position2D, nest: Position2D, gaze) -> HomeVector:
    """Unit egocentric home direction seen from ``pos`` under ``gaze``.

    ``gaze`` may be a :class:`HeadingAngle` or a plain angle in radians.
    The world-frame nest direction is rotated into the gaze frame so that
    a gaze pointing at the nest yields exactly [0, 1].

    Raises :class:`DegenerateLabelError` when ``pos`` is within 1e-9 m of
    the nest; callers must exclude the nest location from sampling.
    """
    dx = nest.x - pos.x
    dy = nest.y - pos.y
    dist = math.hypot(dx, dy)
    if dist <= NEST_EXCLUSION_RADIUS:
        raise DegenerateLabelError(
            f"home direction undefined {dist:.3e} m from the nest at ({nest.x}, {nest.y})"
        )
    dx /= dist
    dy /= dist
    w = gaze.omega if isinstance(gaze, HeadingAngle) else normalize_angle(float(gaze))
    c, s = math.cos(w), math.sin(w)
    return HomeVector(c * dx + s * dy, -s * dx + c * dy)


def vector_angle(v) -> float:
    """Angle of a 2-vector against the [0, 1] reference axis, in (-pi, pi]."""
    x, y = _vec2(v)
    if x == 0.0 and y == 0.0:
        raise UndefinedDirectionError("angle of a zero vector is undefined")
    return math.atan2(-x, y)


def angular_error(pred, truth) -> float:
    """Absolute angular difference between two direction vectors, in degrees.

    Both arguments may be :class:`HomeVector` or any 2-sequence; only their
    directions matter.  The result is in [0, 180].
    """
    return angle_difference_deg(vector_angle(pred), vector_angle(truth))
