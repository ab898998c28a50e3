"""Row-minor coordinates of 4-by-2 frames and the flat-case coordinate changes.

A 4-by-2 frame A has six 2-by-2 row minors p12, p13, p14, p23, p24, p34
(pij = det of the block on rows i-1 and j-1).  For orthonormal columns
they satisfy

    p12*p34 - p13*p24 + p14*p23 = 0        (quadric relation)
    p12^2 + ... + p34^2         = 1        (normalization)

and determine the column span of A up to an overall sign.  The linear
change of variables

    x1 = p12 + p34    y1 = p13 - p24    z1 = p14 + p23
    x2 = p12 - p34    y2 = p13 + p24    z2 = p14 - p23

turns normalization +/- twice the relation into two unit spheres,

    x1^2 + y1^2 + z1^2 = 1    and    x2^2 + y2^2 + z2^2 = 1,

and the best-block bound for 4-by-2 frames becomes the six quadratic-form
constraints  x1^2 +/- x1*x2 + x2^2 <= 3/4  (same for the y and z pairs).
Each nonnegative pair (a, b) is finally written in elliptic-sector form

    a = R * sin(t + pi/3),    b = R * sin(t - pi/3),

with radius R >= 0 and sector angle t in [pi/3, 2pi/3]; the forms collapse
to a^2 + a*b + b^2 = (3/4) R^2, so the constraint pair is exactly R <= 1.
The sums of squared sines of the three sector angles shifted by +/- pi/3
(eq3_sums) drive the final consistency argument in the certificate module.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, NegativeComponent
from .stiefel import StiefelMatrix

__all__ = [
    "PlueckerCoords",
    "TransformedVars",
    "EllipticParams",
    "SystemReport",
    "pluecker4x2",
    "invariant_residuals",
    "to_transformed",
    "from_transformed",
    "eval_system",
    "nonnegative_representative",
    "elliptic_pair",
    "elliptic_params",
    "from_elliptic",
    "eq3_sums",
    "DEFAULT_FORM_BOUND",
]

_THIRD_PI = math.pi / 3.0
_SQRT3 = math.sqrt(3.0)

# Sharp constant for the six quadratic forms in the transformed variables.
# The certificate's transform-bound check verifies it empirically.
DEFAULT_FORM_BOUND = 0.75


@dataclass(frozen=True)
class PlueckerCoords:
    """The six 2-by-2 row minors of a 4-by-2 frame, in index order."""

    p12: float
    p13: float
    p14: float
    p23: float
    p24: float
    p34: float

    def as_tuple(self):
        return (self.p12, self.p13, self.p14, self.p23, self.p24, self.p34)

    def to_dict(self):
        return {
            "p12": self.p12,
            "p13": self.p13,
            "p14": self.p14,
            "p23": self.p23,
            "p24": self.p24,
            "p34": self.p34,
        }


@dataclass(frozen=True)
class TransformedVars:
    """Sphere coordinates (x1, x2, y1, y2, z1, z2) of a minor vector."""

    x1: float
    x2: float
    y1: float
    y2: float
    z1: float
    z2: float

    def as_tuple(self):
        return (self.x1, self.x2, self.y1, self.y2, self.z1, self.z2)

    def pairs(self):
        """The three coordinate pairs ((x1, x2), (y1, y2), (z1, z2))."""
        return ((self.x1, self.x2), (self.y1, self.y2), (self.z1, self.z2))


@dataclass(frozen=True)
class EllipticParams:
    """Radii and sector angles of the three coordinate pairs.

    Radii are >= 0; angles are in radians and lie in [pi/3, 2pi/3]
    whenever the corresponding radius is positive (angle pi/2 by
    convention at radius zero).
    """

    radius_x: float
    radius_y: float
    radius_z: float
    angle_x: float
    angle_y: float
    angle_z: float

    def radii(self):
        return (self.radius_x, self.radius_y, self.radius_z)

    def angles(self):
        return (self.angle_x, self.angle_y, self.angle_z)


@dataclass(frozen=True)
class SystemReport:
    """Residuals and form values of the sphere-and-forms system.

    qform_values holds the six quadratic forms in the fixed order
    (x plus, x minus, y plus, y minus, z plus, z minus), where "plus"
    is a^2 + a*b + b^2 on the pair (a, b) and "minus" flips the cross
    term.  ``satisfied`` is True iff both sphere residuals are within
    ``tol`` and every form is at most ``bound_used + tol``.
    """

    sphere1_residual: float
    sphere2_residual: float
    qform_values: tuple
    bound_used: float
    satisfied: bool

    def to_dict(self):
        return {
            "sphere1_residual": self.sphere1_residual,
            "sphere2_residual": self.sphere2_residual,
            "qform_values": list(self.qform_values),
            "bound_used": self.bound_used,
            "satisfied": self.satisfied,
        }


def pluecker4x2(a):
    """The six row minors of a 4-by-2 frame.

    Parameters
    ----------
    a : StiefelMatrix
        Must be 4-by-2.

    Returns
    -------
    PlueckerCoords
    """
    if not isinstance(a, StiefelMatrix):
        raise TypeError("pluecker4x2 expects a StiefelMatrix")
    if (a.n, a.k) != (4, 2):
        raise DimensionError(f"expected a 4x2 frame, got {a.n}x{a.k}")
    r = a.values

    def minor(i, j):
        return float(r[i, 0] * r[j, 1] - r[i, 1] * r[j, 0])

    return PlueckerCoords(
        p12=minor(0, 1),
        p13=minor(0, 2),
        p14=minor(0, 3),
        p23=minor(1, 2),
        p24=minor(1, 3),
        p34=minor(2, 3),
    )


def invariant_residuals(p):
    """Absolute residuals of the quadric relation and the normalization.

    Returns
    -------
    (float, float)
        (|p12*p34 - p13*p24 + p14*p23|, |sum of squares - 1|).
    """
    rel = p.p12 * p.p34 - p.p13 * p.p24 + p.p14 * p.p23
    norm = sum(v * v for v in p.as_tuple())
    return (abs(rel), abs(norm - 1.0))


def to_transformed(p):
    """Sphere coordinates of a minor vector (sums and differences of pairs)."""
    return TransformedVars(
        x1=p.p12 + p.p34,
        x2=p.p12 - p.p34,
        y1=p.p13 - p.p24,
        y2=p.p13 + p.p24,
        z1=p.p14 + p.p23,
        z2=p.p14 - p.p23,
    )


def from_transformed(v):
    """Exact linear inverse of :func:`to_transformed`."""
    return PlueckerCoords(
        p12=(v.x1 + v.x2) / 2.0,
        p13=(v.y1 + v.y2) / 2.0,
        p14=(v.z1 + v.z2) / 2.0,
        p23=(v.z1 - v.z2) / 2.0,
        p24=(v.y2 - v.y1) / 2.0,
        p34=(v.x1 - v.x2) / 2.0,
    )


def eval_system(v, bound=DEFAULT_FORM_BOUND, tol=1e-12):
    """Evaluate the sphere equations and the six quadratic forms.

    Parameters
    ----------
    v : TransformedVars
    bound : float, optional
        Constant on the right of each form constraint; must be positive.
        The default 3/4 is the sharp constant (see DEFAULT_FORM_BOUND).
    tol : float, optional
        Acceptance tolerance for residuals and form excess.

    Returns
    -------
    SystemReport
    """
    if not bound > 0.0:
        raise ValueError(f"bound must be positive, got {bound}")
    s1 = v.x1 * v.x1 + v.y1 * v.y1 + v.z1 * v.z1
    s2 = v.x2 * v.x2 + v.y2 * v.y2 + v.z2 * v.z2
    forms = []
    for a, b in v.pairs():
        sq = a * a + b * b
        forms.append(sq + a * b)
        forms.append(sq - a * b)
    forms = tuple(forms)
    r1 = abs(s1 - 1.0)
    r2 = abs(s2 - 1.0)
    satisfied = r1 <= tol and r2 <= tol and all(f <= bound + tol for f in forms)
    return SystemReport(
        sphere1_residual=r1,
        sphere2_residual=r2,
        qform_values=forms,
        bound_used=bound,
        satisfied=satisfied,
    )


def nonnegative_representative(v):
    """Map to the nonnegative orthant by sign flips.

    Negating any single coordinate swaps the plus and minus forms of its
    pair and leaves the sphere equations unchanged, so the constraint
    system cannot tell representatives apart; componentwise absolute
    value picks the canonical one.
    """
    return TransformedVars(*(abs(c) for c in v.as_tuple()))


def elliptic_pair(a, b):
    """Radius and sector angle of one nonnegative pair.

    Solves a = R*sin(t + pi/3), b = R*sin(t - pi/3) exactly:
    R*sin(t) = a + b and sqrt(3)*R*cos(t) = a - b, so atan2 recovers t
    and the hypotenuse recovers R.  For a, b >= 0 the angle always lands
    in [pi/3, 2pi/3] (clamped against rounding at the sector edges);
    the zero pair maps to (0, pi/2) by convention.

    Raises
    ------
    NegativeComponent
        If either input is negative (inputs are rejected, not clamped).
    """
    if a < 0.0 or b < 0.0:
        raise NegativeComponent(f"pair components must be >= 0, got ({a}, {b})")
    u = a + b
    w = (a - b) / _SQRT3
    radius = math.hypot(u, w)
    if radius == 0.0:
        return (0.0, math.pi / 2.0)
    angle = math.atan2(u, w)
    angle = min(max(angle, _THIRD_PI), 2.0 * _THIRD_PI)
    return (radius, angle)


def elliptic_params(v):
    """Elliptic-sector parameters of nonnegative sphere coordinates.

    Parameters
    ----------
    v : TransformedVars
        All six components must be >= 0; apply
        :func:`nonnegative_representative` first if needed.

    Returns
    -------
    EllipticParams

    Raises
    ------
    NegativeComponent
        If any component is negative.
    """
    (rx, ax), (ry, ay), (rz, az) = (elliptic_pair(a, b) for a, b in v.pairs())
    return EllipticParams(
        radius_x=rx, radius_y=ry, radius_z=rz, angle_x=ax, angle_y=ay, angle_z=az
    )


def from_elliptic(params):
    """Sphere coordinates from radii and sector angles (inverse map)."""
    (rx, ry, rz) = params.radii()
    (ax, ay, az) = params.angles()
    return TransformedVars(
        x1=rx * math.sin(ax + _THIRD_PI),
        x2=rx * math.sin(ax - _THIRD_PI),
        y1=ry * math.sin(ay + _THIRD_PI),
        y2=ry * math.sin(ay - _THIRD_PI),
        z1=rz * math.sin(az + _THIRD_PI),
        z2=rz * math.sin(az - _THIRD_PI),
    )


def eq3_sums(x, y, z):
    """Sums of squared sines of the angles shifted by plus and minus pi/3.

    Accepts scalars or broadcastable arrays; returns (s_plus, s_minus)
    where s_plus = sin^2(x + pi/3) + sin^2(y + pi/3) + sin^2(z + pi/3)
    and s_minus uses the minus shift.
    """
    s_plus = (
        np.sin(x + _THIRD_PI) ** 2
        + np.sin(y + _THIRD_PI) ** 2
        + np.sin(z + _THIRD_PI) ** 2
    )
    s_minus = (
        np.sin(x - _THIRD_PI) ** 2
        + np.sin(y - _THIRD_PI) ** 2
        + np.sin(z - _THIRD_PI) ** 2
    )
    return (s_plus, s_minus)
