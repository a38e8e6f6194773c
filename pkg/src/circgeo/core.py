"""Tangent-space kernel for the circulant geometry.

Everything lives in one fixed 3-dimensional coordinate system. The two basic
objects are the cyclic coordinate shift (a permutation whose third power is
the identity) and a positive definite circulant metric g = circ(a, b, b).
The shift is an isometry of every such g, and together they induce an
indefinite symmetric bilinear form f(u, v) = g(u, qv) + g(qu, v) that splits
nonzero vectors into spacelike, null and timelike.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "GeometryError",
    "ZeroVectorError",
    "InvalidMetricError",
    "DegenerateAngleError",
    "AngleDomainError",
    "BadSampleCountsError",
    "InvariantViolation",
    "CausalCharacter",
    "CirculantMetric",
    "ToleranceConfig",
    "DEFAULT_TOLERANCES",
    "as_vector",
    "fmt_float",
    "q_apply",
    "g_inner",
    "g_norm",
    "cos_phi",
    "clamp_cos",
    "phi_angle",
    "f_inner",
    "causal_character",
]


class GeometryError(ValueError):
    """Base class for domain errors raised by this package."""


class ZeroVectorError(GeometryError):
    """A nonzero tangent vector was required."""


class InvalidMetricError(GeometryError):
    """Metric coefficients do not define a positive definite circulant form."""


class DegenerateAngleError(GeometryError):
    """The vector and its shift are parallel, so they span no 2-plane."""


class AngleDomainError(GeometryError):
    """Angle outside the admissible interval for the shift-plane geometry."""


class BadSampleCountsError(GeometryError):
    """Surface sampling needs at least 2 profile rows and 3 angular columns."""


class InvariantViolation(RuntimeError):
    """An internally guaranteed numerical invariant failed by more than its band."""


class CausalCharacter(Enum):
    """Trichotomy of a nonzero vector by the sign of f(u, u)."""

    SPACELIKE = "spacelike"
    NULL = "null"
    TIMELIKE = "timelike"


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical bands: eps_null for sign/null tests, eps_angle for angle boundaries."""

    eps_null: float = 1e-9
    eps_angle: float = 1e-9

    def __post_init__(self):
        for name in ("eps_null", "eps_angle"):
            val = getattr(self, name)
            if not (0.0 < val < 1e-3):
                raise GeometryError(f"{name} must lie in (0, 1e-3), got {val!r}")


DEFAULT_TOLERANCES = ToleranceConfig()


@dataclass(frozen=True)
class CirculantMetric:
    """Positive definite metric circ(a, b, b): diagonal a, off-diagonal b.

    The eigenvalues of circ(a, b, b) are a + 2b (once) and a - b (twice), so
    positive definiteness is exactly a + 2b > 0 and a - b > 0; a > 0 follows
    but is checked too since it guards against swapped arguments.
    """

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise InvalidMetricError("metric coefficients must be finite")
        if self.a <= 0.0 or self.a - self.b <= 0.0 or self.a + 2.0 * self.b <= 0.0:
            raise InvalidMetricError(
                f"circ({self.a}, {self.b}, {self.b}) is not positive definite: "
                "requires a > 0, a - b > 0 and a + 2b > 0"
            )


def as_vector(u) -> np.ndarray:
    """Coerce to a finite float 3-vector."""
    v = np.asarray(u, dtype=float)
    if v.shape != (3,):
        raise GeometryError(f"expected a 3-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise GeometryError("vector components must be finite")
    return v


def fmt_float(x: float) -> str:
    """Shortest decimal that parses back to the same float; integral values print bare."""
    v = float(x)
    if math.isfinite(v) and v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def q_apply(u) -> np.ndarray:
    """Cyclic shift (x, y, z) -> (y, z, x). Applying it three times is the identity."""
    v = as_vector(u)
    return np.array([v[1], v[2], v[0]])


def g_inner(m: CirculantMetric, u, v) -> float:
    """Inner product under circ(a, b, b).

    Uses the rank-one split circ(a, b, b) = (a - b) I + b J, J the all-ones
    matrix, so the metric is never materialized as a dense matrix.
    """
    uu = as_vector(u)
    vv = as_vector(v)
    dot = float(uu @ vv)
    return (m.a - m.b) * dot + m.b * float(uu.sum()) * float(vv.sum())


def g_norm(m: CirculantMetric, u) -> float:
    """Norm sqrt(g(u, u)); zero only for the zero vector."""
    return math.sqrt(max(0.0, g_inner(m, u, u)))


def cos_phi(m: CirculantMetric, u) -> float:
    """Cosine of the angle between u and its shift: g(u, qu) / g(u, u).

    The value lies in [-1/2, 1] up to rounding for every valid metric.
    """
    v = as_vector(u)
    denom = g_inner(m, v, v)
    if denom == 0.0:
        raise ZeroVectorError("cos_phi is undefined for the zero vector")
    return g_inner(m, v, q_apply(v)) / denom


def clamp_cos(c: float, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Clamp a shift-angle cosine into [-1/2, 1] before any arccos.

    Values outside the interval by more than eps_angle are not rounding noise
    and indicate a broken caller, so they raise instead of clamping silently.
    """
    if c > 1.0 + tol.eps_angle or c < -0.5 - tol.eps_angle:
        raise InvariantViolation(
            f"shift-angle cosine {c!r} outside [-1/2, 1] by more than eps_angle"
        )
    return min(1.0, max(-0.5, c))


def phi_angle(m: CirculantMetric, u, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Angle between u and its shift, in radians, in [0, 2*pi/3]."""
    return math.acos(clamp_cos(cos_phi(m, u), tol))


def f_inner(m: CirculantMetric, u, v) -> float:
    """Associated indefinite form f(u, v) = g(u, qv) + g(qu, v).

    Symmetric, bilinear, and shift-invariant: f(qu, qv) = f(u, v). On the
    diagonal f(u, u) = 2 g(u, qu) = 2 g(u, u) cos_phi(u).
    """
    uu = as_vector(u)
    vv = as_vector(v)
    return g_inner(m, uu, q_apply(vv)) + g_inner(m, q_apply(uu), vv)


def causal_character(
    m: CirculantMetric, u, tol: ToleranceConfig = DEFAULT_TOLERANCES
) -> CausalCharacter:
    """Classify a nonzero vector by the sign of f(u, u).

    The null band is relative: |f(u, u)| <= eps_null * 2 g(u, u), which by
    f(u, u) = 2 g(u, u) cos_phi(u) is the scale-free test |cos_phi| <= eps_null.
    Spacelike above the band, timelike below. The shift preserves the result.
    """
    v = as_vector(u)
    norm_sq = g_inner(m, v, v)
    if norm_sq == 0.0:
        raise ZeroVectorError("causal character is undefined for the zero vector")
    f_uu = f_inner(m, v, v)
    if abs(f_uu) <= tol.eps_null * 2.0 * norm_sq:
        return CausalCharacter.NULL
    return CausalCharacter.SPACELIKE if f_uu > 0.0 else CausalCharacter.TIMELIKE
