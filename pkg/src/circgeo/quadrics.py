"""Level sets of the indefinite form in orthonormal shift-basis coordinates.

With coordinates (x, y, z) taken along a g-orthonormal basis {u, qu, q2u},
the form f(v, v) reduces to 2(xy + xz + yz). A fixed rotation diagonalizes
that quadratic form to -(x'^2 + y'^2 - 2 z'^2), so the level set
f(v, v) = r2 is a cone (r2 = 0), a two-sheet hyperboloid (r2 > 0) or a
one-sheet hyperboloid (r2 < 0) in the rotated coordinates. This module also
intersects the cone with the unit sphere and samples exact surface meshes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    BadSampleCountsError,
    CausalCharacter,
    GeometryError,
    ToleranceConfig,
    as_vector,
    fmt_float,
)

__all__ = [
    "ROTATION",
    "QuadricSpec",
    "QuadricClass",
    "CircleIntersection",
    "sphere_form_value",
    "to_primed",
    "from_primed",
    "primed_form_value",
    "classify_quadric",
    "quadric_equation",
    "radius_vector_character",
    "cone_sphere_intersection",
    "basis_heads_primed",
    "default_extent",
    "sample_quadric",
]

# Columns are the primed axes expressed in the starting coordinates; the third
# column is the shift-fixed direction, which carries form value +2.
ROTATION = np.array(
    [
        [1.0 / math.sqrt(2.0), -1.0 / math.sqrt(6.0), 1.0 / math.sqrt(3.0)],
        [0.0, 2.0 / math.sqrt(6.0), 1.0 / math.sqrt(3.0)],
        [-1.0 / math.sqrt(2.0), -1.0 / math.sqrt(6.0), 1.0 / math.sqrt(3.0)],
    ]
)


class QuadricClass(Enum):
    CONE = "cone"
    TWO_SHEETS = "two-sheets"
    ONE_SHEET = "one-sheet"


@dataclass(frozen=True)
class QuadricSpec:
    """Level constant r2 of the surface f(v, v) = r2; any sign is meaningful."""

    r2: float

    def __post_init__(self):
        object.__setattr__(self, "r2", float(self.r2))
        if not math.isfinite(self.r2):
            raise GeometryError("quadric level constant must be finite")

    @property
    def abs_r2(self) -> float:
        return abs(self.r2)


@dataclass(frozen=True)
class CircleIntersection:
    """Cone-sphere intersection: cylinder radius^2 and the two cutting planes."""

    radius_sq: float
    z_planes: tuple[float, float]


def sphere_form_value(v) -> float:
    """Value 2(xy + xz + yz) of the form in orthonormal shift-basis coordinates."""
    x, y, z = as_vector(v)
    return 2.0 * (x * y + x * z + y * z)


def to_primed(v) -> np.ndarray:
    """Starting coordinates to rotated (primed) coordinates."""
    return ROTATION.T @ as_vector(v)


def from_primed(vp) -> np.ndarray:
    """Rotated (primed) coordinates back to starting coordinates."""
    return ROTATION @ as_vector(vp)


def primed_form_value(vp) -> float:
    """The same form evaluated in primed coordinates: -(x'^2 + y'^2 - 2 z'^2).

    The sign keeps primed_form_value(to_primed(v)) == sphere_form_value(v);
    the usual surface equation is recovered by negating both sides of
    value = r2.
    """
    x, y, z = as_vector(vp)
    return -(x * x + y * y - 2.0 * z * z)


def classify_quadric(
    spec: QuadricSpec, tol: ToleranceConfig = DEFAULT_TOLERANCES
) -> QuadricClass:
    """Cone for r2 ~ 0, two sheets for r2 > 0, one sheet for r2 < 0."""
    if abs(spec.r2) <= tol.eps_null:
        return QuadricClass.CONE
    return QuadricClass.TWO_SHEETS if spec.r2 > 0.0 else QuadricClass.ONE_SHEET


def quadric_equation(spec: QuadricSpec) -> str:
    """Canonical primed-coordinate equation string, e.g. x'^2+y'^2-2z'^2 = -2."""
    return f"x'^2+y'^2-2z'^2 = {fmt_float(-spec.r2)}"


def radius_vector_character(
    spec: QuadricSpec, tol: ToleranceConfig = DEFAULT_TOLERANCES
) -> CausalCharacter:
    """Character of every radius vector of the surface: f(v, v) = r2 pointwise."""
    kind = classify_quadric(spec, tol)
    if kind is QuadricClass.CONE:
        return CausalCharacter.NULL
    if kind is QuadricClass.TWO_SHEETS:
        return CausalCharacter.SPACELIKE
    return CausalCharacter.TIMELIKE


def cone_sphere_intersection() -> CircleIntersection:
    """Intersection of x'^2+y'^2-2z'^2 = 0 with the unit sphere.

    Subtracting the equations gives 3 z'^2 = 1, so the curves are the circles
    x'^2 + y'^2 = 2/3 in the planes z' = +-1/sqrt(3).
    """
    z = 1.0 / math.sqrt(3.0)
    return CircleIntersection(radius_sq=2.0 / 3.0, z_planes=(z, -z))


def basis_heads_primed() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Primed coordinates of the heads of the orthonormal basis vectors.

    All three are null, so they lie on the cone; being unit vectors they lie
    on the sphere too, hence on the upper intersection circle z' = +1/sqrt(3).
    """
    eye = np.eye(3)
    return (to_primed(eye[0]), to_primed(eye[1]), to_primed(eye[2]))


def default_extent(r2: float) -> float:
    """Default cylindrical-radius reach of sampled meshes."""
    return 2.0 * max(1.0, math.sqrt(abs(r2)))


def sample_quadric(
    spec: QuadricSpec,
    n_s: int,
    n_theta: int,
    extent: float | None = None,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Sample the surface x'^2+y'^2-2z'^2 = -r2 on an exact parametric grid.

    Returns an (N, 3) array of primed-coordinate vertices in a fixed order:
    profile-row major (n_s rows of n_theta angles each), and for the two-branch
    surfaces the + branch is emitted completely before the - branch.

    Parametrizations, with theta running over n_theta equal steps in [0, 2*pi):

    * cone (r2 ~ 0): (t cos, t sin, +-t/sqrt(2)), t in [0, extent]; the apex
      row t = 0 appears once per branch.
    * two sheets (r2 > 0, a = sqrt(r2)): (a sinh s cos, a sinh s sin,
      +-(a/sqrt(2)) cosh s), s in [0, asinh(extent/a)].
    * one sheet (r2 < 0, a = sqrt(-r2)): (a cosh s cos, a cosh s sin,
      (a/sqrt(2)) sinh s), s in [-s_max, s_max] with cosh(s_max) reaching
      extent/a when that exceeds 1. Single connected branch.

    The profile ranges are chosen so the cylindrical radius reaches `extent`
    (default 2 * max(1, sqrt(|r2|))). Every vertex satisfies the surface
    equation to a relative 1e-9 by construction.
    """
    if n_s < 2 or n_theta < 3:
        raise BadSampleCountsError(
            f"need n_s >= 2 and n_theta >= 3, got n_s={n_s}, n_theta={n_theta}"
        )
    t_max = default_extent(spec.r2) if extent is None else float(extent)
    if not (math.isfinite(t_max) and t_max > 0.0):
        raise GeometryError(f"mesh extent must be positive and finite, got {t_max!r}")
    theta = np.linspace(0.0, 2.0 * math.pi, n_theta, endpoint=False)
    cos_t, sin_t = np.cos(theta), np.sin(theta)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    kind = classify_quadric(spec, tol)

    rows: list[np.ndarray] = []

    def emit(radius: float, height: float) -> None:
        rows.append(
            np.column_stack(
                (radius * cos_t, radius * sin_t, np.full(n_theta, height))
            )
        )

    if kind is QuadricClass.CONE:
        for sign in (1.0, -1.0):
            for t in np.linspace(0.0, t_max, n_s):
                emit(t, sign * t * inv_sqrt2)
    elif kind is QuadricClass.TWO_SHEETS:
        a = math.sqrt(spec.r2)
        s_grid = np.linspace(0.0, math.asinh(t_max / a), n_s)
        for sign in (1.0, -1.0):
            for s in s_grid:
                emit(a * math.sinh(s), sign * a * inv_sqrt2 * math.cosh(s))
    else:
        a = math.sqrt(-spec.r2)
        s_max = math.acosh(max(t_max / a, 1.0))
        for s in np.linspace(-s_max, s_max, n_s):
            emit(a * math.cosh(s), a * inv_sqrt2 * math.sinh(s))

    return np.vstack(rows)
