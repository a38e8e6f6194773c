"""Shift-generated bases and the orthogonal companion vector.

A nonzero vector u whose shift angle lies strictly inside (0, 2*pi/3) spans,
together with its first and second shifts, a basis of the tangent space.
For any valid circulant metric there is a choice of u making that basis
g-orthonormal; this module realizes one such choice deterministically.
It also builds the g-unit vector w orthogonal to u inside span{u, qu}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    CirculantMetric,
    DegenerateAngleError,
    InvalidMetricError,
    ToleranceConfig,
    ZeroVectorError,
    as_vector,
    clamp_cos,
    cos_phi,
    g_inner,
    g_norm,
    q_apply,
)

__all__ = ["QBasis", "PlaneFrame", "is_q_basis", "orthonormal_q_basis", "companion_w", "gram_matrix"]

# Shift-fixed axis and a seed direction orthogonal to it (Euclidean).
_AXIS = np.array([1.0, 1.0, 1.0]) / math.sqrt(3.0)
_SEED = np.array([1.0, -1.0, 0.0]) / math.sqrt(2.0)


@dataclass(frozen=True)
class QBasis:
    """Basis {u, qu, q2u} generated from u by repeated shifts."""

    u: np.ndarray
    qu: np.ndarray
    q2u: np.ndarray

    def vectors(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.u, self.qu, self.q2u)


@dataclass(frozen=True)
class PlaneFrame:
    """g-orthonormal frame (u, w) of the 2-plane span{u, qu}, with the shift angle phi."""

    u: np.ndarray
    w: np.ndarray
    phi: float


def is_q_basis(m: CirculantMetric, u, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> bool:
    """True when {u, qu, q2u} is a basis, i.e. the shift angle is strictly interior.

    Boundary cases (cos within eps_angle of 1 or -1/2) are rejected: there the
    three vectors are linearly dependent.
    """
    c = cos_phi(m, u)
    return -0.5 + tol.eps_angle < c < 1.0 - tol.eps_angle


def orthonormal_q_basis(m: CirculantMetric) -> QBasis:
    """Deterministic g-orthonormal shift basis for a valid circulant metric.

    Within the two-parameter family u0 = n + beta * e, where n is the unit
    shift-fixed axis and e = (1, -1, 0)/sqrt(2), the condition g(u0, q u0) = 0
    has the unique positive solution beta = sqrt(2 (a + 2b) / (a - b)).
    Normalizing u0 to g-unit length then makes the whole Gram matrix of
    (u, qu, q2u) the identity, because the shift is a g-isometry. Any rotation
    of u0 about n would do as well; fixing e makes the output reproducible.
    """
    disc = 2.0 * (m.a + 2.0 * m.b) / (m.a - m.b)
    if not (disc > 0.0 and math.isfinite(disc)):
        raise InvalidMetricError("metric does not admit the orthonormal construction")
    u0 = _AXIS + math.sqrt(disc) * _SEED
    u = u0 / g_norm(m, u0)
    qu = q_apply(u)
    return QBasis(u=u, qu=qu, q2u=q_apply(qu))


def companion_w(
    m: CirculantMetric, u, tol: ToleranceConfig = DEFAULT_TOLERANCES
) -> PlaneFrame:
    """g-unit vector w in span{u, qu} with g(u, w) = 0, plus the shift angle.

    w = (qu - u cos phi) / sin phi for the g-normalized u. The input is
    normalized internally, so the result depends only on the direction of u.
    Fails when u and qu are parallel (cos phi within eps_angle of 1): the
    plane degenerates and sin phi vanishes.
    """
    v = as_vector(u)
    norm = g_norm(m, v)
    if norm == 0.0:
        raise ZeroVectorError("companion vector is undefined for the zero vector")
    v = v / norm
    c = clamp_cos(cos_phi(m, v), tol)
    if c >= 1.0 - tol.eps_angle:
        raise DegenerateAngleError(
            "u and its shift are parallel (shift angle ~ 0); no 2-plane to frame"
        )
    # (1 - c)(1 + c) avoids the cancellation 1 - c*c suffers for c near 1.
    sin = math.sqrt((1.0 - c) * (1.0 + c))
    w = (q_apply(v) - c * v) / sin
    return PlaneFrame(u=v, w=w, phi=math.acos(c))


def gram_matrix(m: CirculantMetric, vectors) -> np.ndarray:
    """Matrix of pairwise g-inner products."""
    vecs = [as_vector(v) for v in vectors]
    n = len(vecs)
    out = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = g_inner(m, vecs[i], vecs[j])
    return out
