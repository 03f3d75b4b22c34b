"""Distances on Grassmannians and their asymmetric extensions.

Nine equal-dimension metrics, each a function f_p of the principal
angles, extend to asymmetric metrics on the full Grassmannian of
subspaces of every dimension: from V (dim p) to W (dim q) the distance is
f_p(theta_1, .., theta_p) when 0 < p <= q, the diameter of the p-th
Grassmannian when p > q, and 0 when p = 0.  The infimum characterizing the
extension is never searched: the closed form above provably attains it.

Also: containment gap, gap, directional and symmetric distances, the two
non-metric diagnostics (max-correlation and the Martin quantity), and
symmetrization helpers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionError
from .numerics import DEFAULT_TOL, Field, Tolerance
from .subspace import Subspace, _check_pair, principal_angles, random_unitary

_HALF_PI = math.pi / 2


@dataclass(frozen=True)
class MetricDescriptor:
    """A named metric family: ``f_p`` maps a principal-angle array to the
    distance, ``diam`` gives the supremum over p-subspace pairs in every
    ambient dimension (the value assigned when containment is impossible).

    ``f_p`` is nondecreasing in each angle and stable under zero-angle
    prefixes, which is what makes the asymmetric extension a metric.
    """

    name: str
    f_p: Callable[[np.ndarray], float]
    diam: Callable[[int], float]
    units: str  # "radians" or "dimensionless"


def _d_geodesic(t): return float(np.sqrt(np.sum(t * t)))
def _d_chordal_frobenius(t): return float(2 * np.sqrt(np.sum(np.sin(t / 2) ** 2)))
def _d_projection_frobenius(t): return float(np.sqrt(np.sum(np.sin(t) ** 2)))
def _d_fubini_study(t): return float(np.arccos(min(1.0, np.prod(np.cos(t)))))
def _d_chordal_wedge(t): return float(np.sqrt(max(0.0, 2 - 2 * np.prod(np.cos(t)))))
def _d_binet_cauchy(t): return float(np.sqrt(max(0.0, 1 - np.prod(np.cos(t)) ** 2)))
def _d_asimov(t): return float(t[-1])
def _d_chordal_2norm(t): return float(2 * np.sin(t[-1] / 2))
def _d_projection_2norm(t): return float(np.sin(t[-1]))


METRICS: dict[str, MetricDescriptor] = {}

for _name, _f, _diam, _units in [
    ("geodesic", _d_geodesic, lambda p: _HALF_PI * math.sqrt(p), "radians"),
    ("chordal_frobenius", _d_chordal_frobenius, lambda p: math.sqrt(2 * p), "dimensionless"),
    ("projection_frobenius", _d_projection_frobenius, math.sqrt, "dimensionless"),
    ("fubini_study", _d_fubini_study, lambda p: _HALF_PI, "radians"),
    ("chordal_wedge", _d_chordal_wedge, lambda p: math.sqrt(2), "dimensionless"),
    ("binet_cauchy", _d_binet_cauchy, lambda p: 1.0, "dimensionless"),
    ("asimov", _d_asimov, lambda p: _HALF_PI, "radians"),
    ("chordal_2norm", _d_chordal_2norm, lambda p: math.sqrt(2), "dimensionless"),
    ("projection_2norm", _d_projection_2norm, lambda p: 1.0, "dimensionless"),
]:
    METRICS[_name] = MetricDescriptor(_name, _f, _diam, _units)

# Defense against formula typos: the hardcoded diameters must equal
# f_p(pi/2, .., pi/2).
for _desc in METRICS.values():
    for _p in range(1, 9):
        assert abs(_desc.diam(_p) - _desc.f_p(np.full(_p, _HALF_PI))) < 1e-12, _desc.name

DIAGNOSTICS = ("max_correlation", "martin")


class ExtensionCase(enum.Enum):
    EQUAL_DIM = "equal_dim"
    LOW_TO_HIGH = "low_to_high"
    HIGH_TO_LOW_DIAMETER = "high_to_low_diameter"
    ZERO_FROM = "zero_from"


@dataclass(frozen=True)
class DistanceResult:
    value: float
    metric: str
    direction: tuple[int, int]  # (dim from, dim to)
    case: ExtensionCase


def equal_dim_distance(name: str, v: Subspace, w: Subspace,
                       tol: Tolerance = DEFAULT_TOL) -> float:
    """One of the nine metrics for subspaces of one common dimension."""
    desc = METRICS[name]
    _check_pair(v, w)
    if v.dim != w.dim or v.dim < 1:
        raise DimensionError("equal_dim_distance requires equal nonzero dimensions; "
                             "use asymmetric_distance otherwise")
    return desc.f_p(principal_angles(v, w, tol))


def extension_from_angles(desc: MetricDescriptor, theta: np.ndarray,
                          dim_from: int, dim_to: int) -> DistanceResult:
    """Asymmetric extension evaluated from precomputed principal angles.

    ``theta`` must hold the min(dim_from, dim_to) principal angles of the
    pair; it is ignored in the zero-source and diameter cases.
    """
    if dim_from == 0:
        case, value = ExtensionCase.ZERO_FROM, 0.0
    elif dim_from > dim_to:
        case, value = ExtensionCase.HIGH_TO_LOW_DIAMETER, desc.diam(dim_from)
    else:
        case = (ExtensionCase.EQUAL_DIM if dim_from == dim_to
                else ExtensionCase.LOW_TO_HIGH)
        value = desc.f_p(np.asarray(theta))
    return DistanceResult(value, desc.name, (dim_from, dim_to), case)


def asymmetric_distance(desc: MetricDescriptor | str, v: Subspace, w: Subspace,
                        tol: Tolerance = DEFAULT_TOL) -> DistanceResult:
    """Asymmetric extension of a metric family from V to W."""
    if isinstance(desc, str):
        desc = METRICS[desc]
    _check_pair(v, w)
    theta = principal_angles(v, w, tol)
    return extension_from_angles(desc, theta, v.dim, w.dim)


# ---------------------------------------------------------------------------
# Distances on the full Grassmannian that are not Table-style extensions.
# ---------------------------------------------------------------------------

def containment_gap(v: Subspace, w: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """How far V is from being contained in W: sin of the largest principal
    angle when dim V <= dim W, 1 otherwise; zero exactly for V inside W."""
    _check_pair(v, w)
    if v.dim == 0:
        return 0.0
    if v.dim > w.dim:
        return 1.0
    theta = principal_angles(v, w, tol)
    return float(np.sin(theta[-1]))


def gap(v: Subspace, w: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """Symmetrized containment gap; equals the operator norm of the
    projector difference, and is 1 whenever the dimensions differ."""
    return max(containment_gap(v, w, tol), containment_gap(w, v, tol))


def directional_distance(v: Subspace, w: Subspace,
                         tol: Tolerance = DEFAULT_TOL) -> float:
    """l2 size of the residuals of an orthonormal V-basis projected on W."""
    _check_pair(v, w)
    if v.dim == 0:
        raise DimensionError("directional distance requires a nonzero source")
    p, q = v.dim, w.dim
    s2 = float(np.sum(np.sin(principal_angles(v, w, tol)) ** 2)) if q else 0.0
    if p <= q:
        return math.sqrt(s2)
    return math.sqrt(p - q + s2)


def symmetric_distance(v: Subspace, w: Subspace,
                       tol: Tolerance = DEFAULT_TOL) -> float:
    """max of the two directional distances: sqrt(|p - q| + sum sin^2 theta_i)."""
    _check_pair(v, w)
    p, q = v.dim, w.dim
    s2 = float(np.sum(np.sin(principal_angles(v, w, tol)) ** 2))
    return math.sqrt(abs(p - q) + s2)


def diagnostic_quantities(v: Subspace, w: Subspace,
                          tol: Tolerance = DEFAULT_TOL) -> dict[str, float]:
    """Non-metric diagnostics: max-correlation ``sin theta_1`` (zero exactly
    when the subspaces intersect) and the Martin quantity
    ``sqrt(-log prod cos^2 theta_i)`` (infinite under partial orthogonality).

    Neither satisfies a triangle inequality for general subspaces.
    """
    _check_pair(v, w)
    if v.dim == 0 or w.dim == 0:
        raise DimensionError("diagnostics require nonzero subspaces")
    theta = principal_angles(v, w, tol)
    cos2 = np.cos(theta) ** 2
    if np.any(theta > _HALF_PI - tol.angle_tol) or np.any(cos2 == 0):
        martin = math.inf
    else:
        martin = math.sqrt(-float(np.sum(np.log(cos2))))
    return {"max_correlation": float(np.sin(theta[0])), "martin": martin}


def symmetrize(d_fwd: float, d_bwd: float, mode: str) -> float:
    """max or mean symmetrization of a forward/backward distance pair."""
    if d_fwd < 0 or d_bwd < 0:
        raise ValueError("distances must be nonnegative")
    if mode == "max":
        return max(d_fwd, d_bwd)
    if mode == "mean":
        return (d_fwd + d_bwd) / 2
    raise ValueError(f"unknown symmetrization mode {mode!r}")


# ---------------------------------------------------------------------------
# Triangle-equality witness generator.
# ---------------------------------------------------------------------------

def make_equality_triple(r_dim: int, kappa: float, lam: float, seed: int,
                         *, s_dim: int | None = None, t_dim: int | None = None,
                         ambient_dim: int | None = None,
                         field: Field = Field.REAL,
                         perturbation: float = 0.0,
                         ) -> tuple[Subspace, Subspace, Subspace]:
    """Construct (U, V, W) attaining Theta(U, W) = Theta(U, V) + Theta(V, W).

    U = [u] + R, V = [v] + S, W = [w] + T for nested R inside S inside T and
    aligned u, v, w orthogonal to T with v = kappa*u + lam*w; u and w live
    in a plane where the inner product is real, so the triple is exact over
    both fields.  Dimensions default to (r, r+1, r+2) with ambient r + 5.

    ``perturbation`` > 0 rotates v by that angle (radians) out of the
    (u, w)-plane toward a seed-dependent orthogonal direction, breaking the
    equality; the defect grows like the squared perturbation.
    """
    if kappa <= 0 or lam <= 0:
        raise ValueError("kappa and lam must be positive")
    if s_dim is None:
        s_dim = r_dim + 1
    if t_dim is None:
        t_dim = s_dim + 1
    if not 0 <= r_dim <= s_dim <= t_dim:
        raise DimensionError("need r_dim <= s_dim <= t_dim")
    needed = t_dim + (3 if perturbation else 2)
    if ambient_dim is None:
        ambient_dim = t_dim + 3
    if ambient_dim < needed:
        raise DimensionError(f"ambient dimension {ambient_dim} too small; "
                             f"need at least {needed}")
    rng = np.random.default_rng(seed)
    q = random_unitary(ambient_dim, field, int(rng.integers(2 ** 63)))
    # the u-w opening angle stays in [20, 70] degrees: keeps the perturbed
    # defect bounded away from zero (quadratic with constant > 1)
    alpha = rng.uniform(np.deg2rad(20), np.deg2rad(70))
    u = q[:, t_dim]
    z = q[:, t_dim + 1]
    w = math.cos(alpha) * u + math.sin(alpha) * z
    vvec = kappa * u + lam * w
    vvec = vvec / np.linalg.norm(vvec)
    if perturbation:
        out = q[:, t_dim + 2]
        vvec = math.cos(perturbation) * vvec + math.sin(perturbation) * out
    n, f = ambient_dim, field
    u_space = Subspace(n, f, np.concatenate([q[:, :r_dim], u[:, None]], axis=1))
    v_space = Subspace(n, f, np.concatenate([q[:, :s_dim], vvec[:, None]], axis=1))
    w_space = Subspace(n, f, np.concatenate([q[:, :t_dim], w[:, None]], axis=1))
    return u_space, v_space, w_space
