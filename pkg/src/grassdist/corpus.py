"""Built-in example corpus: small subspace pairs with known exact angles.

Used by the CLI ``verify`` command and by the golden tests.  Every value
here is desk-scale exact (closed forms in square roots and arccosines).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import Field
from .subspace import Subspace

_S2 = math.sqrt(2) / 2
_XI = np.exp(2j * np.pi / 3)


def _cols(*rows) -> np.ndarray:
    """Rows are vectors; returns them stacked as matrix columns."""
    return np.array(rows).T


# -- raw spanning sets (not all orthonormal) --------------------------------

# R^5: V spanned by (f1+f3)/sqrt2, (f2+f4)/sqrt2; W by f1, f2, f5.
REAL_PA_V = _cols([_S2, 0, _S2, 0, 0], [0, _S2, 0, _S2, 0])
REAL_PA_W = _cols([1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1])

# C^4 pair with principal angles 45 and 60 degrees.
COMPLEX_PA_V = _cols([_S2, _S2, 0, 0], [0, 0, 0.5j, math.sqrt(3) / 2])
COMPLEX_PA_W = _cols([(1 + 1j) / 2, (1 - 1j) / 2, 0, 0], [0, 0, 1j, 0])

# R^5 blade quartet: A = v1^v2, B = w1^w2, C = w1^w2^w3, D = v1^v2^v3.
BLADE_V1 = np.array([2.0, -1, 0, 0, 0])
BLADE_V2 = np.array([2.0, 0, 1, 0, 0])
BLADE_V3 = np.array([0.0, 0, 1, 0, 0])
BLADE_W1 = np.array([0.0, 1, 0, 0, 1])
BLADE_W2 = np.array([0.0, 0, 1, -1, 0])
BLADE_W3 = np.array([0.0, 0, 0, 1, 0])
BLADES_A = _cols(BLADE_V1, BLADE_V2)
BLADES_B = _cols(BLADE_W1, BLADE_W2)
BLADES_C = _cols(BLADE_W1, BLADE_W2, BLADE_W3)
BLADES_D = _cols(BLADE_V1, BLADE_V2, BLADE_V3)

# R^4 line-vs-plane with non-orthonormal spanning sets.
DISTINCT_DIM_V = _cols([1.0, 0, 1, 0])
DISTINCT_DIM_W = _cols([0.0, 1, 1, 0], [1.0, 2, 2, -1])

# C^3 pair sharing the line [v1].
FORMULA_BASES_V = _cols([1, -_XI, 0], [0, _XI, -_XI ** 2])
FORMULA_BASES_W = _cols([1, 0, 0], [0, _XI, 0])

# R^4 planes that fail to span the space.
R4_PLANES_V = _cols([1.0, -1, 0, 1], [0.0, 1, 1, -1])
R4_PLANES_W = _cols([1.0, 0, 0, 0], [0.0, 0, 1, 0])

# C^2 line used by the Pythagorean identity example.
PYTHAGORAS_C2_V = _cols([0.5j, math.sqrt(3) / 2])


def _sub(cols, field):
    return Subspace.from_columns(cols, field)


@dataclass(frozen=True)
class GoldenPair:
    """A corpus pair and its exact angle values (radians; None = untested)."""

    name: str
    v: Subspace
    w: Subspace
    theta_vw: float | None
    theta_wv: float | None
    upsilon: float | None
    psi: float | None


def corpus() -> list[GoldenPair]:
    r, c = Field.REAL, Field.COMPLEX
    # C^4 pair: disjoint and supplementary, so Upsilon = Psi there; the
    # R^5 pair similarly has p + q = n.
    ups_c4 = math.asin(_S2 * math.sqrt(3) / 2)
    return [
        GoldenPair("real_principal_angles",
                   _sub(REAL_PA_V, r), _sub(REAL_PA_W, r),
                   theta_vw=math.pi / 3, theta_wv=math.pi / 2,
                   upsilon=math.asin(0.5), psi=math.asin(0.5)),
        GoldenPair("complex_principal_angles",
                   _sub(COMPLEX_PA_V, c), _sub(COMPLEX_PA_W, c),
                   theta_vw=math.acos(_S2 * 0.5), theta_wv=math.acos(_S2 * 0.5),
                   upsilon=ups_c4, psi=ups_c4),
        GoldenPair("blades_A_B",
                   _sub(BLADES_A, r), _sub(BLADES_B, r),
                   theta_vw=math.acos(1 / 6), theta_wv=math.acos(1 / 6),
                   upsilon=math.asin(math.sqrt(17) / 6), psi=0.0),
        GoldenPair("blades_A_C",
                   _sub(BLADES_A, r), _sub(BLADES_C, r),
                   theta_vw=math.acos(1 / (3 * math.sqrt(2))), theta_wv=math.pi / 2,
                   upsilon=math.asin(math.sqrt(2) / 3),
                   psi=math.asin(math.sqrt(2) / 3)),
        GoldenPair("blades_C_D",
                   _sub(BLADES_C, r), _sub(BLADES_D, r),
                   theta_vw=math.pi / 2, theta_wv=math.pi / 2,
                   upsilon=0.0, psi=math.asin(_S2)),
        GoldenPair("formula_distinct_dim",
                   _sub(DISTINCT_DIM_V, r), _sub(DISTINCT_DIM_W, r),
                   theta_vw=math.pi / 4, theta_wv=math.pi / 2,
                   upsilon=math.pi / 4, psi=0.0),
        GoldenPair("formula_bases",
                   _sub(FORMULA_BASES_V, c), _sub(FORMULA_BASES_W, c),
                   theta_vw=math.acos(1 / math.sqrt(3)),
                   theta_wv=math.acos(1 / math.sqrt(3)),
                   upsilon=0.0, psi=math.asin(math.sqrt(2 / 3))),
        GoldenPair("r4_planes",
                   _sub(R4_PLANES_V, r), _sub(R4_PLANES_W, r),
                   theta_vw=None, theta_wv=None, upsilon=None, psi=0.0),
    ]
