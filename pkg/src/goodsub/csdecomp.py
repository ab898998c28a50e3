"""Thin CS decomposition of 4-by-2 frames under the 2+2 row split.

Every 4-by-2 frame A factors as

    A = [[q1, 0], [0, q2]] @ [[cos(a), 0], [0, cos(b)], [sin(a), 0], [0, sin(b)]] @ q3

with q1, q2, q3 orthogonal 2-by-2 and principal angles 0 <= a <= b <= pi/2.
The middle factor ties the top and bottom 2-by-2 blocks together: the top
block's singular values are (cos(a), cos(b)) and the bottom's are
(sin(b), sin(a)), so |det(top)| = cos(a)*cos(b) and
|det(bottom)| = sin(a)*sin(b).

The factorization route is an SVD of the top block (which fixes q1, q3 and
the cosines, taken nonnegative in descending order), followed by reading
q2 off the bottom block against the sine matrix.  When a sine vanishes the
corresponding column of q2 is unconstrained and is filled by orthogonal
completion with nonnegative determinant, which keeps the output
deterministic.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError
from .stiefel import StiefelMatrix

__all__ = ["CSFactors", "cs_decompose", "minors_from_cs", "VANISHING_SINE_TOL"]

# Below this column norm the bottom-block direction is numerically
# unconstrained and the q2 column comes from orthogonal completion.
VANISHING_SINE_TOL = 1e-8


@dataclass(frozen=True)
class CSFactors:
    """Factors (q1, q2, q3, alpha, beta) of the thin CS decomposition.

    q1, q2 act on the top and bottom row pairs, q3 mixes the columns;
    alpha <= beta are the principal angles in radians.
    """

    q1: np.ndarray
    q2: np.ndarray
    q3: np.ndarray
    alpha: float
    beta: float

    def middle_factor(self):
        """The 4-by-2 cosine-sine matrix diag-stacked from the angles."""
        ca, cb = math.cos(self.alpha), math.cos(self.beta)
        sa, sb = math.sin(self.alpha), math.sin(self.beta)
        return np.array([[ca, 0.0], [0.0, cb], [sa, 0.0], [0.0, sb]])

    def reconstruct(self):
        """The 4-by-2 matrix assembled from the factors."""
        mid = self.middle_factor()
        top = self.q1 @ mid[:2] @ self.q3
        bottom = self.q2 @ mid[2:] @ self.q3
        return np.vstack([top, bottom])

    def to_dict(self):
        return {
            "q1": self.q1.tolist(),
            "q2": self.q2.tolist(),
            "q3": self.q3.tolist(),
            "alpha": self.alpha,
            "beta": self.beta,
        }


def _completion(col, position):
    # Unit vector orthogonal to col, signed so that the assembled 2x2
    # has det >= 0 once the completion is placed at the given column.
    perp = np.array([-col[1], col[0]])
    if position == 0:
        # det([perp, col]) = -det([col, perp]), so flip the sign.
        perp = -perp
    return perp


def cs_decompose(a):
    """Thin CS decomposition of a 4-by-2 frame under the 2+2 row split.

    Parameters
    ----------
    a : StiefelMatrix
        Must be 4-by-2.

    Returns
    -------
    CSFactors
        With 0 <= alpha <= beta <= pi/2 and orthogonal 2-by-2 factors;
        ``reconstruct()`` matches the input to ~1e-15 for inputs
        orthonormal to machine precision.
    """
    if not isinstance(a, StiefelMatrix):
        raise TypeError("cs_decompose expects a StiefelMatrix")
    if (a.n, a.k) != (4, 2):
        raise DimensionError(f"expected a 4x2 frame, got {a.n}x{a.k}")
    top = a.values[:2]
    bottom = a.values[2:]

    # SVD of the top block pins q1, q3 and the cosines (nonnegative,
    # descending, so alpha <= beta comes out automatically).
    q1, cosines, q3 = np.linalg.svd(top)
    b = bottom @ q3.T
    sines = np.linalg.norm(b, axis=0)

    alpha = math.atan2(sines[0], cosines[0])
    beta = math.atan2(sines[1], cosines[1])
    # Rounding can flip the ordering when the two angles coincide.
    beta = max(alpha, beta)

    cols = [None, None]
    small = [i for i in range(2) if sines[i] < VANISHING_SINE_TOL]
    for i in range(2):
        if i not in small:
            cols[i] = b[:, i] / sines[i]
    if len(small) == 2:
        q2 = np.eye(2)
    elif len(small) == 1:
        i = small[0]
        j = 1 - i
        cols[i] = _completion(cols[j], i)
        q2 = np.column_stack(cols)
    else:
        q2 = np.column_stack(cols)

    q1 = np.array(q1)
    q2 = np.array(q2)
    q3 = np.array(q3)
    for m in (q1, q2, q3):
        m.setflags(write=False)
    return CSFactors(q1=q1, q2=q2, q3=q3, alpha=alpha, beta=beta)


def minors_from_cs(factors):
    """Absolute top and bottom 2-by-2 minors implied by the angles.

    Returns
    -------
    (float, float)
        (cos(alpha)*cos(beta), sin(alpha)*sin(beta)), which equal
        |det(top block)| and |det(bottom block)| of the decomposed frame.
    """
    ca, cb = math.cos(factors.alpha), math.cos(factors.beta)
    sa, sb = math.sin(factors.alpha), math.sin(factors.beta)
    return (ca * cb, sa * sb)
