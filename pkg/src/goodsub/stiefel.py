"""Frames with orthonormal columns and their best-conditioned row submatrices.

An n-by-k real matrix A with A^T A = I spans a k-dimensional subspace of
R^n.  Selecting k of its rows gives a square block whose smallest singular
value measures how well the subspace projects onto those coordinates; the
block with the largest such value is the best-conditioned one, and its
smallest singular value is the quantity the rest of the package searches,
transforms and certifies.  Everything here targets small frames (n up to a
few dozen), where exhaustive enumeration of the C(n, k) row subsets is the
reference algorithm.

Smallest singular values are computed from the 2x2 (or k x k) Gram matrix
by symmetric eigendecomposition, with a closed-form path at k = 2; this
keeps the per-subset cost at a handful of flops and one square root.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, EnumerationCapExceeded, RankDeficient

__all__ = [
    "StiefelMatrix",
    "SubmatrixReport",
    "orthonormalize",
    "haar_sample",
    "sigma_min",
    "best_submatrix",
    "principal_angle",
    "extremal_matrix",
    "gram_deviation",
    "load_matrix",
    "save_matrix",
    "format_matrix",
    "parse_matrix",
]

# Max-norm tolerance on A^T A - I accepted by the StiefelMatrix constructor.
ORTHONORMALITY_TOL = 1e-10

# Default numerical full-rank threshold for orthonormalize.
DEFAULT_RANK_TOL = 1e-10

# Default cap on C(n, k) in best_submatrix.
DEFAULT_MAX_SUBSETS = 10**6


def gram_deviation(values):
    """Max-norm of A^T A - I for a dense matrix A."""
    arr = np.asarray(values, dtype=float)
    g = arr.T @ arr
    return float(np.abs(g - np.eye(arr.shape[1])).max())


class StiefelMatrix:
    """Real n-by-k matrix with orthonormal columns.

    The constructor validates the shape (1 <= k <= n), finiteness, and
    orthonormality: max |A^T A - I| must not exceed 1e-10.  Instances are
    immutable; the backing array is a read-only copy of the input.

    Parameters
    ----------
    values : array_like
        The n-by-k matrix entries.

    Raises
    ------
    DimensionError
        If the input is not 2-d with 1 <= k <= n.
    ValueError
        If entries are not finite or the columns are not orthonormal
        within tolerance.
    """

    __slots__ = ("_values",)

    def __init__(self, values):
        arr = np.array(values, dtype=float, copy=True)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got ndim={arr.ndim}")
        n, k = arr.shape
        if k < 1 or k > n:
            raise DimensionError(f"need 1 <= k <= n, got n={n}, k={k}")
        if not np.isfinite(arr).all():
            raise ValueError("matrix entries must be finite")
        dev = gram_deviation(arr)
        if dev > ORTHONORMALITY_TOL:
            raise ValueError(
                f"columns are not orthonormal: max |A^T A - I| = {dev:.3e} "
                f"exceeds {ORTHONORMALITY_TOL:.0e}"
            )
        arr.setflags(write=False)
        self._values = arr

    @property
    def n(self):
        return self._values.shape[0]

    @property
    def k(self):
        return self._values.shape[1]

    @property
    def values(self):
        """Read-only view of the underlying n-by-k array."""
        return self._values

    def submatrix(self, row_set):
        """The k-by-k block on the given rows, as a plain array."""
        rows = _validated_rows(row_set, self.n, self.k)
        return np.array(self._values[list(rows)])

    def __repr__(self):
        return f"StiefelMatrix(n={self.n}, k={self.k})"


@dataclass(frozen=True)
class SubmatrixReport:
    """Result of exhaustive row-subset enumeration.

    Attributes
    ----------
    row_set : tuple of int
        Sorted 0-based row indices of the winning block.
    sigma_min : float
        Smallest singular value of the winning block (the best value).
    determinant : float
        Determinant of the winning block.
    all_values : tuple of (tuple of int, float)
        Every subset with its smallest singular value, in lexicographic
        subset order.
    """

    row_set: tuple
    sigma_min: float
    determinant: float
    all_values: tuple

    def to_dict(self):
        return {
            "row_set": list(self.row_set),
            "sigma_min": self.sigma_min,
            "determinant": self.determinant,
            "all_values": [
                {"row_set": list(rows), "sigma_min": s} for rows, s in self.all_values
            ],
        }


def _validated_rows(row_set, n, k):
    try:
        rows = tuple(int(i) for i in row_set)
    except (TypeError, ValueError) as exc:
        raise IndexError(f"row_set must be a collection of integers: {exc}") from None
    if len(rows) != k:
        raise IndexError(f"row_set must have exactly k={k} entries, got {len(rows)}")
    if len(set(rows)) != k:
        raise IndexError(f"row_set entries must be distinct, got {rows}")
    for i in rows:
        if not 0 <= i < n:
            raise IndexError(f"row index {i} out of range for n={n}")
    return rows


def _sigma_min_2x2(a, b, c, d):
    # Smallest singular value of [[a, b], [c, d]] via its Gram matrix;
    # hypot keeps the discriminant stable.
    g00 = a * a + c * c
    g11 = b * b + d * d
    g01 = a * b + c * d
    disc = math.hypot(g00 - g11, 2.0 * g01)
    lam = 0.5 * (g00 + g11 - disc)
    return math.sqrt(lam) if lam > 0.0 else 0.0


def _subset_sigma(arr, rows, k):
    if k == 1:
        return abs(float(arr[rows[0], 0]))
    if k == 2:
        i, j = rows
        return _sigma_min_2x2(arr[i, 0], arr[i, 1], arr[j, 0], arr[j, 1])
    block = arr[list(rows)]
    lam = np.linalg.eigvalsh(block.T @ block)[0]
    return math.sqrt(lam) if lam > 0.0 else 0.0


def sigma_min(m):
    """Smallest singular value of a square dense matrix.

    Computed as the square root of the smallest eigenvalue of M^T M
    (closed form at k <= 2, symmetric eigendecomposition above), clipped
    at zero against rounding.

    Parameters
    ----------
    m : array_like
        Square k-by-k matrix.

    Returns
    -------
    float
        The smallest singular value, always >= 0.

    Raises
    ------
    DimensionError
        If the input is not a square 2-d array.
    """
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    k = arr.shape[0]
    if k == 1:
        return abs(float(arr[0, 0]))
    if k == 2:
        return _sigma_min_2x2(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])
    lam = np.linalg.eigvalsh(arr.T @ arr)[0]
    return math.sqrt(lam) if lam > 0.0 else 0.0


def orthonormalize(m, tol=DEFAULT_RANK_TOL):
    """Orthonormal basis of the column span of a full-rank matrix.

    QR factorization with the sign convention that the triangular factor
    has nonnegative diagonal, which makes the output deterministic and
    leaves an already-orthonormal input unchanged up to rounding.

    Parameters
    ----------
    m : array_like
        n-by-k matrix, n >= k >= 1, numerically full column rank.
    tol : float, optional
        Rank threshold: the smallest singular value of ``m`` must exceed
        this value.

    Returns
    -------
    StiefelMatrix
        Frame with the same column span as ``m``.

    Raises
    ------
    DimensionError
        If the input is not 2-d with 1 <= k <= n.
    RankDeficient
        If the smallest singular value of ``m`` is <= tol.
    ValueError
        If entries are not finite.
    """
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-d array, got ndim={arr.ndim}")
    n, k = arr.shape
    if k < 1 or k > n:
        raise DimensionError(f"need 1 <= k <= n, got n={n}, k={k}")
    if not np.isfinite(arr).all():
        raise ValueError("matrix entries must be finite")
    smallest = np.linalg.svd(arr, compute_uv=False)[-1]
    if smallest <= tol:
        raise RankDeficient(
            f"smallest singular value {smallest:.3e} is at or below the "
            f"rank threshold {tol:.0e}"
        )
    q, r = np.linalg.qr(arr)
    d = np.sign(np.diagonal(r)).copy()
    d[d == 0] = 1.0
    return StiefelMatrix(q * d)


def haar_sample(n, k, seed):
    """Frame drawn from the rotation-invariant distribution.

    Orthonormalizes an n-by-k matrix of independent standard normal
    variates from a seeded generator; identical seeds give identical
    matrices bit for bit.

    Parameters
    ----------
    n, k : int
        Frame shape, 1 <= k <= n.
    seed : int
        Seed for ``numpy.random.default_rng``.

    Returns
    -------
    StiefelMatrix
    """
    if not 1 <= k <= n:
        raise DimensionError(f"need 1 <= k <= n, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    return orthonormalize(rng.standard_normal((n, k)))


def best_submatrix(a, max_subsets=DEFAULT_MAX_SUBSETS):
    """Exhaustive search for the best-conditioned k-by-k row block.

    Enumerates all C(n, k) row subsets in lexicographic order and keeps
    the one whose block has the largest smallest singular value.  Ties
    are broken toward the lexicographically smallest subset (strict
    improvement is required to displace the incumbent).

    Parameters
    ----------
    a : StiefelMatrix
        The frame to search.
    max_subsets : int, optional
        Enumeration cap; C(n, k) above this raises before any work.

    Returns
    -------
    SubmatrixReport

    Raises
    ------
    EnumerationCapExceeded
        If C(n, k) exceeds ``max_subsets``.
    """
    if not isinstance(a, StiefelMatrix):
        raise TypeError("best_submatrix expects a StiefelMatrix")
    n, k = a.n, a.k
    total = math.comb(n, k)
    if total > max_subsets:
        raise EnumerationCapExceeded(
            f"C({n}, {k}) = {total} exceeds the enumeration cap {max_subsets}"
        )
    arr = a.values
    best_rows = None
    best_sigma = -1.0
    all_values = []
    for rows in itertools.combinations(range(n), k):
        s = _subset_sigma(arr, rows, k)
        all_values.append((rows, s))
        if s > best_sigma:
            best_sigma = s
            best_rows = rows
    det = float(np.linalg.det(arr[list(best_rows)]))
    return SubmatrixReport(
        row_set=best_rows,
        sigma_min=best_sigma,
        determinant=det,
        all_values=tuple(all_values),
    )


def principal_angle(a, row_set):
    """Largest principal angle between span(A) and a coordinate subspace.

    Equals arccos of the smallest singular value of the block on
    ``row_set``, hence lies in [0, pi/2]; 0 means the subspace projects
    isometrically onto those coordinates.

    Parameters
    ----------
    a : StiefelMatrix
    row_set : collection of int
        Exactly k distinct valid row indices.

    Returns
    -------
    float
        Angle in radians.

    Raises
    ------
    IndexError
        If ``row_set`` is not k distinct indices in range.
    """
    if not isinstance(a, StiefelMatrix):
        raise TypeError("principal_angle expects a StiefelMatrix")
    rows = _validated_rows(row_set, a.n, a.k)
    s = _subset_sigma(a.values, rows, a.k)
    return math.acos(min(1.0, s))


def extremal_matrix():
    """The 4-by-2 frame whose best row block is as ill-conditioned as possible.

    Every 2-by-2 row block has smallest singular value at most 1/2, five
    of the six attain it, and the remaining block (rows 2 and 3) is
    singular.  This is the worst case over all 4-by-2 frames: the bound
    1/2 = 1/sqrt(4) is sharp.
    """
    c = math.sqrt(0.5)
    e = math.sqrt(0.125)
    t = math.sqrt(0.375)
    return StiefelMatrix([[c, e], [-c, e], [0.0, t], [0.0, t]])


def format_matrix(a):
    """Text form of a matrix: 'n k' header, then one row per line.

    Entries are written with 17 significant digits after the leading one,
    which round-trips float64 exactly.
    """
    arr = a.values if isinstance(a, StiefelMatrix) else np.asarray(a, dtype=float)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-d array, got ndim={arr.ndim}")
    n, k = arr.shape
    lines = [f"{n} {k}"]
    for i in range(n):
        lines.append(" ".join(format(arr[i, j], ".17e") for j in range(k)))
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    """Inverse of :func:`format_matrix`; returns a plain dense array."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix text must start with 'n k'")
    try:
        n, k = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ValueError(f"malformed header {tokens[:2]!r}: expected two integers") from None
    if n < 1 or k < 1:
        raise ValueError(f"header must have n >= 1 and k >= 1, got n={n}, k={k}")
    body = tokens[2:]
    if len(body) != n * k:
        raise ValueError(f"expected {n * k} entries for a {n}x{k} matrix, found {len(body)}")
    try:
        flat = [float(t) for t in body]
    except ValueError as exc:
        raise ValueError(f"non-numeric matrix entry: {exc}") from None
    return np.array(flat, dtype=float).reshape(n, k)


def save_matrix(path_or_file, a):
    """Write a matrix in text form to a path or writable file object."""
    text = format_matrix(a)
    if isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__"):
        with open(path_or_file, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        path_or_file.write(text)


def load_matrix(path_or_file):
    """Read a matrix in text form; returns a plain dense array.

    Wrap in :class:`StiefelMatrix` (or pass through :func:`orthonormalize`)
    to validate orthonormality.
    """
    if isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__"):
        with open(path_or_file, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = path_or_file.read()
    return parse_matrix(text)
