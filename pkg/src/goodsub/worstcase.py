"""Search for subspaces whose best row block is as ill-conditioned as possible.

The objective of a frame is the smallest singular value of its
best-conditioned k-by-k row block; minimizing it over all n-by-k frames
probes the conjectured sharp lower bound 1/sqrt(n).  Right-multiplying by
an orthogonal k-by-k matrix does not move the column span, so the
objective is a function of the subspace alone and the search only needs
to explore left rotations.

The local step is derivative-free: at step size t, try every plane
rotation G(i, j, +/-t) applied to the rows, accept the best strict
decrease, and halve t when nothing improves.  The proposal set and the
accept rule are deterministic, so a restart's trajectory depends only on
its starting frame.  Multistart from seeded random frames takes the
minimum over restarts.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, EnumerationCapExceeded
from .stiefel import (
    DEFAULT_MAX_SUBSETS,
    StiefelMatrix,
    _subset_sigma,
    format_matrix,
    haar_sample,
)

__all__ = ["SearchParams", "WorstCaseResult", "objective", "local_descent", "multistart_search"]


@dataclass(frozen=True)
class SearchParams:
    """Knobs for the descent and the multistart loop."""

    restarts: int = 64
    max_iters: int = 2000
    initial_step: float = 0.3
    step_shrink: float = 0.5
    stop_step: float = 1e-7
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_iters < 0:
            raise ValueError(f"max_iters must be >= 0, got {self.max_iters}")
        if not self.initial_step > 0.0:
            raise ValueError(f"initial_step must be positive, got {self.initial_step}")
        if not 0.0 < self.step_shrink < 1.0:
            raise ValueError(f"step_shrink must be in (0, 1), got {self.step_shrink}")
        if not self.stop_step > 0.0:
            raise ValueError(f"stop_step must be positive, got {self.stop_step}")


@dataclass(frozen=True)
class WorstCaseResult:
    """Multistart outcome: the worst frame found and per-restart detail."""

    best_matrix: StiefelMatrix
    best_value: float
    per_restart_values: tuple
    iterations_used: tuple

    def to_dict(self):
        return {
            "best_value": self.best_value,
            "best_matrix": format_matrix(self.best_matrix),
            "per_restart_values": list(self.per_restart_values),
            "iterations_used": list(self.iterations_used),
        }


def _objective_raw(arr, subsets, k):
    best = 0.0
    for rows in subsets:
        s = _subset_sigma(arr, rows, k)
        if s > best:
            best = s
    return best


def _subsets_for(n, k, max_subsets=DEFAULT_MAX_SUBSETS):
    total = math.comb(n, k)
    if total > max_subsets:
        raise EnumerationCapExceeded(
            f"C({n}, {k}) = {total} exceeds the enumeration cap {max_subsets}"
        )
    return list(itertools.combinations(range(n), k))


def _qr_fix(arr):
    q, r = np.linalg.qr(arr)
    d = np.sign(np.diagonal(r)).copy()
    d[d == 0] = 1.0
    return q * d


def objective(a):
    """Smallest singular value of the best-conditioned row block.

    Identical to ``best_submatrix(a).sigma_min``; invariant under right
    multiplication by orthogonal k-by-k matrices.
    """
    if not isinstance(a, StiefelMatrix):
        raise TypeError("objective expects a StiefelMatrix")
    return _objective_raw(a.values, _subsets_for(a.n, a.k), a.k)


def local_descent(a0, params=None, callback=None):
    """Deterministic plane-rotation descent from a starting frame.

    At each iteration, evaluates G(i, j, +/-step) applied to the rows of
    the current frame for every index pair, takes the proposal with the
    lowest objective if it strictly decreases, re-orthonormalizes it,
    and confirms the decrease on the re-orthonormalized frame (so the
    accepted objective sequence is strictly decreasing).  When no
    proposal improves, the step shrinks; the loop stops when the step
    falls below ``stop_step`` or after ``max_iters`` iterations.

    Parameters
    ----------
    a0 : StiefelMatrix
        Starting frame.
    params : SearchParams, optional
    callback : callable, optional
        Called as ``callback(iteration, value)`` after each accepted step.

    Returns
    -------
    (StiefelMatrix, float)
        Final frame and its objective value.
    """
    if not isinstance(a0, StiefelMatrix):
        raise TypeError("local_descent expects a StiefelMatrix")
    p = params if params is not None else SearchParams()
    arr, val, _ = _descent(a0.values, a0.n, a0.k, p, callback)
    return StiefelMatrix(arr), val


def _descent(values, n, k, p, callback):
    subsets = _subsets_for(n, k)
    pairs = list(itertools.combinations(range(n), 2))
    arr = np.array(values)
    val = _objective_raw(arr, subsets, k)
    step = p.initial_step
    it = 0
    while it < p.max_iters and step >= p.stop_step:
        it += 1
        c = math.cos(step)
        s = math.sin(step)
        best_val = val
        best_arr = None
        for i, j in pairs:
            for sign in (1.0, -1.0):
                cand = arr.copy()
                cand[i] = c * arr[i] - sign * s * arr[j]
                cand[j] = sign * s * arr[i] + c * arr[j]
                v = _objective_raw(cand, subsets, k)
                if v < best_val:
                    best_val = v
                    best_arr = cand
        if best_arr is None:
            step *= p.step_shrink
            continue
        fixed = _qr_fix(best_arr)
        fval = _objective_raw(fixed, subsets, k)
        if fval < val:
            arr = fixed
            val = fval
            if callback is not None:
                callback(it, val)
        else:
            # Re-orthonormalization ate the gain; treat as a failed step.
            step *= p.step_shrink
    return arr, val, it


def multistart_search(n, k, params=None):
    """Minimize the objective over seeded random restarts.

    Restart i descends from ``haar_sample(n, k, seed + i)``.  The best
    value is the minimum over restarts; ties keep the lowest restart
    index.  Identical parameters reproduce identical results.

    Parameters
    ----------
    n, k : int
        Frame shape with 1 <= k <= n - 1 (at k = n the only block is the
        whole frame and the objective is constant).
    params : SearchParams, optional

    Returns
    -------
    WorstCaseResult
    """
    if not 1 <= k <= n - 1:
        raise DimensionError(f"need 1 <= k <= n - 1, got n={n}, k={k}")
    p = params if params is not None else SearchParams()
    values = []
    iterations = []
    best_matrix = None
    best_value = math.inf
    for i in range(p.restarts):
        start = haar_sample(n, k, p.seed + i)
        arr, val, used = _descent(start.values, n, k, p, None)
        values.append(val)
        iterations.append(used)
        if val < best_value:
            best_value = val
            best_matrix = StiefelMatrix(arr)
    return WorstCaseResult(
        best_matrix=best_matrix,
        best_value=best_value,
        per_restart_values=tuple(values),
        iterations_used=tuple(iterations),
    )
