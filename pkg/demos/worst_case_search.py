"""Search for frames whose best row block is as ill-conditioned as possible.

The objective of a frame is the smallest singular value of its best
k-by-k row block; minimizing it over frames probes the conjectured floor
1/sqrt(n).  The search is a derivative-free plane-rotation descent from
seeded random starts.
"""
import math

from goodsub import SearchParams, haar_sample, local_descent, multistart_search, objective

# 1. One descent trajectory, watched through the callback.  The accepted
#    objective sequence is strictly decreasing by construction.
start = haar_sample(4, 2, seed=3)
print(f"single descent from a random (4, 2) frame, start objective {objective(start):.6f}")
trace = []
final, value = local_descent(start, callback=lambda it, v: trace.append((it, v)))
for it, v in trace[:: max(1, len(trace) // 8)]:
    print(f"  iter {it:4d}  objective {v:.9f}")
print(f"  final {value:.9f}")

# 2. Multistart at (4, 2): the minimum over restarts approaches 1/2, the
#    value attained by the known worst frame.
params = SearchParams(restarts=16, seed=7)
result = multistart_search(4, 2, params)
print()
print(f"multistart (4, 2), {params.restarts} restarts")
print(f"  best value : {result.best_value:.9f}")
print(f"  target 1/2 : {abs(result.best_value - 0.5):.2e} away")
print(f"  restarts within 1e-3: {sum(v < 0.5 + 1e-3 for v in result.per_restart_values)}")

# 3. Column case k = 1: the floor 1/sqrt(n) is met by the flat vector
#    whose entries all have magnitude 1/sqrt(n).
print()
print("k = 1 floors")
for n in (2, 3, 4, 5):
    result = multistart_search(n, 1, SearchParams(restarts=8, seed=0))
    print(
        f"  n = {n}: best {result.best_value:.9f}  "
        f"1/sqrt(n) = {1.0 / math.sqrt(n):.9f}"
    )
