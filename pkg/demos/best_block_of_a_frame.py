"""Find the best-conditioned square row block of an orthonormal frame.

Every n-by-k frame (orthonormal columns) contains a k-by-k block of rows
whose smallest singular value is bounded away from zero.  This walks the
exhaustive selector over a random frame and over the frame where the
worst case is attained.
"""
import numpy as np

from goodsub import best_submatrix, extremal_matrix, haar_sample

# 1. A random 6-by-3 frame: column span drawn from the rotation-invariant
#    distribution.
frame = haar_sample(6, 3, seed=0)
report = best_submatrix(frame)

print("random 6x3 frame")
print(f"  best rows   : {report.row_set}")
print(f"  sigma_min   : {report.sigma_min:.6f}")
print(f"  determinant : {report.determinant:+.6f}")
print(f"  blocks tried: {len(report.to_dict()['all_values'])}")

# 2. Every block, ranked.  Random frames usually have several comfortable
#    choices; the spread below is typical.
ranked = sorted(
    report.to_dict()["all_values"], key=lambda e: e["sigma_min"], reverse=True
)
print("  top five blocks:")
for entry in ranked[:5]:
    print(f"    rows {tuple(entry['row_set'])}  sigma {entry['sigma_min']:.6f}")

# 3. The attaining 4-by-2 frame: five of its six blocks tie at exactly
#    1/2 and the sixth is singular.  No selection does better than 1/2,
#    which is the conjectured floor 1/sqrt(n) at n = 4.
extremal = extremal_matrix()
report = best_submatrix(extremal)

print()
print("attaining 4x2 frame")
print(np.array2string(extremal.values, precision=6, suppress_small=True))
print(f"  best rows : {report.row_set}")
print(f"  sigma_min : {report.sigma_min:.17f}")
for entry in report.to_dict()["all_values"]:
    print(f"    rows {tuple(entry['row_set'])}  sigma {entry['sigma_min']:.12f}")
