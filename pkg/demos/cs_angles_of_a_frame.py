"""Thin CS decomposition of a 4-by-2 frame under the 2+2 row split.

Any such frame factors as block rotations around a cosine-sine core with
two angles (alpha, beta); the top block's determinant has magnitude
cos(alpha) cos(beta) and the bottom's sin(alpha) sin(beta), which is what
ties row-block conditioning to a two-angle picture.
"""
import math

import numpy as np

from goodsub import cs_decompose, extremal_matrix, haar_sample, minors_from_cs

# 1. A random frame's factors.
frame = haar_sample(4, 2, seed=5)
factors = cs_decompose(frame)

print("random 4x2 frame")
print(f"  alpha = {factors.alpha:.6f}, beta = {factors.beta:.6f}")
print(f"  reconstruction error: {np.max(np.abs(factors.reconstruct() - frame.values)):.1e}")

# 2. The middle factor is the whole story: q1, q2, q3 are rotations and
#    the core carries the two angles.
print("  middle factor:")
print(np.array2string(factors.middle_factor(), precision=6, suppress_small=True))

# 3. Minor products against the raw block determinants.
m_top, m_bottom = minors_from_cs(factors)
print(f"  cos a cos b = {m_top:.6f}   |det top|    = {abs(np.linalg.det(frame.values[:2])):.6f}")
print(f"  sin a sin b = {m_bottom:.6f}   |det bottom| = {abs(np.linalg.det(frame.values[2:])):.6f}")

# 4. The attaining frame's angles are exactly (0, pi/3): its top block is
#    a scaled rotation with determinant 1/2 = cos(0) cos(pi/3), and its
#    bottom block is singular since sin(0) kills the product.
factors = cs_decompose(extremal_matrix())
print()
print("attaining 4x2 frame")
print(f"  alpha = {factors.alpha:.12f} (0)")
print(f"  beta  = {factors.beta:.12f} (pi/3 = {math.pi / 3:.12f})")
m_top, m_bottom = minors_from_cs(factors)
print(f"  cos a cos b = {m_top:.12f}")
print(f"  sin a sin b = {m_bottom:.12f}")
