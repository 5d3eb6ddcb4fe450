"""The two per-iteration subproblems on a toy block of four coordinates."""
import numpy as np

from qrcc import project_capped_simplex, solve_linear, solve_quadratic

c = np.array([4.0, 1.0, 2.5, 2.5])   # partial gradient on the block
x = np.array([0.2, 0.9, 0.4, 0.0])   # current values, budget r = sum = 1.5
r = x.sum()

# Linear model: fill greedily by gradient; one coordinate at most is fractional.
lin = solve_linear(c, r)
print("linear   u =", lin.u, " objective gain", c @ (lin.u - x))

# Proximal quadratic model: u_j = clip(x_j + (c_j - lam) / L_j, 0, 1) with lam
# chosen so the budget is met.  Larger weights keep u closer to x.
for scale in (1.0, 5.0, 50.0):
    L = np.full(4, scale)
    res = solve_quadratic(c, L, x, r)
    print(f"L={scale:5.1f}  u = {np.round(res.u, 4)}  lam = {res.dual:.4f}  sum = {res.u.sum():.12f}")

# With L = 1, x = 0 the quadratic subproblem is the Euclidean projection
# onto the capped simplex, which is how random starting points are made.
print("projection of (2, 0.3, 0.1) onto {sum = 2, 0 <= x <= 1}:", project_capped_simplex([2, 0.3, 0.1], 2))
