"""How the number of simultaneously updated coordinates shapes the bounds.

Mirrors the layout of the G_0.5(1024), k = 30 experiments: q-RCC1 from the
point with all coordinates k/n and no restarts, q-RCC2 averaged over 20
restarts from the same point.
"""
import numpy as np

from qrcc import GeneratorSpec, SolverConfig, generate, initial_point, run_single
from qrcc.solver import restart_rng

g = generate(GeneratorSpec("erdos_renyi", n=1024, p=0.5, seed=1))
k = 30
x0 = initial_point(g.n, k, "uniform_k_over_n", None)
print(g)

print("\nq-RCC1 bound after a fixed number of iterations")
print("   q " + "".join(f"{it:>10d}" for it in (500, 1000)))
for q in (2, 50, 100, 200, 500):
    row = []
    for iters in (500, 1000):
        cfg = SolverConfig("rcc1", k=k, q=q, max_iters=iters, seed=1)
        row.append(run_single(g, cfg, x0, restart_rng(1, 0)).best_bound)
    print(f"{q:4d} " + "".join(f"{b:10.2f}" for b in row))

print("\nq-RCC2, 20 restarts from the same point: mean bound and iterations")
for q in (2, 50, 100, 200, 500):
    bounds, iters = [], []
    for restart in range(20):
        cfg = SolverConfig("rcc2", k=k, q=q, max_iters=500, seed=1)
        res = run_single(g, cfg, x0, restart_rng(1, restart))
        bounds.append(res.best_bound)
        iters.append(res.iterations)
    print(f"q={q:4d}  mean bound {np.mean(bounds):7.2f}  best {max(bounds):6.1f}  mean iterations {np.mean(iters):6.1f}")
