"""Comparing the solvers with exhaustive search on small graphs."""
from qrcc import (GeneratorSpec, SolverConfig, exhaustive_dks, generate, greedy_peel, induced_edge_count,
                  run)

print(" seed  optimum  peel  rcc1  rcc2   subsets")
for seed in range(8):
    g = generate(GeneratorSpec("erdos_renyi", n=18, p=0.35, seed=seed))
    k = 6
    exact = exhaustive_dks(g, k)
    peel = induced_edge_count(g, greedy_peel(g, k))
    # reports use x^T A x, which counts every edge twice
    r1 = run(g, SolverConfig("rcc1", k=k, q=6, max_iters=300, max_restarts=20, seed=seed))
    r2 = run(g, SolverConfig("rcc2", k=k, q=6, max_iters=300, max_restarts=20, seed=seed))
    print(f"{seed:5d}  {exact.optimum:7d}  {peel:4d}  {r1.best_integer_value / 2:4.0f}  "
          f"{r2.best_integer_value / 2:4.0f}  {exact.subsets_examined:8d}")
