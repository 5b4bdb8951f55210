"""Exact offline benchmarks: k-server optimum and best k trajectories.

The offline k-server optimum (minimum total movement serving every day's
solution) is computed exactly by min-cost flow.  The best k-trajectory cost
(hit + movement, predictions restricted to past solutions and the origin) is
computed by brute force at desk scale.  The two sandwich each other within a
factor of two.
"""

import random

from warmstart import (
    Point,
    WorkFunctionState,
    brute_force_best_trajectories,
    offline_opt_kserver,
    wfa_step,
)

rng = random.Random(12)
# days alternate between two regions, with jitter
sols = [
    Point.of((0.0 if t % 2 == 0 else 60.0) + rng.uniform(-2, 2)) for t in range(6)
]
print("solutions:", [round(s[0], 2) for s in sols])

for k in (1, 2, 3):
    server = offline_opt_kserver(sols, k, "L1")
    traj, witness = brute_force_best_trajectories(sols, k, "L1")
    print(
        f"k={k}: kserver optimum {server:7.2f}   "
        f"trajectory optimum {traj:7.2f}   "
        f"(sandwich: traj <= server <= 2*traj)"
    )

print("\nonline work-function algorithm with 2 servers:")
state = WorkFunctionState(2, 1, "L1")
moved = 0.0
for t, s in enumerate(sols, 1):
    idx, move = wfa_step(state, s)
    moved += move
    print(f"  day {t}: request {s[0]:7.2f} -> server {idx} moves {move:6.2f}")
print(f"total online movement: {moved:.2f}  "
      f"vs offline optimum {offline_opt_kserver(sols, 2, 'L1'):.2f}")
