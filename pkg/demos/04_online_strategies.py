"""Online day-by-day search without knowing the number of trajectories.

Predict-yesterday restarts from the previous solution each day.  The
rate-decay strategy instead keeps a thread at every past solution: the most
recent runs at full speed, the rank-i thread at rate 1/(i^2 ln^2 i), and
threads whose searched ball is contained in a faster thread's ball are
killed.  Its cost is competitive with the best k-trajectory benchmark for
every k at once.
"""

from warmstart import (
    kserver_reduction,
    planted_baseline,
    predict_yesterday,
    run_quadratic_decay,
)
from warmstart.scenarios import gen_drifting_trajectories

scen = gen_drifting_trajectories(
    102, k=2, drift_per_day=0.5, noise=0.5, T=40, dim=2
)
base = planted_baseline(scen)
print(f"scenario: {scen.name} (T={scen.T}, two drifting trajectories)")
print(f"planted 2-trajectory benchmark cost: {base:.2f}\n")

for name, run in [
    ("predict-yesterday", lambda: predict_yesterday(scen)),
    ("quadratic-decay  ", lambda: run_quadratic_decay(scen)),
    ("harmonic-decay   ", lambda: run_quadratic_decay(scen, mode="harmonic")),
    ("kserver-greedy k2", lambda: kserver_reduction(scen, "greedy", 2)),
]:
    lg = run()
    print(
        f"{name}: radius {lg.total_radius:5d}  overhead {lg.total_overhead:5d}"
        f"  ratio vs planted {lg.total_radius / base:6.2f}"
    )

print("\nper-day detail of the quadratic-decay run (first 6 days):")
lg = run_quadratic_decay(scen)
for d in lg.days[:6]:
    print(
        f"  day {d.day}: radius {d.radius_searched:3d}"
        f"  virtual {d.virtual_radius:3d}"
        f"  solved by thread from day {d.solver_thread}"
    )
