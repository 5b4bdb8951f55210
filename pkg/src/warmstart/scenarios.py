"""Deterministic scenario generators and the scenario file format.

All randomness flows through numpy's Philox counter-based bit generator
keyed on the scenario seed, so regenerating with the same parameters is
byte-identical and portable.  Serialized scenarios are versioned JSON with
sorted keys and full-precision floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .metric import L2, Point, origin, pairwise_max_distance
from .oracle import HiddenInstance, hidden_solution
from .trajectories import TrajectorySet, trajectory_cost

SCHEMA_VERSION = 1


@dataclass
class Scenario:
    name: str
    seed: int
    dim: int
    norm: str
    days: list[HiddenInstance]
    meta: dict = field(default_factory=dict)
    d_max: float = 0.0

    @property
    def T(self) -> int:
        return len(self.days)

    def solutions(self) -> dict[int, Point]:
        return {inst.day: hidden_solution(inst) for inst in self.days}

    def solution_list(self) -> list[Point]:
        return [hidden_solution(inst) for inst in self.days]

    def to_json_text(self) -> str:
        d = {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "seed": self.seed,
            "dim": self.dim,
            "norm": self.norm,
            "d_max": self.d_max,
            "days": [
                {
                    "day": inst.day,
                    "features": list(inst.features.coords),
                    "solution": list(hidden_solution(inst).coords),
                }
                for inst in self.days
            ],
            "meta": self.meta,
        }
        return json.dumps(d, sort_keys=True, indent=1) + "\n"

    @staticmethod
    def from_json_text(text: str) -> "Scenario":
        d = json.loads(text)
        if d["schema_version"] != SCHEMA_VERSION:
            raise ValueError(f"unsupported scenario schema {d['schema_version']}")
        days = [
            HiddenInstance(
                day=e["day"],
                features=Point(tuple(e["features"])),
                solution=Point(tuple(e["solution"])),
                norm=d["norm"],
            )
            for e in d["days"]
        ]
        return Scenario(
            name=d["name"],
            seed=d["seed"],
            dim=d["dim"],
            norm=d["norm"],
            days=days,
            meta=d["meta"],
            d_max=d["d_max"],
        )


def traj_to_jsonable(traj: TrajectorySet) -> dict:
    return {
        "k": traj.k,
        "assignment": {str(t): i for t, i in traj.assignment.items()},
        "predictions": {
            str(t): list(p.coords) for t, p in traj.predictions.items()
        },
    }


def traj_from_jsonable(d: dict) -> TrajectorySet:
    return TrajectorySet(
        k=d["k"],
        assignment={int(t): i for t, i in d["assignment"].items()},
        predictions={int(t): Point(tuple(c)) for t, c in d["predictions"].items()},
    )


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed))


def _uniform_point(rng, center: np.ndarray, radius: float) -> np.ndarray:
    """A point whose offset from ``center`` has norm at most ``radius`` in
    L1, L2, and Linf alike (per-coordinate range radius/dim)."""
    dim = len(center)
    if radius <= 0:
        return center.copy()
    return center + rng.uniform(-radius / dim, radius / dim, dim)


def _pt(arr: np.ndarray) -> Point:
    return Point(tuple(float(x) for x in arr))


def _finish(name, seed, dim, norm, days, meta) -> Scenario:
    sols = [hidden_solution(i) for i in days]
    return Scenario(
        name=name,
        seed=seed,
        dim=dim,
        norm=norm,
        days=days,
        meta=meta,
        d_max=pairwise_max_distance(sols, norm),
    )


def gen_static_clusters(
    seed: int, k: int, sep: float, spread: float, T: int, dim: int, norm: str = L2
) -> Scenario:
    """k cluster centers at mutual distance >= sep; each day draws a cluster
    uniformly and a solution within ``spread`` of its center.  Features track
    the solution closely, so threshold partitions can succeed."""
    if sep <= 0 or spread < 0:
        raise ValueError("need sep > 0 and spread >= 0")
    rng = _rng(seed)
    centers = np.zeros((k, dim))
    for j in range(k):
        centers[j, 0] = (j + 1) * sep
    labels = []
    days = []
    for t in range(1, T + 1):
        lab = int(rng.integers(k))
        labels.append(lab + 1)
        sol = _uniform_point(rng, centers[lab], spread)
        feat = _uniform_point(rng, sol, 0.01 * max(spread, 1.0))
        days.append(HiddenInstance(t, _pt(feat), _pt(sol), norm))
    meta = {
        "generator": "static_clusters",
        "params": {"k": k, "sep": sep, "spread": spread, "T": T, "dim": dim},
        "centers": [list(map(float, c)) for c in centers],
        "labels": labels,
    }
    return _finish(f"static_clusters_k{k}_s{seed}", seed, dim, norm, days, meta)


def gen_drifting_trajectories(
    seed: int,
    k: int,
    drift_per_day: float,
    noise: float,
    T: int,
    dim: int,
    norm: str = L2,
) -> Scenario:
    """k latent trajectories, each moving at most ``drift_per_day`` per day;
    days emit from the trajectories round-robin, with solutions within
    ``noise`` of the emitting trajectory's position.  The latent trajectory
    set and its cost are planted in the metadata as the scenario baseline."""
    if drift_per_day < 0 or noise < 0:
        raise ValueError("need nonnegative drift and noise")
    rng = _rng(seed)
    pos = np.zeros((k, dim))
    for j in range(k):
        pos[j] = rng.uniform(0.0, 10.0, dim)
        pos[j, 0] += 15.0 * j
    start = origin(dim)
    assignment: dict[int, int] = {}
    predictions: dict[int, Point] = {}
    days = []
    from .metric import distance

    hit = 0.0
    movement = 0.0
    prev_pred = {i: start for i in range(1, k + 1)}
    for t in range(1, T + 1):
        for j in range(k):
            pos[j] = _uniform_point(rng, pos[j], drift_per_day)
        i = ((t - 1) % k) + 1
        pred = _pt(pos[i - 1])
        sol_arr = _uniform_point(rng, pos[i - 1], noise)
        sol = _pt(sol_arr)
        feat = _uniform_point(rng, sol_arr, 0.01)
        days.append(HiddenInstance(t, _pt(feat), sol, norm))
        assignment[t] = i
        predictions[t] = pred
        movement += distance(prev_pred[i], pred, norm)
        prev_pred[i] = pred
        hit += distance(pred, sol, norm)
    planted = TrajectorySet(k=k, assignment=assignment, predictions=predictions)
    meta = {
        "generator": "drifting_trajectories",
        "params": {
            "k": k,
            "drift_per_day": drift_per_day,
            "noise": noise,
            "T": T,
            "dim": dim,
        },
        "planted": traj_to_jsonable(planted),
        "planted_cost": hit + movement,
    }
    return _finish(f"drifting_k{k}_s{seed}", seed, dim, norm, days, meta)


def gen_planted_lower_bound(
    seed: int, k: int, sep: float, T: int, dim: int, norm: str = L2
) -> Scenario:
    """k far-apart planted solutions; each day picks one uniformly.  Features
    are constant (uninformative), exhibiting the parallel-search lower bound."""
    if sep <= 1:
        raise ValueError("need sep >> 1")
    rng = _rng(seed)
    planted = np.zeros((k, dim))
    for j in range(k):
        planted[j, 0] = (j + 1) * sep
    feat = origin(dim)
    days = []
    choices = []
    for t in range(1, T + 1):
        c = int(rng.integers(k))
        choices.append(c + 1)
        days.append(HiddenInstance(t, feat, _pt(planted[c]), norm))
    meta = {
        "generator": "planted_lower_bound",
        "params": {"k": k, "sep": sep, "T": T, "dim": dim},
        "planted_points": [list(map(float, p)) for p in planted],
        "choices": choices,
    }
    return _finish(f"planted_lb_k{k}_s{seed}", seed, dim, norm, days, meta)


def gen_adversarial_switch(
    seed: int,
    phases: int,
    T: int,
    dim: int,
    jump: float = 1000.0,
    jitter: float = 1.0,
    norm: str = L2,
) -> Scenario:
    """Solutions dwell near one region per phase, then jump far to the next.

    By the time of each switch, the previous same-region solution sits deep
    in a recency-ordered thread list, stressing rank promotion."""
    if phases < 1 or T < phases:
        raise ValueError("need 1 <= phases <= T")
    rng = _rng(seed)
    days = []
    for t in range(1, T + 1):
        p = min(phases - 1, (t - 1) * phases // T)
        center = np.zeros(dim)
        center[0] = (p + 1) * jump
        sol = _uniform_point(rng, center, jitter)
        feat = _uniform_point(rng, sol, 0.01)
        days.append(HiddenInstance(t, _pt(feat), _pt(sol), norm))
    meta = {
        "generator": "adversarial_switch",
        "params": {
            "phases": phases,
            "T": T,
            "dim": dim,
            "jump": jump,
            "jitter": jitter,
        },
    }
    return _finish(f"switch_p{phases}_s{seed}", seed, dim, norm, days, meta)


GENERATORS = {
    "static_clusters": gen_static_clusters,
    "drifting_trajectories": gen_drifting_trajectories,
    "planted_lower_bound": gen_planted_lower_bound,
    "adversarial_switch": gen_adversarial_switch,
}


def generate(generator: str, **params) -> Scenario:
    if generator not in GENERATORS:
        raise ValueError(f"unknown generator {generator!r}")
    return GENERATORS[generator](**params)


def default_corpus() -> list[Scenario]:
    """The scenario corpus the online strategies are verified against."""
    return [
        gen_drifting_trajectories(101, k=1, drift_per_day=0.5, noise=0.5, T=40, dim=2),
        gen_drifting_trajectories(102, k=2, drift_per_day=0.5, noise=0.5, T=40, dim=2),
        gen_drifting_trajectories(103, k=3, drift_per_day=0.5, noise=0.5, T=40, dim=2),
        gen_static_clusters(201, k=3, sep=100.0, spread=1.0, T=30, dim=2),
        gen_adversarial_switch(301, phases=4, T=20, dim=1),
        gen_drifting_trajectories(401, k=1, drift_per_day=0.0, noise=0.0, T=10, dim=2),
    ]


def planted_baseline(scenario: Scenario) -> float | None:
    """The planted trajectory cost, for scenarios that carry one."""
    if "planted" in scenario.meta:
        planted = traj_from_jsonable(scenario.meta["planted"])
        _, _, total = trajectory_cost(planted, scenario.solutions(), scenario.norm)
        return total
    return None
