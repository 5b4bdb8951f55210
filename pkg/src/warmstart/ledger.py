"""Cost accounting: per-day ledgers, run totals, baselines, and ratios.

Ledgers serialize to a versioned, sorted-key JSON text with full-precision
decimal floats, so identical runs produce byte-identical files and files
round-trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


@dataclass
class DayLedger:
    """Accounting for one simulated day.

    ``solver_thread`` is the source day of the completing thread (0 for the
    origin thread; for the k-server reduction it is the 1-based index of the
    completing server).
    """

    day: int
    radius_searched: int
    overhead_work: int
    virtual_radius: int
    solver_thread: int

    def __post_init__(self):
        if not (self.radius_searched >= self.virtual_radius >= 1):
            raise ValueError("need radius_searched >= virtual_radius >= 1")
        if self.overhead_work < 0:
            raise ValueError("negative overhead")


@dataclass
class CostLedger:
    """Full accounting for one strategy run over one scenario."""

    scenario: str
    strategy: str
    params: dict
    days: list[DayLedger]
    baselines: dict[str, float | None] = field(default_factory=dict)
    ratios: dict[str, float] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @property
    def total_radius(self) -> int:
        return sum(d.radius_searched for d in self.days)

    @property
    def total_overhead(self) -> int:
        return sum(d.overhead_work for d in self.days)

    @property
    def wall_estimate(self) -> int:
        return self.total_radius + self.total_overhead

    def attach_baseline(self, name: str, value: float | None) -> None:
        """Record a baseline cost; None marks it unavailable (cap exceeded)."""
        self.baselines[name] = value
        if value is not None and value > 0:
            self.ratios[name] = self.total_radius / value

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "scenario": self.scenario,
            "strategy": self.strategy,
            "params": self.params,
            "days": [
                {
                    "day": d.day,
                    "radius_searched": d.radius_searched,
                    "overhead_work": d.overhead_work,
                    "virtual_radius": d.virtual_radius,
                    "solver_thread": d.solver_thread,
                }
                for d in self.days
            ],
            "totals": {
                "radius": self.total_radius,
                "overhead": self.total_overhead,
                "wall_estimate": self.wall_estimate,
            },
            "baselines": self.baselines,
            "ratios": self.ratios,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    @staticmethod
    def from_dict(d: dict) -> "CostLedger":
        if d["schema_version"] != SCHEMA_VERSION:
            raise ValueError(f"unsupported ledger schema {d['schema_version']}")
        ledger = CostLedger(
            scenario=d["scenario"],
            strategy=d["strategy"],
            params=d["params"],
            days=[
                DayLedger(
                    day=e["day"],
                    radius_searched=e["radius_searched"],
                    overhead_work=e["overhead_work"],
                    virtual_radius=e["virtual_radius"],
                    solver_thread=e["solver_thread"],
                )
                for e in d["days"]
            ],
            baselines=dict(d["baselines"]),
            ratios=dict(d["ratios"]),
        )
        totals = d["totals"]
        if (
            totals["radius"] != ledger.total_radius
            or totals["overhead"] != ledger.total_overhead
            or totals["wall_estimate"] != ledger.wall_estimate
        ):
            raise ValueError("ledger totals do not match per-day entries")
        return ledger

    @staticmethod
    def from_json_text(text: str) -> "CostLedger":
        return CostLedger.from_dict(json.loads(text))
