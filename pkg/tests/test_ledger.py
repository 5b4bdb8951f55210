import json

import pytest

from warmstart.ledger import CostLedger, DayLedger


def _ledger():
    return CostLedger(
        scenario="s",
        strategy="predict-yesterday",
        params={},
        days=[
            DayLedger(day=1, radius_searched=5, overhead_work=2, virtual_radius=3, solver_thread=0),
            DayLedger(day=2, radius_searched=4, overhead_work=0, virtual_radius=4, solver_thread=1),
        ],
    )


def test_totals():
    lg = _ledger()
    assert lg.total_radius == 9
    assert lg.total_overhead == 2
    assert lg.wall_estimate == 11


def test_day_ledger_validation():
    with pytest.raises(ValueError):
        DayLedger(day=1, radius_searched=2, overhead_work=0, virtual_radius=3, solver_thread=0)
    with pytest.raises(ValueError):
        DayLedger(day=1, radius_searched=1, overhead_work=0, virtual_radius=0, solver_thread=0)
    with pytest.raises(ValueError):
        DayLedger(day=1, radius_searched=1, overhead_work=-1, virtual_radius=1, solver_thread=0)


def test_json_round_trip_is_exact():
    lg = _ledger()
    lg.attach_baseline("planted", 4.5)
    lg.attach_baseline("opt_1_traj", None)
    text = lg.to_json_text()
    back = CostLedger.from_json_text(text)
    assert back == lg
    assert back.to_json_text() == text


def test_ratio_recomputable_from_stored_fields():
    lg = _ledger()
    lg.attach_baseline("planted", 4.5)
    d = json.loads(lg.to_json_text())
    assert d["ratios"]["planted"] == d["totals"]["radius"] / d["baselines"]["planted"]
    assert "opt_1_traj" not in d["ratios"] or d["baselines"]["opt_1_traj"] is not None


def test_unavailable_baseline_has_no_ratio():
    lg = _ledger()
    lg.attach_baseline("opt_1_traj", None)
    assert lg.baselines["opt_1_traj"] is None
    assert "opt_1_traj" not in lg.ratios


def test_tampered_totals_rejected():
    d = json.loads(_ledger().to_json_text())
    d["totals"]["radius"] += 1
    with pytest.raises(ValueError):
        CostLedger.from_dict(d)


def test_unknown_schema_rejected():
    d = json.loads(_ledger().to_json_text())
    d["schema_version"] = 99
    with pytest.raises(ValueError):
        CostLedger.from_dict(d)
