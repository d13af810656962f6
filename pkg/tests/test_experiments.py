"""Harness behavior: sweeps, block report, perturbations, rw bound."""

import csv
import io
import json
import math
from fractions import Fraction

import numpy as np
import pytest

from spectralpaths.errors import BadParams
from spectralpaths.experiments import (
    CSV_COLUMNS,
    block_path_report,
    block_report_json,
    doubling_schedule,
    perturbation_json,
    perturbation_trial,
    random_pair_probability,
    rw_report_json,
    rw_stretch_report,
    sweep_csv,
    sweep_double_broom,
    sweep_json,
    sweep_weighted_cycle,
)
from spectralpaths.families import gen_weighted_cycle
from spectralpaths.graph import build_graph


def complete_graph(n):
    return build_graph(n, [(a, b, 1.0) for a in range(n) for b in range(a + 1, n)])


def test_doubling_schedule():
    assert doubling_schedule(1, 16) == [1, 2, 4, 8, 16]
    assert doubling_schedule(3, 20) == [3, 6, 12]
    with pytest.raises(BadParams):
        doubling_schedule(0, 16)
    with pytest.raises(BadParams):
        doubling_schedule(8, 4)


def test_weighted_cycle_sweep_switches_to_long_route():
    r = sweep_weighted_cycle(5, k_list=[1, 2, 4, 8, 16, 32])
    lens = [row.spectral_len for row in r.rows]
    assert lens == [2, 2, 2, 2, 4, 4, 4]
    assert [row.params.k for row in r.rows] == [1, 2, 4, 8, 16, 32, None]
    assert all(row.hop_dist == 2 for row in r.rows)
    assert r.limit_len == 4
    assert r.stabilization_k == 16
    assert r.rows[-1].stretch == Fraction(2)
    assert all(row.eigen_gap > 0 for row in r.rows)
    with pytest.raises(BadParams):
        sweep_weighted_cycle(1)


def test_double_broom_sweep_reaches_limit():
    r = sweep_double_broom(7, 2, k_list=[4, 8, 16])
    assert [row.spectral_len for row in r.rows] == [7, 7, 10, 10]
    assert all(row.hop_dist == 7 for row in r.rows)
    assert r.limit_len == 10
    assert r.stabilization_k == 16
    assert r.rows[-1].stretch == Fraction(10, 7)
    # the quotient walk alone is one hop short of the pendant path
    assert r.notes["limit_quotient_len"] == 9
    with pytest.raises(BadParams):
        sweep_double_broom(6, 2, k_list=[4])


@pytest.mark.parametrize("t", [1, 2, 4])
def test_double_broom_limit_ignores_t(t):
    r = sweep_double_broom(7, t, k_list=[4])
    assert r.limit_len == 10


def test_stabilization_requires_suffix_agreement():
    r = sweep_weighted_cycle(5, k_list=[16, 1, 32])
    # k = 1 breaks the suffix even though k = 16 already hits the limit
    assert r.stabilization_k == 32


def test_block_report_small_instance():
    rep = block_path_report(6, 3, 7)
    assert rep.n == 196
    assert rep.method == "full"
    assert rep.diameter == 37 and rep.diameter_formula == 37
    assert rep.diameter_match
    assert rep.spectral_len == 37
    assert rep.endpoint_distance == 37
    assert rep.stretch == Fraction(1)
    assert rep.claimed_len == 51
    assert not rep.length_match
    assert rep.stretch_vs_diameter == Fraction(1)
    assert rep.claimed_stretch_vs_diameter == Fraction(51, 37)
    assert rep.path_labels[0] in ("x_1", "y_1")
    assert rep.wall_time > 0


def test_block_report_methods_agree():
    full = block_path_report(6, 3, 7, method="full")
    quo = block_path_report(6, 3, 7, method="quotient")
    assert full.spectral_len == quo.spectral_len
    assert full.diameter == quo.diameter
    assert quo.method == "quotient"
    with pytest.raises(BadParams, match="unknown method"):
        block_path_report(6, 3, 7, method="banana")


def test_perturbation_zero_noise_preserves():
    g = gen_weighted_cycle(5, 3)
    rep = perturbation_trial(g, 0, (g.n - 2, g.n - 1), [0.0], trials=10)
    st = rep.stats[0]
    assert st.valid == 10 and st.invalid == 0
    assert st.preserved == 10 and st.contains_forced == 10
    assert st.fully_preserved
    assert rep.best_epsilon == 0.0


def test_perturbation_large_noise_invalidates():
    g = gen_weighted_cycle(5, 3)
    start = g.n - 2
    baseline = perturbation_trial(g, 0, (start, g.n - 1), [0.0], trials=1).baseline
    rep = perturbation_trial(g, 0, (start, g.n - 1), [0.0, 5.0], trials=60, seed=7)
    assert rep.baseline.vertices == baseline.vertices
    big = rep.stats[1]
    assert big.epsilon == 5.0
    assert big.invalid > 0
    assert big.valid + big.invalid == 60
    assert rep.best_epsilon == 0.0


def test_perturbation_rejects_forced_off_baseline():
    g = gen_weighted_cycle(5, 3)
    rec = perturbation_trial(g, 0, (g.n - 1, g.n - 1), [0.0], trials=1).baseline
    off = next(v for v in range(g.n) if v not in rec.vertices)
    with pytest.raises(BadParams, match="not on the baseline"):
        perturbation_trial(g, 0, (g.n - 1, off), [0.0], trials=1)


def test_random_pair_probability_exact():
    assert random_pair_probability(6, 3, Fraction(5, 3)) == Fraction(25, 722)
    assert random_pair_probability(7, 3, Fraction(1, 4)) == 0


def test_random_pair_probability_monotone_to_half():
    vals = [random_pair_probability(7, 3, t) for t in (1, 10, 100, 10**4)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] > Fraction(49, 100)
    assert all(v < Fraction(1, 2) for v in vals)


@pytest.mark.parametrize("n", range(3, 9))
def test_rw_bound_complete_graphs(n):
    rep = rw_stretch_report(complete_graph(n))
    assert rep.lam == pytest.approx(n / (n - 1), abs=1e-10)
    assert rep.violations == []
    assert rep.Delta == n - 1
    assert rep.diameter == 1


def test_rw_bound_four_cycle():
    g = build_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 3, 1.0)])
    rep = rw_stretch_report(g)
    assert rep.lam == pytest.approx(1.0, abs=1e-10)
    assert rep.violations == []
    assert rep.alpha == pytest.approx(np.abs(rep.f_D).max())
    assert np.linalg.norm(rep.f_D) == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(BadParams):
        rw_stretch_report(build_graph(1, []))


def test_sweep_csv_format():
    r = sweep_double_broom(7, 2, k_list=[4, 8, 16])
    text = sweep_csv(r)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0].keys()) == CSV_COLUMNS
    assert [row["k"] for row in rows] == ["4", "8", "16", "inf"]
    assert rows[-1]["stretch"] == "10/7"
    assert rows[-1]["t"] == "2"
    assert rows[0]["tie_flag"] in ("true", "false")
    float(rows[0]["eigen_gap"])
    float(rows[0]["wall_time"])


def test_sweep_json_round_trip():
    r = sweep_weighted_cycle(5, k_list=[8, 16])
    doc = json.loads(sweep_json(r))
    assert doc["family"] == "weighted-cycle"
    assert doc["limit_len"] == 4
    assert doc["stabilization_k"] == 16
    assert doc["t"] is None
    assert len(doc["rows"]) == 3
    assert doc["rows"][-1]["k"] == "inf"


def test_block_report_json_fields():
    doc = json.loads(block_report_json(block_path_report(6, 3, 7)))
    assert doc["diameter"] == 37
    assert doc["stretch_vs_diameter"] == "1"
    assert doc["claimed_stretch_vs_diameter"] == "51/37"
    assert doc["claimed_stretch_vs_diameter_float"] == pytest.approx(51 / 37)
    assert doc["method"] == "full"
    assert isinstance(doc["path"], list)


def test_perturbation_json_uses_labels():
    g = gen_weighted_cycle(5, 3)
    rep = perturbation_trial(g, 0, (g.n - 2, g.n - 1), [0.0], trials=2)
    doc = json.loads(perturbation_json(rep, g))
    assert doc["special"] == "u"
    assert doc["forced"] == "v"
    assert doc["stats"][0]["trials"] == 2


def test_rw_report_json_fields():
    g = complete_graph(4)
    doc = json.loads(rw_report_json(rw_stretch_report(g), g))
    assert doc["lambda"] == pytest.approx(4 / 3)
    assert doc["violations"] == []
    assert len(doc["f_D"]) == 4
