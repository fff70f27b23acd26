# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import math
from typing import Any

import numpy as np
import pytest

from griffiths_sim.annealer.apq import DeviceMomentRecord
from griffiths_sim.observables import (
    ResamplingMethod,
    binder_ratio,
    device_binder_ratio,
    global_nl_susceptibility,
    global_susceptibility,
    local_susceptibilities,
    magnetization_average,
    pool_global_susceptibilities,
    pool_local_susceptibilities,
)
from griffiths_sim.qmc.records import MomentRecord


def _record(index: int = 0, **overrides: Any) -> MomentRecord:  # noqa: ANN401
    fields: dict[str, Any] = {
        "instance": f"L1-{index:04d}",
        "L": 1,
        "beta": 2.0,
        "gamma": 1.0,
        "M": 8,
        "n_meas": 100,
        "m_abs": 0.5,
        "m2": 0.3,
        "m4": 0.12,
        "mi2": [0.6, 0.5],
        "mi4": [0.4, 0.3],
    }
    return MomentRecord.model_validate({**fields, **overrides})


def _device_record(m2: float, m4: float) -> DeviceMomentRecord:
    return DeviceMomentRecord.model_validate(
        {"instance": "L2-0000", "L": 2, "s_star": 0.4, "beta": 2.4, "gamma": 1.2, "n_rep": 100, "m": 0.0, "m_abs": 0.4, "m2": m2, "m4": m4, "site_means": [0.0] * 4}
    )


def test_binder_ratio_averages_instances() -> None:
    """Test that verifies g = [(3 − ⟨m⁴⟩/⟨m²⟩²)/2] with its jackknife error and −ln(1 − g)."""
    ratio = binder_ratio([_record(0, m4=0.12), _record(1, m4=0.15)])
    assert ratio.g.value == pytest.approx(0.75)
    assert ratio.g.error == pytest.approx(1.0 / 12.0)
    assert ratio.g.n_instances == 2
    assert (ratio.g.L, ratio.g.beta, ratio.g.gamma, ratio.g.s_star) == (1, 2.0, 1.0, None)
    assert ratio.log_scale is not None
    assert ratio.log_scale.value == pytest.approx(math.log(4.0))


def test_binder_ratio_of_one_has_no_log_scale() -> None:
    """Test that verifies that g = 1 drops out of the −ln(1 − g) stream."""
    ratio = binder_ratio([_record(0, m2=0.5, m4=0.25), _record(1, m2=0.5, m4=0.25)])
    assert ratio.g.value == pytest.approx(1.0)
    assert ratio.log_scale is None


def test_device_binder_ratio_is_tagged_by_pause_point() -> None:
    """Test that verifies the device Binder ratio and its (s*, L) tag."""
    ratio = device_binder_ratio([_device_record(0.3, 0.12), _device_record(0.3, 0.12)], ResamplingMethod.BOOTSTRAP)
    assert ratio.g.value == pytest.approx(0.5 * (3.0 - 0.12 / 0.09))
    assert ratio.g.s_star == 0.4
    assert ratio.g.error == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize(
    ("records", "match"),
    [
        ([], "at least one record"),
        ([_record(0), _record(1, beta=4.0)], "mix different beta"),
        ([_record(0, m_abs=0.0, m2=0.0, m4=0.0)], "needs ⟨m²⟩ > 0"),
    ],
)
def test_binder_ratio_errors(records: list[MomentRecord], match: str) -> None:
    """Test that verifies the errors for records that do not form one ensemble."""
    with pytest.raises(ValueError, match=match):
        _ = binder_ratio(records)


def test_global_susceptibility_scales_with_beta_and_n() -> None:
    """Test that verifies χ = βN[⟨m²⟩]."""
    estimate = global_susceptibility([_record(0, m2=0.2, m4=0.05), _record(1, m2=0.4, m4=0.2)], beta=2.0, n_sites=8)
    assert estimate.observable == "chi_global"
    assert estimate.value == pytest.approx(16.0 * 0.3)
    assert estimate.error == pytest.approx(16.0 * 0.1)
    with pytest.raises(ValueError, match="need β > 0 and N > 0"):
        _ = global_susceptibility([_record()], beta=0.0, n_sites=8)


def test_magnetization_average() -> None:
    """Test that verifies [⟨|m|⟩]."""
    estimate = magnetization_average([_record(0, m_abs=0.4), _record(1, m_abs=0.6)])
    assert estimate.value == pytest.approx(0.5)


def test_local_and_global_susceptibilities() -> None:
    """Test that verifies χ_loc = ⟨m_i²⟩, χ_nlloc = 3⟨m_i²⟩² − ⟨m_i⁴⟩ and the global pair."""
    local = local_susceptibilities(_record())
    np.testing.assert_allclose(local.chi_loc, [0.6, 0.5])
    np.testing.assert_allclose(local.chi_nlloc, [0.68, 0.45])
    global_pair = global_nl_susceptibility(_record())
    assert global_pair.chi == pytest.approx(0.3)
    assert global_pair.chi_nl == pytest.approx(3.0 * 0.09 - 0.12)


def test_pooling_concatenates_sites_and_instances() -> None:
    """Test that verifies N × N_rand local samples and one global sample per instance."""
    chi_loc, chi_nlloc = pool_local_susceptibilities([_record(0), _record(1), _record(2)])
    assert chi_loc.shape == chi_nlloc.shape == (6,)
    chi, chi_nl = pool_global_susceptibilities([_record(0), _record(1)])
    assert chi.shape == chi_nl.shape == (2,)
    empty_loc, empty_nl = pool_local_susceptibilities([])
    assert empty_loc.size == empty_nl.size == 0


@pytest.mark.parametrize("a", [0.3, 0.7, 1.0])
def test_two_point_site_distribution_has_nonlinear_local_susceptibility_2a4(a: float) -> None:
    """Test that verifies χ_nlloc = 2a⁴ for a site magnetization that is ±a with equal weight."""
    local = local_susceptibilities(_record(mi2=[a**2, a**2], mi4=[a**4, a**4]))
    np.testing.assert_allclose(local.chi_nlloc.as_array(), 2.0 * a**4)
    np.testing.assert_allclose(local.chi_loc.as_array(), a**2)


def test_ensemble_estimates_do_not_depend_on_the_instance_order() -> None:
    """Test that verifies that shuffling the instance list leaves every estimate and its error unchanged."""
    rng = np.random.default_rng(6)
    m2 = rng.uniform(0.1, 0.55, size=12)
    ratios = rng.uniform(1.1, 1.8, size=12)
    records = [_record(k, m_abs=0.9 * math.sqrt(v), m2=v, m4=r * v * v) for k, (v, r) in enumerate(zip(m2, ratios, strict=True))]
    shuffled = [records[k] for k in rng.permutation(len(records))]
    for estimate in (
        lambda rs: binder_ratio(rs).g,
        lambda rs: global_susceptibility(rs, beta=2.0, n_sites=8),
        lambda rs: magnetization_average(rs),
    ):
        original, permuted = estimate(records), estimate(shuffled)
        assert permuted.value == pytest.approx(original.value, rel=1e-12)
        assert permuted.error == pytest.approx(original.error, rel=1e-9)
    chi, chi_nl = pool_global_susceptibilities(records)
    chi_shuffled, chi_nl_shuffled = pool_global_susceptibilities(shuffled)
    np.testing.assert_allclose(np.sort(chi_shuffled), np.sort(chi))
    np.testing.assert_allclose(np.sort(chi_nl_shuffled), np.sort(chi_nl))
