import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from latticewalk import Distribution, error_sweep, run_walk, site_trace, std_dev, total_variation
from latticewalk.classical import classical_distribution
from latticewalk.walk import position_distribution

import oracles


def point_mass(x, lo=-5, hi=5):
    p = np.zeros(hi - lo + 1)
    p[x - lo] = 1
    return Distribution(np.arange(lo, hi + 1), p, 0)


def test_sweep_ideal_peak():
    (q, c) = error_sweep(10, [0.0])
    assert q.label == "dt0=0" and c.label == "classical"
    assert list(q.sites) == list(range(-10, 11)) == list(c.sites)
    assert q.at(6) == pytest.approx(0.26, abs=0.03)
    # frozen from the dense-matrix oracle
    ref = oracles.dense_distribution(oracles.dense_walk(10, np.pi / 2, 11)[-1], 11)
    assert q.at(6) == pytest.approx(ref[6 + 11], abs=1e-12)
    assert q.at(6) == pytest.approx(269 / 1024, abs=1e-12)


def test_sweep_stalled_walk():
    (q,) = error_sweep(10, [np.pi], classical=False)
    assert q.at(0) == pytest.approx(1.0, abs=1e-12)
    assert q.total() == pytest.approx(1.0, abs=1e-12)


def test_sweep_narrowing():
    dists = error_sweep(10, [0, 0.2, 0.4, 0.6], classical=False)
    sd = [std_dev(d) for d in dists]
    assert all(a > b for a, b in zip(sd, sd[1:]))


def test_sweep_threads_same_result():
    a = error_sweep(12, [0, 0.3, 0.9], jobs=1)
    b = error_sweep(12, [0, 0.3, 0.9], jobs=3)
    for x, y in zip(a, b):
        assert x.label == y.label
        assert np.array_equal(x.probabilities, y.probabilities)


def test_sweep_rejects_nonfinite():
    with pytest.raises(ValueError):
        error_sweep(4, [float("nan")])


def test_site_trace_fig6():
    traces = site_trace(6, 20, [0.0])
    q, c = traces
    assert q.values.shape == (21,)
    assert np.argmax(q.values) == 10
    assert q.values[10] == pytest.approx(0.26, abs=0.03)
    assert q.values[12] < q.values[10]
    assert c.values[10] == 45 / 1024
    assert np.all(q.values[:6] == 0) and np.all(c.values[:6] == 0)


def test_site_trace_unreachable():
    for t in site_trace(6, 5, [0, 0.2]):
        assert np.all(t.values == 0)


def test_off_parity_emitted_with_error():
    (q, _) = site_trace(6, 12, [0.4])
    assert q.values[7] > 0
    (ideal, _) = site_trace(6, 12, [0.0])
    assert np.all(ideal.values[1::2] == 0)


def test_quantum_fluctuates_classical_grows():
    q, c = site_trace(6, 16, [0.0])
    qe, ce = q.values[6:17:2], c.values[6:17:2]
    assert np.all(np.diff(ce) >= 0)
    assert np.any(np.diff(qe) < 0)


def test_total_variation_examples():
    p = point_mass(0)
    assert total_variation(p, p) == 0
    assert total_variation(point_mass(0), point_mass(2)) == 1
    # differing ranges are zero-padded
    assert total_variation(point_mass(0, -1, 1), point_mass(4, 3, 6)) == 1


def test_total_variation_quantum_vs_classical():
    q, c = error_sweep(10, [0.0])
    tv = total_variation(q, c)
    manual = 0.0
    for x in range(-10, 11):
        manual += abs(q.at(x) - float(classical_distribution(10).at(x)))
    assert 0 < tv < 1
    assert tv == pytest.approx(manual / 2, abs=1e-15)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.floats(0, 1), min_size=7, max_size=7), min_size=3, max_size=3))
def test_total_variation_metric(rows):
    ds = []
    for r in rows:
        a = np.array(r) + 1e-3
        ds.append(Distribution(np.arange(-3, 4), a / a.sum(), 0))
    p, q, r = ds
    assert total_variation(p, q) == pytest.approx(total_variation(q, p), abs=1e-15)
    assert total_variation(p, p) == 0
    assert total_variation(p, r) <= total_variation(p, q) + total_variation(q, r) + 1e-15
    assert 0 <= total_variation(p, q) <= 1


def test_std_dev_examples():
    assert std_dev(point_mass(3)) == 0
    c = classical_distribution(10).to_distribution()
    assert std_dev(c) == pytest.approx(np.sqrt(10), abs=1e-12)
    (q,) = error_sweep(10, [0.0], classical=False)
    assert std_dev(q) > np.sqrt(10)


def test_light_cone_all_offsets():
    for off in (0, 0.2, 0.7, 2.0):
        for s in run_walk(14, offset=off):
            d = position_distribution(s)
            assert np.all(d.probabilities[np.abs(d.sites) > s.step_count] == 0)


def test_ballistic_vs_diffusive():
    states = run_walk(40)
    sq = [std_dev(position_distribution(s)) for s in states]
    for n in range(8, 21):
        sc = np.sqrt(2 * n) / np.sqrt(n)
        assert sq[2 * n] / sq[n] > sc
