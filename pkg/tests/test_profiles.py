import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from stepgain.profiles import aggregate, minmax, resample, zscore

finite_floats = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


def manual_lerp(values, num_points):
    """Piecewise-linear oracle written independently of np.interp."""
    k = len(values)
    if k == 1:
        return [values[0]] * num_points
    out = []
    for j in range(num_points):
        x = j / (num_points - 1) if num_points > 1 else 0.0
        pos = x * (k - 1)
        i = min(int(pos), k - 2)
        frac = pos - i
        out.append(values[i] * (1 - frac) + values[i + 1] * frac)
    return out


class TestResample:
    def test_identity_when_lengths_match(self):
        v = [1.0, 3.0, 2.0, 5.0]
        np.testing.assert_allclose(resample(v, 4), v, atol=1e-12)

    def test_endpoints_preserved(self):
        v = [2.5, -1.0, 7.0]
        out = resample(v, 10)
        assert out[0] == pytest.approx(2.5, abs=1e-12)
        assert out[-1] == pytest.approx(7.0, abs=1e-12)

    def test_single_value_is_constant(self):
        np.testing.assert_allclose(resample([3.3], 5), [3.3] * 5)

    def test_constant_sequence_stays_constant(self):
        np.testing.assert_allclose(resample([1.0, 1.0, 1.0], 7), np.ones(7))

    def test_midpoint_of_two(self):
        out = resample([0.0, 1.0], 3)
        np.testing.assert_allclose(out, [0.0, 0.5, 1.0], atol=1e-12)

    @given(
        st.lists(finite_floats, min_size=1, max_size=30),
        st.integers(min_value=1, max_value=50),
    )
    @settings(max_examples=200)
    def test_matches_manual_lerp(self, values, num_points):
        got = resample(values, num_points)
        expected = manual_lerp(values, num_points)
        # Knot-boundary positions differ by ulps between the two routes;
        # the resulting error scales with the value magnitude.
        scale = 1.0 + max(abs(v) for v in values)
        np.testing.assert_allclose(got, expected, rtol=1e-12, atol=1e-12 * scale)

    def test_empty_raises(self):
        with pytest.raises(ValueError, match="empty"):
            resample([], 5)

    def test_bad_num_points_raises(self):
        with pytest.raises(ValueError, match="num_points"):
            resample([1.0], 0)

    def test_nonfinite_raises(self):
        with pytest.raises(ValueError, match="finite"):
            resample([1.0, np.inf], 3)


class TestAggregate:
    def test_two_trajectories_by_hand(self):
        band = aggregate([[0.0, 2.0], [2.0, 4.0]], num_points=3)
        np.testing.assert_allclose(band.positions, [0.0, 0.5, 1.0])
        np.testing.assert_allclose(band.mean, [1.0, 2.0, 3.0])
        np.testing.assert_allclose(band.std, [1.0, 1.0, 1.0])
        assert band.count == 2

    def test_single_trajectory_zero_std(self):
        band = aggregate([[1.0, 2.0, 3.0]], num_points=5)
        np.testing.assert_allclose(band.std, np.zeros(5))
        assert band.count == 1

    def test_mixed_lengths(self):
        band = aggregate([[1.0], [0.0, 2.0]], num_points=3)
        np.testing.assert_allclose(band.mean, [0.5, 1.0, 1.5])

    def test_empty_raises(self):
        with pytest.raises(ValueError, match="at least one"):
            aggregate([], num_points=3)

    def test_to_dict_roundtrip(self):
        d = aggregate([[1.0, 2.0]], num_points=2).to_dict()
        assert set(d) == {"positions", "mean", "std", "count"}
        assert d["count"] == 1


class TestTransforms:
    @given(st.lists(finite_floats, min_size=2, max_size=40))
    @settings(max_examples=100)
    def test_zscore_moments(self, values):
        sd = np.std(values)
        # Exclude near-degenerate spreads where cancellation (|mean| >> std)
        # dominates; the constant case has its own test below.
        assume(sd == 0.0 or sd > 1e-6 * (1 + max(abs(v) for v in values)))
        z = zscore(values)
        if sd == 0.0:
            np.testing.assert_allclose(z, np.zeros(len(values)))
        else:
            assert z.mean() == pytest.approx(0.0, abs=1e-8)
            assert z.std() == pytest.approx(1.0, rel=1e-8)

    def test_zscore_constant_is_zero(self):
        np.testing.assert_allclose(zscore([4.0, 4.0, 4.0]), np.zeros(3))

    def test_minmax_range(self):
        out = minmax([2.0, 4.0, 6.0])
        np.testing.assert_allclose(out, [0.0, 0.5, 1.0])

    def test_minmax_constant_is_zero(self):
        np.testing.assert_allclose(minmax([3.0, 3.0]), np.zeros(2))

    def test_empty_raise(self):
        with pytest.raises(ValueError):
            zscore([])
        with pytest.raises(ValueError):
            minmax([])
