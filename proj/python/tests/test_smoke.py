import json
import math

import numpy as np
import pytest

import kobs


def test_version():
    assert kobs.__version__ == kobs.version()


def test_group_law():
    a, b = (0.5, 1.0, -0.25), (0.25, -0.5, 2.0)
    assert kobs.compose(a, b) == (0.75, 1.0 - 0.5 + 0.25 * -0.25, 1.75)
    assert kobs.compose(a, kobs.inverse(a)) == pytest.approx((0.0, 0.0, 0.0), abs=1e-15)
    assert kobs.kinetic_norm(kobs.dilate(a, 2.0)) == pytest.approx(2.0 * kobs.kinetic_norm(a))
    assert kobs.in_cylinder((-0.5, -1.0, 2.0), (0.0, 0.0, 2.0), 1.0)


def test_field_numpy_round_trip(tmp_path):
    g = kobs.Grid(4, 5, 6)
    arr = np.random.default_rng(0).standard_normal(g.shape)
    u = kobs.Field(g, arr)
    np.testing.assert_array_equal(u.to_numpy(), arr)
    path = str(tmp_path / "u.kf")
    kobs.save_field(path, u)
    np.testing.assert_array_equal(kobs.load_field(path).to_numpy(), arr)
    with pytest.raises(kobs.ConfigError):
        kobs.Field(g, np.zeros((2, 2, 2)))


def test_half_space_scenario():
    u = kobs.solve_scenario("half_space", 32)
    arr = u.to_numpy()
    v = np.asarray(u.grid.v)
    np.testing.assert_allclose(arr[-1, 16, :], 0.5 * np.maximum(v, 0.0) ** 2, atol=1e-12)
    counts = kobs.phase_counts(u)
    assert counts["gamma"] > 0
    z = kobs.free_boundary_point(u)
    assert abs(z[2]) <= u.grid.v[1] - u.grid.v[0]
    assert kobs.thickness(u, (0.0, 0.0, 0.0), 0.5) == pytest.approx(1.0)
    c = kobs.classify_point(u, (0.0, 0.0, 0.0), [0.5, 0.25, 0.125], [0.177, 0.125, 0.088])
    assert c["class"] == "regular"


def test_config_errors_are_value_errors():
    with pytest.raises(ValueError, match="penalty.eps"):
        kobs.solve('{"penatly": {"eps": 1e-3}}')
    echo = json.loads(kobs.config_echo('{"grid.Nt": 8}'))
    assert echo["grid"]["Nt"] == 8


def test_energy_levels():
    w = kobs.omega_hat()
    assert w == pytest.approx(195.0 / 64.0 * math.sqrt(math.pi), rel=1e-9)
    assert kobs.weiss_reference("half_space", (0.0, 0.0, 0.0), 0.5) == pytest.approx(w, rel=1e-8)


def test_lsmc_constant_and_reproducible():
    assert kobs.lsmc_price("constant", (0.0, 0.0, 0.0), 1.0) == (1.0, 0.0)
    a = kobs.lsmc_price("bump", (0.0, 0.0, 0.9), 0.25, paths=2000, steps=10, seed=4)
    b = kobs.lsmc_price("bump", (0.0, 0.0, 0.9), 0.25, paths=2000, steps=10, seed=4)
    assert a == b
    assert a[0] >= math.exp(-0.81)
