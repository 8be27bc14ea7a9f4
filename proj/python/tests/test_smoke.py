import json

import numpy as np
import pytest

import vilenkin as vk


@pytest.fixture
def walsh():
    return vk.Group([2], 8)


def test_group(walsh):
    g = vk.Group([2, 3, 4], 4)
    assert g.radices == [2, 3, 4, 2]
    assert g.blocks == [1, 2, 6, 24, 48]
    assert g.digits(23) == [1, 2, 3, 0]
    assert walsh.lam == 2
    with pytest.raises(vk.VilenkinError):
        vk.Group([1], 3)


def test_dirichlet_kernel(walsh):
    d3 = vk.kernel("dirichlet", walsh, 3, 2)
    np.testing.assert_allclose(d3.values, [3, 1, 1, -1])
    assert vk.lebesgue_constant(walsh, 3) == pytest.approx(1.5, abs=1e-12)
    assert vk.lebesgue_bounds(walsh, 62)["upper"] == 2
    assert vk.lebesgue_bounds(walsh, 62, literal=True)["upper"] == 1


def test_transform_round_trip():
    g = vk.Group([3], 5)
    f = vk.random_function(g, 5, 7)
    c = vk.transform(f)
    assert c.shape == (243,)
    np.testing.assert_allclose(vk.inverse_transform(g, 5, c).values, f.values, atol=1e-12)
    assert np.sum(np.abs(c) ** 2) == pytest.approx(f.lp_norm(2) ** 2, rel=1e-12)
    assert c[17] == pytest.approx(vk.fourier_coeff(f, 17), abs=1e-12)


def test_means():
    g = vk.Group([2, 3], 6)
    f = vk.random_function(g, 4, 3)
    k = vk.kernel("fejer", g, 10, 4)
    np.testing.assert_allclose(vk.mean(f, "fejer", 10).values, vk.convolve(f, k).values, atol=1e-12)
    q = vk.Weights("constant")
    np.testing.assert_allclose(vk.mean(f, "norlund", 10, weights=q).values, vk.mean(f, "fejer", 10).values, atol=1e-12)


def test_json_round_trip(walsh):
    f = vk.character(walsh, 3, 5)
    text = vk.grid_to_json(f)
    assert json.loads(text)["resolution"] == 3
    np.testing.assert_array_equal(vk.grid_from_json(text).values, f.values)


def test_verify_identities(walsh):
    records = vk.verify("identities", walsh, n_max=16, samples=2)
    assert records
    assert all(r["pass"] for r in records if r["kind"] != "report")
    assert all(vk.anchor_of(r["claim"]) for r in records)
    with pytest.raises(vk.VilenkinError):
        vk.verify("nosuch", walsh)


def test_counterexample(walsh):
    mart, records = vk.counterexample(walsh, "hp-blocks", [1, 2, 3], p=0.4, rank=8)
    assert json.loads(mart)["levels"][-1] == 8
    assert records
