import math

import numpy as np
import pytest

import revorder as ro


def test_pinv_matches_numpy():
    rng = np.random.default_rng(0)
    for shape, rank in [((5, 3), 2), ((4, 6), 4), ((3, 3), 0)]:
        a = rng.standard_normal((shape[0], rank)) @ rng.standard_normal((rank, shape[1]))
        np.testing.assert_allclose(ro.pinv(a), np.linalg.pinv(a), atol=1e-12)
    z = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
    np.testing.assert_allclose(ro.pinv(z), np.linalg.pinv(z), atol=1e-12)
    np.testing.assert_allclose(ro.pinv_oracle(z), np.linalg.pinv(z), atol=1e-10)


def test_svd_reconstructs_and_keeps_real_dtype():
    a = np.array([[3.0, 1.0], [1.0, 3.0], [0.0, 0.0]])
    u, sigma, v = ro.svd(a)
    assert u.dtype == np.float64
    np.testing.assert_allclose(sigma, [4.0, 2.0], atol=1e-14)
    s = np.zeros((3, 2))
    s[:2, :2] = np.diag(sigma)
    np.testing.assert_allclose(u @ s @ v.conj().T, a, atol=1e-13)


def test_intro_pair_classification():
    report = ro.classify(np.array([[1.0, 1.0]]), np.array([[1.0], [0.0]]))
    assert report["report"]["rol"]["residual"] == pytest.approx(0.5, abs=1e-12)
    assert not report["report"]["rol"]["holds"]
    assert not any(item["holds"] for item in report["twelve_way"]["items"])


def test_geometric_pair():
    a = np.array([[1.0, 0, 1], [0, 1, -1]])
    b = np.array([[1.0, 0], [0, 1], [2, 3]])
    angles = ro.principal_angles(a.T, b)
    assert angles == pytest.approx([0.0, math.pi / 2], abs=1e-10)
    assert ro.penrose(a @ b, ro.pinv(b) @ ro.pinv(a))["label"] == "{1,2}"


def test_partner_construction_and_errors():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((5, 3)) @ rng.standard_normal((3, 6))
    b = ro.construct_partner(a, s=2, t=1, k=4, sigma_b=[3.0, 2.0, 1.0], seed=5)
    np.testing.assert_allclose(np.linalg.pinv(a @ b), np.linalg.pinv(b) @ np.linalg.pinv(a), atol=1e-10)
    assert max(ro.derived_rols(a, b).values()) < 1e-8
    with pytest.raises(ro.PlanInfeasible):
        ro.construct_partner(a, s=4, t=0, k=4, sigma_b=[1.0] * 4)
    with pytest.raises(ro.RolNotSatisfied):
        ro.aligned_svds(np.array([[1.0, 1.0]]), np.array([[1.0], [0.0]]))
    with pytest.raises(ro.Error):
        ro.classify(np.ones((2, 3)), np.ones((2, 2)))


def test_listing_pairs():
    a, b = ro.construct_pair("cls123", 12, 9, 10, 4, 5, 2, seed=1, field="complex")
    assert a.dtype == np.complex128
    weak = ro.classify(a, b)["weak_class"]
    assert weak["is123"] and not weak["is124"]
