import json
import math

import pytest

import spinlab


def test_spin_factor_inverse_round_trip():
    x = spinlab.SpinFactorElement(2.0, [1.0, 0.0, 0.0])
    assert spinlab.quadratic_form(x) == pytest.approx(3.0)
    inv = spinlab.inverse(x)
    assert inv.scalar == pytest.approx(2.0 / 3.0)
    assert inv.vector[0] == pytest.approx(-1.0 / 3.0)
    back = spinlab.bullet(x, inv)
    assert back.scalar == pytest.approx(1.0)
    assert back.vector == pytest.approx([0.0, 0.0, 0.0])


def test_null_element_raises():
    with pytest.raises(spinlab.NullElementError):
        spinlab.inverse(spinlab.SpinFactorElement(1.0, [1.0, 0.0, 0.0]))


def test_circ_is_right_unital_only():
    one = spinlab.identity()
    x = spinlab.SpinFactorElement(4.0, [1.0, 2.0, 0.0])
    assert spinlab.circ(x, one) == x
    assert spinlab.circ(one, x) == spinlab.conjugate(x)
    assert not (spinlab.circ(one, x) == x)


def test_quad_product_worked_instance():
    wedge_value, det_value = spinlab.quad_product_paths([1, 2, 3, 4], [5, 6, 7, 8])
    assert wedge_value == pytest.approx(16.0)
    assert det_value == pytest.approx(16.0)
    assert spinlab.partial_wedge([1, 2, 3, 4], [5, 6, 7, 8]) == pytest.approx([4, 8, 12])
    assert spinlab.partial_wedge_dagger([1, 2, 3, 4], [5, 6, 7, 8]) == pytest.approx(
        [-4, 4, 8]
    )


def test_boost_invariance_of_quad_product():
    q = spinlab.quad_product([1, 2, 3, 4], [5, 6, 7, 8])
    a = spinlab.boost([1, 2, 3, 4], 0.6)
    b = spinlab.boost([5, 6, 7, 8], 0.6)
    assert spinlab.quad_product(a, b) == pytest.approx(q, rel=1e-9)
    report = spinlab.check_invariances([1, 2, 3, 4], [5, 6, 7, 8], 0.6)
    assert report["boost_invariant"]
    assert report["commutative"]
    assert report["exchange_invariant"]
    assert report["hemi_linear"]


def test_boost_rejects_superluminal_velocity():
    with pytest.raises(ValueError):
        spinlab.boost([1, 0, 0, 0], 1.0)


def test_unital_norm_matches_closed_form():
    s = spinlab.SpinFactorElement(2.0, [1.0, 0.0, 0.0])
    value, steps, estimate = spinlab.unital_norm(s, steps=512)
    assert steps == 512
    assert value == pytest.approx(math.sqrt(3.0), rel=1e-9)
    assert value == pytest.approx(spinlab.closed_form_norm(s), rel=1e-9)
    assert estimate < 1e-9


def test_solve_uncurling_finds_identity():
    result = spinlab.solve_uncurling(3, 0, samples=150, seed=9)
    assert result["curl_nullspace_dim"] == 1
    assert result["constraint_residual"] <= 1e-8
    for i, row in enumerate(result["L"]):
        for j, entry in enumerate(row):
            assert entry == pytest.approx(1.0 if i == j else 0.0, abs=1e-8)


def test_clifford_gamma_relations():
    g0 = spinlab.Multivector.basis_vector(1, 3, 0)
    g1 = spinlab.Multivector.basis_vector(1, 3, 1)
    assert (g0 * g0).scalar_part() == pytest.approx(1.0)
    assert (g1 * g1).scalar_part() == pytest.approx(-1.0)
    anti = g0 * g1 + g1 * g0
    assert anti.coefficients() == pytest.approx([0.0] * 16)
    assert spinlab.vector_inner(g0, g1) == pytest.approx(0.0)


def test_run_suite_round_trips_json():
    passed, report_json = spinlab.run_suite(suite="clifford", seed=5, trials=10)
    assert passed
    report = json.loads(report_json)
    assert set(report) == {"suite", "seed", "trials", "tolerance", "cases", "passed"}
    assert report["suite"] == "clifford"
    assert report["passed"] is True
    assert all(case["status"] == "pass" for case in report["cases"])


def test_run_suite_rejects_unknown_suite():
    with pytest.raises(spinlab.UsageError):
        spinlab.run_suite(suite="no-such-suite")
