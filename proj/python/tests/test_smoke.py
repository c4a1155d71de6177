import pytest

import motivic_power as mp


def test_polynomial_roundtrip():
    ring = mp.Ring(["u", "v"])
    p = mp.Polynomial.parse("(u+v)^2", ring)
    assert str(p) == "u^2+2*u*v+v^2"
    assert p.eval_at_ones() == 4
    assert mp.Polynomial.from_json(p.to_json()) == p
    assert p - p == mp.Polynomial(ring)


def test_big_integers_survive():
    ring = mp.Ring([])
    big = 10**40 + 7
    assert mp.Polynomial(ring, big).eval_at_ones() == big


def test_geometric_series_power():
    ring = mp.Ring(["u"])
    a = mp.inverse(mp.Series.parse("1-t", ring, 5))
    m = mp.Polynomial.parse("u", ring)
    assert mp.pow(a, m) == mp.kapranov_zeta(m, 5)
    assert mp.pow(a, mp.Polynomial(ring)) == mp.Series.one(ring, 5)


def test_factor_assemble_inverse():
    ring = mp.Ring(["u"])
    a = mp.Series.parse("1 + u*t + (u^2-3)*t^3", ring, 6)
    exponents = mp.factor(a)
    assert len(exponents) == 6
    assert mp.assemble(ring, exponents) == a
    assert mp.exp_map(ring, mp.log_map(a)) == a


def test_plane_hilbert_series():
    s = mp.global_series(mp.Polynomial.parse("L^2", mp.motivic_ring()), 2, 4)
    assert str(s[1]) == "L^2"
    assert str(s[2]) == "L^3+L^4"
    euler = mp.euler_specialization(s)
    counts = [c.eval_at_ones() for c in euler.coefficients]
    assert counts == [1, 1, 2, 3, 5]


def test_oracles_agree():
    sizes, m = [2, 1, 1], 3
    assert mp.finite_power_enumerate(sizes, m, 6) == mp.coefficient_formula_count(sizes, m, 6)
    assert len(mp.partitions(5)) == 7


def test_affine_consistency():
    ok, report = mp.affine_consistency_check(2, 6)
    assert ok, report


def test_axiom_suite_passes():
    outcomes = mp.run_axiom_suite(seed=3, samples=5, order=5)
    assert len(outcomes) == 7
    assert all(o["failed"] == 0 for o in outcomes), outcomes


def test_errors_map_to_python():
    ring = mp.Ring(["u"])
    with pytest.raises(mp.ExpressionError):
        mp.Polynomial.parse("u +* 2", ring)
    with pytest.raises(mp.MotivicError):
        mp.pow(mp.Series.parse("2 + t", ring, 3), mp.Polynomial(ring, 2))
