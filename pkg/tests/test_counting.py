"""Exact counting machinery: closed-form hyperplane counts, congruence
filters, pencil systems, and the per-theorem parameter tables."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgcones import (
    Congruence,
    TypeParameters,
    c_rs,
    feasible_k,
    hyperoval3_step1_congruences,
    lemma_congruence,
    pencil_feasible,
    spectrum,
    step_sign_check,
    t_closed_form,
    theorem_instance,
    theta,
    verify_identities,
)
from pgcones.errors import (
    DegenerateType,
    EmptyRange,
    HypothesisViolated,
    NonSquareOrder,
)
from pgcones.objects import hyperoval_cone


HYP3_Q4 = TypeParameters(1, 6, 9, 3, 4)


def test_c_rs_values():
    # [DERIVED] vertex dim r over a Baer subgeometry of dim s
    assert c_rs(-1, 0, 4) == 1
    assert c_rs(1, 1, 4) == 53
    assert c_rs(1, 2, 4) == 117
    assert c_rs(0, 2, 4) == 29


def test_c_rs_rational_for_negative_vertex_dim():
    v = c_rs(-2, 4, 16)
    assert isinstance(v, Fraction) and v.denominator != 1


def test_c_rs_bad_dimensions():
    with pytest.raises(ValueError):
        c_rs(1, -2, 4)


def test_type_parameters_require_strict_order():
    with pytest.raises(DegenerateType):
        TypeParameters(6, 6, 9, 3, 4)


def test_t_closed_form_hyperoval_cone_point():
    # [DERIVED] matches the actual spectrum of the 25-point cone in PG(3,4)
    assert t_closed_form(HYP3_Q4, 25) == (6, 64, 15)


def test_t_closed_form_rational_reject():
    ts = t_closed_form(HYP3_Q4, 10)
    assert ts[2] == Fraction(-25, 2)


def test_t_closed_form_solves_identities():
    for k in (12, 25, 30, 33):
        t_a, t_b, t_c = t_closed_form(HYP3_Q4, k)
        assert t_a + t_b + t_c == theta(3, 4)
        assert 1 * t_a + 6 * t_b + 9 * t_c == k * theta(2, 4)


@settings(max_examples=60, deadline=None)
@given(
    a=st.integers(0, 30),
    db=st.integers(1, 30),
    dc=st.integers(1, 30),
    n=st.integers(2, 6),
    q=st.sampled_from([2, 3, 4, 5, 8, 9]),
    k=st.integers(0, 400),
)
def test_t_closed_form_identities_always_hold(a, db, dc, n, q, k):
    # the three counts always solve the double-counting system exactly,
    # whatever (possibly unrealizable) type and size are fed in
    params = TypeParameters(a, a + db, a + db + dc, n, q)
    t_a, t_b, t_c = t_closed_form(params, k)
    sizes = (params.a, params.b, params.c)
    ts = (t_a, t_b, t_c)
    assert sum(ts) == theta(n, q)
    assert sum(m * t for m, t in zip(sizes, ts)) == k * theta(n - 1, q)
    assert sum(m * (m - 1) * t for m, t in zip(sizes, ts)) == k * (k - 1) * theta(n - 2, q)


def test_verify_identities_on_real_spectrum(pg34):
    K = hyperoval_cone(pg34)
    sp = spectrum(K, pg34.n - 1)
    assert verify_identities(sp, K.k, pg34.n, 4)


def test_verify_identities_detects_perturbation(pg34):
    K = hyperoval_cone(pg34)
    sp = spectrum(K, pg34.n - 1)
    bad = sp.by_size.copy()
    bad[6] += 1
    bad[9] -= 1
    broken = type(sp)(by_size=bad, d=sp.d, total=sp.total)
    assert not verify_identities(broken, K.k, pg34.n, 4)


def test_congruence_holds():
    c = Congruence(alpha=5, beta=16)
    assert c.holds(149) and not c.holds(148)


def test_lemma_congruence_unital():
    # [DERIVED] 21, 37, 53 and theta_3 = 85 all leave residue 5 mod 16
    params = TypeParameters(21, 37, 53, 4, 4)
    cong = lemma_congruence(params, 16)
    assert cong == Congruence(alpha=5, beta=16)
    assert cong.holds(149)


def test_lemma_congruence_hyperoval_cone():
    params = TypeParameters(5, 25, 37, 4, 4)
    assert lemma_congruence(params, 4) == Congruence(alpha=1, beta=4)


def test_lemma_congruence_rejects_common_factor():
    # shared residue 0 is not coprime to the modulus
    assert lemma_congruence(TypeParameters(2, 4, 6, 3, 4), 2) is None


def test_lemma_congruence_rejects_mixed_residues():
    assert lemma_congruence(TypeParameters(1, 6, 9, 3, 4), 4) is None


def test_pencil_feasible_generic_axis():
    # [DERIVED] axis carrying one point of the set, k = 25
    assert pencil_feasible(HYP3_Q4, 25) == [(2, 0, 3)]


def test_pencil_feasible_empty_axis_kills_30():
    # an axis disjoint from the set inside a 1-point hyperplane: no solutions
    assert pencil_feasible(HYP3_Q4, 30, u_a_min=1, axis_points=0) == []
    assert pencil_feasible(HYP3_Q4, 25, u_a_min=1, axis_points=0) == [(1, 4, 0)]


def test_feasible_k_screen():
    # [DERIVED] divisibility + integral non-negative counts over [9, 33]
    rows = feasible_k(HYP3_Q4, range(9, 34),
                      congruences=hyperoval3_step1_congruences(4))
    assert [k for k, _ in rows] == [25, 30]
    assert dict(rows)[25] == (6, 64, 15)


def test_feasible_k_single_value():
    params = TypeParameters(21, 37, 53, 4, 4)
    assert feasible_k(params, [149]) == [(149, (9, 320, 12))]


def test_feasible_k_empty_range():
    with pytest.raises(EmptyRange):
        feasible_k(HYP3_Q4, [])


def test_feasible_k_floor_zero():
    rows = feasible_k(HYP3_Q4, range(0, 10), require_all_realized=False)
    assert all(all(t >= 0 for t in ts) for _, ts in rows)


def test_theorem_instance_hyperoval3():
    inst = theorem_instance("hyperoval3", 3, 4)
    assert (inst.a, inst.b, inst.c) == (1, 6, 9)
    assert inst.expected_k == 25
    assert inst.expected_t == (6, 64, 15)
    assert inst.vertex_dim == 0


def test_theorem_instance_unital():
    inst = theorem_instance("unital", 4, 4)
    assert (inst.a, inst.b, inst.c) == (21, 37, 53)
    assert inst.expected_k == 149
    assert inst.expected_t == (9, 320, 12)
    assert inst.vertex_dim == 1


def test_theorem_instance_maxarc():
    inst = theorem_instance("maxarc", 5, 4, 2)
    assert inst.expected_k == 405
    assert inst.expected_t == (6, 1344, 15)
    assert inst.vertex_dim == 2


def test_theorem_instance_baer():
    inst = theorem_instance("baer", 4, 4, 1)
    assert (inst.a, inst.b, inst.c) == (21, 29, 53)
    assert inst.expected_k == 117
    assert inst.expected_t == (14, 320, 7)


def test_theorem_instance_hypothesis_failures():
    with pytest.raises(HypothesisViolated):
        theorem_instance("hyperoval3", 3, 9)  # hyperovals need even order
    with pytest.raises(HypothesisViolated):
        theorem_instance("maxarc", 5, 4, 3)  # gcd(d-1, q) != 1
    with pytest.raises(HypothesisViolated):
        theorem_instance("maxarc", 4, 4, 2)  # dimension too small
    with pytest.raises(NonSquareOrder):
        theorem_instance("unital", 4, 8)
    with pytest.raises(HypothesisViolated):
        theorem_instance("baer", 4, 4, 2)  # q too small for t = 2
    with pytest.raises(HypothesisViolated):
        theorem_instance("baer", 4, 16, 2)  # degenerate: fractional b
    with pytest.raises(ValueError):
        theorem_instance("nonsense", 3, 4)


def test_step_sign_check_unital():
    report = step_sign_check("unital", 4, 4)
    assert report.ok and len(report.checks) == 3
    assert all(c.value < 0 for c in report.checks)


def test_step_sign_check_hyperoval_small_order_note():
    report = step_sign_check("hyperovalN", 4, 2)
    assert report.ok
    assert len(report.checks) == 2 and len(report.notes) == 1


def test_step_sign_check_hyperoval_large_order():
    report = step_sign_check("hyperovalN", 5, 8)
    assert report.ok and len(report.checks) == 4 and not report.notes


def test_step_sign_check_maxarc():
    assert step_sign_check("maxarc", 5, 4, 2).ok


def test_step_sign_check_baer_degenerate_type_still_evaluates():
    # fractional intersection sizes are fine here: everything is rational
    assert step_sign_check("baer", 5, 16, 2).ok


def test_step_sign_check_unknown_id():
    with pytest.raises(HypothesisViolated):
        step_sign_check("hyperoval3", 3, 4)
