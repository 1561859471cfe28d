import math

import pytest
from hypothesis import given, strategies as st

from pcnkit.cdiff import c_spectrum, c_uniformity
from pcnkit.gf import build_field, v2
from pcnkit.oracle import verify_prediction
from pcnkit.theorems import (
    QUOTED_EXAMPLES,
    QUOTED_U_M6,
    Prediction,
    admissible_c,
    corollary_pcn_set_gf2,
    inverse_exponent_dual,
    predict_apcn_spectrum,
    predict_gold_gf2,
    predict_half_gold,
    predict_thm_1mod4,
    predict_thm_3mod4,
    solve_congruence,
    solve_linear_congruence,
    theorem_predictions,
)

ODD_FIELDS = [(3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (5, 1), (5, 2), (5, 3), (7, 1), (7, 2), (7, 3), (11, 1), (11, 2), (13, 1)]


def test_prediction_requires_claim_iff_applicable():
    with pytest.raises(ValueError):
        Prediction("x", True, "r", "cite")
    with pytest.raises(ValueError):
        Prediction("x", False, "r", "cite", {"kind": "pcn"})


def test_gold_examples():
    F = build_field(2, 6)
    for c in admissible_c(F, [2]):
        assert predict_gold_gf2(F, 2, c).claim["kind"] == "pcn"
    assert all(predict_gold_gf2(F, 1, c).claim["kind"] == "not_pcn" for c in range(64) if c != 1)
    assert predict_gold_gf2(build_field(2, 3), 1, 0).claim["kind"] == "pcn"
    with pytest.raises(ValueError):
        predict_gold_gf2(F, 2, 1)
    assert not predict_gold_gf2(build_field(3, 2), 1, 0).applicable


def test_corollary_sets():
    assert {d: set(g) for d, g in corollary_pcn_set_gf2(2).items()} == {1: {2}, 2: {2}}
    assert {d: set(g) for d, g in corollary_pcn_set_gf2(3).items()} == {
        1: {3}, 2: {3}, 4: {3}, 3: {1}, 5: {1}, 6: {1},
    }
    m6 = set(corollary_pcn_set_gf2(6))
    assert m6 == QUOTED_U_M6 | {5}
    assert len(m6) == 18


@given(a=st.integers(1, 500), b=st.integers(0, 500), n=st.integers(1, 500))
def test_linear_congruence_solver(a, b, n):
    sols = solve_linear_congruence(a, b, n)
    brute = [d for d in range(1, n + 1) if (a * d - b) % n == 0]
    assert sols == brute
    assert bool(sols) == (b % math.gcd(a, n) == 0)


@pytest.mark.parametrize("p,m", ODD_FIELDS)
def test_congruence_solution_invariants(p, m):
    n = p**m - 1
    for k in range(1, 2 * m + 1):
        t1 = solve_congruence(p, m, k, "T1")
        assert all((d * (p**k + 1) - 2) % n == 0 for d in t1.solutions)
        assert t1.solvable == (2 % math.gcd(p**k + 1, n) == 0)
        for d, ell in t1.ell.items():
            assert d * (p**k + 1) == 2 + ell * n
        t2 = solve_congruence(p, m, k, "T2")
        assert all((d * (p**k + 1) // 2 - (p**m + 1) // 2) % n == 0 for d in t2.solutions)


def test_quoted_congruence_solutions():
    assert solve_congruence(3, 5, 1, "T1").solutions == (61, 182)
    assert solve_congruence(5, 5, 1, "T2").solutions == (521,)
    assert solve_congruence(17, 3, 1, "T2").solutions == (273,)
    assert 111 not in solve_congruence(17, 3, 1, "T2").solutions
    with pytest.raises(ValueError):
        solve_congruence(2, 3, 1, "T1")
    with pytest.raises(ValueError):
        solve_congruence(3, 3, 1, "T3")


def test_quoted_examples_have_applicable_predictors():
    for ex in QUOTED_EXAMPLES:
        fn = predict_thm_3mod4 if ex["theorem"] == "thm-3mod4" else predict_thm_1mod4
        pred = fn(ex["p"], ex["m"], ex["k"], ex["d"])
        assert pred.applicable == (not ex.get("anomaly"))


@pytest.mark.parametrize("p,m", ODD_FIELDS)
def test_congruence_theorems_confirmed(p, m):
    F = build_field(p, m)
    for k in range(1, 2 * m + 1):
        for fam, fn in (("T1", predict_thm_3mod4), ("T2", predict_thm_1mod4)):
            for d in solve_congruence(p, m, k, fam).solutions:
                pred = fn(p, m, k, d)
                if pred.applicable:
                    assert verify_prediction(pred, F, d, F.minus_one).confirmed, (p, m, k, d)


def test_half_gold_literal_criterion_versus_measurement():
    # the measured PcN condition is v2(m) < v2(k); the encoded criterion
    # (v2(m) <= v2(k)+1) also claims PcN when v2(m) = v2(k) or v2(k)+1
    for p, m in [(3, 3), (3, 4), (3, 5), (3, 6), (5, 3), (5, 4), (7, 3)]:
        F = build_field(p, m)
        for k in range(1, m):
            d = (p**k + 1) // 2
            u = c_uniformity(F, d, F.minus_one).uniformity
            assert (u == 1) == (v2(m) < v2(k)), (p, m, k, u)
            if u != 1:
                assert u == (p ** math.gcd(k, m) + 1) // 2
    pred = predict_half_gold(3, 3, 1)
    assert pred.claim == {"kind": "pcn"}
    assert not verify_prediction(pred, build_field(3, 3), 2, 26).confirmed
    pred = predict_half_gold(3, 4, 1)
    assert pred.claim == {"kind": "uniformity", "value": 2}
    assert verify_prediction(pred, build_field(3, 4), 2, 80).confirmed


@pytest.mark.parametrize("p,m", [(3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 2)])
def test_apcn_spectrum_theorem(p, m):
    F = build_field(p, m)
    for k in range(1, 2 * m + 1):
        d = p**k + 1
        for c in range(F.order):
            if c == 1:
                continue
            pred = predict_apcn_spectrum(F, k, c)
            v = verify_prediction(pred, F, d, c)
            assert v.confirmed, (p, m, k, c, v.measured)
            if pred.claim["kind"] == "spectrum":
                assert list(c_spectrum(F, d, c).omega) == pred.claim["omega"]


def test_inverse_dual_fixed_points():
    F = build_field(3, 3)
    for c in (0, 1, F.minus_one):
        assert inverse_exponent_dual(F, 5, c) == (pow(5, -1, 26), c)
    with pytest.raises(ValueError):
        inverse_exponent_dual(F, 2, 3)


def test_theorem_predictions_collects_matches():
    F = build_field(3, 5)
    ids = {p.theorem_id for p in theorem_predictions(F, 61, F.minus_one)}
    assert "thm-3mod4" in ids
    F = build_field(2, 6)
    ids = {p.theorem_id for p in theorem_predictions(F, 5, 0)}
    assert ids == {"gold-gf2"}
