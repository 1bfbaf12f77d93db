from fractions import Fraction

import mpmath
from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from posetoperad.counting import d_vector
from posetoperad.errors import (ArityMismatch, DivergentParameter,
                                MissingProvenance, PrecisionUnachievable)
from posetoperad.polynomials import BinomialPoly, bernoulli_number, x_power
from posetoperad.poset import antichain, chain, lex_sum, ordinal_sum
from posetoperad.series import zigzag_poset
from posetoperad.zeta import (DEFAULT_CTX, IdentityRecord, PrecisionContext,
                              ZetaExpr, _em_zeta_minus_one,
                              alternating_unit_record, binomial_shift_record,
                              entry22_check, entry22_formula, entry22_oracle,
                              finite_form_identity, goldbach_record,
                              inverse_power_sum, inverse_power_sum_partial,
                              n_tilde, n_tilde2, operad_eval_zeta,
                              verify_identity, zeta_number, zeta_value, zhat)


def star_poset():
    return ordinal_sum(chain(1), antichain(3))


def test_zeta2_matches_pi_squared_over_six():
    v, b = zeta_value(2)
    with mpmath.workdps(60):
        ref = mpmath.pi ** 2 / 6
        assert abs(v - ref) < mpmath.mpf(10) ** -48
    assert b < 1e-48


def test_zeta_two_parameter_choices_agree_to_30_digits():
    a = _em_zeta_minus_one(3, 400, 45)
    b = _em_zeta_minus_one(3, 900, 45)
    with mpmath.workdps(45):
        assert abs(a - b) < mpmath.mpf(10) ** -30


def test_zeta_against_library_reference():
    for s in range(2, 25):
        v, b = zeta_value(s)
        with mpmath.workdps(60):
            err = abs(v - mpmath.zeta(s))
            assert err < mpmath.mpf(10) ** -45
            assert float(err) <= b + 1e-45  # reported bound is honest


def test_zeta_minus_one_decay():
    # 2^-s <= zeta(s)-1 <= 2^-s + integral tail; the first term dominates
    for s in range(2, 45):
        v, _ = zeta_value(s, minus_one=True)
        assert 2.0 ** -s < v <= 2.0 ** -s + 2.0 ** -(s - 1) / (s - 1)
        if s >= 10:
            assert v <= 2.0 ** -s * (1 + 2e-2)


def test_euler_even_zeta_formula():
    # zeta(2n) = (-1)^(n+1) (2 pi)^(2n) B_2n / (2 (2n)!)
    from math import factorial
    for n in range(1, 7):
        v, _ = zeta_value(2 * n)
        B = bernoulli_number(2 * n)
        with mpmath.workdps(60):
            ref = ((-1) ** (n + 1) * (2 * mpmath.pi) ** (2 * n)
                   * mpmath.mpf(B.numerator) / B.denominator
                   / (2 * factorial(2 * n)))
            assert abs(v - ref) < mpmath.mpf(10) ** -45


def test_zeta_value_validation():
    with pytest.raises(ValueError):
        zeta_value(1)
    tiny = PrecisionContext(working_digits=60, zeta_sum_cap=100)
    with pytest.raises(PrecisionUnachievable):
        zeta_value(2, tiny)


def test_n_tilde_examples():
    assert n_tilde(BinomialPoly({2: 1})) == ZetaExpr.make(0, {2: 1})
    assert n_tilde(BinomialPoly({})) == ZetaExpr.make(0)
    cubed = x_power(3).to_binomial()
    assert n_tilde(cubed) == ZetaExpr.make(0, {1: 1, 2: 6, 3: 6})
    assert n_tilde(BinomialPoly({0: 5})) == ZetaExpr.make(5)


def test_n_tilde2_examples():
    got = n_tilde2(BinomialPoly({1: 1}))
    assert got == ZetaExpr.make(Fraction(-5, 4), {1: 1})
    assert n_tilde2(BinomialPoly({0: 1})) == ZetaExpr.make(Fraction(1, 2))
    got = n_tilde2(BinomialPoly({2: 1}))
    assert got == ZetaExpr.make(Fraction(9, 8), {2: -1})
    assert got.render("shifted") == "-(zeta(3)-1-1/8)"


@given(st.dictionaries(st.integers(min_value=0, max_value=6),
                       st.fractions(min_value=-4, max_value=4,
                                    max_denominator=5),
                       max_size=5))
@settings(max_examples=60, deadline=None)
def test_tilde_maps_are_injective(coeffs):
    p = BinomialPoly(coeffs)
    # reconstruct the polynomial from each image: both maps are injective
    t = n_tilde(p)
    rebuilt = dict(t.coeffs)
    rebuilt[0] = t.constant
    assert BinomialPoly(rebuilt) == p
    t2 = n_tilde2(p)
    rebuilt2 = {k: (-1) ** (k + 1) * v for k, v in t2.coeffs}
    shift = sum((Fraction((-1) ** (k + 1)) * v * (-1 - Fraction(1, 2 ** (k + 1)))
                 for k, v in zip(rebuilt2, rebuilt2.values())), Fraction(0))
    rebuilt2[0] = (t2.constant - shift) * 2
    assert BinomialPoly(rebuilt2) == p


def test_zeta_number_examples():
    assert zeta_number(chain(3)) == ZetaExpr.make(Fraction(-17, 16), {3: 1})
    for k in range(1, 5):
        assert zeta_number(chain(k), "tilde") == ZetaExpr.make(0, {k: 1})
    assert zeta_number(chain(0), "tilde") == ZetaExpr.make(1)
    assert zhat(2).render("shifted") == "(zeta(3)-1-1/8)"


def test_zeta_expr_shifted_round_trip():
    e = zeta_number(star_poset(), "tilde2")
    assert e.shifted_constant() == e.constant + sum(
        v * (1 + Fraction(1, 2 ** (k + 1))) for k, v in e.coeffs)


def test_finite_form_star_poset():
    rec = finite_form_identity(star_poset())
    assert rec.rhs == ZetaExpr.make(Fraction(15, 16), {2: -1, 3: 6, 4: -6})
    assert rec.rhs.render("shifted") == (
        "-(zeta(3)-1-1/8) + 6*(zeta(4)-1-1/16) - 6*(zeta(5)-1-1/32)")
    out = verify_identity(rec)
    assert out.passed


def test_finite_form_cube_identity():
    rec = finite_form_identity(antichain(3))
    assert rec.rhs.render("shifted") == (
        "(zeta(2)-1-1/4) - 6*(zeta(3)-1-1/8) + 6*(zeta(4)-1-1/16)")
    assert verify_identity(rec).passed


def test_finite_form_chain_is_binomial_shift():
    for k in range(1, 5):
        rec = finite_form_identity(chain(k))
        assert rec.rhs == n_tilde2(BinomialPoly({k: 1}))
        assert rec.start_index == k


def test_binomial_shift_records():
    rec = verify_identity(binomial_shift_record(1))
    assert rec.passed
    assert abs(rec.lhs_numeric - Fraction(3949340668, 10 ** 10)) < 1e-9
    for k in range(2, 7):
        assert verify_identity(binomial_shift_record(k)).passed


def test_goldbach_records():
    rec = verify_identity(goldbach_record())
    assert rec.passed and abs(rec.lhs_numeric - 1) < 1e-12
    rec = verify_identity(alternating_unit_record())
    assert rec.passed and abs(rec.lhs_numeric - 0.5) < 1e-12


def test_identity_record_pass_definition():
    rec = verify_identity(goldbach_record())
    assert rec.passed == (abs(rec.lhs_numeric - rec.rhs_numeric)
                          <= rec.error_bound + DEFAULT_CTX.verify_tolerance)
    blob = rec.to_json_dict()
    assert blob["pass"] is True and blob["rhs"]["constant"] == "1"


def test_verify_fails_loudly_when_unachievable():
    rec = goldbach_record()
    cramped = PrecisionContext(verify_tolerance=1e-12, series_term_cap=10)
    with pytest.raises(PrecisionUnachievable):
        verify_identity(rec, cramped)


def test_inverse_power_sum_values():
    assert inverse_power_sum(antichain(5), 2) == 1082
    assert inverse_power_sum(antichain(5), 3) == Fraction(273, 4)
    assert inverse_power_sum(star_poset(), 5) == Fraction(115, 512)
    assert inverse_power_sum(star_poset(), 5, "weak") == Fraction(575, 512)
    assert inverse_power_sum(chain(0), 2) == 2  # 1/(1-x) at x = 1/2
    with pytest.raises(DivergentParameter):
        inverse_power_sum(chain(2), 1)
    with pytest.raises(DivergentParameter):
        inverse_power_sum(chain(2), Fraction(1, 2))


def test_inverse_power_sum_closed_forms(classes_upto_4):
    # strict: sum_i (-1)^(i+1) d_i r/(1-r)^(i+1)
    # weak:   (-1)^(|P|+1) sum_i d_i r^i/(1-r)^(i+1)
    for size in range(1, 5):
        for P in classes_upto_4[size]:
            dv = d_vector(P).d
            for r in (Fraction(2), Fraction(5), Fraction(-3)):
                strict_rhs = sum(
                    (Fraction((-1) ** (i + 1)) * v * r / (1 - r) ** (i + 1)
                     for i, v in enumerate(dv, start=1)), Fraction(0))
                assert inverse_power_sum(P, r) == strict_rhs
                weak_rhs = (-1) ** (size + 1) * sum(
                    (Fraction(v) * r ** i / (1 - r) ** (i + 1)
                     for i, v in enumerate(dv, start=1)), Fraction(0))
                assert inverse_power_sum(P, r, "weak") == weak_rhs


def test_inverse_power_sum_vs_partial(classes_upto_4):
    for size in range(5):
        for P in classes_upto_4[size]:
            for r in (2, 3, 5, -2):
                for mode in ("strict", "weak"):
                    exact = inverse_power_sum(P, r, mode)
                    partial, tail = inverse_power_sum_partial(P, r, 60, mode)
                    assert abs(exact - partial) <= tail
                    assert tail < Fraction(1, 10 ** 6)


def test_operad_eval_zeta_examples():
    pair = antichain(2)
    got = operad_eval_zeta(pair, [zhat(1), zhat(2)])
    assert dict(got.coeffs) == {2: -2, 3: 3}
    # general pattern: -m zhat_m + (m+1) zhat_(m+1)
    for m in range(1, 5):
        got = operad_eval_zeta(pair, [zhat(1), zhat(m)])
        assert dict(got.coeffs) == {m: -m, m + 1: m + 1}
    two = chain(2)
    for k in range(1, 4):
        for j in range(1, 4):
            assert operad_eval_zeta(two, [zhat(k), zhat(j)]) == zhat(k + j)
    N = zigzag_poset()
    got = operad_eval_zeta(N, [zhat(1), zhat(2), zhat(1), zhat(1)])
    assert dict(got.coeffs) == {3: 2, 4: -8, 5: 7}


def test_operad_eval_zeta_consistency(classes_upto_4):
    N = zigzag_poset()
    for ks in [(1, 1, 1, 1), (2, 1, 1, 1), (1, 1, 1, 2)]:
        via_action = operad_eval_zeta(N, [zhat(k) for k in ks])
        direct = zeta_number(lex_sum(N, [chain(k) for k in ks]))
        assert via_action == direct


def test_operad_eval_zeta_errors():
    with pytest.raises(ArityMismatch):
        operad_eval_zeta(chain(2), [zhat(1)])
    with pytest.raises(MissingProvenance):
        operad_eval_zeta(chain(2), [zhat(1), ZetaExpr.make(0, {2: 1})])


def test_entry22_k2():
    rec = entry22_check(2)
    assert rec.passed
    assert abs(rec.lhs_numeric - Fraction(2898681337, 10 ** 10)) < 1e-9
    assert entry22_oracle(2) == ZetaExpr.make(-3, {1: 2})
    assert entry22_formula(2) == entry22_oracle(2)


def test_entry22_formula_matches_oracle():
    for k in range(2, 7):
        assert entry22_formula(k) == entry22_oracle(k)
        if k <= 4:
            assert entry22_check(k).passed


def test_entry22_oracle_values():
    assert entry22_oracle(3) == ZetaExpr.make(10, {1: -6})
    assert entry22_oracle(4) == ZetaExpr.make(-35, {1: 20, 3: 2})
    with pytest.raises(ValueError):
        entry22_check(1)


def test_finite_form_verifies_on_corpus(classes_upto_4):
    ctx = PrecisionContext(working_digits=30, verify_tolerance=1e-10)
    for size in range(5):
        for P in classes_upto_4[size]:
            rec = verify_identity(finite_form_identity(P), ctx)
            assert rec.passed, P
