"""Coefficient ring and free-module laws, rendering, substitution."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forest_bialg.forest import Alphabet, parse_forest
from forest_bialg.freemod import (LAM, MU, NU, ONE, ZERO, Coefficient,
                                  LinComb, act_left, act_right, coeff_eval,
                                  lc_add, lc_scale, lc_tensor)

AB = Alphabet(omega=("a", "b"), xset=("x",))


def F(text):
    return parse_forest(text, AB)


rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)
monomials = st.tuples(st.integers(-3, 3), st.integers(0, 3), st.integers(0, 3))
coefficients = st.dictionaries(monomials, rationals, max_size=5).map(Coefficient)


# --------------------------------------------------------------- ring laws

@settings(max_examples=1000)
@given(coefficients, coefficients, coefficients)
def test_ring_laws(u, v, w):
    assert u + v == v + u
    assert (u + v) + w == u + (v + w)
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert u + ZERO == u
    assert u * ONE == u
    assert u * ZERO == ZERO
    assert u - u == ZERO
    assert -(-u) == u


@settings(max_examples=300)
@given(coefficients, coefficients)
def test_hash_consistency(u, v):
    if u == v:
        assert hash(u) == hash(v)


@settings(max_examples=300)
@given(coefficients, st.integers(0, 4))
def test_pow_matches_repeated_product(u, k):
    expect = ONE
    for _ in range(k):
        expect = expect * u
    assert u ** k == expect


def test_canonical_form_prunes_zeros():
    c = Coefficient({(0, 0, 0): Fraction(1), (1, 0, 0): Fraction(0)})
    assert c == ONE
    assert (MU - MU) == ZERO and not (MU - MU)


def test_exponent_domain_is_enforced():
    with pytest.raises(ValueError):
        Coefficient({(0, -1, 0): 1})
    with pytest.raises(ValueError):
        Coefficient({(0, 0, -2): 1})
    Coefficient({(-5, 0, 0): 1})  # negative lambda exponents are fine
    with pytest.raises(ValueError):
        LAM ** -1


# ------------------------------------------------------------ substitution

def test_laurent_inverse():
    assert LAM * Coefficient.monomial(1, a=-1) == ONE


def test_mu_shift_square():
    # (m - l n)^2 = m^2 - 2 l m n + l^2 n^2
    shift = MU - LAM * NU
    expect = (Coefficient.monomial(1, b=2)
              + Coefficient.monomial(-2, a=1, b=1, c=1)
              + Coefficient.monomial(1, a=2, c=2))
    assert shift * shift == expect
    assert Coefficient.monomial(1, b=2).subst_mu(shift) == expect


def test_subst_mu_rejects_laurent_substitute():
    with pytest.raises(ValueError):
        MU.subst_mu(Coefficient.monomial(1, a=-1))


def test_subst_mu_leaves_other_variables():
    c = LAM * MU + NU
    assert c.subst_mu(MU * NU) == LAM * MU * NU + NU


def test_subst_partial_and_eval():
    c = -LAM + MU - LAM * NU
    at = c.subst_partial(lam=Fraction(2))
    assert at == Coefficient.from_rational(-2) + MU + Coefficient.monomial(-2, c=1)
    assert coeff_eval(c, Fraction(2), Fraction(3), Fraction(1, 2)) == Fraction(0)
    assert c.eval_at(Fraction(1), Fraction(1), Fraction(0)) == Fraction(0)


def test_lambda_zero_pole():
    eps = Coefficient.monomial(-1, a=-2, b=1)
    with pytest.raises(ZeroDivisionError):
        eps.subst_partial(lam=0)
    assert MU.subst_partial(lam=0) == MU  # no pole without negative powers


# --------------------------------------------------------------- rendering

def test_monomial_rendering():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(-ONE) == "-1"
    assert str(LAM * LAM) == "l^2"
    assert str(Coefficient.monomial(-1, a=-2, b=1)) == "-m*l^-2"
    assert str(Coefficient.monomial(Fraction(3, 2), a=1, c=1)) == "3/2*l*n"
    assert str(Coefficient.monomial(1, a=-1)) == "l^-1"


def test_sum_rendering_is_sorted_by_exponents():
    # ascending (a, b, c): the mu term (0,1,0) precedes the lambda term (1,0,0)
    assert str(MU - LAM) == "m - l"
    assert str(-LAM + MU - LAM * NU) == "m - l - l*n"
    assert str(ONE + LAM + NU) == "1 + n + l"


def test_coefficient_json():
    c = MU - LAM * NU
    assert c.to_json() == [{"q": "1", "l": 0, "m": 1, "n": 0},
                           {"q": "-1", "l": 1, "m": 0, "n": 1}]


# ------------------------------------------------------------- linear combs

def test_lincomb_basics():
    u = LinComb.single(F("a"), MU) + LinComb.single(F("x"))
    assert u.coeff_of(F("a")) == MU
    assert u.coeff_of(F("1")) == ZERO
    assert (u - u).is_zero()
    assert lc_add(u, LinComb.zero()) == u
    assert lc_scale(Fraction(0), u).is_zero()
    assert u.scale(LAM).coeff_of(F("a")) == LAM * MU


def test_lincomb_merges_duplicate_bases():
    u = LinComb.single(F("a"), LAM) + LinComb.single(F("a"), -LAM)
    assert u.is_zero()


def test_tensor_concatenates_legs():
    u = LinComb.single(F("a"))
    v = LinComb.single((F("x"), F("1")), MU)
    w = lc_tensor(u, v)
    assert w.coeff_of((F("a"), F("x"), F("1"))) == MU


def test_apply_is_linear():
    u = LinComb.single(F("a"), MU) + LinComb.single(F("x"), -LAM)
    double = u.apply(lambda b: LinComb.single(b, Coefficient.from_rational(2)))
    assert double == u.scale(Fraction(2))


def test_map_basis_merges():
    u = LinComb.single(F("a"), LAM) + LinComb.single(F("b"), LAM)
    v = u.map_basis(lambda b: F("x"))
    assert v == LinComb.single(F("x"), LAM + LAM)


def test_bimodule_actions():
    t = LinComb.single((F("a"), F("x")))
    assert act_left(F("b"), t).coeff_of((F("b a"), F("x"))) == ONE
    assert act_right(t, F("b")).coeff_of((F("a"), F("x b"))) == ONE


def test_lincomb_rendering_orders_by_basis_text():
    u = LinComb.single(F("x"), -LAM) + LinComb.single(F("a"), MU)
    assert str(u) == "(m) a\n(-l) x"
    assert str(LinComb.zero()) == "0"


def test_lincomb_json_shape():
    u = LinComb.single((F("a"), F("1")), -LAM)
    assert u.to_json() == [{"coeff": [{"q": "-1", "l": 1, "m": 0, "n": 0}],
                            "legs": ["a", "1"]}]
