"""Pairing, left grafting products, and the duality with the coproduct."""

import itertools
from math import comb

from forest_bialg.coalgebra import coproduct
from forest_bialg.dualprod import (left_path, pairing, star, star_lin,
                                   star_weighted)
from forest_bialg.forest import (EMPTY_FOREST, Alphabet, enumerate_forests,
                                 leaf, parse_forest)
from forest_bialg.freemod import LAM, MU, ONE, ZERO, LinComb

AB = Alphabet(omega=("a", "b"), xset=("x",))


def F(text):
    return parse_forest(text, AB)


def test_pairing_is_orthonormal():
    small = list(enumerate_forests(3, AB))
    for f, g in itertools.product(small, repeat=2):
        assert pairing(f, g) == (ONE if f is g else ZERO)


def test_pairing_is_bilinear_on_tensors():
    x = LinComb.single((F("a"), F("x")), MU) + LinComb.single((F("b"), F("1")), -LAM)
    y = LinComb.single((F("a"), F("x")), LAM)
    assert pairing(x, y) == MU * LAM
    assert pairing(x, LinComb.single((F("b"), F("1")))) == -LAM


def test_left_path_lengths():
    assert len(left_path(EMPTY_FOREST)) == 0
    assert len(left_path(F("x"))) == 0  # X terminal is not a graft target
    assert len(left_path(F("a"))) == 1
    assert len(left_path(F("a[x]"))) == 1
    assert len(left_path(F("a[b[x] a] b"))) == 2
    assert [str(v) for v in left_path(F("a[b]")).vertices] == ["0", "0/0"]


def test_star_units():
    for text in ("1", "x", "a[x b]", "a b"):
        f = F(text)
        assert star(f, EMPTY_FOREST) == LinComb.single(f)
        assert star(EMPTY_FOREST, f) == LinComb.single(f)


def test_star_term_census_instances():
    cases = [("a b", "a[b[x]]"), ("x a", "b"), ("a b x", "a[b]")]
    for ftext, gtext in cases:
        f, g = F(ftext), F(gtext)
        prod = star(f, g)
        m, n = f.breadth, len(left_path(g))
        assert len(prod.terms) == comb(m + n, n)
        assert all(c == ONE for c in prod.terms.values())


def test_star_single_graft_instance():
    # a star b ranges over target slots: in front of b or under it
    assert star(F("a"), F("b")) == \
        LinComb.single(F("a b")) + LinComb.single(F("b[a]"))


def test_star_respects_existing_children():
    # grafted trees land in front of the target's child list
    prod = star(F("a"), F("b[x]"))
    assert prod.coeff_of(F("b[a x]")) == ONE
    assert prod.coeff_of(F("b[x a]")) == ZERO


def test_weighted_star_of_units():
    want = LinComb.single(EMPTY_FOREST, -LAM)
    for d in ("x", "a", "b"):
        want = want + LinComb.single(F(d), MU)
    assert star_weighted(EMPTY_FOREST, EMPTY_FOREST, AB) == want


def test_star_associativity_instances():
    triples = [("a", "b", "a"), ("x", "a[x]", "b"), ("a b", "a", "x")]
    for tx, ty, tz in triples:
        x, y, z = F(tx), F(ty), F(tz)
        assert star_lin(star(x, y), z) == star_lin(x, star(y, z))


def test_coproduct_duality_small():
    # <D(x), y (x) z> = <x, y star_{l,m} z>
    ambient = list(enumerate_forests(3, AB))
    legs = list(enumerate_forests(2, AB))
    for y, z in itertools.product(legs, repeat=2):
        prod = star_weighted(y, z, AB)
        for x in ambient:
            lhs = pairing(coproduct(x), LinComb.single((y, z)))
            assert lhs == pairing(x, prod)


def test_star_accepts_lincomb_arguments():
    x = LinComb.single(F("a"), MU)
    assert star_lin(x, F("b")) == star_lin(F("a"), F("b")).scale(MU)
    assert star_lin(leaf(AB.decoration("a")), F("b")) == star(F("a"), F("b"))
