import itertools
import random

import pytest

from knotqc.braid import BraidWord, random_braid
from knotqc.diagram import closure_to_diagram
from knotqc.errors import BudgetExceededError
from knotqc.laurent import LaurentPoly1, LaurentPoly2
from knotqc.skein import (
    DELTA,
    SkeinBudget,
    homfly,
    homfly_braid,
    homfly_coeff,
    homfly_with_stats,
    jones,
    jones_at,
)

from helpers import (
    far_commutativity_variants,
    insert_cancelling_pair,
    yang_baxter_variants,
)
from oracle_skein import HOPF_POSITIVE, TREFOIL, UNKNOT, UNLINK2

UNKNOT_WORD = BraidWord(1)
UNLINK2_WORD = BraidWord(2)
HOPF_WORD = BraidWord(2, (1, 1))
TREFOIL_WORD = BraidWord(2, (1, 1, 1))
FIGURE_TWO = BraidWord(3, (1, -2, 1, -2, 2, -1, 2))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))


def test_golden_values_match_oracle_and_literals():
    assert homfly_braid(UNKNOT_WORD) == UNKNOT == LaurentPoly2.one()
    assert homfly_braid(UNLINK2_WORD) == UNLINK2 == DELTA
    assert (
        homfly_braid(HOPF_WORD)
        == HOPF_POSITIVE
        == LaurentPoly2({(-1, -1): 1, (-3, -1): -1, (-1, 1): 1})
    )
    assert (
        homfly_braid(TREFOIL_WORD)
        == TREFOIL
        == LaurentPoly2({(-4, 0): -1, (-2, 0): 2, (-2, 2): 1})
    )


def test_torus_family_matches_oracle():
    from oracle_skein import torus_closure_value

    for k in range(-6, 7):
        word = BraidWord(2, (1 if k > 0 else -1,) * abs(k))
        assert homfly_braid(word) == torus_closure_value(k)


def test_homfly_braid_free_reduces():
    assert homfly_braid(FIGURE_TWO) == DELTA


def test_jones_values():
    assert jones(UNKNOT_WORD) == LaurentPoly1.one()
    assert jones(TREFOIL_WORD) == LaurentPoly1({8: -1, 6: 1, 2: 1})
    assert jones(UNLINK2_WORD) == LaurentPoly1({1: -1, -1: -1})
    assert jones(FIGURE_EIGHT) == LaurentPoly1({4: 1, 2: -1, 0: 1, -2: -1, -4: 1})


def test_jones_accepts_diagrams():
    assert jones(closure_to_diagram(TREFOIL_WORD)) == jones(TREFOIL_WORD)


def test_jones_five_crossing_knots_match_tables():
    # closures of sigma_1^5 and of (1,-2,-1,-1,-1,-2): the two knots with
    # five crossings; published one-variable values (t = s^2)
    cinq = BraidWord(2, (1, 1, 1, 1, 1))
    assert jones(cinq) == LaurentPoly1({14: -1, 12: 1, 10: -1, 8: 1, 4: 1})
    twist = BraidWord(3, (1, -2, -1, -1, -1, -2))
    assert jones(twist) == LaurentPoly1(
        {-2: 1, -4: -1, -6: 2, -8: -1, -10: 1, -12: -1}
    )


def test_jones_at_one_is_unit_on_knots():
    # exhaustive over all 2-strand words of length <= 7
    for length in range(8):
        for letters in itertools.product((1, -1), repeat=length):
            b = BraidWord(2, letters)
            if b.closure_components() != 1:
                continue
            assert abs(jones_at(b, 1) - 1) < 1e-9
    rng = random.Random(5)
    checked = 0
    while checked < 40:
        b = random_braid(3, rng.randrange(0, 8), rng.randrange(10**9))
        if b.closure_components() != 1:
            continue
        checked += 1
        assert abs(jones_at(b, 1) - 1) < 1e-9


def test_jones_at_one_on_links():
    rng = random.Random(6)
    for _ in range(40):
        b = random_braid(rng.randrange(2, 5), rng.randrange(0, 8), rng.randrange(10**9))
        m = b.closure_components()
        assert abs(jones_at(b, 1) - (-2) ** (m - 1)) < 1e-9


def test_jones_at_trefoil_root_of_unity():
    import cmath, math

    t = cmath.exp(2j * math.pi / 5)
    s = cmath.sqrt(t)
    expected = -(s**8) + s**6 + s**2
    assert abs(jones_at(TREFOIL_WORD, t) - expected) < 1e-12
    with pytest.raises(ValueError):
        jones_at(TREFOIL_WORD, 0)


def test_homfly_coeff():
    assert homfly_coeff(UNKNOT_WORD, 0) == LaurentPoly1.one()
    assert homfly_coeff(TREFOIL_WORD, 2) == LaurentPoly1({-2: 1})
    assert homfly_coeff(TREFOIL_WORD, 1) == LaurentPoly1.zero()


def test_z_exponent_parity():
    rng = random.Random(7)
    for _ in range(40):
        b = random_braid(rng.randrange(2, 5), rng.randrange(0, 8), rng.randrange(10**9))
        m = b.closure_components()
        p = homfly_braid(b)
        for j in p.z_exponents():
            assert (j - (m - 1)) % 2 == 0


def test_markov_invariance():
    rng = random.Random(11)
    memo = {}
    for _ in range(60):
        n = rng.randrange(2, 5)
        b = random_braid(n, rng.randrange(0, 9), rng.randrange(10**9))
        base = homfly_braid(b, memo=memo)
        assert homfly_braid(b.stabilize(), memo=memo) == base
        g = random_braid(n, rng.randrange(1, 5), rng.randrange(10**9))
        assert homfly_braid(b.conjugate(g), memo=memo) == base


def test_relation_invariance():
    rng = random.Random(13)
    memo = {}
    for _ in range(40):
        n = rng.randrange(2, 5)
        b = random_braid(n, rng.randrange(0, 8), rng.randrange(10**9))
        base = homfly_braid(b, memo=memo)
        assert homfly_braid(insert_cancelling_pair(b, rng), memo=memo) == base
        yb = yang_baxter_variants(b, rng)
        if yb:
            assert homfly_braid(yb[0], memo=memo) == homfly_braid(yb[1], memo=memo)
        fc = far_commutativity_variants(b, rng)
        if fc:
            assert homfly_braid(fc[0], memo=memo) == homfly_braid(fc[1], memo=memo)


def test_skein_identity_at_random_crossings():
    rng = random.Random(17)
    a_pos = LaurentPoly2.monomial(1, 1, 0)
    a_neg = LaurentPoly2.monomial(1, -1, 0)
    z = LaurentPoly2.monomial(1, 0, 1)
    memo = {}
    for _ in range(50):
        b = random_braid(rng.randrange(2, 4), rng.randrange(1, 8), rng.randrange(10**9))
        d = closure_to_diagram(b)
        k = rng.randrange(len(d.crossings))
        if d.crossings[k].sign > 0:
            plus, minus = d, d.switch_crossing(k)
        else:
            plus, minus = d.switch_crossing(k), d
        smooth = plus.smooth_crossing(k)
        lhs = a_pos * homfly(plus, memo=memo) - a_neg * homfly(minus, memo=memo)
        rhs = z * homfly(smooth, memo=memo)
        assert lhs == rhs


def test_mirror_property():
    rng = random.Random(19)
    for _ in range(25):
        b = random_braid(rng.randrange(2, 4), rng.randrange(0, 8), rng.randrange(10**9))
        mirror = BraidWord(b.strands, tuple(-e for e in b.letters))
        p = homfly_braid(b)
        q = homfly_braid(mirror)
        # (a, z) -> (-a^-1, z)
        mapped = LaurentPoly2(
            {(-i, j): c * (-1) ** i for (i, j), c in p.terms.items()}
        )
        assert q == mapped


def test_memo_and_plain_agree():
    rng = random.Random(23)
    for _ in range(15):
        b = random_braid(rng.randrange(2, 4), rng.randrange(0, 8), rng.randrange(10**9))
        d = closure_to_diagram(b)
        memo_poly, memo_stats = homfly_with_stats(d)
        plain_poly, plain_stats = homfly_with_stats(d, SkeinBudget(memo_enabled=False))
        assert memo_poly == plain_poly
        assert memo_stats.nodes <= plain_stats.nodes


def test_budget_errors():
    with pytest.raises(BudgetExceededError):
        homfly_braid(TREFOIL_WORD, SkeinBudget(max_crossings=2))
    with pytest.raises(BudgetExceededError):
        homfly_braid(BraidWord(2, (1,) * 6), SkeinBudget(max_nodes=2))
    with pytest.raises(ValueError):
        SkeinBudget(max_crossings=0)


def test_unmemoized_node_bound_on_torus_words():
    for c in range(2, 15):
        d = closure_to_diagram(BraidWord(2, (1,) * c))
        _, stats = homfly_with_stats(d, SkeinBudget(memo_enabled=False))
        assert stats.nodes <= 2**c
