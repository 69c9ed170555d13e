"""Structural guarantees the memoization layer leans on."""

import random

from knotqc.braid import BraidWord, random_braid
from knotqc.diagram import closure_to_diagram
from knotqc.skein import DELTA, SkeinBudget, homfly, homfly_braid, homfly_with_stats


def test_orientation_reversal_preserves_value():
    # the canonical key identifies a piece with its full reversal, so the
    # invariant must genuinely agree; check with memoization disabled so
    # the key plays no role
    plain = SkeinBudget(memo_enabled=False)
    rng = random.Random(88)
    for _ in range(25):
        b = random_braid(rng.randrange(2, 4), rng.randrange(1, 8), rng.randrange(10**9))
        d = closure_to_diagram(b)
        assert homfly(d.reversed(), plain) == homfly(d, plain)
        assert d.reversed().canonical_key() == d.canonical_key()


def test_split_closure_factorizes():
    hopf = homfly_braid(BraidWord(2, (1, 1)))
    split = homfly_braid(BraidWord(4, (1, 1, 3, 3)))
    assert split == DELTA * hopf * hopf
    trefoil = homfly_braid(BraidWord(2, (1, 1, 1)))
    mixed = homfly_braid(BraidWord(4, (1, 1, 1, 3, 3)))
    assert mixed == DELTA * trefoil * hopf


def test_memo_agrees_with_plain_at_scale():
    rng = random.Random(99)
    plain = SkeinBudget(memo_enabled=False)
    for _ in range(60):
        b = random_braid(rng.randrange(2, 6), rng.randrange(0, 10), rng.randrange(10**9))
        d = closure_to_diagram(b)
        memo_poly, memo_stats = homfly_with_stats(d)
        plain_poly, plain_stats = homfly_with_stats(d, plain)
        assert memo_poly == plain_poly
        assert memo_stats.nodes <= plain_stats.nodes


def test_shared_memo_across_diagrams_stays_consistent():
    rng = random.Random(111)
    shared: dict = {}
    words = [
        random_braid(rng.randrange(2, 5), rng.randrange(0, 9), rng.randrange(10**9))
        for _ in range(40)
    ]
    fresh = [homfly_braid(b) for b in words]
    pooled = [homfly_braid(b, memo=shared) for b in words]
    assert fresh == pooled
