"""The classical evaluator: pinned values, defining properties, oracle spot checks."""

import random
from itertools import product

import pytest

from skeinforge import (
    CONWAY,
    GENERIC,
    NEG,
    POS,
    BoundError,
    OrderedSingularLink,
    PreconditionError,
    SingularBraidWord,
    connected_sum,
    gf,
    homfly,
    homfly_reference,
    parse_word,
    split_union,
    unlink_value,
)

R = GENERIC

HOPF = parse_word("2: s1 s1")
TREFOIL = parse_word("2: s1 s1 s1")
HOPF_VALUE = R.poly({(1, 1): 1, (1, -1): 1, (3, -1): -1})
TREFOIL_VALUE = R.poly({(4, 0): -1, (2, 0): 2, (2, 2): 1})


def random_classical(rng, max_strands=5, max_len=10):
    n = rng.randint(2, max_strands)
    letters = tuple(
        (rng.choice((POS, NEG)), rng.randint(1, n - 1))
        for _ in range(rng.randint(0, max_len))
    )
    return SingularBraidWord(n, letters)


# -- base values ----------------------------------------------------------


def test_unlink_values():
    assert unlink_value(R, 1) == R.one
    assert unlink_value(R, 2) == R.delta
    assert unlink_value(R, 3) == R.delta * R.delta
    with pytest.raises(PreconditionError):
        unlink_value(R, 0)


def test_unknot_normalization():
    assert homfly(parse_word("1:"), R) == R.one
    assert homfly(parse_word("2: s1"), R) == R.one
    assert homfly(parse_word("2: s1^-1"), R) == R.one


def test_pinned_hopf_and_trefoil():
    assert homfly(HOPF, R) == HOPF_VALUE
    assert homfly(TREFOIL, R) == TREFOIL_VALUE


def test_oracle_confirms_pinned_values():
    assert homfly_reference(HOPF, R) == HOPF_VALUE
    assert homfly_reference(TREFOIL, R) == TREFOIL_VALUE


def test_rejects_singular_words():
    with pytest.raises(PreconditionError):
        homfly(parse_word("2: t1"), R)
    with pytest.raises(PreconditionError):
        homfly_reference(parse_word("2: t1"), R)


def test_crossing_bound():
    big = SingularBraidWord(2, ((POS, 1),) * 25)
    with pytest.raises(BoundError):
        homfly(big, R)
    assert homfly(big, R, max_crossings=25) is not None


# -- defining properties -----------------------------------------------------


def test_skein_relation_randomized():
    rng = random.Random(101)
    checked = 0
    while checked < 200:
        w = random_classical(rng)
        if not w.letters:
            continue
        checked += 1
        k = rng.randrange(len(w.letters))
        _, i = w.letters[k]
        plus = SingularBraidWord(w.strands, w.letters[:k] + ((POS, i),) + w.letters[k + 1 :])
        minus = SingularBraidWord(w.strands, w.letters[:k] + ((NEG, i),) + w.letters[k + 1 :])
        zero = SingularBraidWord(w.strands, w.letters[:k] + w.letters[k + 1 :])
        assert R.x * homfly(zero, R) == R.t_inv * homfly(plus, R) - R.t * homfly(minus, R)


def test_markov_moves_randomized():
    rng = random.Random(202)
    for _ in range(200):
        w = random_classical(rng)
        value = homfly(w, R)
        g = (rng.choice((POS, NEG)), rng.randint(1, w.strands - 1))
        conjugated = SingularBraidWord(w.strands, (g,) + w.letters + ((-g[0], g[1]),))
        assert homfly(conjugated, R) == value
        for kind in (POS, NEG):
            stabilized = SingularBraidWord(w.strands + 1, w.letters + ((kind, w.strands),))
            assert homfly(stabilized, R) == value


def test_product_values_randomized():
    rng = random.Random(303)
    for _ in range(100):
        a = OrderedSingularLink(random_classical(rng, 3, 6))
        b = OrderedSingularLink(random_classical(rng, 3, 6))
        pa, pb = homfly(a.word, R), homfly(b.word, R)
        assert homfly(split_union(a, b).word, R) == R.delta * pa * pb
        assert homfly(connected_sum(a, b).word, R) == pa * pb


def test_engine_matches_oracle_sampled():
    # The exhaustive sweep lives in the acceptance suite; here a fast sample.
    for strands in (2, 3):
        alphabet = [(kind, i) for i in range(1, strands) for kind in (POS, NEG)]
        for length in range(0, 5):
            for letters in product(alphabet, repeat=length):
                w = SingularBraidWord(strands, letters)
                assert homfly(w, R) == homfly_reference(w, R)


def test_table_values():
    # Known table values in the (v, z) normalization, which this
    # relation matches with v = t, z = x.
    fig8 = parse_word("3: s1 s2^-1 s1 s2^-1")
    assert homfly(fig8, R) == R.poly({(-2, 0): 1, (0, 0): -1, (2, 0): 1, (0, 2): -1})
    cinquefoil = parse_word("2: s1 s1 s1 s1 s1")
    assert homfly(cinquefoil, R) == R.poly(
        {(4, 0): 3, (6, 0): -2, (4, 2): 4, (6, 2): -1, (4, 4): 1}
    )
    left_trefoil = parse_word("2: s1^-1 s1^-1 s1^-1")
    assert homfly(left_trefoil, R) == R.poly({(-4, 0): -1, (-2, 0): 2, (-2, 2): 1})


def test_other_ring_modes():
    assert homfly(TREFOIL, CONWAY) == CONWAY.poly({(0, 0): 1, (0, 2): 1})
    assert homfly(TREFOIL, gf(5)) == gf(5).poly({(4, 0): -1, (2, 0): 2, (2, 2): 1})
    assert homfly(parse_word("2:"), CONWAY).is_zero  # delta dies at t = 1


def test_fresh_cache_gives_same_answer():
    cache: dict = {}
    assert homfly(TREFOIL, R, cache=cache) == TREFOIL_VALUE
    assert cache  # the engine actually stored subresults
    assert homfly(TREFOIL, R, cache={}) == TREFOIL_VALUE
