import itertools

import pytest
from hypothesis import given, strategies as st

from pretzelknots.nielsen import (
    MOVES, SupportTooLarge, WordPair, apply_move, is_primitive_small, is_proper_power,
    nielsen_ball, nielsen_reduce, primitive_orbit, whitehead_minimize,
)
from pretzelknots.stallings import from_generators
from pretzelknots.words import Alphabet, Word, canonical_cyclic, cyclic_core
from strategies import reduced_seqs, words

AB = Alphabet.of("a b")
X3 = Alphabet.indexed("x", 3)


def W(s, A=AB):
    return Word.parse(A, s)


@pytest.mark.parametrize("text,prim", [
    ("a", True), ("a b", True), ("a b a^-1", True), ("a^2 b", True), ("b a^5 b a^6", True),
    ("a^2", False), ("a b a^-1 b^-1", False), ("a^2 b^2", False), ("a b^2 a b", True), ("a^2 b a^-2 b^-1", False),
])
def test_primitive_examples(text, prim):
    assert is_primitive_small(W(text)) is prim


def test_knot_obstruction_elements():
    X = Alphabet.indexed("x", 5)
    assert not is_primitive_small(W("x2^3 x1^-2", X))
    assert not is_primitive_small(W("x4^3 x0^-2", X))
    assert is_primitive_small(W("x1 x2", X))


def test_support_cap():
    with pytest.raises(SupportTooLarge):
        is_primitive_small(W("x0 x1 x2 x3^2", Alphabet.indexed("x", 4)))
    assert is_primitive_small(W("x0 x1 x2 x3^2", Alphabet.indexed("x", 4)), max_rank=4)


def test_proper_power():
    assert is_proper_power(W("a b a b"))
    assert is_proper_power(W("b^-1 a b a b^2"))  # conjugate of (a b)^2
    assert not is_proper_power(W("a b a b^-1"))
    with pytest.raises(ValueError):
        is_proper_power(AB.identity())


def test_ball_sizes():
    p = WordPair(W("a"), W("b"))
    assert len(nielsen_ball(p, 0)) == 1
    b1 = nielsen_ball(p, 1)
    assert len(b1) == 1 + len(MOVES)
    assert len({q.key() for q in nielsen_ball(p, 2)}) == len(nielsen_ball(p, 2))


@given(words(AB, 6), words(AB, 6), st.lists(st.sampled_from(MOVES), max_size=5))
def test_moves_preserve_subgroup(u, v, log):
    p = WordPair(u, v)
    q = p.replay(log)
    assert q.log == tuple(log)
    assert from_generators(AB, [u, v]) == from_generators(AB, list(q.words()))


def test_move_inverses():
    pair = ((1, 2), (2, -1))
    for m, back in [("r0+", "r0-"), ("l1+", "l1-"), ("swap", "swap"), ("inv0", "inv0")]:
        assert apply_move(apply_move(pair, m), back) == pair


def test_nielsen_reduce():
    gens = [W("a b a b"), W("a b")]
    out, log = nielsen_reduce(gens)
    assert sorted(len(w) for w in out) == [2] and len(out) == 1 or from_generators(AB, out) == from_generators(AB, gens)
    assert sum(len(w) for w in out) <= 4


@given(reduced_seqs(3, 10))
def test_whitehead_never_lengthens(seq):
    core, _ = whitehead_minimize(seq)
    assert len(core) <= len(cyclic_core(seq))


@given(reduced_seqs(2, 8), st.permutations([1, 2]), st.booleans())
def test_primitivity_invariant_under_relabeling(seq, perm, flip):
    relabeled = tuple(perm[abs(x) - 1] * (1 if x > 0 else -1) * (-1 if flip and abs(x) == 1 else 1) for x in seq)
    assert is_primitive_small(seq) == is_primitive_small(relabeled)


def _all_words(rank, length):
    out = []
    letters = [g for g in range(1, rank + 1)] + [-g for g in range(1, rank + 1)]
    for w in itertools.product(letters, repeat=length):
        if all(w[i] != -w[i + 1] for i in range(length - 1)):
            out.append(w)
    return out


def test_orbit_oracle_rank2_short():
    orbit = primitive_orbit(2, 8)
    for n in range(1, 7):
        for w in _all_words(2, n):
            if cyclic_core(w):
                assert is_primitive_small(w) == (canonical_cyclic(w) in orbit), w
