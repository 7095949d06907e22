import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from goldens import H1_LEAVES, H2_LEAVES, TABLE_F, TABLE_G, TREE_F3, TREE_F4
from permcodes.bijections import (
    RANK_ENCODINGS,
    WORD_ENCODINGS,
    EncodingId,
    decode,
    encode,
    encode_oneline,
    f1,
    f1_inv,
    f2,
    f2_inv,
    f3,
    f3_inv,
    f4,
    f4_inv,
    g1,
    g1_inv,
    g2,
    g2_inv,
    h1,
    h1_inv,
    h2,
    h2_inv,
)
from permcodes.perm_core import Permutation, Word, from_cycle_form, iter_words, unrank_lex


# ---- n=3 golden set ---------------------------------------------------------

def test_table_f_columns():
    for letters, (v2, v1) in TABLE_F.items():
        w = Word(letters)
        assert f2(w).images == v2
        assert f1(w).images == v1


def test_table_g_columns():
    for letters, (v2, v1) in TABLE_G.items():
        w = Word(letters)
        assert g2(w).images == v2
        assert g1(w).images == v1


def test_tree_f3_leaves():
    for letters, cycles in TREE_F3.items():
        assert f3(Word(letters)).cycles == cycles


def test_tree_f4_leaves():
    for letters, cycles in TREE_F4.items():
        assert f4(Word(letters)).cycles == cycles


# ---- pointwise examples ------------------------------------------------------

def test_f1_examples():
    assert f1(Word((1,))).images == (1,)
    assert f1(Word((1, 1, 3))).images == (3, 1, 2)


def test_f1_inv_examples():
    assert f1_inv(Permutation((3, 1, 2))).letters == (1, 1, 3)
    assert f1_inv(Permutation((1, 2, 3))).letters == (1, 1, 1)
    assert f1_inv(Permutation((2, 1, 3))).letters == (1, 2, 1)


def test_f2_examples():
    for n in range(1, 7):
        assert f2(Word((1,) * n)).images == tuple(range(1, n + 1))


def test_f2_inv_examples():
    assert f2_inv(Permutation((3, 1, 2))).letters == (1, 1, 3)
    assert f2_inv(Permutation((3, 2, 1))).letters == (1, 2, 3)
    assert f2_inv(Permutation((1, 2, 3))).letters == (1, 1, 1)


def test_f3_inv_examples():
    assert f3_inv(Permutation((3, 2, 1))).letters == (1, 1, 3)  # cycles (1 3)(2)
    assert f3_inv(Permutation((1, 2, 3))).letters == (1, 1, 1)
    assert f3_inv(Permutation((2, 3, 1))).letters == (1, 2, 2)  # cycles (1 2 3)


def test_f4_inv_examples():
    assert f4_inv(Permutation((1, 3, 2))).letters == (1, 1, 3)  # cycles (1)(2 3)
    assert f4_inv(Permutation((3, 1, 2))).letters == (1, 2, 2)  # cycles (1 3 2)
    assert f4_inv(Permutation((1, 2, 3))).letters == (1, 1, 1)


def test_g1_examples():
    assert g1(Word((1, 1, 1))).images == (3, 2, 1)
    assert g1(Word((1, 2, 3))).images == (1, 2, 3)
    assert g1(Word((1, 2, 1))).images == (3, 1, 2)


def test_g2_examples():
    assert g2(Word((1, 1, 3))).images == (2, 1, 3)
    assert g2(Word((1, 1, 2))).images == (3, 1, 2)
    assert g2(Word((1, 2, 1))).images == (2, 3, 1)


def test_h_examples():
    assert h1(1, 3).images == (3, 2, 1)
    assert h2(1, 3).images == (3, 2, 1)
    assert h1(6, 3).images == (1, 2, 3)
    assert h2(3, 3).images == (3, 1, 2)


def test_h_leaf_orders():
    assert [h1(k, 3).images for k in range(1, 7)] == H1_LEAVES
    assert [h2(k, 3).images for k in range(1, 7)] == H2_LEAVES


def test_h_rank_bounds():
    with pytest.raises(ValueError):
        h1(0, 3)
    with pytest.raises(ValueError):
        h2(7, 3)


# ---- structural laws ---------------------------------------------------------

ALL_WORD_PAIRS = [
    (f1, f1_inv), (f2, f2_inv), (f3, f3_inv), (f4, f4_inv), (g1, g1_inv), (g2, g2_inv)]


@pytest.mark.parametrize("n", range(1, 8))
def test_bijectivity_exhaustive(n):
    nf = factorial(n)
    for enc in WORD_ENCODINGS:
        images = {encode_oneline(enc, w).images for w in iter_words(n)}
        assert len(images) == nf, enc
    for enc in RANK_ENCODINGS:
        images = {encode_oneline(enc, k, n).images for k in range(1, nf + 1)}
        assert len(images) == nf, enc


@pytest.mark.parametrize("n", range(1, 7))
def test_inverse_contracts_exhaustive(n):
    for fwd, inv in ALL_WORD_PAIRS:
        for w in iter_words(n):
            out = fwd(w)
            p = from_cycle_form(out) if not isinstance(out, Permutation) else out
            assert inv(p).letters == w.letters
    for k in range(1, factorial(n) + 1):
        assert h1_inv(h1(k, n)) == k
        assert h2_inv(h2(k, n)) == k


@pytest.mark.parametrize("n", range(1, 8))
def test_cycle_constructions_emit_canonical_form(n):
    for w in iter_words(n):
        for enc in (f3, f4):
            cf = enc(w)
            assert all(c[0] == min(c) for c in cf.cycles)
            assert [c[0] for c in cf.cycles] == sorted(c[0] for c in cf.cycles)


def test_h_is_g_through_word_orders():
    for n in range(1, 6):
        for k in range(1, factorial(n) + 1):
            assert h1(k, n) == g1(unrank_lex(k, n))


@given(st.data())
def test_round_trip_random_words(data):
    n = data.draw(st.integers(1, 8))
    letters = tuple(data.draw(st.integers(1, i)) for i in range(1, n + 1))
    w = Word(letters)
    for fwd, inv in ALL_WORD_PAIRS:
        out = fwd(w)
        p = from_cycle_form(out) if not isinstance(out, Permutation) else out
        assert inv(p).letters == letters


# ---- dispatchers ---------------------------------------------------------------

def test_encode_decode_dispatch():
    w = Word((1, 2, 2))
    assert encode(EncodingId.F3, w).to_text() == "(1 2 3)"
    assert encode_oneline(EncodingId.F3, w).images == (2, 3, 1)
    assert encode(EncodingId.H1, 1, 3).images == (3, 2, 1)
    assert decode(EncodingId.F2, Permutation((3, 1, 2))).letters == (1, 1, 3)
    assert decode(EncodingId.H2, Permutation((3, 2, 1))) == 1


def test_encode_input_validation():
    with pytest.raises(ValueError):
        encode(EncodingId.H1, Word((1,)))
    with pytest.raises(ValueError):
        encode(EncodingId.F1, 3)
    with pytest.raises(ValueError):
        encode(EncodingId.H1, 2, None)
