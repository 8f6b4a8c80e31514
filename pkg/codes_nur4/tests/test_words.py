from itertools import product

import numpy as np
import pytest

from scripts import ring_core, words
from scripts.errors import LengthMismatch, ParseError
from scripts.words import BitWord, EWord, Side


def w(text):
    return EWord.parse(text)


def random_word(rng, n):
    return EWord(tuple(rng.choice(ring_core.elements()) for _ in range(n)))


def all_words(n):
    return [EWord(t) for t in product(ring_core.elements(), repeat=n)]


def test_parse_and_str():
    assert str(w("abc0")) == "abc0"
    assert w("abc0").n == 4
    with pytest.raises(ParseError):
        EWord.parse("abx")


def test_word_add():
    assert w("aa") + w("bb") == w("cc")
    assert words.word_add(w("abc"), w("abc")) == words.zero_word(3)
    assert words.word_add(w("abc"), words.zero_word(3)) == w("abc")
    with pytest.raises(LengthMismatch):
        words.word_add(w("a"), w("ab"))


@pytest.mark.parametrize("side, s, u, expected", [
    (Side.LEFT, "c", "ab0", "cc0"),
    (Side.RIGHT, "c", "ab0", "000"),
    (Side.LEFT, "0", "abc", "000"),
    ("right", "a", "abc", "abc"),
])
def test_scalar_mul(side, s, u, expected):
    assert words.scalar_mul(side, ring_core.RingElement.from_symbol(s), w(u)) == w(expected)


def test_weight_and_distance():
    assert words.hamming_weight(w("abc")) == 3
    assert words.hamming_weight(words.zero_word(4)) == 0
    assert words.hamming_weight(w("c00")) == 1
    assert words.hamming_distance(w("aa"), w("bb")) == 2
    assert words.hamming_distance(w("ab"), w("ab")) == 0
    assert words.hamming_distance(w("ab"), w("ac")) == 1
    with pytest.raises(LengthMismatch):
        words.hamming_distance(w("a"), w("ab"))


def test_distance_is_weight_of_sum(rng):
    pairs = [(u, v) for u in all_words(2) for v in all_words(2)]
    pairs += [(random_word(rng, 7), random_word(rng, 7)) for _ in range(200)]
    for u, v in pairs:
        assert words.hamming_distance(u, v) == words.hamming_weight(u + v)


def test_inner_product_examples():
    assert words.inner_product(w("a"), w("b")) == ring_core.A
    assert words.inner_product(w("b"), w("a")) == ring_core.B
    assert words.inner_product(w("aa"), w("aa")) == ring_core.ZERO
    assert words.inner_product(words.zero_word(3), w("abc")) == ring_core.ZERO
    with pytest.raises(LengthMismatch):
        words.inner_product(w("a"), w("ab"))


def test_inner_product_is_biadditive(rng):
    triples = list(product(all_words(1), repeat=3))
    triples += [tuple(random_word(rng, 6) for _ in range(3)) for _ in range(200)]
    ip, add = words.inner_product, ring_core.add
    for u1, u2, v in triples:
        assert ip(u1 + u2, v) == add(ip(u1, v), ip(u2, v))
        assert ip(v, u1 + u2) == add(ip(v, u1), ip(v, u2))


def test_tau_word_and_c_word():
    assert str(words.tau_word(w("acb"))) == "101"
    assert words.tau_word(w("cc")).bits == 0
    assert words.tau_word(words.zero_word(3)).weight == 0
    assert words.c_word(BitWord.parse("101")) == w("c0c")


def test_tau_word_is_additive(rng):
    for _ in range(100):
        u, v = random_word(rng, 5), random_word(rng, 5)
        assert words.tau_word(u + v) == words.tau_word(u) ^ words.tau_word(v)


def test_bit_word_operations():
    u, v = BitWord.parse("110"), BitWord.parse("011")
    assert str(u ^ v) == "101"
    assert u.dot(v) == 1
    assert u.weight == 2
    with pytest.raises(LengthMismatch):
        u ^ BitWord.parse("11")
    with pytest.raises(ParseError):
        BitWord.parse("102")


def test_packed_form_agrees_with_word_operations():
    for u, v in product(all_words(2), repeat=2):
        pu, pv = words.pack(u), words.pack(v)
        assert words.unpack(pu ^ pv, 2) == u + v
        assert words.packed_inner_product(pu, pv, 2) == words.inner_product(u, v)
        assert words.packed_weights([pu], 2)[0] == words.hamming_weight(u)


def test_split_packed_works_on_arrays():
    values = np.array([words.pack(w("abc0"))], dtype=np.uint64)
    tau_bits, c_bits = words.split_packed(values, 4)
    assert int(tau_bits[0]) == 0b0011
    assert int(c_bits[0]) == 0b0110


def test_parity():
    assert words.parity([0, 1, 3, 7]).tolist() == [0, 1, 0, 1]


def test_gf2_basis_spans_the_input():
    basis = words.gf2_basis([0b011, 0b110, 0b101, 0], 3)
    assert len(basis) == 2
    assert words.gf2_rank([0b011, 0b110, 0b101, 0], 3) == 2
    span = {0}
    for b in basis:
        span |= {s ^ b for s in span}
    assert span == {0, 0b011, 0b110, 0b101}
    assert words.gf2_basis([], 3) == ()
    assert words.gf2_basis([0, 0], 3) == ()
    assert words.gf2_rank([], 3) == 0


@pytest.mark.parametrize("values, width, rank", [
    ([0b1, 0b10, 0b100, 0b111], 3, 3),
    ([0b1111, 0b1111], 4, 1),
    ([1 << 40, 1 << 40 | 1, 1], 41, 2),
])
def test_gf2_rank_matches_basis(values, width, rank):
    assert words.gf2_rank(values, width) == rank
    assert len(words.gf2_basis(values, width)) == rank
