from itertools import product

import numpy as np
import pytest

from scripts import ring_core
from scripts.ring_core import A, B, C, ZERO, RingElement

E = ring_core.elements()


def e(symbol):
    return RingElement.from_symbol(symbol)


@pytest.mark.parametrize("x, y, expected", [("a", "b", "c"), ("c", "c", "0"), ("0", "b", "b")])
def test_add_examples(x, y, expected):
    assert ring_core.add(e(x), e(y)) == e(expected)


@pytest.mark.parametrize("x, y, expected", [("a", "b", "a"), ("b", "a", "b"), ("c", "c", "0"), ("0", "c", "0")])
def test_mul_examples(x, y, expected):
    assert ring_core.mul(e(x), e(y)) == e(expected)


def test_tau_and_weight():
    assert [ring_core.tau(x) for x in E] == [0, 1, 1, 0]
    assert [ring_core.elem_weight(x) for x in E] == [0, 1, 1, 1]


def test_packed_encoding_matches_tables():
    for x, y in product(E, repeat=2):
        assert ring_core.add(x, y) == RingElement(int(x) ^ int(y))
        assert ring_core.mul(x, y) == (x if ring_core.tau(y) else ZERO)
        assert ring_core.tau(ring_core.add(x, y)) == ring_core.tau(x) ^ ring_core.tau(y)


def test_ring_axioms_exhaustive():
    add, mul = ring_core.add, ring_core.mul
    for x, y, z in product(E, repeat=3):
        assert add(add(x, y), z) == add(x, add(y, z))
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
        assert mul(add(x, y), z) == add(mul(x, z), mul(y, z))
    for x, y in product(E, repeat=2):
        assert add(x, y) == add(y, x)
        assert add(x, ZERO) == x


def test_non_commutative_and_no_unity():
    assert ring_core.mul(A, B) != ring_core.mul(B, A)
    for unit in E:
        assert any(ring_core.mul(unit, x) != x or ring_core.mul(x, unit) != x for x in E)


def test_right_absorption():
    for x in E:
        assert ring_core.mul(x, A) == x
        assert ring_core.mul(x, B) == x
        assert ring_core.mul(x, C) == ZERO


def test_matrix_model_images():
    assert ring_core.matrix_model(A).tolist() == [[0, 0], [0, 1]]
    assert ring_core.matrix_model(B).tolist() == [[0, 1], [0, 1]]
    assert ring_core.matrix_model(C).tolist() == [[0, 1], [0, 0]]
    assert not ring_core.matrix_model(ZERO).any()


def test_matrix_model_is_an_injective_homomorphism():
    images = {ring_core.matrix_model(x).tobytes() for x in E}
    assert len(images) == 4
    for x, y in product(E, repeat=2):
        np.testing.assert_array_equal(ring_core.matrix_model(ring_core.add(x, y)),
                                      ring_core.matrix_model(x) ^ ring_core.matrix_model(y))
        np.testing.assert_array_equal(
            ring_core.matrix_model(ring_core.mul(x, y)),
            ring_core.matrix_product(ring_core.matrix_model(x), ring_core.matrix_model(y)))


def test_matrix_model_returns_a_copy():
    m = ring_core.matrix_model(A)
    m[0, 0] = 1
    assert ring_core.matrix_model(A)[0, 0] == 0


def test_j_is_the_two_sided_ideal():
    assert ring_core.J == {ZERO, C}
    assert ring_core.is_two_sided_ideal(ring_core.J)
    assert ring_core.is_two_sided_ideal({ZERO})
    assert not ring_core.is_two_sided_ideal({ZERO, A})
    assert not ring_core.is_two_sided_ideal({A, C})


def test_symbols_round_trip_and_reject_unknown():
    assert [str(x) for x in E] == ["0", "a", "b", "c"]
    with pytest.raises(ValueError):
        RingElement.from_symbol("d")


def test_cayley_table_layout():
    table = ring_core.cayley_table("+")
    assert table[0] == ["+", "0", "a", "b", "c"]
    assert table[2] == ["a", "a", "0", "c", "b"]
    assert ring_core.cayley_table("*")[4] == ["c", "0", "c", "c", "0"]
    with pytest.raises(ValueError):
        ring_core.cayley_table("-")


def test_format_tables_has_header_and_four_rows():
    lines = ring_core.format_tables().splitlines()
    assert len(lines) == 5
    assert lines[0].startswith("+ 0 a b c")
