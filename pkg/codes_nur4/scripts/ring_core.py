"""Arithmetic in the ring E = <2a = 2b = 0, a^2 = a, b^2 = b, ab = a, ba = b>.

The two Cayley tables below are the source of truth. Every element also has a
packed code made of two bits, (tau bit, c-coordinate), in which addition is XOR:

    0 -> 0b00    a -> 0b01    c -> 0b10    b -> 0b11

Word-level code in `words` relies on that encoding; the tests check it against
the tables for every pair.
"""
from enum import IntEnum

import numpy as np


class RingElement(IntEnum):
    ZERO = 0
    A = 1
    B = 3
    C = 2

    @property
    def symbol(self):
        return _SYMBOLS[self]

    @classmethod
    def from_symbol(cls, symbol):
        try:
            return _BY_SYMBOL[symbol]
        except KeyError:
            raise ValueError(f"not an element of E: {symbol!r}") from None

    def __str__(self):
        return self.symbol


ZERO, A, B, C = RingElement.ZERO, RingElement.A, RingElement.B, RingElement.C

_SYMBOLS = {ZERO: "0", A: "a", B: "b", C: "c"}
_BY_SYMBOL = {s: e for e, s in _SYMBOLS.items()}

# Row and column order of the printed tables.
TABLE_ORDER = (ZERO, A, B, C)

# --- Cayley tables, row x column y gives x + y and x * y ---
ADDITION_ROWS = (
    "0abc",
    "a0cb",
    "bc0a",
    "cba0",
)
MULTIPLICATION_ROWS = (
    "0000",
    "0aa0",
    "0bb0",
    "0cc0",
)


def _parse_table(rows):
    table = {}
    for x, row in zip(TABLE_ORDER, rows):
        for y, entry in zip(TABLE_ORDER, row):
            table[x, y] = RingElement.from_symbol(entry)
    return table


_ADD = _parse_table(ADDITION_ROWS)
_MUL = _parse_table(MULTIPLICATION_ROWS)

# The maximal ideal, E/J is the two-element field.
J = frozenset({ZERO, C})


def elements():
    return TABLE_ORDER


def add(x, y):
    return _ADD[x, y]


def mul(x, y):
    return _MUL[x, y]


def tau(x):
    """Reduction modulo J: 0 for {0, c}, 1 for {a, b}."""
    return 0 if x in J else 1


def elem_weight(x):
    return 0 if x == ZERO else 1


def cayley_table(op):
    """Rows of the '+' or '*' table as symbol lists, header first."""
    if op not in ("+", "*"):
        raise ValueError(f"unknown table {op!r}")
    table = _ADD if op == "+" else _MUL
    header = [op] + [e.symbol for e in TABLE_ORDER]
    body = [[x.symbol] + [table[x, y].symbol for y in TABLE_ORDER] for x in TABLE_ORDER]
    return [header] + body


def is_two_sided_ideal(subset):
    """Additively closed and absorbing multiplication from both sides."""
    subset = frozenset(subset)
    if ZERO not in subset:
        return False
    if any(add(x, y) not in subset for x in subset for y in subset):
        return False
    return all(mul(x, r) in subset and mul(r, x) in subset
               for x in subset for r in TABLE_ORDER)


# --- 2x2 binary matrix model ---
_A_MATRIX = np.array([[0, 0], [0, 1]], dtype=np.uint8)
_B_MATRIX = np.array([[0, 1], [0, 1]], dtype=np.uint8)
_MATRICES = {
    ZERO: np.zeros((2, 2), dtype=np.uint8),
    A: _A_MATRIX,
    B: _B_MATRIX,
    C: _A_MATRIX ^ _B_MATRIX,
}


def matrix_model(x):
    """Image of x among 2x2 matrices over F2 (a fresh array each call)."""
    return _MATRICES[x].copy()


def matrix_product(m1, m2):
    return (m1.astype(np.int64) @ m2.astype(np.int64) % 2).astype(np.uint8)


def format_tables():
    """Both tables side by side, as `nur4 ring tables` prints them."""
    lines = []
    for add_row, mul_row in zip(cayley_table("+"), cayley_table("*")):
        lines.append(" ".join(add_row) + "    " + " ".join(mul_row))
    return "\n".join(lines)
