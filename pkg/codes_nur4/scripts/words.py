"""Words over E and binary words.

An `EWord` is an immutable tuple of ring elements. For bulk work a word of
length n is packed into one integer: bit i of the low half holds tau(u_i) and
bit i of the high half holds the c-coordinate of u_i (position i counted from
the left, starting at 0). Packed addition is XOR.
"""
from dataclasses import dataclass
from enum import Enum
from functools import reduce

import galois
import numpy as np

from scripts import ring_core
from scripts.errors import LengthMismatch, ParseError
from scripts.ring_core import RingElement

MAX_PACKED_LENGTH = 31   # two halves must fit a uint64
GF2 = galois.GF(2)


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class EWord:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(RingElement(e) for e in self.entries))

    @classmethod
    def parse(cls, text):
        try:
            return cls(tuple(RingElement.from_symbol(ch) for ch in text.strip()))
        except ValueError as exc:
            raise ParseError(f"bad word {text!r}: {exc}") from None

    @property
    def n(self):
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "".join(e.symbol for e in self.entries)

    def __add__(self, other):
        return word_add(self, other)


@dataclass(frozen=True)
class BitWord:
    """Binary word of length n stored as a mask (bit i is position i)."""
    bits: int
    n: int

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ParseError(f"bad binary word {text!r}")
        return cls(sum(1 << i for i, ch in enumerate(text) if ch == "1"), len(text))

    def __xor__(self, other):
        _check_lengths(self.n, other.n)
        return BitWord(self.bits ^ other.bits, self.n)

    def dot(self, other):
        _check_lengths(self.n, other.n)
        return (self.bits & other.bits).bit_count() & 1

    @property
    def weight(self):
        return self.bits.bit_count()

    def __str__(self):
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))


def _check_lengths(n1, n2):
    if n1 != n2:
        raise LengthMismatch(f"lengths differ: {n1} != {n2}")


def zero_word(n):
    return EWord((RingElement.ZERO,) * n)


# --- Operations on EWord, entrywise through the Cayley tables ---
def word_add(u, v):
    _check_lengths(u.n, v.n)
    return EWord(tuple(ring_core.add(x, y) for x, y in zip(u, v)))


def scalar_mul(side, s, u):
    side = Side(side)
    if side is Side.LEFT:
        return EWord(tuple(ring_core.mul(s, x) for x in u))
    return EWord(tuple(ring_core.mul(x, s) for x in u))


def hamming_weight(u):
    return sum(ring_core.elem_weight(x) for x in u)


def hamming_distance(u, v):
    _check_lengths(u.n, v.n)
    return sum(1 for x, y in zip(u, v) if x != y)


def inner_product(u, v):
    """<u, v> = sum of u_i * v_i. Not symmetric."""
    _check_lengths(u.n, v.n)
    return reduce(ring_core.add, (ring_core.mul(x, y) for x, y in zip(u, v)),
                  RingElement.ZERO)


def tau_word(u):
    return BitWord(sum(ring_core.tau(x) << i for i, x in enumerate(u)), u.n)


def c_word(v):
    """The word with c on supp(v) and 0 elsewhere."""
    return EWord(tuple(RingElement.C if v.bits >> i & 1 else RingElement.ZERO
                       for i in range(v.n)))


# --- Packed form ---
def pack(u):
    if u.n > MAX_PACKED_LENGTH:
        raise LengthMismatch(f"length {u.n} exceeds the packed limit {MAX_PACKED_LENGTH}")
    low = high = 0
    for i, x in enumerate(u):
        low |= (x & 1) << i
        high |= (x >> 1) << i
    return low | high << u.n


def unpack(value, n):
    value = int(value)
    return EWord(tuple(RingElement((value >> i & 1) | (value >> (n + i) & 1) << 1)
                       for i in range(n)))


def low_mask(n):
    return (1 << n) - 1


def split_packed(value, n):
    """(tau pattern, c-coordinate pattern) of a packed word."""
    return value & low_mask(n), value >> n


def packed_weights(values, n):
    """Hamming weights of an array of packed words."""
    values = np.asarray(values, dtype=np.uint64)
    support = (values & np.uint64(low_mask(n))) | (values >> np.uint64(n))
    return np.bitwise_count(support).astype(np.int64)


def packed_inner_product(u, v, n):
    """<u, v> for packed words, returned as a packed element.

    The multiplication table gives x * y = x when tau(y) = 1 and 0 otherwise,
    so <u, v> is the sum of u over the tau-support of v.
    """
    u_tau, u_c = split_packed(u, n)
    v_tau, _ = split_packed(v, n)
    alpha = (u_tau & v_tau).bit_count() & 1
    gamma = (u_c & v_tau).bit_count() & 1
    return alpha | gamma << 1


def parity(values):
    """Bit parity of every entry of a uint64 array."""
    return np.bitwise_count(np.asarray(values, dtype=np.uint64)) & 1


def _bit_rows(values, width):
    """values as rows of a GF(2) matrix, bit j in column j."""
    values = np.asarray([int(v) for v in values], dtype=np.uint64)
    shifts = np.arange(width, dtype=np.uint64)
    return GF2(((values[:, None] >> shifts) & np.uint64(1)).astype(np.uint8))


def gf2_basis(values, width):
    """Row-reduced basis (as a tuple of ints) of the F2-span of masks below 2^width."""
    if len(values) == 0 or width == 0:
        return ()
    rref = _bit_rows(values, width).row_reduce()
    rows = rref[np.any(rref, axis=1)].view(np.ndarray).astype(np.uint64)
    weights = np.uint64(1) << np.arange(width, dtype=np.uint64)
    return tuple(int(m) for m in (rows * weights).sum(axis=1, dtype=np.uint64))


def gf2_rank(values, width):
    """Dimension of the F2-span of masks below 2^width."""
    if len(values) == 0 or width == 0:
        return 0
    return int(np.linalg.matrix_rank(_bit_rows(values, width)))
