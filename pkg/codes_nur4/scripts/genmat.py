"""Candidate generator matrices and the codes they span.

A code of type {k0,k1} and length n is the Z2-span of

    a I_k0 | a T  | a U
    b I_k0 | b T  | b U
    0      | c I_k1 | c V

with T (k0 x k1), U (k0 x r), V (k1 x r) binary and r = n - k0 - k1.
"""
import re
from dataclasses import dataclass, field

import numpy as np

from scripts import words
from scripts.config import DENSE_LENGTH_LIMIT, SPAN_SIZE_CAP
from scripts.errors import InvalidType, LengthTooLarge, NotLinear, ParseError
from scripts.ring_core import RingElement
from scripts.words import EWord


@dataclass(frozen=True)
class BitMatrix:
    """rows x cols binary matrix; `bits` reads row-major, first entry most significant."""
    rows: int
    cols: int
    bits: int = 0

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if not 0 <= self.bits < 1 << self.size:
            raise ValueError(f"{self.bits} does not fit a {self.rows}x{self.cols} matrix")

    @property
    def size(self):
        return self.rows * self.cols

    @classmethod
    def parse(cls, text, rows, cols):
        text = text.strip()
        if len(text) != rows * cols or any(ch not in "01" for ch in text):
            raise ParseError(f"expected {rows * cols} bits for a {rows}x{cols} matrix, got {text!r}")
        return cls(rows, cols, int(text, 2) if text else 0)

    def entry(self, r, c):
        return self.bits >> (self.size - 1 - (r * self.cols + c)) & 1

    def row_mask(self, r, offset=0):
        """Row r as a position mask, column j landing on position offset + j."""
        return sum(1 << (offset + c) for c in range(self.cols) if self.entry(r, c))

    def to_lists(self):
        return [[self.entry(r, c) for c in range(self.cols)] for r in range(self.rows)]

    def __str__(self):
        return format(self.bits, f"0{self.size}b") if self.size else ""


def enumerate_bit_matrices(rows, cols):
    """All 2^(rows*cols) matrices as a big-endian binary counter."""
    for i in range(1 << rows * cols):
        yield BitMatrix(rows, cols, i)


# --- Types and specs ---
def check_type(n, k0, k1):
    if n < 1 or k0 < 0 or k1 < 0 or k0 + k1 >= n:
        raise InvalidType(f"no codes of type {{{k0},{k1}}} at length {n}: need k0, k1 >= 0 and k0 + k1 < n")


def valid_types(n):
    """Types of length n in table order (k0 descending, k1 ascending), {0,0} left out."""
    return [(k0, k1)
            for k0 in range(n - 1, -1, -1)
            for k1 in range(0, n - k0)
            if (k0, k1) != (0, 0)]


def _exponents(n, k0, k1):
    r = n - k0 - k1
    return k0 * k1, k0 * r, k1 * r


def code_count(n, k0, k1):
    check_type(n, k0, k1)
    return 1 << sum(_exponents(n, k0, k1))


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    k0: int
    k1: int
    T: BitMatrix
    U: BitMatrix
    V: BitMatrix
    candidate_index: int = field(default=-1, compare=False)

    def __post_init__(self):
        check_type(self.n, self.k0, self.k1)
        r = self.n - self.k0 - self.k1
        expected = {"T": (self.k0, self.k1), "U": (self.k0, r), "V": (self.k1, r)}
        for name, shape in expected.items():
            m = getattr(self, name)
            if (m.rows, m.cols) != shape:
                raise InvalidType(f"{name} must be {shape[0]}x{shape[1]}, got {m.rows}x{m.cols}")
        index = (self.T.bits << (self.U.size + self.V.size)) | (self.U.bits << self.V.size) | self.V.bits
        object.__setattr__(self, "candidate_index", index)

    @property
    def r(self):
        return self.n - self.k0 - self.k1

    @property
    def rows(self):
        return 2 * self.k0 + self.k1

    @property
    def size(self):
        return 4 ** self.k0 * 2 ** self.k1

    def residue_rows(self):
        """Binary rows (I | T | U) as position masks."""
        k0, k1 = self.k0, self.k1
        return [1 << i | self.T.row_mask(i, k0) | self.U.row_mask(i, k0 + k1) for i in range(k0)]

    def torsion_rows(self):
        """Binary rows (0 | I | V) as position masks."""
        k0, k1 = self.k0, self.k1
        return [1 << (k0 + j) | self.V.row_mask(j, k0 + k1) for j in range(k1)]


def spec_from_index(n, k0, k1, index):
    _, nu, nv = _exponents(n, k0, k1)
    if not 0 <= index < code_count(n, k0, k1):
        raise InvalidType(f"candidate index {index} out of range for type {{{k0},{k1}}} at n={n}")
    r = n - k0 - k1
    return GeneratorSpec(
        n, k0, k1,
        T=BitMatrix(k0, k1, index >> (nu + nv)),
        U=BitMatrix(k0, r, index >> nv & ((1 << nu) - 1)),
        V=BitMatrix(k1, r, index & ((1 << nv) - 1)),
    )


def enumerate_specs(n, k0, k1, start=0, stop=None, allow_zero_type=False):
    """Specs of the type in candidate_index order (T outermost, then U, then V).

    `start`/`stop` select the sub-range [start, stop) for sharding.
    """
    if (k0, k1) == (0, 0) and not allow_zero_type:
        raise InvalidType("type {0,0} is the zero code; pass allow_zero_type=True to enumerate it")
    total = code_count(n, k0, k1)
    stop = total if stop is None else min(stop, total)
    for index in range(max(start, 0), stop):
        yield spec_from_index(n, k0, k1, index)


def sample_specs(n, k0, k1, count, rng):
    """`count` distinct specs drawn with `rng` (all of them when the type is smaller)."""
    total = code_count(n, k0, k1)
    if count >= total:
        return list(enumerate_specs(n, k0, k1, allow_zero_type=True))
    return [spec_from_index(n, k0, k1, i) for i in sorted(rng.sample(range(total), count))]


# --- Textual spec form: n=4 k0=1 k1=2 T=10 U=1 V=01 ---
_SPEC_FIELD = re.compile(r"^(n|k0|k1|T|U|V)=([0-9]*)$")


def parse_spec_text(text):
    fields = {}
    for token in text.split():
        match = _SPEC_FIELD.match(token)
        if not match:
            raise ParseError(f"unexpected token {token!r} in spec {text!r}")
        key, value = match.groups()
        if key in fields:
            raise ParseError(f"{key} given twice in spec {text!r}")
        fields[key] = value
    for key in ("n", "k0", "k1"):
        if not fields.get(key):
            raise ParseError(f"spec {text!r} is missing {key}")
    n, k0, k1 = int(fields["n"]), int(fields["k0"]), int(fields["k1"])
    check_type(n, k0, k1)
    r = n - k0 - k1
    shapes = {"T": (k0, k1), "U": (k0, r), "V": (k1, r)}
    matrices = {}
    for name, (rows, cols) in shapes.items():
        text_bits = fields.get(name)
        if text_bits is None:
            if rows * cols:
                raise ParseError(f"spec {text!r} is missing {name} ({rows}x{cols})")
            text_bits = ""
        matrices[name] = BitMatrix.parse(text_bits, rows, cols)
    return GeneratorSpec(n, k0, k1, **matrices)


def format_spec_text(spec):
    return f"n={spec.n} k0={spec.k0} k1={spec.k1} T={spec.T} U={spec.U} V={spec.V}"


# --- Generator matrices ---
@dataclass(frozen=True)
class EMatrix:
    n: int
    rows: tuple

    def packed_rows(self):
        return [words.pack(row) for row in self.rows]

    def __str__(self):
        return "\n".join(str(row) for row in self.rows)


def _lift(mask, n, element):
    return EWord(tuple(element if mask >> i & 1 else RingElement.ZERO for i in range(n)))


def build_generator(spec):
    """The 2k0 + k1 rows: a-block, b-block, c-block."""
    residue = spec.residue_rows()
    rows = [_lift(m, spec.n, RingElement.A) for m in residue]
    rows += [_lift(m, spec.n, RingElement.B) for m in residue]
    rows += [_lift(m, spec.n, RingElement.C) for m in spec.torsion_rows()]
    return EMatrix(spec.n, tuple(rows))


def build_compact_generator(spec):
    """The k0 + k1 module generators a(I | T | U) and c(0 | I | V)."""
    rows = [_lift(m, spec.n, RingElement.A) for m in spec.residue_rows()]
    rows += [_lift(m, spec.n, RingElement.C) for m in spec.torsion_rows()]
    return EMatrix(spec.n, tuple(rows))


def packed_generator_rows(spec):
    """Packed rows of `build_generator(spec)` without building EWords."""
    n = spec.n
    residue = spec.residue_rows()
    return ([m for m in residue]                       # a: tau bits only
            + [m | m << n for m in residue]            # b: tau and c bits
            + [m << n for m in spec.torsion_rows()])   # c: c bits only


def check_dense(n, generator_count):
    """Refuse spans that would not fit in memory as a packed array."""
    if n > DENSE_LENGTH_LIMIT:
        raise LengthTooLarge(f"codes are materialized only for n <= {DENSE_LENGTH_LIMIT}, got n={n}")
    if 1 << generator_count > SPAN_SIZE_CAP:
        raise LengthTooLarge(f"span of {generator_count} generators exceeds {SPAN_SIZE_CAP} words")


def span_packed(generators):
    """All Z2-combinations of packed generators (duplicates kept if dependent)."""
    out = np.zeros(1, dtype=np.uint64)
    for g in generators:
        out = np.concatenate((out, out ^ np.uint64(g)))
    return out


# --- Codes ---
class Code:
    """A Z2-linear set of words of length n, held as a sorted array of packed words."""

    def __init__(self, n, packed, spec=None, generators=None):
        self.n = n
        self.words = np.unique(np.asarray(packed, dtype=np.uint64))
        self.spec = spec
        if generators is None:
            generators = words.gf2_basis(self.words, 2 * n)
        self.generators = tuple(int(g) for g in generators)

    @classmethod
    def from_words(cls, items, n=None):
        """Ad-hoc code from EWords or word strings; must be additively closed."""
        parsed = [EWord.parse(w) if isinstance(w, str) else w for w in items]
        if not parsed:
            raise NotLinear("a code needs at least the zero word")
        n = parsed[0].n if n is None else n
        for w in parsed:
            words._check_lengths(n, w.n)
        packed = np.unique(np.array([words.pack(w) for w in parsed], dtype=np.uint64))
        basis = words.gf2_basis(packed, 2 * n)
        if len(packed) != 1 << len(basis):
            raise NotLinear(f"{len(packed)} words are not closed under addition")
        return cls(n, packed, generators=basis)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return (words.unpack(w, self.n) for w in self.words)

    def __contains__(self, word):
        if isinstance(word, str):
            word = EWord.parse(word)
        if word.n != self.n:
            return False
        value = np.uint64(words.pack(word))
        i = np.searchsorted(self.words, value)
        return bool(i < len(self.words) and self.words[i] == value)

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.words, other.words)

    def __hash__(self):
        return hash((self.n, self.words.tobytes()))

    def issubset(self, other):
        return self.n == other.n and bool(np.isin(self.words, other.words).all())

    def word_strings(self):
        return [str(w) for w in self]

    def __repr__(self):
        return f"Code(n={self.n}, size={len(self)})"


def span(G, spec=None):
    """Z2-span of the rows of G."""
    packed = G.packed_rows()
    check_dense(G.n, len(packed))
    code = Code(G.n, span_packed(packed), spec=spec, generators=packed)
    if spec is not None and len(code) != spec.size:
        raise AssertionError(f"span of {format_spec_text(spec)} has {len(code)} words, expected {spec.size}")
    return code


def code_from_spec(spec):
    n = spec.n
    packed = packed_generator_rows(spec)
    check_dense(n, len(packed))
    code = Code(n, span_packed(packed), spec=spec, generators=packed)
    if len(code) != spec.size:
        raise AssertionError(f"span of {format_spec_text(spec)} has {len(code)} words, expected {spec.size}")
    return code


def left_submodule(G):
    """Closure of the rows of G under addition and left multiplication by E."""
    generators = []
    for row in G.rows:
        generators.append(words.pack(row))
        generators += [words.pack(words.scalar_mul(words.Side.LEFT, s, row)) for s in RingElement]
    basis = words.gf2_basis(generators, 2 * G.n)
    check_dense(G.n, len(basis))
    return Code(G.n, span_packed(basis), generators=basis)
