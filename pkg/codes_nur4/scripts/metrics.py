"""Distance, weight enumerators, residue and torsion codes of a Code."""
from dataclasses import dataclass

import numpy as np

from scripts import words
from scripts.errors import NotLinear, TooFewCodewords
from scripts.words import BitWord

CWE_KEYS = ("n0", "na", "nb", "nc")


@dataclass(frozen=True)
class WeightEnumerator:
    """A_0 .. A_n; A_0 is kept (it is 1 for every linear code)."""
    coefficients: tuple

    @property
    def n(self):
        return len(self.coefficients) - 1

    def pairs(self):
        return [[i, a] for i, a in enumerate(self.coefficients) if a]

    def polynomial(self):
        terms = []
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                power = "z" if i == 1 else f"z^{i}"
                terms.append(power if a == 1 else f"{a}{power}")
        return "+".join(terms)


@dataclass(frozen=True)
class CompleteWeightEnumerator:
    """Map from symbol-count profile (n_0, n_a, n_b, n_c) to number of codewords."""
    terms: tuple   # sorted ((n0, na, nb, nc), count) pairs

    def as_dict(self):
        return dict(self.terms)

    def records(self):
        return [dict(zip(CWE_KEYS, key), count=count) for key, count in self.terms]

    def specialize(self):
        """X_0 -> 1 and X_a, X_b, X_c -> z, which gives the weight enumerator."""
        n = sum(self.terms[0][0]) if self.terms else 0
        coefficients = [0] * (n + 1)
        for (n0, _, _, _), count in self.terms:
            coefficients[n - n0] += count
        return WeightEnumerator(tuple(coefficients))

    def polynomial(self):
        parts = []
        for key, count in sorted(self.terms, key=lambda t: tuple(-x for x in t[0])):
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(("X0", "Xa", "Xb", "Xc"), key) if e)
            parts.append(monomial if count == 1 else f"{count}*{monomial}")
        return "+".join(parts)


@dataclass(frozen=True)
class BinaryCode:
    n: int
    words: frozenset   # position masks

    def __len__(self):
        return len(self.words)

    def __contains__(self, v):
        return (v.bits if isinstance(v, BitWord) else v) in self.words

    def issubset(self, other):
        return self.n == other.n and self.words <= other.words

    def bit_words(self):
        return [BitWord(m, self.n) for m in sorted(self.words)]

    @property
    def is_even(self):
        return all(m.bit_count() % 2 == 0 for m in self.words)


# --- Distance ---
def min_distance(code):
    """Minimum weight of a nonzero codeword (equal to d_min for additive codes)."""
    if len(code) < 2:
        raise TooFewCodewords(f"d_min needs at least two codewords, the code has {len(code)}")
    weights = words.packed_weights(code.words, code.n)
    return int(weights[weights > 0].min())


def pairwise_min_distance(code, chunk=256):
    """Minimum over all pairs u != v of d_H(u, v), starting from d_min = n."""
    if len(code) < 2:
        raise TooFewCodewords(f"d_min needs at least two codewords, the code has {len(code)}")
    values = code.words
    d_min = code.n
    for start in range(0, len(values), chunk):
        block = values[start:start + chunk]
        diffs = words.packed_weights(block[:, None] ^ values[None, :], code.n)
        diffs = diffs[diffs > 0]
        if diffs.size:
            d_min = min(d_min, int(diffs.min()))
    return d_min


def code_parameters(code):
    """(n, M, d_min), the C(n, M, d_min) notation."""
    return code.n, len(code), min_distance(code)


# --- Enumerators ---
def weight_enumerator(code):
    weights = words.packed_weights(code.words, code.n)
    return WeightEnumerator(tuple(int(a) for a in np.bincount(weights, minlength=code.n + 1)))


def symbol_profiles(code):
    """(n_0, n_a, n_b, n_c) for every codeword, as an (|C|, 4) array."""
    n = code.n
    low = np.uint64(words.low_mask(n))
    tau_bits = code.words & low
    c_bits = code.words >> np.uint64(n)
    na = np.bitwise_count(tau_bits & ~c_bits & low)
    nb = np.bitwise_count(tau_bits & c_bits)
    nc = np.bitwise_count(~tau_bits & c_bits & low)
    n0 = n - na - nb - nc
    return np.stack([n0, na, nb, nc], axis=1).astype(np.int64)


def complete_weight_enumerator(code):
    profiles, counts = np.unique(symbol_profiles(code), axis=0, return_counts=True)
    terms = tuple((tuple(int(x) for x in p), int(c)) for p, c in zip(profiles, counts))
    return CompleteWeightEnumerator(terms)


# --- Residue and torsion ---
def residue_code(code):
    tau_bits, _ = words.split_packed(code.words, code.n)
    return BinaryCode(code.n, frozenset(int(m) for m in tau_bits))


def torsion_code(code):
    """v such that the word with c on supp(v) lies in the code."""
    tau_bits, c_bits = words.split_packed(code.words, code.n)
    return BinaryCode(code.n, frozenset(int(m) for m in c_bits[tau_bits == 0]))


def binary_dimension(bc):
    size = len(bc)
    if size == 0:
        raise NotLinear("the empty set is not a linear code")
    rank = words.gf2_rank(sorted(bc.words), bc.n)
    if size != 1 << rank:
        raise NotLinear(f"{size} binary words are not closed under XOR")
    return rank


def is_free(code):
    """k1 = 0, i.e. |C| = 4^dim res(C)."""
    return len(code) == 4 ** binary_dimension(residue_code(code))
