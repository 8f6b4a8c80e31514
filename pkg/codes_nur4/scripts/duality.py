"""Left and right duals, niceness, self-orthogonality and the QSD family.

<u, v> = sum_i u_i v_i, and x * y is x when tau(y) = 1 and 0 otherwise. A
constraint <v, u> = 0 (left dual) therefore splits into independent conditions
on the tau pattern and on the c-coordinate pattern of v, and <u, v> = 0 (right
dual) only involves the tau pattern of v. Duals are computed fiber by fiber:
the admissible tau patterns first, then their admissible lifts.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from scripts import words
from scripts.config import DUAL_LENGTH_GUARD
from scripts.errors import LengthTooLarge
from scripts.genmat import Code
from scripts.metrics import torsion_code

logger = logging.getLogger(__name__)


class NicePolicy(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"
    INTERSECTION = "intersection"


@dataclass(frozen=True)
class FiberProduct:
    """The word set {tau pattern in `tau_patterns`} x {c pattern in `c_patterns`}."""
    n: int
    tau_patterns: np.ndarray
    c_patterns: np.ndarray

    def __len__(self):
        return len(self.tau_patterns) * len(self.c_patterns)

    def __and__(self, other):
        return FiberProduct(self.n,
                            np.intersect1d(self.tau_patterns, other.tau_patterns),
                            np.intersect1d(self.c_patterns, other.c_patterns))

    def to_code(self):
        packed = (self.tau_patterns[:, None] | (self.c_patterns[None, :] << np.uint64(self.n))).ravel()
        generators = (words.gf2_basis(self.tau_patterns, self.n)
                      + tuple(c << self.n for c in words.gf2_basis(self.c_patterns, self.n)))
        return Code(self.n, packed, generators=generators)


@dataclass(frozen=True)
class DualPair:
    left: Code
    right: Code
    intersection: Code


@dataclass(frozen=True)
class NiceReport:
    left_nice: bool
    right_nice: bool
    both_nice: bool
    intersection_nice: bool
    sizes: tuple   # (|C|, |C^L|, |C^R|, |C^L n C^R|)

    def flag(self, policy):
        return getattr(self, f"{NicePolicy(policy).value}_nice")

    def to_dict(self):
        return {
            "left_nice": self.left_nice,
            "right_nice": self.right_nice,
            "both_nice": self.both_nice,
            "intersection_nice": self.intersection_nice,
            "sizes": list(self.sizes),
        }


def _check_guard(n):
    if n > DUAL_LENGTH_GUARD:
        raise LengthTooLarge(f"dual scans are limited to n <= {DUAL_LENGTH_GUARD}, got n={n}")


def _orthogonal_patterns(n, masks):
    """Binary patterns p of length n with <p, m> = 0 over F2 for every mask m."""
    patterns = np.arange(1 << n, dtype=np.uint64)
    keep = np.ones(len(patterns), dtype=bool)
    for m in set(masks):
        if m:
            keep &= words.parity(patterns & np.uint64(m)) == 0
    return patterns[keep]


def _all_patterns(n):
    return np.arange(1 << n, dtype=np.uint64)


def left_dual_fibers(code):
    _check_guard(code.n)
    tau_masks = [g & words.low_mask(code.n) for g in code.generators]
    allowed = _orthogonal_patterns(code.n, tau_masks)
    return FiberProduct(code.n, allowed, allowed)


def right_dual_fibers(code):
    _check_guard(code.n)
    masks = []
    for g in code.generators:
        masks += words.split_packed(g, code.n)
    return FiberProduct(code.n, _orthogonal_patterns(code.n, masks), _all_patterns(code.n))


def left_dual(code):
    """{v : <v, u> = 0 for all u in C}."""
    return left_dual_fibers(code).to_code()


def right_dual(code):
    """{v : <u, v> = 0 for all u in C}."""
    return right_dual_fibers(code).to_code()


def dual_pair(code):
    left, right = left_dual_fibers(code), right_dual_fibers(code)
    return DualPair(left.to_code(), right.to_code(), (left & right).to_code())


# --- Brute-force oracles: every word of E^n against every codeword ---
def _all_words(n):
    return np.arange(1 << 2 * n, dtype=np.uint64)


def _inner_products(xs, ys, n):
    """Packed <x, y> for every pair, as an (len(xs), len(ys)) array."""
    low = np.uint64(words.low_mask(n))
    x_tau, x_c = xs[:, None] & low, xs[:, None] >> np.uint64(n)
    y_tau = ys[None, :] & low
    return words.parity(x_tau & y_tau) | words.parity(x_c & y_tau) << np.uint64(1)


def _brute_force(code, left, chunk=1024):
    _check_guard(code.n)
    candidates = _all_words(code.n)
    keep = np.empty(len(candidates), dtype=bool)
    for start in range(0, len(candidates), chunk):
        block = candidates[start:start + chunk]
        products = (_inner_products(block, code.words, code.n) if left
                    else _inner_products(code.words, block, code.n).T)
        keep[start:start + chunk] = (products == 0).all(axis=1)
    return Code(code.n, candidates[keep])


def left_dual_brute_force(code):
    return _brute_force(code, left=True)


def right_dual_brute_force(code):
    return _brute_force(code, left=False)


# --- Niceness ---
def nice_report(code):
    left, right = left_dual_fibers(code), right_dual_fibers(code)
    target = 4 ** code.n
    sizes = (len(code), len(left), len(right), len(left & right))
    left_nice = sizes[0] * sizes[1] == target
    right_nice = sizes[0] * sizes[2] == target
    return NiceReport(
        left_nice=left_nice,
        right_nice=right_nice,
        both_nice=left_nice and right_nice,
        intersection_nice=sizes[0] * sizes[3] == target,
        sizes=sizes,
    )


# --- Self-orthogonality and friends ---
def is_self_orthogonal(code):
    """<u, v> = 0 for all u, v in C; by biadditivity the generators suffice."""
    n = code.n
    gens = code.generators
    return all(words.packed_inner_product(u, v, n) == 0 for u in gens for v in gens)


def is_qsd(code):
    return len(code) == 2 ** code.n and is_self_orthogonal(code)


def is_type_iv(code):
    return is_qsd(code) and bool((words.packed_weights(code.words, code.n) % 2 == 0).all())


def is_quasi_type_iv(code):
    """QSD with an even torsion code."""
    return is_qsd(code) and torsion_code(code).is_even


def is_left_self_dual(code):
    return code == left_dual(code)


def is_right_self_dual(code):
    return code == right_dual(code)


def is_self_dual(code):
    _check_guard(code.n)
    left, right = left_dual_fibers(code), right_dual_fibers(code)
    if len(left) != len(code) or len(right) != len(code):
        return False
    return code == left.to_code() and code == right.to_code()
