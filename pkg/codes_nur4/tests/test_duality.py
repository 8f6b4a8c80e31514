from itertools import product

import pytest

from scripts import duality, genmat, ring_core, words
from scripts.errors import LengthTooLarge
from scripts.genmat import Code


def strings(code):
    return sorted(code.word_strings())


def all_words(n):
    return ["".join(t) for t in product("0abc", repeat=n)]


def test_duals_of_the_whole_ring(full_ring_code):
    assert strings(duality.left_dual(full_ring_code)) == ["0"]
    assert strings(duality.right_dual(full_ring_code)) == ["0", "c"]
    report = duality.nice_report(full_ring_code)
    assert report.sizes[:3] == (4, 1, 2)
    assert not report.right_nice
    assert not duality.is_self_dual(full_ring_code)


def test_duals_of_diagonal_code(diagonal_code):
    assert strings(duality.left_dual(diagonal_code)) == sorted(["00", "aa", "bb", "cc"])
    right = duality.right_dual(diagonal_code)
    expected = [w for w in all_words(2) if ring_core.tau(ring_core.RingElement.from_symbol(w[0]))
                == ring_core.tau(ring_core.RingElement.from_symbol(w[1]))]
    assert strings(right) == sorted(expected)
    assert len(right) == 8


def test_duals_of_torsion_pair_code(torsion_pair_code):
    assert len(duality.left_dual(torsion_pair_code)) == 16
    assert len(duality.right_dual(torsion_pair_code)) == 8


def test_nice_report_examples(diagonal_code, torsion_pair_code):
    report = duality.nice_report(diagonal_code)
    assert report.left_nice and not report.right_nice and not report.both_nice
    assert report.intersection_nice
    assert report.to_dict() == {"left_nice": True, "right_nice": False, "both_nice": False,
                                "intersection_nice": True, "sizes": [4, 4, 8, 4]}
    assert report.flag("left") and not report.flag(duality.NicePolicy.BOTH)
    assert not duality.nice_report(torsion_pair_code).left_nice


def test_self_orthogonality_family(full_ring_code, diagonal_code, torsion_pair_code):
    assert duality.is_self_orthogonal(torsion_pair_code)
    assert duality.is_self_orthogonal(diagonal_code)
    assert not duality.is_self_orthogonal(full_ring_code)
    assert duality.is_qsd(diagonal_code)
    assert not duality.is_qsd(torsion_pair_code)
    assert not duality.is_qsd(full_ring_code)
    assert duality.is_type_iv(diagonal_code)
    assert duality.is_quasi_type_iv(diagonal_code)
    assert not duality.is_type_iv(torsion_pair_code)
    assert not duality.is_type_iv(full_ring_code)


def test_self_duality(diagonal_code, torsion_pair_code):
    assert duality.is_left_self_dual(diagonal_code)
    assert not duality.is_right_self_dual(diagonal_code)
    assert not duality.is_self_dual(diagonal_code)
    assert not duality.is_self_dual(torsion_pair_code)


def test_dual_pair_intersection(diagonal_code):
    pair = duality.dual_pair(diagonal_code)
    assert pair.intersection == Code(2, [w for w in pair.left.words if w in pair.right.words])
    assert pair.intersection.issubset(pair.left) and pair.intersection.issubset(pair.right)


def test_guard():
    code = Code(13, [0])
    with pytest.raises(LengthTooLarge):
        duality.left_dual(code)
    with pytest.raises(LengthTooLarge):
        duality.nice_report(code)


def _check_against_brute_force(code):
    assert duality.left_dual(code) == duality.left_dual_brute_force(code)
    assert duality.right_dual(code) == duality.right_dual_brute_force(code)


@pytest.mark.parametrize("n", range(2, 5))
def test_duals_match_brute_force_exhaustive(n):
    for k0, k1 in genmat.valid_types(n):
        for s in genmat.enumerate_specs(n, k0, k1):
            _check_against_brute_force(genmat.code_from_spec(s))


def test_duals_match_brute_force_sampled(rng):
    for k0, k1 in genmat.valid_types(5):
        for s in genmat.sample_specs(5, k0, k1, 40, rng):
            _check_against_brute_force(genmat.code_from_spec(s))


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_duals_match_brute_force_at_scale(n, rng):
    for k0, k1 in genmat.valid_types(n):
        for s in genmat.sample_specs(n, k0, k1, 500, rng):
            _check_against_brute_force(genmat.code_from_spec(s))


def test_duals_are_closed_submodules(rng):
    for s in genmat.sample_specs(4, 1, 1, 8, rng):
        code = genmat.code_from_spec(s)
        left, right = duality.left_dual(code), duality.right_dual(code)
        for dual, side in ((left, words.Side.LEFT), (right, words.Side.RIGHT)):
            assert dual.words[0] == 0
            assert len(dual) == 1 << words.gf2_rank(dual.words, 2 * dual.n)
            for v in list(dual)[:16]:
                for r in ring_core.elements():
                    assert words.scalar_mul(side, r, v) in dual


def test_left_dual_is_antitone(rng):
    for s in genmat.sample_specs(4, 2, 1, 10, rng):
        big = genmat.code_from_spec(s)
        small = Code(4, genmat.span_packed(genmat.packed_generator_rows(s)[:2]))
        assert small.issubset(big)
        assert duality.left_dual(big).issubset(duality.left_dual(small))


def test_self_orthogonal_matches_containment(rng):
    for n in (2, 3, 4):
        for k0, k1 in genmat.valid_types(n):
            for s in genmat.sample_specs(n, k0, k1, 10, rng):
                code = genmat.code_from_spec(s)
                pair = duality.dual_pair(code)
                assert duality.is_self_orthogonal(code) == code.issubset(pair.intersection)


def test_nice_flags_by_type():
    for k0, k1 in genmat.valid_types(4):
        for s in genmat.enumerate_specs(4, k0, k1):
            report = duality.nice_report(genmat.code_from_spec(s))
            assert report.left_nice == (k1 == 0)
            assert report.right_nice == (k0 == 0)
            assert report.intersection_nice
