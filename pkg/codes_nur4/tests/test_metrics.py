import pytest

from scripts import genmat, metrics
from scripts.errors import NotLinear, TooFewCodewords
from scripts.metrics import BinaryCode, CompleteWeightEnumerator
from scripts.words import BitWord


def binary(*texts):
    items = [BitWord.parse(t) for t in texts]
    return BinaryCode(items[0].n, frozenset(w.bits for w in items))


def test_min_distance_examples(diagonal_code, torsion_pair_code):
    assert metrics.min_distance(diagonal_code) == 2
    assert metrics.min_distance(torsion_pair_code) == 2
    code = genmat.code_from_spec(genmat.parse_spec_text("n=3 k0=1 k1=1 T=1 U=1 V=1"))
    assert metrics.min_distance(code) == 1
    assert metrics.code_parameters(diagonal_code) == (2, 4, 2)


def test_min_distance_needs_two_codewords():
    zero = genmat.Code.from_words(["000"])
    with pytest.raises(TooFewCodewords):
        metrics.min_distance(zero)
    with pytest.raises(TooFewCodewords):
        metrics.pairwise_min_distance(zero)


@pytest.mark.parametrize("n", range(2, 5))
def test_min_weight_equals_pairwise_distance_exhaustive(n):
    for k0, k1 in genmat.valid_types(n):
        for s in genmat.enumerate_specs(n, k0, k1):
            code = genmat.code_from_spec(s)
            assert metrics.min_distance(code) == metrics.pairwise_min_distance(code)


def test_min_weight_equals_pairwise_distance_sampled(rng):
    for n in (5, 6):
        for k0, k1 in genmat.valid_types(n):
            for s in genmat.sample_specs(n, k0, k1, 25, rng):
                code = genmat.code_from_spec(s)
                assert metrics.min_distance(code) == metrics.pairwise_min_distance(code)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6, 7])
def test_min_weight_equals_pairwise_distance_at_scale(n, rng):
    for k0, k1 in genmat.valid_types(n):
        for s in genmat.sample_specs(n, k0, k1, 1000, rng):
            code = genmat.code_from_spec(s)
            assert metrics.min_distance(code) == metrics.pairwise_min_distance(code), genmat.format_spec_text(s)


def test_weight_enumerators(full_ring_code, diagonal_code, torsion_pair_code):
    assert metrics.weight_enumerator(diagonal_code).coefficients == (1, 0, 3)
    assert metrics.weight_enumerator(diagonal_code).polynomial() == "1+3z^2"
    assert metrics.weight_enumerator(torsion_pair_code).polynomial() == "1+z^2"
    assert metrics.weight_enumerator(full_ring_code).polynomial() == "1+3z"
    assert metrics.weight_enumerator(diagonal_code).pairs() == [[0, 1], [2, 3]]


def test_complete_weight_enumerators(full_ring_code, diagonal_code):
    cwe = metrics.complete_weight_enumerator(diagonal_code)
    assert cwe.as_dict() == {(2, 0, 0, 0): 1, (0, 2, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): 1}
    assert cwe.polynomial() == "X0^2+Xa^2+Xb^2+Xc^2"
    assert metrics.complete_weight_enumerator(full_ring_code).polynomial() == "X0+Xa+Xb+Xc"
    assert cwe.records()[0] == {"n0": 0, "na": 0, "nb": 0, "nc": 2, "count": 1}


def test_cwe_polynomial_collects_counts():
    cwe = CompleteWeightEnumerator((((1, 1, 0, 0), 2), ((2, 0, 0, 0), 1)))
    assert cwe.polynomial() == "X0^2+2*X0*Xa"


def test_enumerator_identities(rng):
    for n in (3, 4, 5):
        for k0, k1 in genmat.valid_types(n):
            for s in genmat.sample_specs(n, k0, k1, 10, rng):
                code = genmat.code_from_spec(s)
                we = metrics.weight_enumerator(code)
                cwe = metrics.complete_weight_enumerator(code)
                assert sum(we.coefficients) == len(code)
                assert we.coefficients[0] == 1
                assert sum(count for _, count in cwe.terms) == len(code)
                assert all(sum(key) == n for key, _ in cwe.terms)
                assert cwe.specialize() == we


def test_residue_and_torsion_examples(full_ring_code, diagonal_code, torsion_pair_code):
    assert metrics.residue_code(diagonal_code) == binary("00", "11")
    assert metrics.residue_code(torsion_pair_code) == binary("00")
    assert metrics.torsion_code(torsion_pair_code) == binary("00", "11")
    assert metrics.torsion_code(diagonal_code) == binary("00", "11")
    assert metrics.torsion_code(full_ring_code) == binary("0", "1")
    assert binary("00", "11").bit_words() == [BitWord.parse("00"), BitWord.parse("11")]
    assert BitWord.parse("11") in binary("00", "11")


@pytest.mark.parametrize("n", range(2, 6))
def test_residue_and_torsion_dimensions(n):
    for k0, k1 in genmat.valid_types(n):
        for s in genmat.enumerate_specs(n, k0, k1):
            code = genmat.code_from_spec(s)
            res, tor = metrics.residue_code(code), metrics.torsion_code(code)
            assert metrics.binary_dimension(res) == k0
            assert metrics.binary_dimension(tor) == k0 + k1
            assert res.issubset(tor)


def test_binary_dimension():
    assert metrics.binary_dimension(binary("00")) == 0
    assert metrics.binary_dimension(binary("00", "11")) == 1
    assert metrics.binary_dimension(binary("00", "01", "10", "11")) == 2
    with pytest.raises(NotLinear):
        metrics.binary_dimension(binary("00", "01", "10"))
    with pytest.raises(NotLinear):
        metrics.binary_dimension(BinaryCode(2, frozenset()))


def test_is_free(diagonal_code, torsion_pair_code):
    assert metrics.is_free(diagonal_code)
    assert not metrics.is_free(torsion_pair_code)
    assert metrics.torsion_code(diagonal_code).is_even
