from fractions import Fraction

import pytest

from sysamds.core import (
    BinaryCode,
    Codeword,
    DistributionReport,
    distance,
    distance_distribution,
    extend_parity,
    is_linear,
    min_distance,
    overlap,
    puncture_last,
    translate,
    weight,
    weight_distribution,
)
from sysamds.fileio import span_from_rows

W = Codeword.from_string

EXAMPLE_A = BinaryCode.from_strings(["00000", "11001", "00111"])
EXAMPLE_B = BinaryCode.from_strings(["00000", "10011", "11001"])
HAMMING = span_from_rows(7, [0b1000110, 0b0100101, 0b0010011, 0b0001111])
FIVE_THREE = span_from_rows(5, [0b01011, 0b10101])


def test_weight():
    assert weight(W("00000")) == 0
    assert weight(W("11001")) == 3
    assert weight(W("1111111")) == 7


def test_distance():
    assert distance(W("11001"), W("00111")) == 4
    assert distance(W("10011"), W("11001")) == 2
    v = W("10110")
    assert distance(v, v) == 0
    with pytest.raises(ValueError):
        distance(W("101"), W("1010"))


def test_overlap():
    assert overlap(W("11001"), W("00111")) == 1
    assert overlap(W("11001"), W("11001")) == 3


def test_min_distance():
    assert min_distance(EXAMPLE_A) == 3
    assert min_distance(EXAMPLE_B) == 2
    assert min_distance(BinaryCode.full_space(3)) == 1
    with pytest.raises(ValueError):
        min_distance(BinaryCode.from_ints(4, [0b1010]))


def test_weight_distribution():
    assert weight_distribution(HAMMING) == (1, 0, 0, 7, 7, 0, 0, 1)
    assert weight_distribution(EXAMPLE_A) == (1, 0, 0, 2, 0, 0)
    assert weight_distribution(FIVE_THREE) == (1, 0, 0, 2, 1, 0)
    shifted = translate(EXAMPLE_A, W("11001"))
    assert not shifted.contains_zero
    with pytest.raises(ValueError):
        weight_distribution(shifted)


def test_distance_distribution():
    b = distance_distribution(EXAMPLE_A)
    assert b[0] == 1
    assert b[3] == Fraction(4, 3)
    assert b[4] == Fraction(2, 3)
    assert sum(b) == EXAMPLE_A.size
    # linear codes: distance distribution equals weight distribution
    for code in (HAMMING, FIVE_THREE):
        assert distance_distribution(code) == tuple(
            Fraction(w) for w in weight_distribution(code)
        )


def test_is_linear():
    assert not is_linear(EXAMPLE_A)
    assert is_linear(HAMMING)
    assert is_linear(FIVE_THREE)
    assert is_linear(BinaryCode.from_strings(["0000", "1011"]))


def test_translate():
    zero = W("00000")
    assert translate(EXAMPLE_A, zero) == EXAMPLE_A
    assert translate(BinaryCode.from_strings(["10", "11"]), W("10")) == BinaryCode.from_strings(
        ["00", "01"]
    )
    for code in (EXAMPLE_A, EXAMPLE_B):
        for t in (W("10101"), W("11111")):
            assert min_distance(translate(code, t)) == min_distance(code)
    with pytest.raises(ValueError):
        translate(EXAMPLE_A, W("10"))


def test_puncture_last():
    extended = extend_parity(HAMMING)
    punctured = puncture_last(extended)
    assert punctured == HAMMING
    assert puncture_last(BinaryCode.from_strings(["00", "01"])) == BinaryCode.from_strings(["0"])
    six = span_from_rows(6, [0b001011, 0b010101, 0b100110])
    assert puncture_last(six).size == 8
    with pytest.raises(ValueError):
        puncture_last(BinaryCode.from_strings(["0", "1"]))


def test_extend_parity():
    extended = extend_parity(FIVE_THREE)
    assert extended.length == 6
    assert extended.size == 4
    assert min_distance(extended) == 4
    assert extend_parity(BinaryCode.from_ints(4, [0])) == BinaryCode.from_ints(5, [0])
    big = extend_parity(HAMMING)
    assert weight_distribution(big) == (1, 0, 0, 0, 14, 0, 0, 0, 1)
    assert min_distance(big) == 4


def test_codeword_validation():
    with pytest.raises(ValueError):
        Codeword(0, 0)
    with pytest.raises(ValueError):
        Codeword(3, 0b1000)
    with pytest.raises(ValueError):
        Codeword.from_string("012")
    assert str(W("0101")) == "0101"
    assert W("0101").bit(0) == 0
    assert W("0101").bit(1) == 1


def test_code_normalization():
    code = BinaryCode.from_strings(["11", "01", "11"])
    assert code.word_ints == (0b01, 0b11)
    with pytest.raises(ValueError):
        BinaryCode.from_strings(["01", "001"])
    with pytest.raises(ValueError):
        BinaryCode(3, ())
    assert W("01") in code
    assert W("10") not in code


def test_distribution_report():
    report = DistributionReport.of(EXAMPLE_A)
    assert report.weight_distribution == (1, 0, 0, 2, 0, 0)
    assert report.distance_distribution[0] == 1
    shifted = translate(EXAMPLE_A, W("11001"))
    assert DistributionReport.of(shifted).weight_distribution is None
