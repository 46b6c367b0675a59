from fractions import Fraction

import pytest

import cobasis


def test_reference_zernike_matrix():
    m = cobasis.matrix("zernike:desc", "monomial", n=9, m=3)
    assert m == [
        ["1", "-4", "10", "-20"],
        ["0", "5", "-30", "105"],
        ["0", "0", "21", "-168"],
        ["0", "0", "0", "84"],
    ]


def test_matrix_and_inverse_multiply_to_identity():
    a = cobasis.to_fractions(cobasis.matrix("bernstein:asc", "laguerre@+0", n=6, m=2))
    b = cobasis.to_fractions(cobasis.matrix("laguerre@+0", "bernstein:asc", n=6, m=2))
    size = len(a)
    product = [[sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
    assert product == [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def test_convert_reference_representations():
    p = "16x^7-12x^5+5x^4+3x^2"
    [asc] = cobasis.convert(p, "bernstein:asc")
    assert asc["coords"] == ["1/7", "3/7", "1", "11/7", "6/7", "12"]
    parts = cobasis.convert(p, "zernike:asc")
    assert [part["coords"] for part in parts] == [["-1", "9"], ["2", "2"]]
    [desc] = cobasis.convert("x^6", "bernstein:desc", n=6, m=3)
    assert desc["coords"] == ["1", "-3/4", "3/10", "-1/20"]


def test_round_trip_through_basis():
    [v] = cobasis.convert("x^3 - 2x + 1/2", "laguerre", n=3, m=0)
    text = cobasis.reconstruct("laguerre", 0, 3, v["coords"])
    assert cobasis.parse_polynomial(text) == cobasis.parse_polynomial("x^3 - 2x + 1/2")


def test_errors_are_value_errors():
    with pytest.raises(ValueError, match="zero polynomial"):
        cobasis.convert("0", "bernstein")
    with pytest.raises(ValueError, match="incompatible spans"):
        cobasis.matrix("bernstein:asc", "zernike", n=4)
    with pytest.raises(ValueError):
        cobasis.matrix("nonsense", "x", n=3)


def test_verification_entry_points():
    assert all(passed for _, passed, _ in cobasis.fixtures())
    windows, failures, messages = cobasis.oracle_sweep(5)
    assert windows > 0 and failures == 0 and messages == []
    laws = cobasis.verify_groupoid(["x", "b:desc", "r:asc:alt"], 1, 6)
    assert laws and all(passed for _, passed, _ in laws)


def test_case_studies():
    assert cobasis.lb_matrix(1) == [["1", "-1"], ["1", "1"]]
    assert cobasis.lb_element(5, 1, 1) == "-3/5"
    assert [cobasis.alqudah_coeff(2, k) for k in range(3)] == ["3", "-5", "3"]
