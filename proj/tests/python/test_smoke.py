import pytest

import qparikh


def test_qbinom():
    assert qparikh.qbinom("abaaba", "ba") == [1, 0, 0, 1, 0, 1, 1]
    assert qparikh.evaluate(qparikh.qbinom("abaaba", "ba"), 1) == 4
    assert qparikh.qbinom("0110", "01") == qparikh.qbinom_oracle("0110", "01")
    assert qparikh.qbinom("0110", "") == [1]
    assert qparikh.subword_count("0110", "01") == 2


def test_big_coefficients_are_python_ints():
    c = qparikh.subword_count("a" * 200, "a" * 100)
    assert c > 2**64
    assert c == __import__("math").comb(200, 100)


def test_parikh():
    z, u = "12231", "1212312"
    m = qparikh.parikh_matrix(z, u)
    assert len(m) == 6
    assert m == qparikh.parikh_matrix(z, u, closed=True)
    assert m[0][5] == [0] * 17 + [1]
    assert qparikh.reverse_duality_check("123", "23112311")
    inv = qparikh.parikh_inverse("123", "23112311")
    assert inv == qparikh.parikh_inverse("123", "23112311", method="exact")
    assert qparikh.cancellation_identity("abc", "cabbca") == []
    assert qparikh.cauchy_minor("ababba", "b", "b", "a") == [0] * 10 + [1, 0, 1, 1]


def test_series():
    digits = "00101101211211412313324323525505635534844655764765957847"
    assert qparikh.series_coefficients("thue-morse", "00", 55) == [int(d) for d in digits]
    cf = qparikh.periodic_closed_form("0110", "01")
    assert [t["multiple"] for t in cf["terms"]] == [1, 2]
    assert qparikh.closed_form_eval("0110", "01", 3) == qparikh.qbinom("011001100110", "01")
    relation, terms = qparikh.recurrence_integer("0110", "01")
    assert relation == [3, -3, 1]
    assert terms[:5] == [0, 2, 8, 18, 32]
    assert qparikh.coefficient_recurrence("0110", "01")["coeffs"] == [2, -3, 4, -4, 4, -4, 4, -3, 2, -1]
    assert qparikh.vanishing_residues("0110", "01")["vanishing"] == {2}
    assert abs(qparikh.growth_fit("0110", "01", 0) - 1.0) <= 0.15


def test_morphism():
    assert qparikh.sigma_z("121323") == {"1": "13", "2": "25", "3": "46"}
    assert qparikh.check_canonical_reduction("121323", "1121323")


def test_errors():
    with pytest.raises(qparikh.QParikhError, match="AllZeroClass"):
        qparikh.growth_fit("0110", "01", 2)
    with pytest.raises(ValueError):
        qparikh.qbinom("01x", "0")


def test_verify_and_cli():
    results = qparikh.verify(seed=3)
    assert all(passed for _, passed, _, _ in results)
    assert qparikh.run_cli(["qbinom", "0110", "01"]) == (0, "q^4+q^3\n", "")
    assert qparikh.run_cli(["bogus"])[0] == 2
