import pytest

import waring


def test_generic_rank():
    r = waring.generic_k_rank(2, 3, 2)
    assert r["value"] == 3
    assert r["status"] == "proven"
    assert waring.generic_k_rank(3, 2, 1)["exceptional"]


def test_series_and_thresholds():
    assert waring.froeberg_series(2, [2, 2], 4) == [1, 2, 1, 0, 0]
    s = waring.si_thresholds(3, 3, 4)
    assert all(a >= b for a, b in zip(s, s[1:]))
    assert isinstance(waring.secant_codim(2, 3, 2, 1), int)


def test_sylvester_round_trip():
    cert = waring.sylvester("2*x^5 + 5*x^4*y + 10*x^3*y^2 + 10*x^2*y^3 + 5*x*y^4 + 2*y^5")
    assert cert["length"] == 3
    assert waring.verify(cert)["ok"]
    cert["terms"][0]["lambda"] = "12345"
    assert not waring.verify(cert)["ok"]


def test_three_cubes():
    cert = waring.three_cubes("x^6 + 3*x^5*y - 3*x^4*y^2 - 11*x^3*y^3 + 9*x^2*y^4 + 21*x*y^5 - y^6")
    assert len(cert["terms"]) <= 3
    assert cert["residual"] == "0"
    check = waring.verify(cert)
    assert check["ok"] and check["exact"]


def test_canonical_and_monomial():
    assert waring.verify(waring.canonical_form("x^6 - 2*x^5*y + x^3*y^3 + 4*y^6", 2, 3))["ok"]
    m = waring.monomial_factor([3, 10, 11], 4)
    assert waring.verify(m)["ok"]


def test_krank_bound():
    doc = waring.krank_bound("x^6*y^2 - x^3*y^5 + x^2*y^6 - x*y^7", 4, samples=50)
    assert doc["upper"] == 4
    assert waring.verify(doc)["ok"]


def test_errors():
    with pytest.raises(waring.ParseError):
        waring.sylvester("x^^2")
    with pytest.raises(waring.PreconditionError):
        waring.three_cubes("x^4*y")
    with pytest.raises(waring.WaringError):
        waring.sylvester("0")


def test_cli_in_process():
    code, out, _ = waring.run_cli(["rank", "codim", "--n", "2", "--k", "3", "--d", "2", "--s", "1"])
    assert code == 0 and out.strip() == "3"
