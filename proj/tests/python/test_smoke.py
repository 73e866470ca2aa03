from fractions import Fraction

import pytest

qeslab = pytest.importorskip("qeslab")


def test_basis_dims():
    assert qeslab.basis_dim(3, 2) == 10
    assert qeslab.basis_dim(2, 2) == 6
    assert qeslab.basis_dim(1, 2) == 3
    assert qeslab.basis_dim(3, 1) == 4


def test_spectrum_fixtures():
    f1 = qeslab.spectrum("sphere", 1, 1, ["0", "0"], a="-5/8")
    assert [l["value"] for l in f1] == ["1/4", "-5/4"]
    f2 = qeslab.spectrum("sphere", 2, 1, ["0", "0", "0"], a="1/2")
    assert [l["value"] for l in f2] == ["-1/2", "-1", "-3/2"]


def test_es_point_multiplicities():
    got = {(l["value"], l["multiplicity"])
           for l in qeslab.spectrum("sphere", 2, 2, ["0", "0", "0"])}
    assert got == {("0", 1), ("-3/2", 2), ("-5", 3)}
    assert got == set(qeslab.es_spectrum(2, 2, "0"))


def test_irrational_lines_carry_intervals():
    lines = qeslab.spectrum("sphere", 1, 2, ["1/3", "1/5"], a="1/7")
    irr = [l for l in lines if not l["rational"]]
    assert irr
    for l in irr:
        assert Fraction(l["lo"]) <= Fraction(l["hi"])
        assert abs(float(Fraction(l["lo"])) - l["approx"]) < 1e-6


def test_verify_report_conclusive_and_deterministic():
    a = qeslab.verify("gauge", 2, 1, 42)
    b = qeslab.verify("gauge", 2, 1, 42)
    assert a == b
    r = qeslab.verify_report("closedforms", n=2, k=1, seed=5)
    assert all(i["status"] in ("pass", "deviation") for i in r["items"])
    assert any(i["id"] == "S34-N2-K1-EPM" and i["status"] == "deviation"
               for i in r["items"])


def test_verify_errors():
    with pytest.raises(ValueError):
        qeslab.verify("bogus", 2, 1, 0)


def test_separate_f2():
    chains = qeslab.separate(2, 1, ["0", "0", "0"], a="1/2")
    assert sorted(len(c["energies"]) for c in chains) == [1, 2]
    total = sum(len(c["energies"]) for c in chains)
    assert total == qeslab.basis_dim(2, 1)
    with pytest.raises(ValueError):
        qeslab.separate(1, 1, ["0", "0"], a="1")


def test_contract_order_two():
    probes = qeslab.contract(2, 1, ["1/3", "1/5"], "2", "3")
    cd = [Fraction(p["corrected_diff"]) for p in probes]
    assert all(x > y for x, y in zip(cd, cd[1:]))
    assert all(3 < x / y < 5 for x, y in zip(cd, cd[1:]))
