import cmath

import pytest

import localconst as lc


def test_w_of_chi_one_ninth():
    chi = lc.character("alpha=1/9", 3)
    assert chi.conductor == 2
    assert chi.order == 3
    assert lc.w(chi) == lc.CyclotomicNumber.root(9, 1)
    assert lc.w(chi, "closed") == lc.w(chi)
    assert lc.w_p(chi) == lc.RootOfUnity(9, 1)
    assert abs(complex(lc.w(chi)) - cmath.exp(2j * cmath.pi / 9)) < 1e-12


def test_cyclotomic_arithmetic():
    z3 = lc.CyclotomicNumber.root(3, 1)
    assert z3 + z3 ** 2 == lc.CyclotomicNumber.rational(-1)
    s = lc.sqrt_pstar(5)
    assert s * s == lc.CyclotomicNumber.rational(5)
    assert lc.CyclotomicNumber.from_json(s.to_json()) == s
    assert lc.hilbert_qp(-1, -1, 2) == -1


def test_record_and_errors():
    rec = lc.record("alpha=1/8", 2)
    assert rec["backends"]["agree"] is True
    assert rec["decomposition"]["wild"] == {"m": 8, "k": 1}
    with pytest.raises(ValueError):
        lc.character("alpha=1/10", 3)
    with pytest.raises(ArithmeticError):
        lc.character("alpha=1/3^5", 3, prec=3)


def test_verify_suite():
    code, reports = lc.verify("c6", primes=(3,))
    assert code == 0
    assert reports and all(r["status"] == "pass" for r in reports)
