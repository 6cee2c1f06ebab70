import json
from fractions import Fraction

import pytest

import qaffine as qa


def test_scalars():
    q = qa.q
    x = (qa.RationalFunction(1) - q(-2)).inverse()
    assert x.limit_at_infinity() == Fraction(1)
    assert (q(1) * q(-1)) == qa.RationalFunction(1)
    assert qa.RationalFunction("q^2").bar() == q(-2)


def test_real_root_vectors_have_norm_one_over_one_minus_q2():
    alg = qa.Algebra(1, 4)
    want = (qa.RationalFunction(1) - qa.q(-2)).inverse()
    for k in range(3):
        e = alg.real(k, "+", 1)
        assert e.height == 2 * k + 1
        assert qa.inner(e, e) == want
    assert qa.inner(alg.real(1, "-", 1), alg.real(1, "-", 1)) == want


def test_imaginary_vectors_commute_and_products_stay_alive():
    alg = qa.Algebra(2, 4)
    x, y = alg.imag(1, 1), alg.imag(2, 2)
    del alg
    assert qa.commutator(x, y).is_zero()
    assert x * y == y * x


def test_serre_relation_vanishes():
    alg = qa.Algebra(1, 2)
    e0, e1 = alg.generator(0), alg.generator(1)
    q = qa.q
    # E0^3 E1 - [3] E0^2 E1 E0 + [3] E0 E1 E0^2 - E1 E0^3
    three = q(2) + qa.RationalFunction(1) + q(-2)
    s = e0 * e0 * e0 * e1 - three * (e0 * e0 * e1 * e0) + three * (e0 * e1 * e0 * e0) - e1 * e0 * e0 * e0
    assert s.is_zero()
    assert not (e0 * e1 - e1 * e0).is_zero()


def test_divided_power_and_derivation():
    alg = qa.Algebra(1, 2)
    e1 = alg.generator(1)
    assert (qa.q(1) + qa.q(-1)) * qa.divided_power(e1, 2) == e1 * e1
    assert e1.r(1) == alg.one()


def test_translation_word_length():
    assert len(qa.translation_word(1)) == 2
    assert len(qa.translation_word(2)) == 8


def test_run_suite_and_report():
    rep = qa.run_suite("relations", qa.Caps(1, 2, 8))
    assert rep.ok()
    assert rep.count(qa.CheckStatus.PASS) == len(rep.checks) > 0
    data = json.loads(rep.emit("json"))
    assert data["suite"] == "relations"
    assert len(data["checks"]) == len(rep.checks)
    assert qa.parse_json_report(rep.emit("json")).checks[0].id == rep.checks[0].id
    sel = qa.run_suite("weyl", qa.Caps(2, 1, 1), anchors={"translation-word-reduced"})
    assert [c.anchor for c in sel.checks] == ["translation-word-reduced"] * 2
    assert sel.checks[0].params["n"] == "1"


def test_profiles_and_errors():
    assert qa.Caps.profile("desk") == qa.Caps(2, 3, 8)
    assert "pbw" in qa.suite_names()
    with pytest.raises(ValueError):
        qa.run_suite("nope")
    with pytest.raises(ValueError):
        qa.Algebra(1).real(1, "x", 1)
