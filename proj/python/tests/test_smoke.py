# Copyright 2026 The trico Authors.
# SPDX-License-Identifier: Apache-2.0
import json

import pytest

import trico


def test_ring_invariants():
    R = trico.Ring("FU(9,4)")
    assert (R.p, R.s, R.unit_count) == (3, 4, 5832)
    dec = R.unit_decomposition()
    assert dec["text"] == "Z8 + Z3^2 + Z9^2"
    assert dec["exponents"] == [1, 1, 2, 2]


def test_element_arithmetic():
    R = trico.Ring("GR(4,2)")
    w = R.element("w")
    assert w * w.inverse() == R.one()
    assert (w + 1) - 1 == w
    assert w ** R.unit_count == R.one()
    assert not R.gamma().is_unit()


def test_class_counts_match_bruteforce():
    R = trico.Ring("F(4)")
    for k in range(1, 4):
        assert trico.count_classes_k(R, 4, k) == trico.count_classes_k_bruteforce(R, 4, k)
    assert len(trico.class_representatives(R, 27, 9)) == trico.count_classes_k(R, 27, 9)


def test_equivalence_certificate():
    R = trico.Ring("Z(9)")
    a = R.binomial("x^2 + 1")
    b = R.binomial("x^2 + 4")
    cert = trico.n_equivalent(a, b, 4)
    if cert is not None:
        alpha, _ = cert
        assert alpha.is_unit()
    with pytest.raises(trico.CrossDegreeRefusal):
        trico.n_equivalent(a, R.binomial("x^3 + 1"), 4)


def test_codes_roundtrip():
    R = trico.Ring("Z(4)")
    codes = trico.enumerate_codes(R, "x^3 - 1")
    assert len(codes) == 9
    full = max(codes, key=lambda c: c.cardinality)
    zero = min(codes, key=lambda c: c.cardinality)
    assert (full.cardinality, zero.cardinality) == (64, 1)
    for c in codes:
        assert trico.Code.from_json(c.to_json()) == c
        assert zero.issubset(c) and c.issubset(full)


def test_parse_error():
    with pytest.raises(trico.ParseError):
        trico.Ring("GR(4,2)").element("w +")


def test_run_cli():
    code, out, err = trico.run_cli(["ring", "info", "Z(8)", "--json", "--verify"])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["exit_code"] == 0
    assert doc["oracle"]["match"] is True
