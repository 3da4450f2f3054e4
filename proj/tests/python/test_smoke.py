"""Smoke tests for the native module, run against the in-tree build.

The ctest harness points APNFORGE_CORE_DIR at the directory holding the
compiled extension; an installed wheel works too (import apnforge instead).
"""

import os
import sys

core_dir = os.environ.get("APNFORGE_CORE_DIR")
if core_dir:
    sys.path.insert(0, core_dir)

import _core  # noqa: E402


def test_field_arithmetic():
    f = _core.Field.with_default_poly(4)
    assert f.order == 16
    a = f.generator()
    assert f.mul(a, f.inv(a)) == 1
    assert f.pow(0, 0) == 1


def test_good_alphas():
    alphas = _core.find_good_alphas(4, 1)
    assert 1 in alphas
    assert 0 not in alphas


def test_f1_is_apn():
    alphas = _core.find_good_alphas(4, 1)
    tt = _core.f1(4, 1, alphas[0])
    assert tt.n == 8
    assert _core.is_apn(tt)
    assert _core.differential_uniformity(tt) == 2


def test_f2_is_apn():
    alphas = _core.find_good_alphas(3, 1)
    assert _core.is_apn(_core.f2(3, alphas[0]))


def test_gold_profile():
    tt = _core.gold(6, 1)
    profile = _core.invariant_profile(tt)
    assert profile.delta == 2
    assert profile.gold_like
    assert profile.nb_size == 21
    assert profile.nf[0] == 21


def test_f1_profile_structure():
    alphas = _core.find_good_alphas(4, 1)
    profile = _core.invariant_profile(_core.f1(4, 1, alphas[0]))
    assert profile.delta == 2
    assert profile.three_to_one
