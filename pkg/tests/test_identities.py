"""The closed-form inverse identities against the extended-Euclid route."""

import numpy as np
import pytest
from fractions import Fraction as F

from orbifold_index import identities as ident
from orbifold_index.bundles import GroupElement
from orbifold_index.index import _correction_sum, correction_at
from orbifold_index.scalars import (
    ConsistencyError,
    Cyclotomic,
    _trig_sums_brute_small,
    as_rational,
    cos_of,
    zeta_power,
)


def _spot_pairs():
    pairs = [(p, k) for p in range(2, 29) for k in range(1, p)]
    for p in (97, 105, 128):
        pairs += [(p, 1), (p, 2), (p, p // 3), (p, p - 1)]
    return pairs


@pytest.mark.parametrize("p,k", _spot_pairs())
def test_inverse_vectors_match_ext_gcd(p, k):
    vec, den = ident.inv_two_minus_two_cos_vec(p, k)
    assert ident.vec_to_cyclotomic(p, vec, den) == (2 - 2 * cos_of(p, k)).inverse()

    vec, den = ident.inv_one_minus_zeta_vec(p, k)
    v = (1 - zeta_power(p, k)).inverse()
    assert ident.vec_to_cyclotomic(p, vec, den) == v

    vec, den = ident.inv_one_minus_zeta_sq_vec(p, k)
    assert ident.vec_to_cyclotomic(p, vec, den) == v * v


def test_inverse_constructors_reject_identity():
    for fn in (ident.inv_one_minus_zeta_vec, ident.inv_one_minus_zeta_sq_vec,
               ident.inv_two_minus_two_cos_vec):
        with pytest.raises(ZeroDivisionError):
            fn(5, 0)
        with pytest.raises(ZeroDivisionError):
            fn(5, 10)


def test_verify_inverse_vec_accepts_and_rejects():
    p, k = 12, 3
    vec, den = ident.inv_two_minus_two_cos_vec(p, k)
    ident.verify_inverse_vec(p, k, vec, den, cos_form=True)
    bad = vec.copy()
    bad[0] += 1
    with pytest.raises(ConsistencyError):
        ident.verify_inverse_vec(p, k, bad, den, cos_form=True)

    vec, den = ident.inv_one_minus_zeta_sq_vec(p, k)
    ident.verify_inverse_vec(p, k, vec, den, square=True)
    vec, den = ident.inv_one_minus_zeta_vec(p, k)
    ident.verify_inverse_vec(p, k, vec, den)


def test_rationalize_vec_matches_field_reduction():
    # full group sums of inverse vectors: rationalize via Ramanujan sums must
    # agree with reducing mod Phi_p and reading the constant term
    for p in (6, 8, 9, 12, 15):
        acc = np.zeros(p, dtype=np.int64)
        p2 = p * p
        for j in range(1, p):
            vec, den = ident.inv_two_minus_two_cos_vec(p, j)
            acc += vec * (p2 // den)
        got = ident.rationalize_vec(p, acc, p2)
        want = as_rational(ident.vec_to_cyclotomic(p, list(acc), p2))
        assert got == want == F(p * p - 1, 12)  # half of the 1/(1-cos) sum


def test_rationalize_vec_rejects_non_invariant():
    vec = [0] * 7
    vec[1] = 1  # bare zeta_7 is not rational
    with pytest.raises(ConsistencyError):
        ident.rationalize_vec(7, vec, 1)


def test_fold_convolve_exact_and_guarded():
    p = 5
    a = np.array([1, 2, 0, 0, 3], dtype=np.int64)
    b = np.array([0, 1, 1, 0, 0], dtype=np.int64)
    out = ident.fold_convolve(p, a, b)
    za = ident.vec_to_cyclotomic(p, a, 1)
    zb = ident.vec_to_cyclotomic(p, b, 1)
    assert ident.vec_to_cyclotomic(p, out, 1) == za * zb
    big = np.full(3, 2 ** 31, dtype=np.int64)
    with pytest.raises(OverflowError):
        ident.fold_convolve(3, big, big)


def _fast_coeffs_as_cyclotomic(p, j):
    ce, ch = ident.correction_coeffs_fast(p, j)
    return (ident.vec_to_cyclotomic(p, ce.vec, ce.den),
            ident.vec_to_cyclotomic(p, ch.vec, ch.den))


def test_fast_correction_matches_pipeline_exhaustive():
    for p in range(2, 17):
        for j in range(1, p):
            full = correction_at(GroupElement(p, j))
            ce, ch = _fast_coeffs_as_cyclotomic(p, j)
            assert ce == full.ce, (p, j)
            assert ch == full.ch, (p, j)


@pytest.mark.parametrize("p,j", [(24, 1), (24, 9), (31, 1), (31, 17),
                                 (47, 5), (97, 40), (105, 35), (105, 15)])
def test_fast_correction_matches_pipeline_spots(p, j):
    # 105 covers non-coprime elements, including j = 35 where the doubled
    # shift 2j collides with -j in the sparse symbol coefficients
    full = correction_at(GroupElement(p, j))
    ce, ch = _fast_coeffs_as_cyclotomic(p, j)
    assert ce == full.ce and ch == full.ch


def test_correction_sum_routes_agree():
    for p in range(2, 33):
        assert _correction_sum(p, "pipeline") == _correction_sum(p, "identities"), p


def test_trig_paths_agree_with_small_brute():
    for p in range(2, 33):
        small = _trig_sums_brute_small(p)
        sc, sc2 = ident.sum_cos_and_cos_sq(p)
        assert (sc, sc2) == (small.sum_cos, small.sum_cos_sq), p
        assert ident.sum_inv_one_minus_cos(p) == small.sum_inv_one_minus_cos, p


def test_bounds_are_enforced():
    with pytest.raises(ValueError):
        ident.correction_coeffs_fast(ident._MAX_P_CORRECTION + 1, 1)
    with pytest.raises(ValueError):
        ident.sum_inv_one_minus_cos(ident._MAX_P_TRIG + 1)
