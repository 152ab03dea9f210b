"""Exact scalar arithmetic: cyclotomic polynomials, field ops, trig sums."""

import random
from fractions import Fraction as F

import pytest

from orbifold_index.scalars import (
    ConsistencyError,
    Cyclotomic,
    _poly_mul_int,
    _trig_sums_brute_small,
    as_rational,
    cos_of,
    cyc_inverse,
    cyc_mul,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    format_rational,
    mobius,
    parse_rational,
    sin_times_i_of,
    trig_sums,
    zeta_power,
)


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == (-1, 1)
    # derived by dividing x^4 - 1 and x^6 - 1 by the proper-divisor product
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)


def test_cyclotomic_polynomial_product_identity():
    # prod_{d | p} Phi_d == x^p - 1, an independent reconstruction
    for p in range(1, 41):
        prod = (1,)
        for d in divisors(p):
            prod = _poly_mul_int(prod, cyclotomic_polynomial(d))
        expected = [0] * (p + 1)
        expected[0], expected[p] = -1, 1
        assert list(prod) == expected, p


def test_cyclotomic_polynomial_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.Symbol("x")
    for p in range(1, 61):
        ours = cyclotomic_polynomial(p)
        theirs = sympy.Poly(sympy.cyclotomic_poly(p, x), x).all_coeffs()[::-1]
        assert list(ours) == [int(c) for c in theirs], p


def test_degree_is_euler_phi():
    for p in range(1, 80):
        assert len(cyclotomic_polynomial(p)) - 1 == euler_phi(p)


def test_mobius_small():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_zeta_power_examples():
    assert zeta_power(2, 1) == -1
    assert zeta_power(4, 3).coeffs == (F(0), F(-1))  # zeta^3 = -zeta mod zeta^2+1
    assert zeta_power(5, 0) == 1
    assert zeta_power(1, 7) == 1


def test_zeta_power_group_laws():
    for p in range(1, 31):
        assert zeta_power(p, p) == 1
        for j in range(p):
            assert zeta_power(p, j) * zeta_power(p, p - j) == 1


def test_cyc_mul_examples():
    i = zeta_power(4, 1)
    assert cyc_mul(i, i) == -1
    assert cyc_mul(1 + zeta_power(3, 1), 1 + zeta_power(3, 2)) == 1
    a = zeta_power(7, 3) + 2
    assert cyc_mul(a, Cyclotomic.one(7)) == a


def test_cyc_mul_order_mismatch():
    with pytest.raises(ValueError):
        cyc_mul(zeta_power(3, 1), zeta_power(4, 1))
    with pytest.raises(ValueError):
        zeta_power(3, 1) + zeta_power(6, 1)


def test_cyc_inverse_examples():
    assert cyc_inverse(Cyclotomic.from_rational(5, 2)) == F(1, 2)
    i = zeta_power(4, 1)
    assert cyc_inverse(i) == -i
    assert cyc_inverse(1 - zeta_power(2, 1)) == F(1, 2)
    with pytest.raises(ZeroDivisionError):
        cyc_inverse(Cyclotomic.zero(6))


def _random_element(rng, p):
    phi = euler_phi(p)
    return Cyclotomic(p, [F(rng.randint(-9, 9), rng.randint(1, 9))
                          for _ in range(phi)])


def test_field_axioms_random():
    rng = random.Random(7)
    for p in [2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 21, 25, 27, 30]:
        for _ in range(4):
            a, b, c = (_random_element(rng, p) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if a:
                assert a * a.inverse() == 1
                assert a.inverse() * a == 1


def test_division_and_pow():
    z = zeta_power(12, 5)
    assert z / z == 1
    assert z ** 12 == 1
    assert z ** -1 == z.inverse()
    assert (2 * z) / 2 == z


def test_cos_sin_examples():
    assert cos_of(2, 1) == -1 and sin_times_i_of(2, 1) == 0
    assert cos_of(4, 1) == 0 and sin_times_i_of(4, 1) == zeta_power(4, 1)
    assert cos_of(3, 1) == F(-1, 2)


def test_pythagorean_identity():
    # cos^2 + sin^2 = 1 with sin^2 = -(i sin)^2, exactly
    for p in range(1, 31):
        for j in range(p):
            c = cos_of(p, j)
            s_sq = -(sin_times_i_of(p, j) * sin_times_i_of(p, j))
            assert c * c + s_sq == 1, (p, j)


def test_as_rational():
    assert as_rational(Cyclotomic.from_rational(9, F(7, 3))) == F(7, 3)
    assert as_rational(zeta_power(3, 1) + zeta_power(3, 2)) == -1
    assert as_rational(zeta_power(5, 1)) is None
    assert as_rational(F(2, 3)) == F(2, 3)
    assert as_rational(5) == 5


def test_galois_invariance_of_group_sums():
    # sum over j = 1..p-1 of f(zeta^j) is rational for rational-coefficient f
    rng = random.Random(11)
    for p in [3, 5, 6, 8, 12, 14, 20]:
        coeffs = [F(rng.randint(-5, 5)) for _ in range(5)]
        total = Cyclotomic.zero(p)
        for j in range(1, p):
            z = zeta_power(p, j)
            val = Cyclotomic.zero(p)
            for c in reversed(coeffs):
                val = val * z + c
            total = total + val
        assert total.as_rational() is not None, p


def test_conjugation():
    for p in [2, 3, 5, 8, 12]:
        for j in range(p):
            assert zeta_power(p, j).conjugate() == zeta_power(p, -j)
    with pytest.raises(ValueError):
        zeta_power(9, 1).galois(3)  # not coprime to 9


def test_trig_sums_examples():
    assert trig_sums(2) == (F(-1), F(1), F(1, 2))
    assert trig_sums(3) == (F(-1), F(1, 2), F(4, 3))
    assert trig_sums(4) == (F(-1), F(1), F(5, 2))


def test_trig_sums_p2_cos_sq_special_case():
    # the single term is cos^2(pi) = 1; the (p-2)/2 form starts at p = 3
    assert trig_sums(2).sum_cos_sq == 1
    assert trig_sums(3).sum_cos_sq == F(1, 2)


def test_trig_sums_rejects_small_p():
    with pytest.raises(ValueError):
        trig_sums(1)
    with pytest.raises(ValueError):
        trig_sums(0)


def test_trig_sums_brute_small_agrees_with_closed():
    for p in range(2, 33):
        brute = _trig_sums_brute_small(p)
        assert brute == trig_sums(p), p


def test_rational_serialization():
    assert format_rational(F(-1, 2)) == "-1/2"
    assert format_rational(F(3)) == "3"
    assert parse_rational("-7/3") == F(-7, 3)
    assert parse_rational("4") == 4
    with pytest.raises(ValueError):
        parse_rational("x")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_cyclotomic_serialization_roundtrip():
    a = zeta_power(12, 5) * F(3, 7) + F(1, 2)
    data = a.to_json()
    assert data["order"] == 12 and len(data["coeffs"]) == euler_phi(12)
    assert Cyclotomic.from_json(data) == a


def test_cyclotomic_validation():
    with pytest.raises(ValueError):
        Cyclotomic(4, [F(1)])  # wrong length
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def _embed(a):
    # numeric embedding at the principal root; independent of the exact layer
    import cmath
    z = cmath.exp(2j * cmath.pi / a.order)
    return sum(float(c) * z ** s for s, c in enumerate(a.coeffs))


def test_numeric_embedding_sanity():
    import cmath
    import math
    for p in (5, 7, 12, 30):
        for j in range(p):
            theta = 2 * math.pi * j / p
            assert abs(_embed(cos_of(p, j)) - math.cos(theta)) < 1e-9
            assert abs(_embed(sin_times_i_of(p, j)) - 1j * math.sin(theta)) < 1e-9
            assert abs(_embed(zeta_power(p, j)) - cmath.exp(1j * theta)) < 1e-9
        for j in range(1, p):
            inv = (2 - 2 * cos_of(p, j)).inverse()
            want = 1 / (2 - 2 * math.cos(2 * math.pi * j / p))
            assert abs(_embed(inv) - want) < 1e-9
