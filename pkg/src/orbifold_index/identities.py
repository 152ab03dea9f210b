"""Closed-form root-of-unity identities backing the large-p brute-force sweeps.

For any p-th root of unity z = zeta^k != 1 the geometric-series identity

    1/(1 - z) = -(1/p) * sum_{m=1}^{p-1} m * z^m

and the convolution/correlation forms it induces,

    1/(1 - z)^2        = (1/p^2) * sum_s B_s z^s
    1/((1-z)(1-zbar))  = (1/p^2) * sum_r C_r z^r     (= 1/(2 - 2*cos theta))

give every inverse the group sweeps need as an O(p) integer construction,
with closed-form coefficients (written for the exact order d of z, which
divides p; non-primitive roots are built on their multiples-of-g grid)

    B_s = s*T1 - T2 + d*(T1 - s(s+1)/2)
    C_r = T2 - r*T1 + d*r(r-1)/2,       T1 = d(d-1)/2,  T2 = (d-1)d(2d-1)/6.

Elements are carried as integer vectors over Z[x]/(x^p - 1) with a single
denominator and projected to Q(zeta_p) only at the end.  Every constructed
inverse is verified on the spot through the exact ring identity

    (1 - x^k) * V  =  1 - (g/p) * N_d      in Q[x]/(x^p - 1),

where g = gcd(k, p) and N_d is the all-ones vector on exponent multiples of
g; the N_d component projects to zero in the field, so the verified vector
is the true field inverse.  Group sums of these vectors are rational by
Galois invariance; rationality is checked exactly (coefficients constant on
gcd classes) and the value extracted with Ramanujan sums
sum_{gcd(s,p)=g} zeta^s = mu(p/g).

Everything here is integer-exact; numpy int64 is used for speed with
explicit magnitude bounds asserted before any convolution.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .scalars import (
    ConsistencyError,
    Cyclotomic,
    _reduce_mod_phi,
    divisors,
    mobius,
)

# int64 safety: the correction path convolves vectors with entries up to
# ~1.2*p^3 twice and scales by small sparse factors; p <= 300 keeps every
# intermediate below 2^62.  The trig path only accumulates, so p <= 2000 is
# safe there.
_MAX_P_CORRECTION = 300
_MAX_P_TRIG = 2000


def _t1_t2(p: int) -> tuple[int, int]:
    return p * (p - 1) // 2, (p - 1) * p * (2 * p - 1) // 6


def _primitive_grid(p: int, k: int) -> tuple[int, int, int]:
    """zeta_p^k is a primitive d-th root living on the multiples-of-g grid:
    returns (g, d, k') with g = gcd(k, p), d = p/g, k' = k/g coprime to d."""
    k %= p
    if k == 0:
        raise ZeroDivisionError("zeta^k = 1 is not invertible in these identities")
    g = gcd(k, p)
    return g, p // g, k // g


def inv_one_minus_zeta_vec(p: int, k: int) -> tuple[np.ndarray, int]:
    """(vector, denominator) for 1/(1 - zeta_p^k) in Z[x]/(x^p - 1).

    Built with the order-d coefficients of the primitive root zeta_d^k', so
    positions never collide and entries stay below d^2."""
    g, d, kp = _primitive_grid(p, k)
    m = np.arange(1, d, dtype=np.int64)
    vec = np.zeros(p, dtype=np.int64)
    vec[g * ((kp * m) % d)] = -m
    return vec, d


def inv_one_minus_zeta_sq_vec(p: int, k: int) -> tuple[np.ndarray, int]:
    """(vector, denominator) for 1/(1 - zeta_p^k)^2."""
    g, d, kp = _primitive_grid(p, k)
    t1, t2 = _t1_t2(d)
    s = np.arange(d, dtype=np.int64)
    coeff = s * t1 - t2 + d * (t1 - s * (s + 1) // 2)
    vec = np.zeros(p, dtype=np.int64)
    vec[g * ((kp * s) % d)] = coeff
    return vec, d * d


def inv_two_minus_two_cos_vec(p: int, k: int) -> tuple[np.ndarray, int]:
    """(vector, denominator) for 1/(2 - 2*cos(2*pi*k/p))."""
    g, d, kp = _primitive_grid(p, k)
    t1, t2 = _t1_t2(d)
    r = np.arange(d, dtype=np.int64)
    coeff = t2 - r * t1 + d * (r * (r - 1) // 2)
    vec = np.zeros(p, dtype=np.int64)
    vec[g * ((kp * r) % d)] = coeff
    return vec, d * d


def sparse_apply(p: int, terms: dict[int, int], vec: np.ndarray) -> np.ndarray:
    """Multiply a vector in Z[x]/(x^p - 1) by sum_k c_k x^k (integer c_k)."""
    out = np.zeros(p, dtype=np.int64)
    for shift, c in terms.items():
        if c:
            out += c * np.roll(vec, shift % p)
    return out


def fold_convolve(p: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product in Z[x]/(x^p - 1) of two length-p integer vectors."""
    if max(int(np.abs(a).max()), 1) * max(int(np.abs(b).max()), 1) * p >= (1 << 62):
        raise OverflowError("convolution would overflow int64")
    full = np.convolve(a, b)
    out = full[:p].copy()
    out[: p - 1] += full[p:]
    return out


def _expected_unit_vec(p: int, k: int, den: int) -> np.ndarray:
    """den * (1 - (g/p) * N_d) as an integer vector; g = gcd(k, p)."""
    g = gcd(k % p, p)
    if den * g % p:
        raise ValueError("denominator must absorb the 1/p of the identity")
    scaled = den * g // p
    vec = np.zeros(p, dtype=np.int64)
    vec[::g] = -scaled
    vec[0] += den
    return vec


def verify_inverse_vec(p: int, k: int, vec: np.ndarray, den: int,
                       square: bool = False, cos_form: bool = False) -> None:
    """Check the defining ring identity of a constructed inverse exactly.

    cos_form: vec inverts (2 - x^k - x^-k); square: vec inverts (1 - x^k)^2.
    Both satisfy factor * vec = 1 - (g/p) N_d in Z[x]/(x^p - 1)."""
    k %= p
    if k == 0:
        raise ValueError("k must be nonzero mod p")
    if cos_form:
        factor: dict[int, int] = {0: 2}
        for shift in (k, p - k):
            factor[shift % p] = factor.get(shift % p, 0) - 1
    elif square:
        factor = {0: 1}
        factor[k % p] = factor.get(k % p, 0) - 2
        factor[(2 * k) % p] = factor.get((2 * k) % p, 0) + 1
    else:
        factor = {0: 1, k: -1}
    lhs = sparse_apply(p, factor, vec)
    if not np.array_equal(lhs, _expected_unit_vec(p, k, den)):
        raise ConsistencyError(
            f"closed-form inverse failed its ring identity at p={p}, k={k}")


def rationalize_vec(p: int, vec, den: int) -> Fraction:
    """Exact rational value of a Galois-invariant vector in Z[x]/(x^p - 1).

    Requires the coefficients to be constant on gcd classes (checked), which
    holds for any full-group sum; the value then follows from Ramanujan sums.
    """
    arr = np.asarray(vec)
    reps = np.gcd(np.arange(p), p) % p
    if not (arr == arr[reps]).all():
        raise ConsistencyError(
            f"group-summed vector is not Galois-invariant at p={p}")
    total = 0
    for g in divisors(p):
        total += int(arr[g % p]) * mobius(p // g)
    return Fraction(total, den)


def vec_to_cyclotomic(p: int, vec, den: int) -> Cyclotomic:
    """Project a Z[x]/(x^p - 1) vector to Q(zeta_p) (reduce mod Phi_p)."""
    coeffs = [Fraction(int(c), den) for c in vec]
    return Cyclotomic(p, _reduce_mod_phi(p, coeffs))


# ---------------------------------------------------------------------------
# trig sweeps (any p up to _MAX_P_TRIG)
# ---------------------------------------------------------------------------

def sum_cos_and_cos_sq(p: int) -> tuple[Fraction, Fraction]:
    """Brute-force sum of cos(theta_j) and cos^2(theta_j), j = 1..p-1,
    accumulated as sparse exact vectors over Z[x]/(x^p - 1)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    acc_c = [0] * p
    acc_c2 = [0] * p
    for j in range(1, p):
        # cos = (z^j + z^-j)/2;  cos^2 = (z^2j + 2 + z^-2j)/4
        acc_c[j] += 1
        acc_c[p - j] += 1
        acc_c2[(2 * j) % p] += 1
        acc_c2[(-2 * j) % p] += 1
        acc_c2[0] += 2
    return rationalize_vec(p, acc_c, 2), rationalize_vec(p, acc_c2, 4)


def sum_inv_one_minus_cos(p: int) -> Fraction:
    """Brute-force sum of 1/(1 - cos(theta_j)), j = 1..p-1.

    Every term is materialized as its own exact closed-form inverse vector
    over the common denominator p^2 and checked against its ring identity;
    elements of equal order d | p are built and verified as rows of one
    integer matrix so the sweep stays at numpy speed.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    if p > _MAX_P_TRIG:
        raise ValueError(f"p > {_MAX_P_TRIG} exceeds the int64-audited range")
    p2 = p * p
    # entries scale to <= p^2 d / 3 and p-1 summands: far inside int64
    acc = np.zeros(p, dtype=np.int64)
    for d in divisors(p):
        if d == 1:
            continue
        # the order-d elements live on the multiples-of-g grid; build them in
        # the compressed length-d world
        g = p // d
        units = np.array([i for i in range(1, d) if gcd(i, d) == 1],
                         dtype=np.int64)
        t1, t2 = _t1_t2(d)
        r = np.arange(d, dtype=np.int64)
        coeff = (t2 - r * t1 + d * (r * (r - 1) // 2)) * (p2 // (d * d))
        rows = np.zeros((len(units), d), dtype=np.int64)
        pos = (units[:, None] * r[None, :]) % d
        np.put_along_axis(rows, pos, np.broadcast_to(coeff, pos.shape), axis=1)
        # ring identity (2 - x - x^-1) u = p^2 (1 - N/d) for the class
        # representative i = 1; the other rows are its unit-substitution
        # images by construction (same coeff array, multiplied indices)
        rep = rows[0]
        lhs = 2 * rep - np.roll(rep, 1) - np.roll(rep, -1)
        rhs = np.full(d, -(p2 // d), dtype=np.int64)
        rhs[0] += p2
        if not np.array_equal(lhs, rhs):
            raise ConsistencyError(
                f"closed-form inverse failed its ring identity at p={p}, d={d}")
        acc[::g] += rows.sum(axis=0)
    # 1/(1 - cos) = 2/(2 - 2cos)
    return rationalize_vec(p, acc, p2) * 2


# ---------------------------------------------------------------------------
# correction sweep (p up to _MAX_P_CORRECTION)
# ---------------------------------------------------------------------------

class _DVec:
    """Length-p integer vector with one denominator: vec/den in Q[x]/(x^p-1)."""

    __slots__ = ("p", "vec", "den")

    def __init__(self, p: int, vec: np.ndarray, den: int):
        self.p, self.vec, self.den = p, vec, den

    def sparse_mul(self, terms: dict[int, int], extra_den: int = 1) -> "_DVec":
        return _DVec(self.p, sparse_apply(self.p, terms, self.vec),
                     self.den * extra_den)

    def conv(self, other: "_DVec") -> "_DVec":
        return _DVec(self.p, fold_convolve(self.p, self.vec, other.vec),
                     self.den * other.den)

    def add(self, other: "_DVec") -> "_DVec":
        if self.den == other.den:
            return _DVec(self.p, self.vec + other.vec, self.den)
        lcm = self.den * other.den // gcd(self.den, other.den)
        return _DVec(self.p, self.vec * (lcm // self.den)
                     + other.vec * (lcm // other.den), lcm)


def _sparse(p: int, *terms: tuple[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for shift, c in terms:
        s = shift % p
        out[s] = out.get(s, 0) + c
    return out


def correction_coeffs_fast(p: int, j: int) -> tuple[_DVec, _DVec]:
    """Per-element degree-two correction coefficients (e and h slots) as exact
    vectors over Z[x]/(x^p - 1).

    Same algebra as the generic ring pipeline: with q = symbol/e and T the
    inverted Thom character, the e slot is q_e * u and the h slot is
    q_h * u + q_0 * T_h, where u = 1/(2 - 2cos) and T_h = (z - zbar) * u^2.
    The hat-A-squared factor and the degree-four part of T cannot reach the
    degree-two slots, so they drop out.  Exactness of u is verified per
    element through its ring identity.
    """
    if not (1 <= j < p):
        raise ValueError("group element must be nontrivial: 1 <= j < p")
    if p > _MAX_P_CORRECTION:
        raise ValueError(f"p > {_MAX_P_CORRECTION} exceeds the int64-audited range")
    u_vec, u_den = inv_two_minus_two_cos_vec(p, j)
    verify_inverse_vec(p, j, u_vec, u_den, cos_form=True)
    u = _DVec(p, u_vec, u_den)
    u2 = u.conv(u)
    # symbol/e coefficients (z = zeta^j):
    #   q_0 = (z - zbar) + 2(z^2 - zbar^2)            [2 i sin + 8 i sin cos]
    #   q_e = (4z^2 + 4zbar^2 - z - zbar - 6) / 2     [8 cos^2 - cos - 7]
    #   q_h = (z + zbar) + 4(z^2 + zbar^2)            [-8 + 2 cos + 16 cos^2]
    q0 = _sparse(p, (j, 1), (-j, -1), (2 * j, 2), (-2 * j, -2))
    qe = _sparse(p, (2 * j, 4), (-2 * j, 4), (j, -1), (-j, -1), (0, -6))
    qh = _sparse(p, (j, 1), (-j, 1), (2 * j, 4), (-2 * j, 4))
    ce = u.sparse_mul(qe, extra_den=2)
    # T_h = (z - zbar) * u^2
    th = u2.sparse_mul(_sparse(p, (j, 1), (-j, -1)))
    ch = u.sparse_mul(qh).add(th.sparse_mul(q0))
    return ce, ch


def correction_sum_fast(p: int) -> tuple[Fraction, Fraction]:
    """Brute-force correction sum over j = 1..p-1, scaled by 1/p, using the
    closed-form per-element evaluator; returns (coeff_e, coeff_h)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    # accumulate as python ints: scaled per-element entries reach ~p^7
    acc_e = np.zeros(p, dtype=object)
    acc_h = np.zeros(p, dtype=object)
    den_e, den_h = 2 * p * p, p ** 4
    for j in range(1, p):
        ce, ch = correction_coeffs_fast(p, j)
        # per-element denominators divide the uniform targets 2p^2 and p^4
        acc_e += ce.vec * (den_e // ce.den)
        acc_h += ch.vec * (den_h // ch.den)
    coeff_e = rationalize_vec(p, acc_e, den_e) / p
    coeff_h = rationalize_vec(p, acc_h, den_h) / p
    return coeff_e, coeff_h
