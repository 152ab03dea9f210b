"""Exact scalars: arbitrary-precision rationals and cyclotomic field elements.

Group-element phases e^{i 2*pi*j/p} are carried as exact elements of the
cyclotomic field Q(zeta_p) = Q[x] / (Phi_p(x)), where Phi_p is the p-th
cyclotomic polynomial.  Working modulo Phi_p (degree phi(p)) rather than
modulo x^p - 1 keeps the quotient a field, so denominators like
2 - 2*cos(theta) can be inverted exactly.  No floating point appears
anywhere; rationals are `fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple, Optional, Union

Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)

RationalLike = Union[int, Fraction]


class ConsistencyError(ArithmeticError):
    """An internal exactness check failed (non-rational group sum,
    non-integer index, or a verified identity that did not hold)."""


def format_rational(q: RationalLike) -> str:
    """Serialize a rational as "num/den", or "num" when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {s!r}") from exc


# ---------------------------------------------------------------------------
# small number-theoretic helpers
# ---------------------------------------------------------------------------

def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            result -= result // f
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        result -= result // m
    return result


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            m //= f
            if m % f == 0:
                return 0
            result = -result
        f += 1
    if m > 1:
        result = -result
    return result


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _poly_mul_int(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for k, bk in enumerate(b):
                if bk:
                    out[i + k] += ai * bk
    return tuple(out)


def _poly_divmod_int(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # den must be monic
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    num_l = list(num)
    dd = len(den) - 1
    if len(num_l) - 1 < dd:
        return (0,), tuple(num_l)
    q = [0] * (len(num_l) - dd)
    for s in range(len(num_l) - 1, dd - 1, -1):
        c = num_l[s]
        if c:
            q[s - dd] = c
            for i in range(dd):
                if den[i]:
                    num_l[s - dd + i] -= c * den[i]
            num_l[s] = 0
    rem = num_l[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(q), tuple(rem)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(p: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_p, lowest degree first.

    Computed by the recursive exact division
    Phi_p = (x^p - 1) / prod_{d | p, d < p} Phi_d, memoized.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if p == 1:
        return (-1, 1)
    num = [0] * (p + 1)
    num[0], num[p] = -1, 1
    den: tuple[int, ...] = (1,)
    for d in divisors(p):
        if d < p:
            den = _poly_mul_int(den, cyclotomic_polynomial(d))
    q, r = _poly_divmod_int(tuple(num), den)
    if r:
        raise ConsistencyError(f"inexact division while building Phi_{p}")
    if len(q) - 1 != euler_phi(p):
        raise ConsistencyError(f"deg Phi_{p} != phi({p})")
    return q


@lru_cache(maxsize=None)
def _reduction_rows(p: int) -> tuple[tuple[int, ...], ...]:
    """rows[s] = integer coefficients of x^s mod Phi_p, for
    0 <= s <= max(p - 1, 2*phi - 2).  Covers zeta powers and products of
    two reduced elements."""
    phi_p = cyclotomic_polynomial(p)
    phi = len(phi_p) - 1
    hi = max(p - 1, 2 * phi - 2)
    rows: list[tuple[int, ...]] = []
    for s in range(phi):
        row = [0] * phi
        row[s] = 1
        rows.append(tuple(row))
    # x^phi = -(Phi_p - x^phi); iterate upward
    top = tuple(-phi_p[i] for i in range(phi))
    if phi <= hi:
        rows.append(top)
        cur = list(top)
        for _ in range(phi + 1, hi + 1):
            lead = cur[-1]
            nxt = [0] + cur[:-1]
            if lead:
                for i in range(phi):
                    if top[i]:
                        nxt[i] += lead * top[i]
            cur = nxt
            rows.append(tuple(cur))
    return tuple(rows)


def _reduce_mod_phi(p: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient list of any length modulo Phi_p."""
    phi = len(cyclotomic_polynomial(p)) - 1
    rows = _reduction_rows(p)
    out = list(coeffs[:phi]) + [_F0] * (phi - min(phi, len(coeffs)))
    for s in range(phi, len(coeffs)):
        c = coeffs[s]
        if c:
            row = rows[s]
            for i in range(phi):
                r = row[i]
                if r:
                    cur = out[i]
                    v = c * r
                    out[i] = cur + v if cur else v
    return tuple(out)


class Cyclotomic:
    """Element of Q(zeta_p), stored as phi(p) rational coefficients in the
    power basis 1, zeta, ..., zeta^(phi-1), reduced modulo Phi_p.

    Values are immutable; all arithmetic returns new elements.  Mixed
    arithmetic with int/Fraction coerces the rational to a constant element.
    Elements of different orders never mix.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[RationalLike]):
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        phi = len(cyclotomic_polynomial(order)) - 1
        if len(cs) != phi:
            raise ValueError(f"need {phi} coefficients for order {order}, got {len(cs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> "Cyclotomic":
        self = object.__new__(cls)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    @classmethod
    def from_rational(cls, order: int, value: RationalLike) -> "Cyclotomic":
        phi = len(cyclotomic_polynomial(order)) - 1
        cs = [_F0] * phi
        cs[0] = Fraction(value)
        return cls._raw(order, tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "Cyclotomic":
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "Cyclotomic":
        return cls.from_rational(order, 1)

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other) -> Optional["Cyclotomic"]:
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.order, other)
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # zero entries dominate in practice; skip Fraction machinery for them
        return Cyclotomic._raw(self.order,
                               tuple((a + b if a and b else (a if a else b))
                                     for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic._raw(self.order,
                               tuple((a - b if a and b else (a if a else -b))
                                     for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic._raw(self.order,
                               tuple((b - a if a and b else (b if b else -a))
                                     for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Cyclotomic.zero(self.order)
            f = Fraction(other)
            return Cyclotomic._raw(self.order, tuple(a * f for a in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(
                f"cyclotomic order mismatch: {self.order} vs {other.order}")
        a_nz = [(i, ai) for i, ai in enumerate(self.coeffs) if ai]
        b_nz = [(k, bk) for k, bk in enumerate(other.coeffs) if bk]
        if not a_nz or not b_nz:
            return Cyclotomic.zero(self.order)
        prod = [_F0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ai in a_nz:
            for k, bk in b_nz:
                cur = prod[i + k]
                v = ai * bk
                prod[i + k] = cur + v if cur else v
        return Cyclotomic._raw(self.order, _reduce_mod_phi(self.order, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (_F1 / Fraction(other))
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm in
        Q[x] run against Phi_p (irreducible, so any nonzero element is a
        unit)."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        p = self.order
        r0 = [Fraction(c) for c in cyclotomic_polynomial(p)]
        r1 = list(self.coeffs)
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [_F0], [_F1]
        while len(r1) > 1:
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_frac(s0, _poly_mul_frac(q, s1))
            if not r1:
                raise ConsistencyError("gcd with Phi_p not constant")
        c = r1[0]
        inv = [s / c for s in s1]
        return Cyclotomic._raw(p, _reduce_mod_phi(p, inv))

    # -- structure maps ------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Image under the field automorphism zeta -> zeta^k (gcd(k, p) = 1)."""
        p = self.order
        k %= p
        if gcd(k, p) != 1:
            raise ValueError(f"zeta -> zeta^{k} is not an automorphism for order {p}")
        rows = _reduction_rows(p)
        phi = len(self.coeffs)
        out = [_F0] * phi
        for s, c in enumerate(self.coeffs):
            if c:
                row = rows[(s * k) % p]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyclotomic._raw(p, tuple(out))

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta -> zeta^(-1)."""
        if self.order == 1:
            return self
        return self.galois(self.order - 1)

    def as_rational(self) -> Optional[Fraction]:
        """The constant coefficient if the element is rational, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    # -- protocol ------------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.order, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return cls(int(data["order"]), [parse_rational(c) for c in data["coeffs"]])


# ---------------------------------------------------------------------------
# rational-coefficient polynomial helpers for the extended Euclid above
# ---------------------------------------------------------------------------

def _poly_divmod_frac(num: list[Fraction], den: list[Fraction]):
    num_l = list(num)
    dd = len(den) - 1
    dlead = den[-1]
    if len(num_l) - 1 < dd:
        return [_F0], num_l
    q = [_F0] * (len(num_l) - dd)
    for s in range(len(num_l) - 1, dd - 1, -1):
        c = num_l[s]
        if c:
            k = c / dlead
            q[s - dd] = k
            for i in range(dd):
                if den[i]:
                    num_l[s - dd + i] -= k * den[i]
            num_l[s] = _F0
    rem = num_l[:dd]
    while rem and not rem[-1]:
        rem.pop()
    return q, rem


def _poly_mul_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_F0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for k, bk in enumerate(b):
                if bk:
                    out[i + k] += ai * bk
    return out


def _poly_sub_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else _F0
        bi = b[i] if i < len(b) else _F0
        out.append(ai - bi)
    while out and not out[-1]:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# field-level operations
# ---------------------------------------------------------------------------

def zeta_power(p: int, k: int) -> Cyclotomic:
    """zeta_p^(k mod p), reduced modulo Phi_p."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    row = _reduction_rows(p)[k % p]
    return Cyclotomic._raw(p, tuple(Fraction(c) for c in row))


def cos_of(p: int, j: int) -> Cyclotomic:
    """Exact cos(2*pi*j/p) = (zeta^j + zeta^-j) / 2."""
    return (zeta_power(p, j) + zeta_power(p, -j)) * Fraction(1, 2)


def sin_times_i_of(p: int, j: int) -> Cyclotomic:
    """Exact i*sin(2*pi*j/p) = (zeta^j - zeta^-j) / 2."""
    return (zeta_power(p, j) - zeta_power(p, -j)) * Fraction(1, 2)


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def cyc_inverse(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


def as_rational(a) -> Optional[Fraction]:
    """Rational value of a scalar, or None when it genuinely is not rational."""
    if isinstance(a, Cyclotomic):
        return a.as_rational()
    return Fraction(a)


class TrigSums(NamedTuple):
    sum_cos: Fraction
    sum_cos_sq: Fraction
    sum_inv_one_minus_cos: Fraction


def _trig_closed_forms(p: int) -> TrigSums:
    # sum cos^2 is (p-2)/2 only for p >= 3; the p = 2 sum has the single
    # term cos^2(pi) = 1 because 2*theta wraps to a full turn.
    sum_cos_sq = _F1 if p == 2 else Fraction(p - 2, 2)
    return TrigSums(Fraction(-1), sum_cos_sq, Fraction(p * p - 1, 6))


_TRIG_SMALL_MAX = 32


def _trig_sums_brute_small(p: int) -> TrigSums:
    # direct field arithmetic: every term built as a Cyclotomic and inverted
    # by the extended Euclid
    s_cos = Cyclotomic.zero(p)
    s_cos_sq = Cyclotomic.zero(p)
    s_inv = Cyclotomic.zero(p)
    one = Cyclotomic.one(p)
    for j in range(1, p):
        c = cos_of(p, j)
        s_cos = s_cos + c
        s_cos_sq = s_cos_sq + c * c
        s_inv = s_inv + (one - c).inverse()
    vals = []
    for s in (s_cos, s_cos_sq, s_inv):
        q = s.as_rational()
        if q is None:
            raise ConsistencyError("group-summed trig quantity is not rational")
        vals.append(q)
    return TrigSums(*vals)


def trig_sums(p: int) -> TrigSums:
    """Exact sums over the nontrivial group elements, theta_j = 2*pi*j/p:

        sum cos(theta_j),  sum cos^2(theta_j),  sum 1/(1 - cos(theta_j))

    for j = 1..p-1, computed by brute-force cyclotomic summation and checked
    against the closed forms -1, (p-2)/2 (p >= 3; 1 at p = 2), (p^2-1)/6.
    """
    if p < 2:
        raise ValueError("p must be at least 2 (empty sums are the caller's business)")
    if p <= _TRIG_SMALL_MAX:
        brute = _trig_sums_brute_small(p)
    else:
        from . import identities
        sc, sc2 = identities.sum_cos_and_cos_sq(p)
        brute = TrigSums(sc, sc2, identities.sum_inv_one_minus_cos(p))
    closed = _trig_closed_forms(p)
    if brute != closed:
        raise ConsistencyError(
            f"trig sums disagree at p={p}: brute {brute} vs closed {closed}")
    return closed
