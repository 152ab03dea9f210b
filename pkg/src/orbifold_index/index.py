"""The index engine: correction terms, orbifold characteristics, and the
deformation-complex index by both the fixed-point route and the closed form.

The fixed-point route assembles

    (1/2)(15 chi + 29 tau)
      - (15/2)(1 - 1/p) chi(Sigma) - (29/6)((p^2-1)/p) [Sigma-hat]^2
      - < (1/p) sum_{j=1}^{p-1} ch_j(symbol) / (ch_j(thom) e) * Ahat^2, [Sigma] >

and must land on the same integer as the closed form
(1/2)(15 chi +- 29 tau) - 4 chi(Sigma) -+ 4 [Sigma]^2 for every cone order p.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from . import bundles
from .bundles import GroupElement
from .ring import CohomElement, a_hat_squared, divide_by_e, invert_unit, ring_mul
from .scalars import ConsistencyError, Cyclotomic

_F0 = Fraction(0)


@dataclass(frozen=True)
class TopologicalData:
    """Everything the index formulas see: (chi(M), tau(M), chi(Sigma),
    [Sigma]^2, cone order p)."""

    chi_M: int
    tau_M: int
    chi_Sigma: int
    sigma_sq: int
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("cone order p must be a positive integer")

    @property
    def sigma_hat_sq(self) -> Fraction:
        """Orbifold self-intersection [Sigma-hat]^2 = [Sigma]^2 / p."""
        return Fraction(self.sigma_sq, self.p)


class Duality(Enum):
    ASD = "asd"
    SD = "sd"


@dataclass(frozen=True)
class CorrectionSum:
    """Degree-2 coefficients of the group-averaged correction class."""

    coeff_e: Fraction
    coeff_h: Fraction

    def to_json(self) -> dict:
        return {"e": str(self.coeff_e), "h": str(self.coeff_h)}


def correction_at(gamma: GroupElement) -> CohomElement:
    """Fixed-point contribution of one nontrivial group element:
    (symbol/e) * thom^-1 * Ahat^2, truncated.  Degree-2 coefficients are
    -(1/2)(8 cos + 7) on e and -4 cos - 5/(1 - cos) on h."""
    if gamma.j == 0:
        raise ValueError("identity element is excluded from correction terms")
    q = divide_by_e(bundles.ch_symbol(gamma))
    t_inv = invert_unit(bundles.ch_thom(gamma))
    return ring_mul(ring_mul(q, t_inv), a_hat_squared())


# Above this order the per-element evaluation switches from the generic ring
# pipeline (extended-Euclid scalar inverses) to the closed-form identity
# evaluator in identities.py; the two are equality-tested against each other
# at small p and the identity route verifies its inverses per element.
_PIPELINE_MAX = 24


def _correction_sum(p: int, method: str = "auto") -> CorrectionSum:
    if p < 1:
        raise ValueError("p must be a positive integer")
    if p == 1:
        return CorrectionSum(_F0, _F0)  # empty sum over nontrivial elements
    if method == "auto":
        method = "pipeline" if p <= _PIPELINE_MAX else "identities"
    if method == "pipeline":
        total_e = Cyclotomic.zero(p)
        total_h = Cyclotomic.zero(p)
        for j in range(1, p):
            c = correction_at(GroupElement(p, j))
            total_e = total_e + c.ce
            total_h = total_h + c.ch
        qe = total_e.as_rational()
        qh = total_h.as_rational()
        if qe is None or qh is None:
            raise ConsistencyError(
                f"group-summed correction is not rational at p={p}")
        return CorrectionSum(qe / p, qh / p)
    if method == "identities":
        from . import identities
        coeff_e, coeff_h = identities.correction_sum_fast(p)
        return CorrectionSum(coeff_e, coeff_h)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def correction_sum(p: int) -> CorrectionSum:
    """Brute-force sum of correction_at over j = 1..p-1, scaled by 1/p;
    rationality of the group sum is asserted.  p = 1 is the empty sum."""
    return _correction_sum(p)


def correction_sum_closed_form(p: int) -> CorrectionSum:
    """Closed form (1/p)(-(1/2)(7p - 15) on e, 4 - (5/6)(p^2 - 1) on h);
    valid for p >= 2 only, since it was derived from identities over a
    nonempty group sum."""
    if p < 2:
        raise ValueError("closed form requires p >= 2")
    coeff_e = Fraction(-(7 * p - 15), 2 * p)
    coeff_h = Fraction(24 - 5 * (p * p - 1), 6 * p)
    return CorrectionSum(coeff_e, coeff_h)


def index_smooth(chi_M: int, tau_M: int, duality: Duality) -> Fraction:
    """Smooth-case index (1/2)(15 chi +- 29 tau), as an exact rational."""
    sign = 1 if duality is Duality.ASD else -1
    return Fraction(15 * chi_M + sign * 29 * tau_M, 2)


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {value}")
    return int(value)


def index_kawasaki(data: TopologicalData, duality: Duality) -> int:
    """Index via the orbifold fixed-point route; independent of p and equal
    to the closed form, which the test suites assert exactly."""
    if duality is Duality.SD:
        flipped = dataclasses.replace(data, tau_M=-data.tau_M,
                                      sigma_sq=-data.sigma_sq)
        return index_kawasaki(flipped, Duality.ASD)
    p = data.p
    cs = correction_sum(p)
    shs = data.sigma_hat_sq
    total = (index_smooth(data.chi_M, data.tau_M, Duality.ASD)
             - Fraction(15, 2) * Fraction(p - 1, p) * data.chi_Sigma
             - Fraction(29, 6) * Fraction(p * p - 1, p) * shs
             - (cs.coeff_e * data.chi_Sigma + cs.coeff_h * shs))
    return _as_integer(total, "fixed-point index")


def index_closed_form(data: TopologicalData, duality: Duality) -> int:
    """Index via the closed form; rejects p = 1, where only the smooth
    formula applies (the two genuinely differ there)."""
    if data.p < 2:
        raise ValueError(
            "closed form applies to actual cone orders p >= 2; "
            "use index_smooth for the smooth case p = 1")
    sign = 1 if duality is Duality.ASD else -1
    total = (index_smooth(data.chi_M, data.tau_M, duality)
             - 4 * data.chi_Sigma - sign * 4 * data.sigma_sq)
    return _as_integer(total, "closed-form index")


def chi_orb(chi_M: int, beta: Fraction, chi_Sigma: int) -> Fraction:
    """Orbifold Euler characteristic chi(M) - (1 - beta) chi(Sigma) for cone
    angle 2*pi*beta."""
    beta = Fraction(beta)
    if beta <= 0:
        raise ValueError("cone angle parameter beta must be positive")
    return chi_M - (1 - beta) * chi_Sigma


def tau_orb(tau_M: int, beta: Fraction, sigma_sq: int) -> Fraction:
    """Orbifold signature tau(M) - (1/3)(1 - beta^2) [Sigma]^2."""
    beta = Fraction(beta)
    if beta <= 0:
        raise ValueError("cone angle parameter beta must be positive")
    return tau_M - Fraction(1, 3) * (1 - beta * beta) * sigma_sq
