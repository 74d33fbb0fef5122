"""Hurwitz zeta and its order-derivative via Euler-Maclaurin summation.

The expansion used everywhere (N direct terms, M Bernoulli corrections):

    zeta(s,a) ~ sum_{k=0}^{N-1} (k+a)^-s
              + (N+a)^{1-s}/(s-1) + (N+a)^-s / 2
              + sum_{j=1}^{M} B_{2j}/(2j)! * (s)_{2j-1} * (N+a)^{-s-2j+1}

The s-derivative is the term-by-term analytic derivative of the same
expansion (never an internal finite difference): the closed forms built
on top of it are differences of nearly equal derivative values and a
finite-difference route would lose half the working digits.

Plan selection trades two float64 error sources against each other: the
asymptotic truncation error (first omitted Bernoulli term) shrinks as N
grows, while the rounding error grows like eps*(N+a)^(|s|+1) for
negative s because the large direct terms cancel against the integral
term.  Deeply negative s therefore gets a small direct sum sized from a
cancellation budget, and a correction depth chosen by scanning the term
magnitudes until they stop decreasing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError
from .foundations import (
    BERNOULLI,
    bernoulli_float,
    pochhammer,
    pochhammer_sderiv,
)

__all__ = [
    "HurwitzPoint",
    "EulerMaclaurinPlan",
    "plan_for",
    "hurwitz_zeta",
    "hurwitz_zeta_sderiv",
    "hurwitz_formula_partial",
]

_MAX_CORRECTION = BERNOULLI.capacity // 2  # highest usable B_{2j}


@dataclass(frozen=True)
class HurwitzPoint:
    """A (order, offset) evaluation point for zeta(s, a)."""

    s: float
    a: float

    def __post_init__(self):
        if self.a <= 0.0:
            raise DomainError(f"Hurwitz offset must be positive, got a={self.a}")
        if self.s == 1.0:
            raise PoleError("Hurwitz zeta has a pole at s=1")


@dataclass(frozen=True)
class EulerMaclaurinPlan:
    shift_n: int
    correction_m: int
    est_error: float

    def __post_init__(self):
        if self.shift_n < 1:
            raise DomainError("Euler-Maclaurin plan needs shift_n >= 1")
        if not (1 <= self.correction_m <= _MAX_CORRECTION):
            raise DomainError(
                f"correction depth must lie in [1, {_MAX_CORRECTION}]"
            )
        if not (math.isfinite(self.est_error) and self.est_error > 0.0):
            raise DomainError("est_error must be finite and positive")


def plan_for(s: float, a: float) -> EulerMaclaurinPlan:
    """Deterministic Euler-Maclaurin plan for the point (s, a)."""
    if a <= 0.0:
        raise DomainError(f"Hurwitz offset must be positive, got a={a}")
    if s > -2.0:
        shift_n = max(16, math.ceil(abs(s)) + 12)
    else:
        # Negative s: the direct terms grow like (k+a)^|s| and cancel
        # against the integral term; size the direct sum so that
        # eps*(N+a)^(|s|+1) stays ~1e3*eps below the expected magnitude
        # of the result (Bernoulli-number growth).
        sigma = -s
        scale = max(
            1.0,
            2.0
            * math.exp(math.lgamma(sigma + 2.0) - (sigma + 1.0) * math.log(2.0 * math.pi))
            / (sigma + 1.0),
        )
        log_budget = (4.0 + math.log10(scale)) / (sigma + 1.0)
        base_target = max(2.25, 10.0 ** log_budget)
        shift_n = min(16, max(1, round(base_target - a)))
    base = shift_n + a
    log_base = math.log(base)
    # Optimal truncation of the asymptotic correction series: scan the
    # term magnitudes (including the s-derivative factor, which does not
    # terminate where the plain Pochhammer vanishes) and cut at the
    # global minimum.
    m_used = 1
    est = math.inf
    for j in range(1, _MAX_CORRECTION + 1):
        weight = max(
            abs(pochhammer(s, 2 * j - 1)), abs(pochhammer_sderiv(s, 2 * j - 1))
        )
        size = (
            abs(bernoulli_float(2 * j)) / math.factorial(2 * j) * weight
        ) * math.exp((-s - 2 * j + 1) * log_base) * (1.0 + log_base)
        if size <= est:
            m_used = j
            est = size
        if size < 1e-19:
            break
    est = max(est, 1e-18)
    # Rounding floor from the cancelling large terms at negative s.
    est += 1e-16 * math.exp(max(0.0, -s + 1.0) * log_base)
    return EulerMaclaurinPlan(shift_n, m_used, est)


def _em_core(s: float, a: float, plan: EulerMaclaurinPlan, want_deriv: bool):
    n = plan.shift_n
    base = n + a
    log_base = math.log(base)
    parts = []
    dparts = [] if want_deriv else None
    for k in range(n):
        x = k + a
        lx = math.log(x)
        p = math.exp(-s * lx)
        parts.append(p)
        if want_deriv:
            dparts.append(-lx * p)
    tail_pow = math.exp((1.0 - s) * log_base)  # (N+a)^{1-s}
    parts.append(tail_pow / (s - 1.0))
    half = 0.5 * math.exp(-s * log_base)
    parts.append(half)
    if want_deriv:
        dparts.append(-tail_pow * (log_base / (s - 1.0) + 1.0 / (s - 1.0) ** 2))
        dparts.append(-log_base * half)
    for j in range(1, plan.correction_m + 1):
        coeff = bernoulli_float(2 * j) / math.factorial(2 * j)
        power = math.exp((-s - 2 * j + 1) * log_base)
        poch = pochhammer(s, 2 * j - 1)
        parts.append(coeff * poch * power)
        if want_deriv:
            dpoch = pochhammer_sderiv(s, 2 * j - 1)
            dparts.append(coeff * (dpoch - poch * log_base) * power)
    value = math.fsum(parts)
    if want_deriv:
        return value, math.fsum(dparts)
    return value, None


def hurwitz_zeta(s: float, a: float, plan: EulerMaclaurinPlan | None = None) -> float:
    """zeta(s, a) for real s != 1 and a > 0."""
    HurwitzPoint(s, a)  # domain validation
    if plan is None:
        plan = plan_for(s, a)
    value, _ = _em_core(s, a, plan, want_deriv=False)
    return value


def hurwitz_zeta_sderiv(
    s: float, a: float, plan: EulerMaclaurinPlan | None = None
) -> float:
    """d/ds zeta(s, a), the analytic derivative of the expansion."""
    HurwitzPoint(s, a)
    if plan is None:
        plan = plan_for(s, a)
    _, deriv = _em_core(s, a, plan, want_deriv=True)
    return deriv


def hurwitz_formula_partial(s: float, a: float, terms: int) -> float:
    """Truncated right side of the Hurwitz formula for zeta(1-s, a).

    2 Gamma(s)/(2 pi)^s * sum_{n=1}^{terms} cos(pi s/2 - 2 n pi a) / n^s,
    restricted to s > 1 and 0 < a <= 1 where the series converges
    absolutely.  Used purely as an identity-check oracle.
    """
    from .foundations import gamma_fn

    if s <= 1.0:
        raise DomainError("hurwitz_formula_partial requires s > 1")
    if not (0.0 < a <= 1.0):
        raise DomainError("hurwitz_formula_partial requires 0 < a <= 1")
    if terms < 1:
        raise DomainError("terms must be positive")
    import numpy as np

    n = np.arange(1, terms + 1, dtype=np.float64)
    phase = 0.5 * math.pi * s - 2.0 * math.pi * a * n
    total = float(np.sum(np.cos(phase) * n ** (-s)))
    return 2.0 * gamma_fn(s) / (2.0 * math.pi) ** s * total
