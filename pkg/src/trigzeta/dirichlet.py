"""Riemann zeta and Dirichlet eta/lambda/beta on the real line.

Continuation strategy: for s > 0 everything routes through the
Euler-Maclaurin Hurwitz engine; for s < 0 zeta goes through its
functional equation (one Gamma, one cosine, one zeta at 1-s > 1), which
is far better conditioned than Euler-Maclaurin at deeply negative
order.  beta likewise uses its functional equation below s = -1/2 so
that beta(1-2n) comes out exactly zero; elsewhere it uses the Hurwitz
decomposition 4^-s (zeta(s,1/4) - zeta(s,3/4)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError
from .foundations import cospi, gamma_fn, log_gamma, sinpi
from .hurwitz import hurwitz_zeta

__all__ = [
    "SpecialValue",
    "SPECIAL_VALUES",
    "riemann_zeta",
    "zeta_neg_odd",
    "zeta_prime_neg_even",
    "eta",
    "dirichlet_lambda",
    "beta_fn",
    "beta_prime_neg_odd",
]

_POLE_BAND = 1e-3
_LN2 = math.log(2.0)


def _zeta_unguarded(s: float) -> float:
    if s == 1.0:
        raise PoleError("zeta has a pole at s=1")
    if s >= 0.0:
        return hurwitz_zeta(s, 1.0)
    # zeta(s) = 2 zeta(1-s) Gamma(1-s) cos(pi (1-s)/2) / (2 pi)^(1-s)
    u = 1.0 - s
    cos_term = cospi(0.5 * u)
    if cos_term == 0.0:
        return 0.0
    log_mag = math.log(2.0) + log_gamma(u) - u * math.log(2.0 * math.pi)
    return hurwitz_zeta(u, 1.0) * cos_term * math.exp(log_mag)


def riemann_zeta(s: float) -> float:
    """zeta(s) on the real line, s away from the pole at 1."""
    if abs(s - 1.0) < _POLE_BAND:
        raise PoleError(f"zeta rejected within {_POLE_BAND} of the pole at s=1")
    return _zeta_unguarded(s)


def zeta_neg_odd(n: int) -> float:
    """zeta(1-2n) = (-1)^n 2 (2n-1)! zeta(2n) / (2 pi)^(2n)."""
    if n < 1:
        raise DomainError("zeta_neg_odd requires n >= 1")
    sign = -1.0 if n % 2 else 1.0
    log_mag = (
        math.log(2.0)
        + math.lgamma(2.0 * n)
        - 2.0 * n * math.log(2.0 * math.pi)
    )
    return sign * hurwitz_zeta(2.0 * n, 1.0) * math.exp(log_mag)


def zeta_prime_neg_even(n: int) -> float:
    """zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2 (2 pi)^(2n))."""
    if n < 1:
        raise DomainError("zeta_prime_neg_even requires n >= 1")
    sign = -1.0 if n % 2 else 1.0
    log_mag = (
        math.lgamma(2.0 * n + 1.0)
        - math.log(2.0)
        - 2.0 * n * math.log(2.0 * math.pi)
    )
    return sign * hurwitz_zeta(2.0 * n + 1.0, 1.0) * math.exp(log_mag)


def eta(s: float) -> float:
    """Dirichlet eta; entire, with eta(1) = log 2 special-cased."""
    if s == 1.0:
        return _LN2
    # eta(s) = (1 - 2^(1-s)) zeta(s); the prefactor via expm1 so the
    # removable singularity at s=1 cancels cleanly against the pole.
    return -math.expm1((1.0 - s) * _LN2) * _zeta_unguarded(s)


def dirichlet_lambda(s: float) -> float:
    """Dirichlet lambda = (1 - 2^-s) zeta(s); pole at s=1."""
    if abs(s - 1.0) < _POLE_BAND:
        raise PoleError(f"lambda rejected within {_POLE_BAND} of the pole at s=1")
    return _lambda_unguarded(s)


def _lambda_unguarded(s: float) -> float:
    if s == 1.0:
        raise PoleError("lambda has a pole at s=1")
    return -math.expm1(-s * _LN2) * _zeta_unguarded(s)


def _beta_hurwitz(s: float) -> float:
    return 4.0 ** (-s) * (hurwitz_zeta(s, 0.25) - hurwitz_zeta(s, 0.75))


def beta_fn(s: float) -> float:
    """Dirichlet beta, entire in s."""
    if abs(s - 1.0) < _POLE_BAND:
        # Both Hurwitz terms blow up individually near s=1; use the
        # functional equation with the 0/0 factor evaluated safely:
        # beta(s) = (pi/2)^(s-1) Gamma(1-s) cos(pi s/2) beta(1-s) and
        # Gamma(1-s) cos(pi s/2) = Gamma(2-s) sin(pi(1-s)/2)/(1-s).
        u = 1.0 - s
        factor = 0.5 * math.pi if u == 0.0 else sinpi(0.5 * u) / u
        return (
            (0.5 * math.pi) ** (s - 1.0)
            * gamma_fn(2.0 - s)
            * factor
            * _beta_hurwitz(u)
        )
    if s < -0.5:
        # beta(s) = (2/pi)^u sin(pi u/2) Gamma(u) beta(u), u = 1-s > 1;
        # exact zeros at negative odd integers come out exactly.
        u = 1.0 - s
        sin_term = sinpi(0.5 * u)
        if sin_term == 0.0:
            return 0.0
        return (2.0 / math.pi) ** u * sin_term * gamma_fn(u) * _beta_hurwitz(u)
    return _beta_hurwitz(s)


def beta_prime_neg_odd(m: int, k: int) -> float:
    """beta'(2k-2m+1) = -(pi/2)^(2k-2m+1) (-1)^(k-m) Gamma(2m-2k) beta(2m-2k)."""
    if m < 2 or not (1 <= k <= m - 1):
        raise DomainError("beta_prime_neg_odd requires m >= 2 and 1 <= k <= m-1")
    exponent = 2 * k - 2 * m + 1
    sign = -1.0 if (k - m) % 2 else 1.0
    order = 2 * m - 2 * k
    return -((0.5 * math.pi) ** exponent) * sign * gamma_fn(float(order)) * beta_fn(
        float(order)
    )


@dataclass(frozen=True)
class SpecialValue:
    function_id: str  # zeta | eta | lambda | beta
    argument: int
    value: float
    exactness: str  # exact-zero | exact-rational | transcendental-formula


def _build_special_values() -> tuple[SpecialValue, ...]:
    entries = [
        SpecialValue("zeta", 0, -0.5, "exact-rational"),
        SpecialValue("eta", 1, _LN2, "transcendental-formula"),
        SpecialValue("beta", 0, 0.5, "exact-rational"),
        SpecialValue("beta", 1, 0.25 * math.pi, "transcendental-formula"),
    ]
    for n in range(1, 9):
        entries.append(SpecialValue("zeta", -2 * n, 0.0, "exact-zero"))
        entries.append(SpecialValue("eta", -2 * n, 0.0, "exact-zero"))
        entries.append(SpecialValue("lambda", -2 * n, 0.0, "exact-zero"))
        entries.append(SpecialValue("beta", -2 * n + 1, 0.0, "exact-zero"))
    return tuple(entries)


SPECIAL_VALUES = _build_special_values()

_EVALUATORS = {
    "zeta": riemann_zeta,
    "eta": eta,
    "lambda": dirichlet_lambda,
    "beta": beta_fn,
}


def evaluate_function(function_id: str, s: float) -> float:
    """Evaluate one of zeta/eta/lambda/beta by name."""
    try:
        fn = _EVALUATORS[function_id]
    except KeyError:
        raise DomainError(f"unknown function id {function_id!r}") from None
    return fn(s)
