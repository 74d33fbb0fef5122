"""Exact-rational and floating-point building blocks.

Bernoulli numbers (exact rationals), gamma/log-gamma/digamma/polygamma,
harmonic numbers, Pochhammer symbols and a few shared constants.  All
functions take real arguments only; the Bernoulli table is built eagerly
at import time and never mutated afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError, ResourceError

__all__ = [
    "CONSTANTS",
    "MathConstants",
    "BernoulliTable",
    "BERNOULLI",
    "bernoulli",
    "bernoulli_float",
    "harmonic",
    "pochhammer",
    "pochhammer_sderiv",
    "log_gamma",
    "gamma_fn",
    "digamma",
    "polygamma",
    "sinpi",
    "cospi",
]


@dataclass(frozen=True)
class MathConstants:
    euler_gamma: float = 0.5772156649015329
    log_2pi: float = math.log(2.0 * math.pi)
    pi: float = math.pi


CONSTANTS = MathConstants()


class BernoulliTable:
    """Exact Bernoulli numbers B_0..B_capacity (B_1 = -1/2 convention).

    Built from the defining recurrence sum_{i=0}^{n} C(n+1, i) B_i = 0,
    kept as Fractions so that Euler-Maclaurin coefficients carry no
    rounding noise.
    """

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        values = [Fraction(1)]
        for n in range(1, capacity + 1):
            acc = Fraction(0)
            for i in range(n):
                acc += math.comb(n + 1, i) * values[i]
            values.append(-acc / (n + 1))
        self.values = tuple(values)
        # Floats cached once; the exact table stays authoritative.
        self._floats = tuple(float(v) for v in values)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError("Bernoulli index must be non-negative")
        if n > self.capacity:
            raise ResourceError(
                f"Bernoulli table capacity {self.capacity} exceeded (asked for B_{n})"
            )
        return self.values[n]

    def as_float(self, n: int) -> float:
        if n < 0:
            raise DomainError("Bernoulli index must be non-negative")
        if n > self.capacity:
            raise ResourceError(
                f"Bernoulli table capacity {self.capacity} exceeded (asked for B_{n})"
            )
        return self._floats[n]


BERNOULLI = BernoulliTable(64)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2)."""
    return BERNOULLI[n]


def bernoulli_float(n: int) -> float:
    return BERNOULLI.as_float(n)


def harmonic(n: int) -> float:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise DomainError("harmonic number index must be non-negative")
    return math.fsum(1.0 / k for k in range(1, n + 1))


def pochhammer(s: float, n: int) -> float:
    """Rising factorial (s)_n = s (s+1) ... (s+n-1), with (s)_0 = 1."""
    if n < 0:
        raise DomainError("pochhammer order must be non-negative")
    out = 1.0
    for i in range(n):
        out *= s + i
    return out


def pochhammer_sderiv(s: float, n: int) -> float:
    """d/ds (s)_n, as the product-rule sum of sub-products.

    Computed as sum_j prod_{i != j} (s+i) so it stays finite when some
    factor (and hence (s)_n itself) is zero.
    """
    if n < 0:
        raise DomainError("pochhammer order must be non-negative")
    if n == 0:
        return 0.0
    # prefix[j] = prod_{i<j}(s+i), suffix[j] = prod_{i>j}(s+i)
    prefix = [1.0] * n
    for j in range(1, n):
        prefix[j] = prefix[j - 1] * (s + j - 1)
    suffix = [1.0] * n
    for j in range(n - 2, -1, -1):
        suffix[j] = suffix[j + 1] * (s + j + 1)
    return math.fsum(prefix[j] * suffix[j] for j in range(n))


def sinpi(t: float) -> float:
    """sin(pi*t) with exact zeros at integer t."""
    n = round(t)
    f = t - n
    if f == 0.0:
        return 0.0
    v = math.sin(math.pi * f)
    return -v if (n & 1) else v


def cospi(t: float) -> float:
    """cos(pi*t) with exact zeros at half-integer t."""
    n = round(t)
    f = t - n
    if abs(f) == 0.5:
        return 0.0
    v = math.cos(math.pi * f)
    return -v if (n & 1) else v


# Lanczos approximation, g = 7, 9 coefficients (the widely published set).
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def _log_gamma_lanczos(s: float) -> float:
    # Valid for s >= 0.5.
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (s - 1.0 + i)
    t = s + _LANCZOS_G - 0.5
    return _LOG_SQRT_2PI + (s - 0.5) * math.log(t) - t + math.log(acc)


def log_gamma(s: float) -> float:
    """log Gamma(s) for s > 0."""
    if s <= 0.0:
        raise DomainError("log_gamma requires s > 0")
    if s >= 0.5:
        return _log_gamma_lanczos(s)
    # Lift small arguments: log Gamma(s) = log Gamma(s+1) - log s.
    return _log_gamma_lanczos(s + 1.0) - math.log(s)


def gamma_fn(s: float) -> float:
    """Gamma(s) for real s, extended below zero by the reflection formula."""
    if s > 0.0:
        return math.exp(log_gamma(s))
    if s == math.floor(s):
        raise PoleError(f"Gamma pole at non-positive integer s={s}")
    # Gamma(s) Gamma(1-s) = pi / sin(pi s)
    return math.pi / (sinpi(s) * math.exp(log_gamma(1.0 - s)))


def digamma(s: float) -> float:
    """psi(s) for real s excluding non-positive integers.

    Recurrence-lifts s above 10, then the Bernoulli asymptotic series;
    negative arguments go through the reflection formula.
    """
    if s <= 0.0:
        if s == math.floor(s):
            raise PoleError(f"digamma pole at non-positive integer s={s}")
        # psi(s) = psi(1-s) - pi*cot(pi*s)
        return digamma(1.0 - s) - math.pi * cospi(s) / sinpi(s)
    acc = 0.0
    x = s
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    # psi(x) ~ ln x - 1/(2x) - sum B_2j / (2j x^{2j})
    tail = 0.0
    power = inv2
    for j in range(1, 8):
        tail += bernoulli_float(2 * j) / (2 * j) * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - tail


def polygamma(n: int, a: float) -> float:
    """psi^{(n)}(a) = (-1)^{n-1} n! zeta(n+1, a) for n >= 1, a > 0."""
    if n < 1:
        raise DomainError("polygamma order must be >= 1")
    if a <= 0.0:
        raise DomainError("polygamma requires a > 0")
    from .hurwitz import hurwitz_zeta  # deferred: hurwitz depends on this module

    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * math.factorial(n) * hurwitz_zeta(n + 1.0, a)
