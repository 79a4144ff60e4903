# File: distributions/densities.py
"""
The q,k-gamma and q,k-beta densities on their finite supports, their
CDFs, and Jackson moments.
"""

from dataclasses import dataclass
from functools import cached_property
import logging
from typing import Optional

from core.exceptions import NumericalToleranceError, PrecisionLossError, QDomainError
from core.qcore import (
    QParams,
    SeriesControl,
    mellin_q_transform,
    q_bracket,
    q_factorial,
    q_shifted_power,
    resolve_control,
    sum_series,
)

from .special import (
    beta_qk,
    gamma_qk,
    kbeta_kernel,
    kbeta_upper_limit,
    kgamma_kernel,
    kgamma_upper_limit,
)

logger = logging.getLogger(__name__)

SUPPORT_SLACK = 1e-12

CDF_METHODS = ('series', 'jackson')


def _clip_to_support(x: float, upper: float) -> float:
    if x < 0 or x > upper * (1.0 + SUPPORT_SLACK):
        raise QDomainError(f"x={x} is outside the support [0, {upper}]")
    return min(x, upper)


def _check_cdf_method(method):
    if method not in CDF_METHODS:
        raise QDomainError(f"CDF method must be one of {', '.join(CDF_METHODS)}, got {method!r}")


@dataclass(frozen=True)
class KGammaDist:
    """q,k-gamma law with shape t on [0, ([k]_q/(1-q^k))^{1/k}]"""
    params: QParams
    t: float

    def __post_init__(self):
        if not self.t > 0:
            raise QDomainError(f"t must be positive, got {self.t}")

    @cached_property
    def upper(self) -> float:
        return kgamma_upper_limit(self.params)

    @cached_property
    def normalizer(self) -> float:
        return gamma_qk(self.t, self.params)

    def kernel(self, x: float, ctl: Optional[SeriesControl] = None) -> float:
        return kgamma_kernel(x, self.params, ctl)

    def density(self, x: float, ctl: Optional[SeriesControl] = None) -> float:
        return gamma_density(self, x, ctl)

    def cdf(self, x: float, method: str = 'series', ctl: Optional[SeriesControl] = None) -> float:
        return gamma_cdf(self, x, method, ctl)


@dataclass(frozen=True)
class KBetaDist:
    """q,k-beta law with shapes t, s on [0, [k]_q^{1/k}]"""
    params: QParams
    t: float
    s: float

    def __post_init__(self):
        if not self.t > 0 or not self.s > 0:
            raise QDomainError(f"t and s must be positive, got t={self.t}, s={self.s}")

    @cached_property
    def upper(self) -> float:
        return kbeta_upper_limit(self.params)

    @cached_property
    def normalizer(self) -> float:
        """B_{q,k}(t,s) [k]_q^{t/k}"""
        return beta_qk(self.t, self.s, self.params) * self.params.bracket_k ** (self.t / self.params.k)

    def kernel(self, x: float, ctl: Optional[SeriesControl] = None) -> float:
        return kbeta_kernel(x, self.s, self.params, ctl)

    def density(self, x: float, ctl: Optional[SeriesControl] = None) -> float:
        return beta_density(self, x, ctl)

    def cdf(self, x: float, method: str = 'series', ctl: Optional[SeriesControl] = None) -> float:
        return beta_cdf(self, x, method, ctl)


def _density(dist, x: float, ctl: Optional[SeriesControl]) -> float:
    x = _clip_to_support(x, dist.upper)
    if x == 0 and dist.t < 1:
        raise QDomainError(f"the density is unbounded at x=0 for t={dist.t} < 1")
    value = x ** (dist.t - 1.0) * dist.kernel(x, ctl) / dist.normalizer
    if value < 0:
        logger.warning(f"negative density {value!r} at x={x} for {dist}")
        raise NumericalToleranceError(f"density evaluated to {value!r} < 0 at x={x}")
    return value


def gamma_density(dist: KGammaDist, x: float, ctl: Optional[SeriesControl] = None) -> float:
    """x^{t-1} E_{q^k}^{-q^k x^k/[k]_q} / Gamma_{q,k}(t)"""
    return _density(dist, x, ctl)


def beta_density(dist: KBetaDist, x: float, ctl: Optional[SeriesControl] = None) -> float:
    """x^{t-1} (1 - q^k x^k/[k]_q)_{q^k}^{s/k-1} / (B_{q,k}(t,s) [k]_q^{t/k})"""
    return _density(dist, x, ctl)


def gamma_cdf(dist: KGammaDist, x: float, method: str = 'series',
              ctl: Optional[SeriesControl] = None) -> float:
    """
    Jackson integral of the density over [0, x]. The series method sums
    (1-q) x^t / Gamma * sum_n (-1)^n Q^{n(n+1)/2} x^{kn} / ([k]^n [n]_Q! (1 - q^{kn+t})).
    """
    _check_cdf_method(method)
    x = _clip_to_support(x, dist.upper)
    if x == 0:
        return 0.0
    ctl = resolve_control(ctl)
    q, k, Q = dist.params.q, dist.params.k, dist.params.base
    t = dist.t

    if method == 'jackson':
        return mellin_q_transform(dist.kernel, x, t, q, ctl) / dist.normalizer

    step = -(x ** k) / dist.params.bracket_k

    def terms():
        coefficient = 1.0
        n = 0
        while True:
            if n:
                coefficient *= Q ** n * step / q_bracket(n, Q)
            yield coefficient / (1.0 - q ** (k * n + t))
            n += 1

    total = sum_series(terms(), ctl, label='gamma_cdf', alternating=True)
    return (1.0 - q) * x ** t * total / dist.normalizer


def beta_cdf(dist: KBetaDist, x: float, method: str = 'series',
             ctl: Optional[SeriesControl] = None) -> float:
    """
    Series form (1-q) x^t / (B [k]^{t/k}) * sum_n q^{nt} (1 - Q^{n+1} x^k/[k])_Q^{s/k-1}
    """
    _check_cdf_method(method)
    x = _clip_to_support(x, dist.upper)
    if x == 0:
        return 0.0
    ctl = resolve_control(ctl)
    q, k, Q = dist.params.q, dist.params.k, dist.params.base
    t, s = dist.t, dist.s

    if method == 'jackson':
        return mellin_q_transform(dist.kernel, x, t, q, ctl) / dist.normalizer

    ratio = x ** k / dist.params.bracket_k

    def terms():
        n = 0
        while True:
            weight = q ** (n * t)
            if weight == 0:
                return
            yield weight * q_shifted_power(-(Q ** (n + 1)) * ratio, s / k - 1.0, Q, ctl)
            n += 1

    total = sum_series(terms(), ctl, label='beta_cdf')
    return (1.0 - q) * x ** t * total / dist.normalizer


def fallback_cdf(dist, x: float, ctl: Optional[SeriesControl] = None) -> float:
    """Series CDF, or the Jackson sum where the alternating series cancels."""
    try:
        return dist.cdf(x, 'series', ctl)
    except PrecisionLossError:
        logger.info(f"{type(dist).__name__}: series lost precision at x={x}, using the Jackson sum")
        return dist.cdf(x, 'jackson', ctl)


def unit_shape_integral(x: float, params: QParams, ctl: Optional[SeriesControl] = None) -> float:
    """
    Jackson integral over [0, x] of the q,k-gamma kernel (shape t = 1):
    (1-q) x sum_n (-1)^n Q^{n(n+1)/2} x^{kn} / ((1 - q^{kn+1}) [k]^n [n]_Q!)
    """
    upper = kgamma_upper_limit(params)
    x = _clip_to_support(x, upper)
    if x == 0:
        return 0.0
    ctl = resolve_control(ctl)
    q, k, Q = params.q, params.k, params.base
    bracket = params.bracket_k

    def terms():
        n = 0
        while True:
            numerator = (-1) ** n * Q ** (n * (n + 1) / 2) * x ** (k * n)
            yield numerator / ((1.0 - q ** (k * n + 1)) * bracket ** n * q_factorial(n, Q))
            n += 1

    return (1.0 - q) * x * sum_series(terms(), ctl, label='unit_shape_integral', alternating=True)


def moment(dist, n: int, ctl: Optional[SeriesControl] = None) -> float:
    """E[X^{nk}] by Jackson integration; equals [t]_{n,k} for the q,k-gamma law"""
    if not isinstance(dist, KGammaDist):
        raise QDomainError("moments are defined for the q,k-gamma law")
    if not isinstance(n, int) or n < 0:
        raise QDomainError(f"n must be a non-negative integer, got {n!r}")
    ctl = resolve_control(ctl)
    exponent = dist.t + n * dist.params.k
    return mellin_q_transform(dist.kernel, dist.upper, exponent, dist.params.q, ctl) / dist.normalizer
