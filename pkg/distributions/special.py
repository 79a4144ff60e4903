# File: distributions/special.py
"""
The q-gamma function, the q,k-gamma and q,k-beta functions, and the
kernels their integral representations integrate against.
"""

from enum import Enum
import logging
import math
from typing import Optional

from core.exceptions import NonConvergenceError, QDomainError
from core.qcore import (
    QParams,
    SeriesControl,
    mellin_q_transform,
    q_bracket,
    q_exponential_E,
    q_shifted_power,
    resolve_control,
    sum_series,
    validate_q,
)

logger = logging.getLogger(__name__)

# Q*u/(1-Q) above this switches the kernel from its alternating series to
# the log form of its product
KERNEL_SERIES_REGION = 4.0


class GammaEvalMethod(str, Enum):
    CLOSED_FORM = 'closed_form'
    INFINITE_PRODUCT = 'infinite_product'
    SERIES = 'series'
    Q_INTEGRAL = 'q_integral'

    @classmethod
    def parse(cls, value) -> 'GammaEvalMethod':
        aliases = {'closed': cls.CLOSED_FORM, 'product': cls.INFINITE_PRODUCT, 'integral': cls.Q_INTEGRAL}
        if isinstance(value, cls):
            return value
        if value in aliases:
            return aliases[value]
        try:
            return cls(value)
        except ValueError:
            raise QDomainError(f"unknown gamma evaluation method {value!r}") from None


class BetaEvalMethod(str, Enum):
    GAMMA_RATIO = 'gamma_ratio'
    CLOSED_FORM = 'closed_form'
    Q_INTEGRAL = 'q_integral'

    @classmethod
    def parse(cls, value) -> 'BetaEvalMethod':
        aliases = {'ratio': cls.GAMMA_RATIO, 'closed': cls.CLOSED_FORM, 'integral': cls.Q_INTEGRAL}
        if isinstance(value, cls):
            return value
        if value in aliases:
            return aliases[value]
        try:
            return cls(value)
        except ValueError:
            raise QDomainError(f"unknown beta evaluation method {value!r}") from None


def _require_positive(name, value):
    if not math.isfinite(value) or value <= 0:
        raise QDomainError(f"{name} must be positive, got {value}")


# ═══ Kernels ═══

def kgamma_upper_limit(params: QParams) -> float:
    """Right end of the q,k-gamma support: ([k]_q / (1 - q^k))^{1/k}"""
    return (params.bracket_k / (1.0 - params.base)) ** (1.0 / params.k)


def kgamma_kernel(x: float, params: QParams, ctl: Optional[SeriesControl] = None) -> float:
    """
    E_{q^k}^{-q^k x^k / [k]_q} on 0 <= x <= upper limit.

    With Q = q^k and u = x^k (1-Q)/[k]_q this is prod_{j>=0} (1 - Q^{j+1} u).
    Small Q*u/(1-Q) uses the alternating series; larger values use
    log E = -sum_r (Q u)^r / (r (1 - Q^r)).
    """
    if x < 0:
        raise QDomainError(f"the q,k-gamma kernel is defined for x >= 0, got {x}")
    ctl = resolve_control(ctl)
    Q = params.base
    if x == 0 or Q == 0:
        return 1.0
    bracket = params.bracket_k
    u = x ** params.k * (1.0 - Q) / bracket
    if u > 1.0 + 1e-12:
        raise QDomainError(f"x={x} lies beyond the q,k-gamma support end {kgamma_upper_limit(params)}")
    u = min(u, 1.0)

    if Q * u / (1.0 - Q) <= KERNEL_SERIES_REGION:
        step = -(x ** params.k) / bracket

        def series_terms():
            term = 1.0
            yield term
            n = 1
            while True:
                term *= Q ** n * step / q_bracket(n, Q)
                yield term
                n += 1

        return sum_series(series_terms(), ctl, label='kgamma_kernel', alternating=True)

    def log_terms():
        power = 1.0
        q_power = 1.0
        r = 1
        while True:
            power *= Q * u
            q_power *= Q
            yield -power / (r * (1.0 - q_power))
            r += 1

    return math.exp(sum_series(log_terms(), ctl, label='kgamma_kernel_log'))


def kbeta_upper_limit(params: QParams) -> float:
    """[k]_q^{1/k}"""
    return params.bracket_k ** (1.0 / params.k)


def kbeta_kernel(x: float, s: float, params: QParams, ctl: Optional[SeriesControl] = None) -> float:
    """(1 - q^k x^k / [k]_q)_{q^k}^{s/k - 1} on 0 <= x <= [k]_q^{1/k}"""
    if x < 0:
        raise QDomainError(f"the q,k-beta kernel is defined for x >= 0, got {x}")
    bracket = params.bracket_k
    ratio = x ** params.k / bracket
    if ratio > 1.0 + 1e-12:
        raise QDomainError(f"x={x} lies beyond the q,k-beta support end {kbeta_upper_limit(params)}")
    return q_shifted_power(-params.base * min(ratio, 1.0), s / params.k - 1.0, params.base, ctl)


# ═══ Gamma functions ═══

def gamma_q(t: float, q: float, ctl: Optional[SeriesControl] = None, method='closed_form') -> float:
    """
    Jackson q-gamma Gamma_q(t) = (1-q)^{1-t} (q;q)_inf / (q^t;q)_inf.
    method='q_integral' integrates x^{t-1} E_q^{-qx} over [0, 1/(1-q)].
    """
    _require_positive('t', t)
    validate_q(q)
    method = GammaEvalMethod.parse(method)
    if method is GammaEvalMethod.CLOSED_FORM:
        return q_shifted_power(-q, t - 1.0, q, ctl) / (1.0 - q) ** (t - 1.0)
    if method is GammaEvalMethod.Q_INTEGRAL:
        ctl = resolve_control(ctl)
        return mellin_q_transform(lambda x: q_exponential_E(-q * x, q, ctl), 1.0 / (1.0 - q), t, q, ctl)
    raise QDomainError(f"gamma_q supports closed_form and q_integral, got {method.value}")


def _gamma_series_sum(t: float, params: QParams, ctl: Optional[SeriesControl]) -> float:
    """sum_n Q^{n(n+1)/2} / ((1 - q^{kn+t}) (Q-1)^n [n]_Q!), Q = q^k"""
    ctl = resolve_control(ctl)
    q, k, Q = params.q, params.k, params.base

    def terms():
        coefficient = 1.0
        n = 0
        while True:
            if n:
                coefficient *= Q ** n / ((Q - 1.0) * q_bracket(n, Q))
            yield coefficient / (1.0 - q ** (k * n + t))
            n += 1

    return sum_series(terms(), ctl, label='gamma_qk_series', alternating=True)


def gamma_qk(t: float, params: QParams, method=GammaEvalMethod.CLOSED_FORM,
             ctl: Optional[SeriesControl] = None) -> float:
    """Gamma_{q,k}(t) for t > 0, by any of the four evaluation methods"""
    _require_positive('t', t)
    method = GammaEvalMethod.parse(method)
    q, k, Q = params.q, params.k, params.base
    exponent = t / k - 1.0

    if method is GammaEvalMethod.CLOSED_FORM:
        return q_shifted_power(-Q, exponent, Q, ctl) / (1.0 - q) ** exponent

    if method is GammaEvalMethod.INFINITE_PRODUCT:
        # (1-q)^{1-t/k} (q^k;q^k)_inf / (q^t;q^k)_inf, summed as log factors
        ctl = resolve_control(ctl)
        shifted = q ** t
        logs = []
        small = 0
        for j in range(ctl.max_terms):
            top = Q ** (j + 1)
            bottom = shifted * Q ** j
            logs.append(math.log1p(-top) - math.log1p(-bottom))
            if top < ctl.rtol and bottom < ctl.rtol:
                small += 1
                if small >= ctl.consecutive:
                    return math.exp(math.fsum(logs)) / (1.0 - q) ** exponent
            else:
                small = 0
        logger.warning(f"gamma_qk product form: t={t} {params} not settled")
        raise NonConvergenceError(f"infinite product did not converge within {ctl.max_terms} factors")

    if method is GammaEvalMethod.SERIES:
        return _gamma_series_sum(t, params, ctl) / (1.0 - q) ** exponent

    ctl = resolve_control(ctl)
    return mellin_q_transform(lambda x: kgamma_kernel(x, params, ctl), kgamma_upper_limit(params), t, q, ctl)


def gamma_qk_lemma_check(t: float, params: QParams, ctl: Optional[SeriesControl] = None):
    """(Gamma_{q,k}(t), [k]_q^{t/k-1} Gamma_{q^k}(t/k))"""
    left = gamma_qk(t, params, ctl=ctl)
    right = params.bracket_k ** (t / params.k - 1.0) * gamma_q(t / params.k, params.base, ctl)
    return left, right


def pochhammer_identity_corollary(t: float, params: QParams, ctl: Optional[SeriesControl] = None):
    """
    ((1 - q^k)_{q^k}^{t/k-1}, series of the series representation without its prefactor).
    Both sides equal (1-q)^{t/k-1} Gamma_{q,k}(t).
    """
    _require_positive('t', t)
    left = q_shifted_power(-params.base, t / params.k - 1.0, params.base, ctl)
    right = _gamma_series_sum(t, params, ctl)
    return left, right


# ═══ Beta function ═══

def beta_qk(t: float, s: float, params: QParams, method=BetaEvalMethod.GAMMA_RATIO,
            ctl: Optional[SeriesControl] = None) -> float:
    """B_{q,k}(t, s) for t, s > 0"""
    _require_positive('t', t)
    _require_positive('s', s)
    method = BetaEvalMethod.parse(method)
    q, k, Q = params.q, params.k, params.base

    if method is BetaEvalMethod.GAMMA_RATIO:
        return gamma_qk(t, params, ctl=ctl) * gamma_qk(s, params, ctl=ctl) / gamma_qk(t + s, params, ctl=ctl)

    if method is BetaEvalMethod.CLOSED_FORM:
        return ((1.0 - q) * q_shifted_power(-Q, s / k - 1.0, Q, ctl)
                / q_shifted_power(-(q ** t), s / k, Q, ctl))

    ctl = resolve_control(ctl)
    integral = mellin_q_transform(lambda x: kbeta_kernel(x, s, params, ctl),
                                  kbeta_upper_limit(params), t, q, ctl)
    return params.bracket_k ** (-t / k) * integral
