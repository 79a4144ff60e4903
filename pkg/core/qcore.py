# File: core/qcore.py
"""
Scalar q-primitives: brackets, Pochhammer products, q-shifted products,
the q-exponential, the q-derivative and the Jackson q-integral.

Every infinite sum or product is truncated through a SeriesControl.
"""

from dataclasses import dataclass
import logging
import math
import sys
from typing import Callable, Iterable, Iterator, Optional, Union

from django.conf import settings

from .exceptions import NonConvergenceError, PrecisionLossError, QDomainError

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon

RealFunction = Callable[[float], float]


def qcalc_setting(name):
    """Read one entry of settings.QCALC"""
    return settings.QCALC[name]


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy shared by all series, product and lattice evaluators"""
    rtol: float
    consecutive: int
    max_terms: int

    def __post_init__(self):
        if not self.rtol > 0:
            raise QDomainError(f"rtol must be positive, got {self.rtol}")
        if self.consecutive < 1:
            raise QDomainError(f"consecutive must be at least 1, got {self.consecutive}")
        if self.max_terms < self.consecutive:
            raise QDomainError(
                f"max_terms ({self.max_terms}) must be >= consecutive ({self.consecutive})"
            )

    @classmethod
    def from_settings(cls):
        return cls(
            rtol=qcalc_setting('SERIES_RTOL'),
            consecutive=qcalc_setting('SERIES_CONSECUTIVE'),
            max_terms=qcalc_setting('SERIES_MAX_TERMS'),
        )


def resolve_control(ctl: Optional[SeriesControl]) -> SeriesControl:
    return ctl if ctl is not None else SeriesControl.from_settings()


def validate_q(q: float) -> float:
    """Accept 0 <= q < 1; q past Q_MAX is reported as non-convergence"""
    if not math.isfinite(q) or not 0 <= q < 1:
        raise QDomainError(f"q must satisfy 0 <= q < 1, got {q}")
    q_max = qcalc_setting('Q_MAX')
    if q > q_max:
        logger.warning(f"q={q} exceeds Q_MAX={q_max}")
        raise NonConvergenceError(
            f"q={q} is above {q_max}; truncation caps would dominate the result"
        )
    return float(q)


@dataclass(frozen=True)
class QParams:
    """Validated pair (q, k): deformation parameter and shape"""
    q: float
    k: float

    def __post_init__(self):
        validate_q(self.q)
        if not math.isfinite(self.k) or self.k <= 0:
            raise QDomainError(f"k must be positive, got {self.k}")

    @property
    def base(self) -> float:
        """The product base q^k"""
        return self.q ** self.k

    @property
    def bracket_k(self) -> float:
        """[k]_q"""
        return q_bracket(self.k, self.q)


def sum_series(terms: Iterable[float], ctl: SeriesControl, *, label: str = 'series',
               alternating: bool = False) -> float:
    """
    Sum terms until `ctl.consecutive` successive terms fall below
    `ctl.rtol` relative to the running sum, or the iterable ends.
    Leading zero terms never count towards convergence, so a sum whose
    first lattice points underflow keeps going until it picks up mass.

    With alternating=True the cancellation estimate EPS * sum|term| / |sum|
    is checked against CANCELLATION_LIMIT, unless the series terminated
    exactly (iterable exhausted, or its last terms are exact zeros).
    """
    accepted = []
    running = 0.0
    magnitude = 0.0
    small = 0
    converged = False
    exhausted = False
    for term in terms:
        if len(accepted) >= ctl.max_terms:
            break
        accepted.append(term)
        running += term
        magnitude += abs(term)
        if magnitude > 0 and abs(term) <= ctl.rtol * abs(running):
            small += 1
            if small >= ctl.consecutive:
                converged = True
                break
        else:
            small = 0
    else:
        converged = exhausted = True

    if not converged:
        logger.warning(f"{label}: no convergence after {ctl.max_terms} terms")
        raise NonConvergenceError(f"{label} did not converge within {ctl.max_terms} terms")

    total = math.fsum(accepted)
    exact = exhausted or all(term == 0 for term in accepted[-ctl.consecutive:])
    if alternating and magnitude > 0 and not exact:
        limit = qcalc_setting('CANCELLATION_LIMIT')
        if total == 0 or EPS * magnitude / abs(total) > limit:
            logger.warning(f"{label}: cancellation, sum|terms|={magnitude:.3e} vs sum={total:.3e}")
            raise PrecisionLossError(
                f"{label} loses too many digits to cancellation "
                f"(sum of |terms| {magnitude:.3e}, value {total:.3e})"
            )
    logger.debug(f"{label}: {len(accepted)} terms, value {total!r}")
    return total


# ═══ Brackets and Pochhammer symbols ═══

def q_bracket(t: float, q: float) -> float:
    """[t]_q = (1 - q^t) / (1 - q); at q=0 this is 1 for t>0 and 0 for t=0"""
    validate_q(q)
    try:
        return (1.0 - q ** t) / (1.0 - q)
    except ZeroDivisionError:
        raise QDomainError(f"[t]_q is undefined at q=0 for t={t} < 0") from None


def q_factorial(n: int, q: float) -> float:
    """[n]_q! = [1]_q [2]_q ... [n]_q"""
    if n < 0:
        raise QDomainError(f"n must be non-negative, got {n}")
    return math.prod(q_bracket(j, q) for j in range(1, n + 1))


def q_pochhammer_k(t: float, n: int, params: QParams) -> float:
    """[t]_{n,k} = prod_{j<n} [t + jk]_q"""
    if n < 0:
        raise QDomainError(f"n must be non-negative, got {n}")
    return math.prod(q_bracket(t + j * params.k, params.q) for j in range(n))


def classical_pochhammer_k(t, n: int, k):
    """(t)_{n,k} = prod_{j<n} (t + jk); exact for integer t and k"""
    if n < 0:
        raise QDomainError(f"n must be non-negative, got {n}")
    return math.prod(t + j * k for j in range(n))


# ═══ q-shifted products ═══

def q_shifted_product(x: float, y: float, n: Union[int, float], base: float,
                      ctl: Optional[SeriesControl] = None) -> float:
    """
    (x + y)_base^n = prod_{j<n} (x + base^j y), with n a non-negative
    integer or math.inf.
    """
    if not 0 <= base < 1:
        raise QDomainError(f"base must satisfy 0 <= base < 1, got {base}")

    if not math.isinf(n):
        if n < 0 or int(n) != n:
            raise QDomainError(f"n must be a non-negative integer or infinity, got {n}")
        return math.prod(x + base ** j * y for j in range(int(n)))

    if x == 0:
        raise QDomainError("the infinite q-shifted product needs x != 0")
    ctl = resolve_control(ctl)
    product = 1.0
    small = 0
    for j in range(ctl.max_terms):
        shift = base ** j * y
        product *= x + shift
        # factor is x * (1 + O(rtol)) from here on
        if abs(shift) < ctl.rtol * abs(x):
            small += 1
            if small >= ctl.consecutive:
                return product
        else:
            small = 0
    logger.warning(f"q_shifted_product: base={base} y={y} not settled after {ctl.max_terms} factors")
    raise NonConvergenceError(
        f"infinite q-shifted product did not converge within {ctl.max_terms} factors"
    )


def q_shifted_power(x: float, t_exponent: float, base: float,
                    ctl: Optional[SeriesControl] = None) -> float:
    """
    (1 + x)_base^t = (1 + x)_base^inf / (1 + base^t x)_base^inf

    Numerator and denominator factors are paired, j by j, so the two
    infinite products never underflow separately when base is close to 1.
    Truncation follows q_shifted_product applied to both products.
    """
    if not 0 <= base < 1:
        raise QDomainError(f"base must satisfy 0 <= base < 1, got {base}")
    if x == 0 or t_exponent == 0:
        return 1.0
    try:
        shifted = base ** t_exponent * x
    except ZeroDivisionError:
        raise QDomainError(
            f"(1+x)_base^t needs base > 0 for t={t_exponent} < 0"
        ) from None
    ctl = resolve_control(ctl)
    ratio = 1.0
    small = 0
    for j in range(ctl.max_terms):
        power = base ** j
        top = power * x
        bottom = power * shifted
        if 1.0 + bottom == 0:
            raise QDomainError(
                f"(1+x)_base^t has a vanishing denominator at x={x}, t={t_exponent}, base={base}"
            )
        ratio *= (1.0 + top) / (1.0 + bottom)
        if abs(top) < ctl.rtol and abs(bottom) < ctl.rtol:
            small += 1
            if small >= ctl.consecutive:
                return ratio
        else:
            small = 0
    logger.warning(f"q_shifted_power: x={x} t={t_exponent} base={base} not settled")
    raise NonConvergenceError(
        f"q-shifted power did not converge within {ctl.max_terms} factors"
    )


# ═══ q-exponential ═══

def q_exponential_E(x: float, base: float, ctl: Optional[SeriesControl] = None) -> float:
    """E_q^x = sum_n q^{n(n-1)/2} x^n / [n]_q!"""
    validate_q(base)
    ctl = resolve_control(ctl)

    def terms():
        term = 1.0
        yield term
        n = 1
        while True:
            term *= base ** (n - 1) * x / q_bracket(n, base)
            yield term
            n += 1

    return sum_series(terms(), ctl, label='q_exponential_E', alternating=x < 0)


def q_exponential_product(x: float, base: float, ctl: Optional[SeriesControl] = None) -> float:
    """Product form E_q^x = (1 + (1-q)x)_q^inf"""
    validate_q(base)
    return q_shifted_product(1.0, (1.0 - base) * x, math.inf, base, ctl)


# ═══ q-derivative and Jackson q-integral ═══

def q_derivative(f: RealFunction, x: float, q: float) -> float:
    """(f(qx) - f(x)) / ((q - 1) x)"""
    validate_q(q)
    if x == 0:
        raise QDomainError("the q-derivative is not defined at x = 0")
    return (f(q * x) - f(x)) / ((q - 1.0) * x)


def jackson_terms(f: RealFunction, endpoint: float, q: float) -> Iterator[float]:
    """
    Terms (1-q) b q^n f(q^n b) of the Jackson sum. Stops once q^n underflows
    to zero, so at q=0 only the n=0 term is produced.
    """
    scale = (1.0 - q) * endpoint
    n = 0
    while True:
        weight = q ** n
        if weight == 0:
            return
        yield scale * weight * f(weight * endpoint)
        n += 1


def jackson_integral(f: RealFunction, a: float, b: float, q: float,
                     ctl: Optional[SeriesControl] = None) -> float:
    """Jackson q-integral of f from a to b, 0 <= a < b"""
    validate_q(q)
    if not 0 <= a < b or not math.isfinite(b):
        raise QDomainError(f"the Jackson integral needs 0 <= a < b < inf, got a={a}, b={b}")
    ctl = resolve_control(ctl)
    upper = sum_series(jackson_terms(f, b, q), ctl, label='jackson_integral')
    if a == 0:
        return upper
    return upper - sum_series(jackson_terms(f, a, q), ctl, label='jackson_integral')


def mellin_q_transform(kernel: RealFunction, upper: float, s: float, q: float,
                       ctl: Optional[SeriesControl] = None) -> float:
    """Mellin q-transform: integral of x^{s-1} kernel(x) d_q x over [0, upper]"""
    return jackson_integral(lambda x: x ** (s - 1) * kernel(x), 0.0, upper, q, ctl)
