# File: core/verification.py
"""
Identity verification suites behind `manage.py verify`.

Each suite is a list of Checks; running a check evaluates both sides of one
identity and records the comparison as a VerifyCase.
"""

from dataclasses import dataclass, field
import logging
import math
from typing import Callable, Dict, List, Optional

import numpy as np

from .exceptions import NonConvergenceError, NumericalToleranceError, QCalculusError
from .qcore import (
    QParams,
    SeriesControl,
    classical_pochhammer_k,
    jackson_integral,
    q_bracket,
    q_derivative,
    q_exponential_E,
    q_exponential_product,
    q_pochhammer_k,
    q_shifted_power,
    q_shifted_product,
)
from .qpoly import poly_eval

logger = logging.getLogger(__name__)

# tolerance kinds; only ANALYTIC tolerances follow `verify --tol`
ANALYTIC = 'analytic'
EXACT = 'exact'
QUADRATURE = 'quadrature'
LIMIT = 'limit'
BOUND = 'bound'

Q_GRID = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99)
K_GRID = (0.5, 1.0, 2.0, 3.7, 5.0)
T_GRID = (0.1, 0.5, 1.0, 2.3, 7.0)
# alternating series stay well conditioned while q^k stays below this
SERIES_BASE_LIMIT = 0.8
INTEGRAL_Q = (0.2, 0.5, 0.8)
MOMENT_Q = (0.2, 0.5, 0.8)
SMALL_INTS = (1, 2, 3)
Q_NEAR_ONE = 0.999


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    params: Dict
    tol: float
    compute: Callable[[], tuple]
    kind: str = ANALYTIC


@dataclass
class VerifyCase:
    id: str
    anchor: str
    params: Dict
    lhs: object
    rhs: object
    rel_err: float
    tol: float
    passed: bool
    reason: str = ''
    nonconvergent: bool = False


@dataclass
class VerifyReport:
    suite: str
    cases: List[VerifyCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> List[VerifyCase]:
        return [case for case in self.cases if not case.passed]

    @property
    def nonconvergent(self) -> bool:
        return any(case.nonconvergent for case in self.cases)


def relative_error(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs))
    if scale == 0:
        return 0.0
    return abs(lhs - rhs) / scale


def run_check(check: Check, tol: Optional[float] = None) -> VerifyCase:
    tolerance = tol if tol is not None and check.kind == ANALYTIC else check.tol
    try:
        lhs, rhs = check.compute()
    except (NonConvergenceError, NumericalToleranceError) as exc:
        logger.warning(f"{check.id} {check.params}: {exc}")
        return VerifyCase(check.id, check.anchor, check.params, None, None, math.nan,
                          tolerance, False, f"{type(exc).__name__}: {exc}", nonconvergent=True)
    except QCalculusError as exc:
        logger.warning(f"{check.id} {check.params}: {exc}")
        return VerifyCase(check.id, check.anchor, check.params, None, None, math.nan,
                          tolerance, False, f"{type(exc).__name__}: {exc}")

    if check.kind == EXACT:
        lhs, rhs = str(lhs), str(rhs)
        passed = lhs == rhs
        error = 0.0 if passed else 1.0
    elif check.kind == BOUND:
        # lhs is a statistic that must stay at or below rhs
        passed = lhs <= rhs
        error = lhs / rhs if rhs else math.inf
    else:
        error = relative_error(lhs, rhs)
        passed = error <= tolerance

    case = VerifyCase(check.id, check.anchor, check.params, lhs, rhs, error, tolerance, passed)
    if not passed:
        logger.warning(f"{check.id} {check.params}: lhs={lhs} rhs={rhs} rel_err={error:.3e} > tol={tolerance:.1e}")
    return case


# ═══ qcore ═══

def _f(x):
    return 1.0 + 2.0 * x + 3.0 * x ** 2


def _g(x):
    return x ** 3 - x + 2.0


def _product_rule(x, q):
    lhs = q_derivative(lambda y: _f(y) * _g(y), x, q)
    rhs = q_derivative(_f, x, q) * _g(x) + _f(q * x) * q_derivative(_g, x, q)
    return lhs, rhs


def _chain_rule(a, b, x, q):
    lhs = q_derivative(lambda y: _f(a * y ** b), x, q)
    rhs = a * q_bracket(b, q) * x ** (b - 1) * q_derivative(_f, a * x ** b, q ** b)
    return lhs, rhs


def _integration_by_parts(a, b, q):
    ctl = SeriesControl(rtol=1e-13, consecutive=3, max_terms=100_000)
    lhs = _f(b) * _g(b) - _f(a) * _g(a)
    first = jackson_integral(lambda x: _f(x) * q_derivative(_g, x, q), a, b, q, ctl)
    second = jackson_integral(lambda x: _g(q * x) * q_derivative(_f, x, q), a, b, q, ctl)
    return lhs, first + second


def _power_rule(s, b, q):
    return jackson_integral(lambda x: x ** s, 0.0, b, q), b ** (s + 1) / q_bracket(s + 1, q)


def qcore_checks() -> List[Check]:
    checks = [
        Check('bracket', '[t]_q = (1-q^t)/(1-q)', {'t': 2, 'q': 0.5}, 1e-15,
              lambda: (q_bracket(2, 0.5), 1.5)),
        Check('jackson_q0', 'int_a^b f d_0x = b f(b) - a f(a)', {'a': 0.5, 'b': 2.0, 'q': 0.0}, 1e-15,
              lambda: (jackson_integral(_f, 0.5, 2.0, 0.0), 2.0 * _f(2.0) - 0.5 * _f(0.5))),
        Check('exp_q0', 'E_0^x = 1 + x', {'x': 2.0, 'q': 0.0}, 1e-15,
              lambda: (q_exponential_E(2.0, 0.0), 3.0)),
    ]
    for q in (0.1, 0.5, 0.9):
        for x in (0.3, 1.0, 2.5):
            checks.append(Check(
                'product_rule', 'd_q(fg) = d_q f g + I_q f d_q g', {'x': x, 'q': q}, 1e-10,
                lambda x=x, q=q: _product_rule(x, q)))
        for b in (1, 2, 3):
            checks.append(Check(
                'chain_rule', 'd_q f(a x^b) = a [b]_q x^{b-1} (d_{q^b} f)(a x^b)',
                {'a': 1.5, 'b': b, 'x': 0.7, 'q': q}, 1e-10,
                lambda b=b, q=q: _chain_rule(1.5, b, 0.7, q)))
    for q in (0.0, 0.3, 0.6):
        checks.append(Check(
            'integration_by_parts', 'f(b)g(b) - f(a)g(a) = int f d_q g d_qx + int I_q g d_q f d_qx',
            {'a': 0.5, 'b': 2.0, 'q': q}, 1e-10,
            lambda q=q: _integration_by_parts(0.5, 2.0, q)))
    for q in (0.2, 0.7):
        for s in (-0.5, 0.0, 1.5, 3.0):
            checks.append(Check(
                'power_rule', 'int_0^b x^s d_qx = b^{s+1}/[s+1]_q', {'s': s, 'b': 2.0, 'q': q}, 1e-12,
                lambda s=s, q=q: _power_rule(s, 2.0, q)))
    for base in (0.3, 0.5):
        for x in (-1.0, 0.5, 2.0):
            checks.append(Check(
                'exp_product', 'E_q^x = (1 + (1-q)x)_q^inf', {'x': x, 'q': base}, 1e-12,
                lambda x=x, base=base: (q_exponential_E(x, base), q_exponential_product(x, base))))
    for n in (1, 2, 3):
        checks.append(Check(
            'shifted_power_integer', '(1+x)_q^n = prod_{j<n} (1 + q^j x)', {'x': -0.3, 'n': n, 'q': 0.6}, 1e-12,
            lambda n=n: (q_shifted_power(-0.3, n, 0.6), q_shifted_product(1.0, -0.3, n, 0.6))))
    checks.append(Check(
        'shifted_power_additive', '(1+x)_q^{s+t} = (1+x)_q^s (1+q^s x)_q^t',
        {'x': -0.3, 's': 0.5, 't': 0.7, 'q': 0.6}, 1e-12,
        lambda: (q_shifted_power(-0.3, 1.2, 0.6),
                 q_shifted_power(-0.3, 0.5, 0.6) * q_shifted_power(0.6 ** 0.5 * -0.3, 0.7, 0.6))))
    for t in SMALL_INTS:
        for k in SMALL_INTS:
            for n in range(6):
                checks.append(Check(
                    'pochhammer_classical_limit', '[t]_{n,k} -> (t)_{n,k} as q -> 1',
                    {'t': t, 'k': k, 'n': n, 'q': Q_NEAR_ONE}, 0.02,
                    lambda t=t, k=k, n=n: (q_pochhammer_k(t, n, QParams(Q_NEAR_ONE, k)),
                                           classical_pochhammer_k(t, n, k)),
                    kind=LIMIT))
    return checks


# ═══ trees ═══

def _round_trips(params) -> tuple:
    from trees.grafting import compose, decompose, grafting_sequences

    total = 0
    recovered = 0
    for seq in grafting_sequences(params):
        total += 1
        if decompose(compose(seq, params), params) == seq:
            recovered += 1
    return recovered, total


def trees_checks() -> List[Check]:
    from trees.grafting import compose, decompose, unweighted_count, weight, weighted_cardinality
    from trees.shapes import GraftingSequence, TreeShapeParams

    checks = []
    for t in SMALL_INTS:
        for k in SMALL_INTS:
            for n in range(6):
                params = TreeShapeParams(t, n, k)
                label = {'t': t, 'n': n, 'k': k}
                checks.append(Check(
                    'tree_theorem', '[t]_{n,k} = |T_{n,k}^t, omega|', label, 0.0,
                    lambda p=params: (weighted_cardinality(p, brute_force=True), weighted_cardinality(p)),
                    kind=EXACT))
                checks.append(Check(
                    'grafting_bijection', 'decompose(compose(l)) = l', label, 0.0,
                    lambda p=params: _round_trips(p), kind=EXACT))
                checks.append(Check(
                    'tree_count', '(t)_{n,k} = |T_{n,k}^t|', label, 0.0,
                    lambda p=params: (unweighted_count(p), sum(weighted_cardinality(p).coefficients)),
                    kind=EXACT))

    example = TreeShapeParams(2, 4, 2)
    seq = GraftingSequence((1, 3, 6, 7))
    checks.append(Check(
        'grafting_golden', 'T = (((r_2 o_1 c_1) o_3 c_2) o_6 c_3) o_7 c_4', {'t': 2, 'n': 4, 'k': 2}, 0.0,
        lambda: (decompose(compose(seq, example), example), seq), kind=EXACT))
    checks.append(Check(
        'weight_golden', 'omega(T) = q^0 q^2 q^5 q^6 = q^13', {'seq': '1,3,6,7'}, 0.0,
        lambda: (weight(seq), 'q^13'), kind=EXACT))
    return checks


# ═══ gamma ═══

def _q_ratio_limit(t, k, n):
    from distributions.special import gamma_qk

    params = QParams(Q_NEAR_ONE, k)
    return gamma_qk(t + n * k, params) / gamma_qk(t, params), classical_pochhammer_k(t, n, k)


def gamma_checks() -> List[Check]:
    from distributions.special import (
        gamma_q,
        gamma_qk,
        gamma_qk_lemma_check,
        kgamma_upper_limit,
        pochhammer_identity_corollary,
    )

    checks = []
    for q in Q_GRID:
        for k in K_GRID:
            params = QParams(q, k)
            label = {'q': q, 'k': k}
            checks.append(Check(
                'gamma_normalization', 'Gamma_{q,k}(k) = 1', label, 1e-13,
                lambda p=params: (gamma_qk(p.k, p), 1.0)))
            well_conditioned = params.base <= SERIES_BASE_LIMIT
            for t in T_GRID:
                label = {'q': q, 'k': k, 't': t}
                checks.append(Check(
                    'gamma_functional_equation', 'Gamma_{q,k}(t+k) = [t]_q Gamma_{q,k}(t)', label, 1e-11,
                    lambda p=params, t=t: (gamma_qk(t + p.k, p), q_bracket(t, p.q) * gamma_qk(t, p))))
                checks.append(Check(
                    'gamma_lemma', 'Gamma_{q,k}(t) = [k]_q^{t/k-1} Gamma_{q^k}(t/k)', label, 1e-10,
                    lambda p=params, t=t: gamma_qk_lemma_check(t, p)))
                checks.append(Check(
                    'gamma_product_form', 'Gamma_{q,k}(t) = (1-q)^{1-t/k} (q^k;q^k)_inf / (q^t;q^k)_inf',
                    label, 1e-10,
                    lambda p=params, t=t: (gamma_qk(t, p, 'infinite_product'), gamma_qk(t, p))))
                if well_conditioned:
                    checks.append(Check(
                        'gamma_series', 'Gamma_{q,k}(t) = (1-q)^{1-t/k} sum_n q^{kn(n+1)/2} / '
                        '((1-q^{kn+t}) (q^k-1)^n [n]_{q^k}!)', label, 1e-10,
                        lambda p=params, t=t: (gamma_qk(t, p, 'series'), gamma_qk(t, p))))
                    checks.append(Check(
                        'pochhammer_corollary', '(1-q^k)_{q^k}^{t/k-1} = sum_n q^{kn(n+1)/2} / '
                        '((1-q^{kn+t}) (q^k-1)^n [n]_{q^k}!)', label, 1e-10,
                        lambda p=params, t=t: pochhammer_identity_corollary(t, p)))
                if q in INTEGRAL_Q:
                    checks.append(Check(
                        'gamma_integral', 'Gamma_{q,k}(t) = int_0^b x^{t-1} E_{q^k}^{-q^k x^k/[k]_q} d_qx',
                        label, 1e-7,
                        lambda p=params, t=t: (gamma_qk(t, p, 'q_integral'), gamma_qk(t, p)),
                        kind=QUADRATURE))

    for t in (1.0, 2.0):
        params = QParams(Q_NEAR_ONE, 1.0)
        checks.append(Check(
            'gamma_integral', 'Gamma_{q,k}(t) = int_0^b x^{t-1} E_{q^k}^{-q^k x^k/[k]_q} d_qx',
            {'q': Q_NEAR_ONE, 'k': 1.0, 't': t}, 1e-7,
            lambda p=params, t=t: (gamma_qk(t, p, 'q_integral'), gamma_qk(t, p)),
            kind=QUADRATURE))

    for q in Q_GRID:
        params = QParams(q, 1.0)
        checks.append(Check(
            'gamma_k1_upper_limit', '[1]_q / (1-q) = 1/(1-q)', {'q': q}, 1e-15,
            lambda p=params: (kgamma_upper_limit(p), 1.0 / (1.0 - p.q))))
        for t in T_GRID:
            checks.append(Check(
                'gamma_k1_reduction', 'Gamma_{q,1}(t) = Gamma_q(t)', {'q': q, 't': t}, 1e-12,
                lambda p=params, t=t: (gamma_qk(t, p), gamma_q(t, p.q))))

    for k in (0.5, 2.0, 3.7):
        checks.append(Check(
            'gamma_q0', 'Gamma_{0,k}(t) = 1', {'q': 0.0, 'k': k, 't': 2.3}, 1e-15,
            lambda k=k: (gamma_qk(2.3, QParams(0.0, k)), 1.0)))
    checks.append(Check(
        'gamma_at_nk', 'Gamma_{q,k}(nk) = prod_{j=1}^{n-1} [jk]_q', {'q': 0.5, 'k': 2, 'n': 4}, 1e-12,
        lambda: (gamma_qk(8.0, QParams(0.5, 2.0)), math.prod(q_bracket(2 * j, 0.5) for j in range(1, 4)))))
    checks.append(Check(
        'gamma_q_factorial', 'Gamma_q(n+1) = [n]_q!', {'q': 0.5, 't': 3}, 1e-12,
        lambda: (gamma_q(3.0, 0.5), q_bracket(1, 0.5) * q_bracket(2, 0.5))))

    for t in SMALL_INTS:
        for k in SMALL_INTS:
            for n in range(6):
                checks.append(Check(
                    'gamma_classical_limit', 'Gamma_{q,k}(t+nk)/Gamma_{q,k}(t) -> (t)_{n,k} as q -> 1',
                    {'t': t, 'k': k, 'n': n, 'q': Q_NEAR_ONE}, 0.02,
                    lambda t=t, k=k, n=n: _q_ratio_limit(t, k, n), kind=LIMIT))
    return checks


# ═══ beta ═══

def _cdf_agreement(dist, points=20):
    """Largest relative gap between series and Jackson CDFs over interior points"""
    worst = 0.0
    for i in range(1, points + 1):
        x = dist.upper * i / (points + 1)
        worst = max(worst, relative_error(dist.cdf(x, 'series'), dist.cdf(x, 'jackson')))
    return worst


def beta_checks() -> List[Check]:
    from distributions.densities import KBetaDist
    from distributions.lattice import lattice_measure
    from distributions.special import beta_qk

    checks = []
    for q in INTEGRAL_Q:
        for k in (0.5, 1.0, 3.0):
            params = QParams(q, k)
            checks.append(Check(
                'beta_kk', 'B_{q,k}(k,k) = 1/[k]_q', {'q': q, 'k': k}, 1e-12,
                lambda p=params: (beta_qk(p.k, p.k, p), 1.0 / p.bracket_k)))
            for t in (0.5, 2.5):
                for s in (0.5, 1.0, 2.5):
                    label = {'q': q, 'k': k, 't': t, 's': s}
                    checks.append(Check(
                        'beta_closed_form', 'B_{q,k}(t,s) = (1-q)(1-q^k)_{q^k}^{s/k-1} / (1-q^t)_{q^k}^{s/k}',
                        label, 1e-10,
                        lambda p=params, t=t, s=s: (beta_qk(t, s, p, 'closed_form'), beta_qk(t, s, p))))
                    checks.append(Check(
                        'beta_integral', 'B_{q,k}(t,s) = [k]_q^{-t/k} int_0^{[k]^{1/k}} x^{t-1} '
                        '(1 - q^k x^k/[k]_q)_{q^k}^{s/k-1} d_qx', label, 1e-8,
                        lambda p=params, t=t, s=s: (beta_qk(t, s, p, 'q_integral'), beta_qk(t, s, p)),
                        kind=QUADRATURE))
                    checks.append(Check(
                        'beta_symmetry', 'B_{q,k}(t,s) = B_{q,k}(s,t)', label, 1e-11,
                        lambda p=params, t=t, s=s: (beta_qk(t, s, p), beta_qk(s, t, p))))

    for method in ('gamma_ratio', 'closed_form', 'q_integral'):
        checks.append(Check(
            'beta_q0', 'B_{0,k}(t,s) = 1', {'q': 0.0, 'k': 3.0, 't': 0.5, 's': 0.5, 'method': method}, 1e-13,
            lambda method=method: (beta_qk(0.5, 0.5, QParams(0.0, 3.0), method), 1.0)))

    for q, k, t, s in ((0.5, 3.0, 0.5, 0.5), (0.6, 1.0, 2.0, 1.5), (0.8, 2.0, 1.0, 3.0), (0.3, 0.5, 1.5, 0.7)):
        dist = KBetaDist(QParams(q, k), t, s)
        label = {'q': q, 'k': k, 't': t, 's': s}
        checks.append(Check(
            'beta_cdf_normalization', 'F_beta([k]_q^{1/k}) = 1', label, 1e-8,
            lambda d=dist: (d.cdf(d.upper), 1.0), kind=QUADRATURE))
        checks.append(Check(
            'beta_cdf_methods', 'series CDF = int_0^x density d_qs', label, 1e-9,
            lambda d=dist: (_cdf_agreement(d), 1e-9), kind=BOUND))
        checks.append(Check(
            'beta_lattice_mass', 'sum_m (1-q) b q^m f(q^m b) = 1', label, 1e-9,
            lambda d=dist: (lattice_measure(d).total_mass, 1.0), kind=QUADRATURE))
    return checks


# ═══ moments ═══

def _three_way(t, k, n, q):
    from trees.grafting import weighted_cardinality
    from trees.shapes import TreeShapeParams

    return (poly_eval(weighted_cardinality(TreeShapeParams(t, n, k)), q),
            q_pochhammer_k(t, n, QParams(q, k)))


def _jackson_moment(t, k, n, q):
    from distributions.densities import KGammaDist, moment

    return moment(KGammaDist(QParams(q, k), t), n), q_pochhammer_k(t, n, QParams(q, k))


def _prefix_sum_gap(dist):
    from distributions.lattice import lattice_measure

    measure = lattice_measure(dist)
    tails = np.cumsum(measure.masses[::-1])[::-1]
    # the truncated tail is only negligible where the prefix sum is not tiny
    heavy = np.flatnonzero(tails >= 1e-3)
    worst = 0.0
    for m in heavy[::max(1, len(heavy) // 10)]:
        worst = max(worst, relative_error(dist.cdf(measure.support[m], 'jackson'), tails[m]))
    return worst


def sampler_statistics(dist, count=100_000, seed=0):
    """(|mean(X^k) - [t]_q| / standard error, Kolmogorov-Smirnov distance)"""
    from distributions.lattice import lattice_measure, sample

    measure = lattice_measure(dist)
    draws = sample(measure, count, seed)
    powers = draws ** dist.params.k
    target = q_bracket(dist.t, dist.params.q)
    standard_error = powers.std(ddof=1) / math.sqrt(count)
    z_score = abs(powers.mean() - target) / standard_error

    values, _ = measure.ascending()
    empirical = np.searchsorted(np.sort(draws), values, side='right') / count
    analytic = np.array([dist.cdf(x) for x in values])
    return z_score, float(np.max(np.abs(empirical - analytic)))


def moments_checks() -> List[Check]:
    from distributions.densities import KGammaDist, unit_shape_integral

    checks = []
    for q in MOMENT_Q:
        for t in SMALL_INTS:
            for k in SMALL_INTS:
                for n in range(5):
                    label = {'q': q, 't': t, 'k': k, 'n': n}
                    checks.append(Check(
                        'moment_tree_polynomial', '|T_{n,k}^t, omega| = [t]_{n,k}', label, 1e-12,
                        lambda t=t, k=k, n=n, q=q: _three_way(t, k, n, q)))
                    checks.append(Check(
                        'moment_jackson', '(1/Gamma_{q,k}(t)) int_0^b x^{t+nk-1} E d_qx = [t]_{n,k}', label, 1e-7,
                        lambda t=t, k=k, n=n, q=q: _jackson_moment(t, k, n, q), kind=QUADRATURE))

    # leading lattice points near q = 1 carry no mass
    for t, k, n in ((2.0, 1.0, 3), (1.0, 1.0, 2)):
        label = {'q': Q_NEAR_ONE, 't': t, 'k': k, 'n': n}
        checks.append(Check(
            'moment_jackson', '(1/Gamma_{q,k}(t)) int_0^b x^{t+nk-1} E d_qx = [t]_{n,k}', label, 1e-7,
            lambda t=t, k=k, n=n: _jackson_moment(t, k, n, Q_NEAR_ONE), kind=QUADRATURE))
        checks.append(Check(
            'moment_classical_limit', 'E[X^{nk}] -> (t)_{n,k} as q -> 1', label, 0.02,
            lambda t=t, k=k, n=n: (_jackson_moment(t, k, n, Q_NEAR_ONE)[0], classical_pochhammer_k(t, n, k)),
            kind=LIMIT))

    for q in Q_GRID:
        for k in K_GRID:
            for t in T_GRID:
                dist = KGammaDist(QParams(q, k), t)
                checks.append(Check(
                    'gamma_cdf_jackson_normalization', 'int_0^b density d_qx = 1', {'q': q, 'k': k, 't': t}, 1e-8,
                    lambda d=dist: (d.cdf(d.upper, 'jackson'), 1.0), kind=QUADRATURE))

    for q, k, t in ((0.5, 1.0, 1.0), (0.5, 2.0, 1.5), (0.8, 1.0, 2.0), (0.2, 3.0, 0.5), (0.6, 3.0, 1.0)):
        dist = KGammaDist(QParams(q, k), t)
        label = {'q': q, 'k': k, 't': t}
        checks.append(Check(
            'gamma_cdf_normalization', 'F_gamma(b) = 1', label, 1e-8,
            lambda d=dist: (d.cdf(d.upper), 1.0), kind=QUADRATURE))
        checks.append(Check(
            'gamma_cdf_methods', 'series CDF = int_0^x density d_qs', label, 1e-9,
            lambda d=dist: (_cdf_agreement(d), 1e-9), kind=BOUND))
        checks.append(Check(
            'lattice_prefix_sums', 'F(q^m b) = sum_{j>=m} p_j', label, 1e-9,
            lambda d=dist: (_prefix_sum_gap(d), 1e-9), kind=BOUND))
        checks.append(Check(
            'unit_shape_integral', 'int_0^x E d_qs = (1-q) x sum_n (-1)^n q^{kn(n+1)/2} x^{kn} / '
            '((1-q^{kn+1}) [k]_q^n [n]_{q^k}!)', label, 1e-12,
            lambda d=dist: (unit_shape_integral(0.5 * d.upper, d.params),
                            KGammaDist(d.params, 1.0).cdf(0.5 * d.upper) * KGammaDist(d.params, 1.0).normalizer)))

    sampler_dist = KGammaDist(QParams(0.5, 2.0), 1.0)
    label = {'q': 0.5, 'k': 2.0, 't': 1.0, 'count': 100_000, 'seed': 0}
    checks.append(Check(
        'sampler_mean', 'E[X^k] = [t]_q (three standard errors)', label, 3.0,
        lambda: (sampler_statistics(sampler_dist)[0], 3.0), kind=BOUND))
    checks.append(Check(
        'sampler_ks', 'sup |F_empirical - F| < 0.01', label, 0.01,
        lambda: (sampler_statistics(sampler_dist)[1], 0.01), kind=BOUND))
    return checks


SUITES = {
    'qcore': qcore_checks,
    'trees': trees_checks,
    'gamma': gamma_checks,
    'beta': beta_checks,
    'moments': moments_checks,
}


def run_suite(name: str, tol: Optional[float] = None) -> VerifyReport:
    """Run one suite, or every suite in order for name='all'"""
    names = list(SUITES) if name == 'all' else [name]
    report = VerifyReport(suite=name)
    for suite in names:
        cases = [run_check(check, tol) for check in SUITES[suite]()]
        failed = sum(not case.passed for case in cases)
        logger.info(f"verify {suite}: {len(cases)} cases, {failed} failed")
        report.cases.extend(cases)
    return report
