# File: distributions/lattice.py
"""
Discrete lattice measures behind the q,k-densities and inverse-CDF sampling
from them.
"""

from dataclasses import dataclass
import logging
from typing import Optional

import numpy as np

from core.exceptions import NonConvergenceError, NumericalToleranceError, QDomainError
from core.qcore import SeriesControl, qcalc_setting, resolve_control

logger = logging.getLogger(__name__)

MAX_TAIL_TOL = 1e-3
SUP_PROBE_POINTS = 50
SUP_SAFETY = 10.0


@dataclass(frozen=True, eq=False)
class LatticeMeasure:
    """Atoms at q^m * upper (descending) with their masses"""
    support: np.ndarray
    masses: np.ndarray
    tail_tol: float

    @property
    def total_mass(self) -> float:
        return float(self.masses.sum())

    def __len__(self):
        return len(self.support)

    def ascending(self):
        """(support, masses) sorted by increasing x"""
        return self.support[::-1], self.masses[::-1]

    def cdf(self) -> np.ndarray:
        """Normalised P(X <= x) at each ascending support point"""
        _, masses = self.ascending()
        cumulative = np.cumsum(masses)
        return cumulative / cumulative[-1]

    def expectation(self, fn) -> float:
        return float(np.dot(self.masses, fn(self.support)))


def lattice_measure(dist, tail_tol: Optional[float] = None,
                    ctl: Optional[SeriesControl] = None) -> LatticeMeasure:
    """
    Masses (1-q) b q^m f(q^m b) of a q,k-density f with support end b,
    truncated once the tail bound

        10 * sup|kernel| * (1-q) b^t q^{(M+1)t} / ((1-q^t) * normaliser)

    drops below tail_tol.
    """
    tail_tol = qcalc_setting('DEFAULT_TAIL_TOL') if tail_tol is None else tail_tol
    if not 0 < tail_tol <= MAX_TAIL_TOL:
        raise QDomainError(f"tail_tol must lie in (0, {MAX_TAIL_TOL}], got {tail_tol}")
    ctl = resolve_control(ctl)
    q = dist.params.q
    t = dist.t
    upper = dist.upper
    scale = (1.0 - q) * upper ** t / dist.normalizer
    q_t = q ** t

    support = []
    masses = []
    # the kernel is monotone with limit 1 at x=0
    sup_kernel = 1.0
    m = 0
    while True:
        weight = q ** m
        if weight == 0:
            break
        core = dist.kernel(weight * upper, ctl)
        if core < 0:
            logger.warning(f"negative kernel {core!r} at lattice point {m} for {dist}")
            raise NumericalToleranceError(f"kernel evaluated to {core!r} < 0 at x={weight * upper}")
        if m < SUP_PROBE_POINTS:
            sup_kernel = max(sup_kernel, core)
        support.append(weight * upper)
        masses.append(scale * weight ** t * core)

        tail = SUP_SAFETY * sup_kernel * scale * q_t ** (m + 1) / (1.0 - q_t)
        if tail < tail_tol:
            break
        m += 1
        if m >= ctl.max_terms:
            raise NonConvergenceError(f"lattice measure needs more than {ctl.max_terms} atoms")

    measure = LatticeMeasure(np.array(support), np.array(masses), tail_tol)
    logger.info(f"lattice measure: {len(measure)} atoms, total mass {measure.total_mass!r}")
    return measure


def sample(measure: LatticeMeasure, count: int, seed: Optional[int] = None) -> np.ndarray:
    """Inverse-CDF draws from the renormalised lattice measure"""
    if not isinstance(count, (int, np.integer)) or count < 0:
        raise QDomainError(f"count must be a non-negative integer, got {count!r}")
    seed = qcalc_setting('DEFAULT_SEED') if seed is None else seed
    rng = np.random.default_rng(seed)
    values, _ = measure.ascending()
    cdf = measure.cdf()
    draws = rng.random(count)
    index = np.minimum(np.searchsorted(cdf, draws, side='right'), len(values) - 1)
    return values[index]
