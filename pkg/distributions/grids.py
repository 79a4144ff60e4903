# File: distributions/grids.py
"""CSV grids of kernels, densities and CDFs over their supports."""

import csv
import io
import logging
from typing import List, Sequence

import numpy as np

from core.exceptions import QDomainError
from core.qcore import QParams, qcalc_setting

from .densities import KBetaDist, KGammaDist, fallback_cdf

logger = logging.getLogger(__name__)

GRID_KINDS = ('kernel-gamma', 'density-gamma', 'cdf-gamma', 'density-beta', 'cdf-beta')


def parse_sweep(text: str, sweeps: int = None) -> List[float]:
    """
    '0.6' -> [0.6]; '1..5' -> [1, 2, 3, 4, 5]; '0..0.95' -> `sweeps` evenly
    spaced values including both ends.
    """
    text = str(text).strip()
    try:
        if '..' not in text:
            return [float(text)]
        start_text, end_text = text.split('..', 1)
        if _is_int(start_text) and _is_int(end_text):
            start, end = int(start_text), int(end_text)
            if end < start:
                raise QDomainError(f"empty range {text!r}")
            return [float(v) for v in range(start, end + 1)]
        start, end = float(start_text), float(end_text)
    except ValueError:
        raise QDomainError(f"expected a number or a range a..b, got {text!r}") from None
    if end < start:
        raise QDomainError(f"empty range {text!r}")
    sweeps = qcalc_setting('GRID_SWEEPS') if sweeps is None else sweeps
    return [float(v) for v in np.linspace(start, end, sweeps)]


def _is_int(text: str) -> bool:
    text = text.strip()
    return text.lstrip('-').isdigit()


def _distribution(kind: str, params: QParams, t: float, s: float):
    if kind.endswith('-beta'):
        if s is None:
            raise QDomainError(f"{kind} needs the shape s")
        return KBetaDist(params, t, s)
    return KGammaDist(params, t)


def _value(kind: str, dist, x: float) -> float:
    if kind == 'kernel-gamma':
        return dist.kernel(x)
    if kind.startswith('density'):
        return dist.density(x)
    return fallback_cdf(dist, x)


def grid_rows(kind: str, q_values: Sequence[float], k_values: Sequence[float],
              t: float, s: float = None, points: int = 200):
    """(header, rows); swept parameters become leading columns"""
    if kind not in GRID_KINDS:
        raise QDomainError(f"grid kind must be one of {', '.join(GRID_KINDS)}, got {kind!r}")
    if points < 1:
        raise QDomainError(f"points must be positive, got {points}")
    sweep_q = len(q_values) > 1
    sweep_k = len(k_values) > 1
    header = (['q'] if sweep_q else []) + (['k'] if sweep_k else []) + ['x', 'value']

    rows = []
    for q in q_values:
        for k in k_values:
            dist = _distribution(kind, QParams(q, k), t, s)
            prefix = ([q] if sweep_q else []) + ([k] if sweep_k else [])
            for i in range(points):
                x = dist.upper * (i + 1) / points
                rows.append(prefix + [x, _value(kind, dist, x)])
    logger.debug(f"{kind}: {len(rows)} rows over {len(q_values)} q x {len(k_values)} k")
    return header, rows


def render_csv(header, rows) -> str:
    """'.'-separated decimals with 17 significant digits"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(['%.17g' % value for value in row])
    return buffer.getvalue()
