# File: core/qpoly.py
"""Exact polynomials in q with non-negative integer coefficients."""

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Tuple

from .exceptions import QDomainError


def _trim(coefficients: Iterable[int]) -> Tuple[int, ...]:
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


@dataclass(frozen=True)
class QPolynomial:
    """
    Element of N[q]. Index i of `coefficients` is the coefficient of q^i;
    trailing zeros are trimmed so the zero polynomial is the empty tuple.
    """
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = _trim(self.coefficients)
        for c in coefficients:
            if not isinstance(c, int) or isinstance(c, bool):
                raise QDomainError(f"coefficients must be integers, got {c!r}")
            if c < 0:
                raise QDomainError(f"coefficients must be non-negative, got {c}")
        object.__setattr__(self, 'coefficients', coefficients)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> 'QPolynomial':
        if exponent < 0:
            raise QDomainError(f"exponent must be non-negative, got {exponent}")
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def one(cls) -> 'QPolynomial':
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: 'QPolynomial') -> 'QPolynomial':
        return poly_add(self, other)

    def __mul__(self, other: 'QPolynomial') -> 'QPolynomial':
        return poly_mul(self, other)

    def __call__(self, q: float) -> float:
        return poly_eval(self, q)

    def __str__(self):
        return render_poly(self)

    def to_json(self):
        """Array of coefficient strings, lowest power first"""
        return [str(c) for c in self.coefficients]


def poly_add(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return QPolynomial(tuple(a + b for a, b in zip_longest(p.coefficients, r.coefficients, fillvalue=0)))


def poly_mul(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    if p.is_zero() or r.is_zero():
        return QPolynomial()
    product = [0] * (len(p.coefficients) + len(r.coefficients) - 1)
    for i, a in enumerate(p.coefficients):
        if a == 0:
            continue
        for j, b in enumerate(r.coefficients):
            product[i + j] += a * b
    return QPolynomial(tuple(product))


def q_bracket_poly(t: int) -> QPolynomial:
    """[t]_q = 1 + q + ... + q^{t-1}"""
    if not isinstance(t, int) or t < 1:
        raise QDomainError(f"t must be a positive integer, got {t!r}")
    return QPolynomial((1,) * t)


def poly_eval(p: QPolynomial, q: float) -> float:
    """Horner evaluation; q = 1 is allowed for classical limits"""
    if not 0 <= q <= 1:
        raise QDomainError(f"polynomials are evaluated for 0 <= q <= 1, got {q}")
    value = 0.0
    for c in reversed(p.coefficients):
        value = value * q + c
    return value


def render_poly(p: QPolynomial) -> str:
    """'c0 + c1*q + c2*q^2 + ...' with unit coefficients and zero terms omitted"""
    if p.is_zero():
        return '0'
    parts = []
    for exponent, c in enumerate(p.coefficients):
        if c == 0:
            continue
        if exponent == 0:
            parts.append(str(c))
            continue
        power = 'q' if exponent == 1 else f'q^{exponent}'
        parts.append(power if c == 1 else f'{c}*{power}')
    return ' + '.join(parts)
