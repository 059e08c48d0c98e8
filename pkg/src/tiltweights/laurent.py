"""Sparse integer Laurent polynomials in one variable t.

This is the coefficient ring for every weight computation in the package:
exact arithmetic in Z[t, t^-1], the bar involution t -> t^-1, and the two
splitting rules that solve

    W(t) - W(t^-1) = g(t)

for an antisymmetric right-hand side g.  ``POSITIVE_PART`` picks the unique
solution supported in strictly positive exponents; ``NON_CANCEL`` picks the
unique solution with non-negative coefficients, no constant term, and never
both t^i and t^-i present.  Both are used by the triangular self-duality
solver, so they are first-class values here rather than options buried in it.

>>> p = LaurentPoly({3: 1, 1: 1})
>>> print(p)
t^3 + t
>>> print(p.bar())
t^-1 + t^-3
>>> g = p - p.bar()
>>> split(g, SplitRule.POSITIVE_PART) == p
True
>>> split(g, SplitRule.NON_CANCEL) == p
True
"""

from __future__ import annotations

import enum
from typing import Iterator, Mapping

__all__ = [
    'LaurentPoly',
    'SplitRule',
    'SelfDualityError',
    'split',
    'ZERO',
    'ONE',
    'T',
]


class SelfDualityError(ValueError):
    """Raised when a splitting rule receives a non-antisymmetric input.

    The solver only ever feeds antisymmetric polynomials to ``split``; a
    violation signals an inconsistency upstream, not a user error.
    """


class SplitRule(enum.Enum):
    """How to solve W(t) - W(t^-1) = g(t) for antisymmetric g."""

    POSITIVE_PART = 'positive-part'
    NON_CANCEL = 'non-cancel'


def _as_poly(other: object) -> 'LaurentPoly | None':
    if isinstance(other, LaurentPoly):
        return other
    if isinstance(other, int):
        return LaurentPoly({0: other})
    return None


class LaurentPoly:
    """Immutable element of Z[t, t^-1], stored as exponent -> coefficient.

    Zero coefficients are never stored; the zero polynomial is the empty
    mapping.  Coefficients are plain Python ints, so nothing overflows.

    >>> LaurentPoly({2: 1, 0: -2, -2: 1}) == (T - T.bar()) ** 2
    True
    >>> LaurentPoly({1: 0}).is_zero()
    True
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[int(exp)] = int(coeff)
        self._terms = clean

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> 'LaurentPoly':
        """The monomial coeff * t^exp."""
        return cls({exp: coeff})

    # ------------------------------------------------------------------
    # inspection

    def coeff(self, exp: int) -> int:
        """Coefficient of t^exp (0 if absent)."""
        return self._terms.get(exp, 0)

    @property
    def support(self) -> tuple[int, ...]:
        """Exponents with nonzero coefficient, ascending."""
        return tuple(sorted(self._terms))

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs, ascending exponent."""
        for exp in sorted(self._terms):
            yield exp, self._terms[exp]

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        """Least exponent in the support; undefined on zero."""
        if not self._terms:
            raise ValueError('zero polynomial has no exponents')
        return min(self._terms)

    def max_exp(self) -> int:
        """Greatest exponent in the support; undefined on zero."""
        if not self._terms:
            raise ValueError('zero polynomial has no exponents')
        return max(self._terms)

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other: object) -> 'LaurentPoly':
        q = _as_poly(other)
        if q is None:
            return NotImplemented
        terms = dict(self._terms)
        for exp, coeff in q._terms.items():
            new = terms.get(exp, 0) + coeff
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {exp: -coeff for exp, coeff in self._terms.items()}
        return out

    def __sub__(self, other: object) -> 'LaurentPoly':
        q = _as_poly(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> 'LaurentPoly':
        q = _as_poly(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: object) -> 'LaurentPoly':
        q = _as_poly(other)
        if q is None:
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in q._terms.items():
                exp = e1 + e2
                new = terms.get(exp, 0) + c1 * c2
                if new:
                    terms[exp] = new
                else:
                    terms.pop(exp, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'LaurentPoly':
        if n < 0:
            raise ValueError('negative powers are not defined here')
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------------
    # the involution and substitutions

    def bar(self) -> 'LaurentPoly':
        """The involution t -> t^-1.

        >>> print((T + 2).bar())
        2 + t^-1
        """
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {-exp: coeff for exp, coeff in self._terms.items()}
        return out

    def at_t_power(self, n: int) -> 'LaurentPoly':
        """Substitute t -> t^n for a nonzero integer n.

        >>> print(LaurentPoly({1: 1, 0: 1}).at_t_power(-2))
        1 + t^-2
        """
        if n == 0:
            raise ValueError('substituting t -> 1 collapses the grading')
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {exp * n: coeff for exp, coeff in self._terms.items()}
        return out

    # ------------------------------------------------------------------
    # predicates used by the self-duality solver

    def is_nonneg(self) -> bool:
        """True when every coefficient is >= 0."""
        return all(coeff > 0 for coeff in self._terms.values())

    def is_noncancelling(self) -> bool:
        """No constant term, and never both t^i and t^-i present.

        >>> LaurentPoly({3: 1, 1: 1}).is_noncancelling()
        True
        >>> LaurentPoly({1: 1, -1: 1}).is_noncancelling()
        False
        >>> LaurentPoly({0: 1}).is_noncancelling()
        False
        """
        if 0 in self._terms:
            return False
        return all(-exp not in self._terms for exp in self._terms if exp > 0)

    def is_in_t_poly(self) -> bool:
        """Support contained in {1, 2, 3, ...}."""
        return all(exp > 0 for exp in self._terms)

    def is_antisymmetric(self) -> bool:
        """True when p(t) + p(t^-1) = 0."""
        return (self + self.bar()).is_zero()

    # ------------------------------------------------------------------
    # equality, hashing, display

    def __eq__(self, other: object) -> bool:
        q = _as_poly(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        inner = ', '.join(
            f'{exp}: {coeff}' for exp, coeff in sorted(
                self._terms.items(), reverse=True))
        return 'LaurentPoly({%s})' % inner

    def to_str(self, var: str = 't') -> str:
        """Human form, descending exponents: "t^3 + t", "1 - t^-2".

        >>> LaurentPoly({2: 1, -2: -3}).to_str()
        't^2 - 3t^-2'
        >>> LaurentPoly({1: 1, 0: 1}).to_str('q')
        'q + 1'
        """
        if not self._terms:
            return '0'
        parts: list[str] = []
        for exp, coeff in sorted(self._terms.items(), reverse=True):
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                power = var if exp == 1 else f'{var}^{exp}'
                body = power if mag == 1 else f'{mag}{power}'
            if not parts:
                parts.append(body if coeff > 0 else '-' + body)
            else:
                parts.append(('+ ' if coeff > 0 else '- ') + body)
        return ' '.join(parts)

    def __str__(self) -> str:
        return self.to_str()

    # ------------------------------------------------------------------
    # wire format

    def to_json_obj(self) -> dict[str, str]:
        """Exponent -> coefficient, both as decimal strings.

        Keys descend so serialized bytes are deterministic.

        >>> LaurentPoly({3: 1, 1: 1}).to_json_obj()
        {'3': '1', '1': '1'}
        """
        return {
            str(exp): str(coeff)
            for exp, coeff in sorted(self._terms.items(), reverse=True)
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, str]) -> 'LaurentPoly':
        return cls({int(exp): int(coeff) for exp, coeff in obj.items()})


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})


def split(g: LaurentPoly, rule: SplitRule) -> LaurentPoly:
    """Solve W(t) - W(t^-1) = g(t) under the given rule.

    The input must be antisymmetric (g + bar g = 0); anything else means a
    self-duality equation upstream has no solution.

    >>> g = LaurentPoly({2: 1, -2: -1})
    >>> print(split(g, SplitRule.POSITIVE_PART))
    t^2
    >>> g = LaurentPoly({1: -2, -1: 2})
    >>> print(split(g, SplitRule.NON_CANCEL))
    2t^-1
    >>> split(T, SplitRule.NON_CANCEL)
    Traceback (most recent call last):
        ...
    tiltweights.laurent.SelfDualityError: self-duality violated: t + bar(t) != 0
    """
    if not g.is_antisymmetric():
        raise SelfDualityError(
            f'self-duality violated: {g} + bar({g}) != 0')
    if rule is SplitRule.POSITIVE_PART:
        return LaurentPoly({exp: c for exp, c in g.items() if exp > 0})
    if rule is SplitRule.NON_CANCEL:
        terms: dict[int, int] = {}
        for exp, c in g.items():
            if exp <= 0:
                continue  # mirrored by antisymmetry
            if c > 0:
                terms[exp] = c
            else:
                terms[-exp] = -c
        return LaurentPoly(terms)
    raise ValueError(f'unknown splitting rule: {rule!r}')
