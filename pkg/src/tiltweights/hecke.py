"""Transition polynomials and self-dual classes over a Coxeter system.

The free Z[t, t^-1]-module on a downward-closed set of elements carries a
standard basis and a costandard basis, glued by triangular r-polynomials:

    (costandard at y) = sum over x <= y of r_{x,y}(t) (standard at x).

The duality endomorphism bars every coefficient and swaps the two bases;
``dual_class`` expresses it in standard coordinates.  ``selfdual_solve``
then builds, for a top element alpha, the unique dual-fixed class with top
coefficient 1 whose lower coefficients obey a splitting rule: the
``POSITIVE_PART`` rule produces the column h_{., alpha} of the canonical
basis, and the ``NON_CANCEL`` rule reproduces the same column through an
a-priori different normalization.  Classical two-variable polynomials are
recovered by ``kl_P`` through the substitution

    h_{x,y}(t) = t^(len(y) - len(x)) P_{x,y}(t^-2).

>>> a1 = build_system('A1')
>>> s = a1.simple(1)
>>> print(r_poly(a1.identity, s))
t - t^-1
>>> print(kl_h(a1.identity, s))
t
>>> ic = ic_weight_vector(s)
>>> print(ic.get(a1.identity))
-t^-1
"""

from __future__ import annotations

import enum
import threading
import weakref
from dataclasses import dataclass, field

from .coxeter import CoxeterSystem, Element, Ideal, build_system
from .laurent import ONE, T, ZERO, LaurentPoly, SplitRule, split

__all__ = [
    'Basis',
    'WeightVector',
    'r_poly',
    'to_standard',
    'dual_class',
    'selfdual_solve',
    'kl_h',
    'kl_P',
    'mu',
    'ic_weight_vector',
]

_T_DIFF = T - T.bar()   # t - t^-1


class Basis(enum.Enum):
    STANDARD = 'standard'
    COSTANDARD = 'costandard'


@dataclass(eq=False)
class WeightVector:
    """A module element: coefficients over an ideal in a named basis.

    Zero coefficients are never stored.  ``top``, when set, marks the
    element whose coefficient normalizes the class (always 1 for solver
    output).
    """

    ideal: Ideal
    coeffs: dict[Element, LaurentPoly]
    basis: Basis = Basis.STANDARD
    top: Element | None = None

    def __post_init__(self) -> None:
        self.coeffs = {x: c for x, c in self.coeffs.items() if not c.is_zero()}

    def get(self, x: Element) -> LaurentPoly:
        return self.coeffs.get(x, ZERO)

    @property
    def support(self) -> tuple[Element, ...]:
        return tuple(sorted(self.coeffs, key=lambda e: e.sort_key))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightVector):
            return NotImplemented
        return (self.ideal.system is other.ideal.system
                and self.basis is other.basis
                and self.coeffs == other.coeffs)

    def to_json_obj(self) -> dict[str, dict[str, str]]:
        sys = self.ideal.system
        return {
            sys.format_word(x): self.coeffs[x].to_json_obj()
            for x in self.support
        }

    def __repr__(self) -> str:
        sys = self.ideal.system
        inner = ', '.join(
            f'{sys.format_word(x)}: {self.coeffs[x]}' for x in self.support)
        return f'WeightVector({{{inner}}}, {self.basis.value})'


# ----------------------------------------------------------------------
# per-system caches

@dataclass
class _Caches:
    r: dict[tuple[int, int], LaurentPoly] = field(default_factory=dict)
    h: dict[int, dict[Element, LaurentPoly]] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


_per_system: 'weakref.WeakKeyDictionary[CoxeterSystem, _Caches]' = (
    weakref.WeakKeyDictionary())
_per_system_lock = threading.Lock()


def _caches(sys: CoxeterSystem) -> _Caches:
    got = _per_system.get(sys)
    if got is None:
        with _per_system_lock:
            got = _per_system.setdefault(sys, _Caches())
    return got


def _same_system(x: Element, y: Element) -> CoxeterSystem:
    if x.system is not y.system:
        raise ValueError('elements belong to different systems')
    return x.system


# ----------------------------------------------------------------------
# r-polynomials

def r_poly(x: Element, y: Element) -> LaurentPoly:
    """Transition coefficient r_{x,y}; zero unless x <= y.

    Computed by stripping the least left descent s of y: the coefficient
    passes through unchanged when s also shortens x, and otherwise picks up
    a (t - t^-1) correction from the shorter column.

    >>> a2 = build_system('A2')
    >>> print(r_poly(a2.identity, a2.element_from_word([1, 2])))
    t^2 - 2 + t^-2
    """
    sys = _same_system(x, y)
    if x.index == y.index:
        return ONE
    if x.length >= y.length:
        return ZERO
    caches = _caches(sys)
    key = (x.index, y.index)
    got = caches.r.get(key)
    if got is not None:
        return got
    s = min(y.left_descents)
    sy = sys.multiply_gen(y, s, 'left')
    sx = sys.multiply_gen(x, s, 'left')
    if s in x.left_descents:
        val = r_poly(sx, sy)
    else:
        val = r_poly(sx, sy) + _T_DIFF * r_poly(x, sy)
    with caches.lock:
        caches.r.setdefault(key, val)
    return val


# ----------------------------------------------------------------------
# duality

def to_standard(v: WeightVector) -> WeightVector:
    """Re-expand a costandard-basis vector in the standard basis."""
    if v.basis is Basis.STANDARD:
        return v
    sys = v.ideal.system
    coeffs: dict[Element, LaurentPoly] = {}
    for x in v.ideal:
        total = ZERO
        for y, c in v.coeffs.items():
            if sys.bruhat_leq(x, y):
                total = total + c * r_poly(x, y)
        if not total.is_zero():
            coeffs[x] = total
    return WeightVector(v.ideal, coeffs, Basis.STANDARD, v.top)


def dual_class(v: WeightVector) -> WeightVector:
    """The duality endomorphism, in standard coordinates.

    Duality bars every coefficient and exchanges the standard and
    costandard bases; composing with ``to_standard`` keeps everything in
    standard coordinates.  Applying it twice is the identity.
    """
    if v.basis is not Basis.STANDARD:
        raise ValueError('dual_class expects standard-basis input')
    barred = WeightVector(
        v.ideal,
        {y: c.bar() for y, c in v.coeffs.items()},
        Basis.COSTANDARD,
        v.top,
    )
    return to_standard(barred)


# ----------------------------------------------------------------------
# the triangular self-duality solver

def selfdual_solve(alpha: Element, ideal: Ideal,
                   rule: SplitRule) -> WeightVector:
    """The dual-fixed class with top alpha, under the given splitting rule.

    Walking the interval below alpha in decreasing length (ShortLex within
    a length), each coefficient V_beta must satisfy

        V_beta(t) - V_beta(t^-1) = G_beta(t),
        G_beta = sum over beta < gamma of bar(V_gamma) r_{beta,gamma},

    whose right side is antisymmetric whenever the data above beta is
    consistent; the splitting rule selects the solution.  The result is
    verified to be dual-fixed before it is returned.

    >>> a1 = build_system('A1')
    >>> s = a1.simple(1)
    >>> v = selfdual_solve(s, a1.enumerate_ball(1), SplitRule.NON_CANCEL)
    >>> print(v.get(a1.identity))
    t
    """
    sys = alpha.system
    if alpha not in ideal:
        raise ValueError('top element outside the ideal')
    sub = ideal.sub_ideal(alpha)
    coeffs: dict[Element, LaurentPoly] = {alpha: ONE}
    below = sorted((z for z in sub if z != alpha),
                   key=lambda e: (-e.length, e.word))
    for beta in below:
        g = ZERO
        for gamma, c in coeffs.items():
            if gamma != beta and sys.bruhat_leq(beta, gamma):
                g = g + c.bar() * r_poly(beta, gamma)
        w = split(g, rule)   # raises SelfDualityError on inconsistency
        if not w.is_zero():
            coeffs[beta] = w
    out = WeightVector(sub, coeffs, Basis.STANDARD, alpha)
    if dual_class(out) != out:
        raise RuntimeError(
            f'solver produced a class not fixed by duality at '
            f'{sys.format_word(alpha)}')
    return out


# ----------------------------------------------------------------------
# canonical columns and classical polynomials

def _h_column(y: Element) -> dict[Element, LaurentPoly]:
    caches = _caches(y.system)
    col = caches.h.get(y.index)
    if col is None:
        vec = selfdual_solve(y, y.system.enumerate_ideal(y),
                             SplitRule.POSITIVE_PART)
        col = dict(vec.coeffs)
        with caches.lock:
            col = caches.h.setdefault(y.index, col)
    return col


def kl_h(x: Element, y: Element) -> LaurentPoly:
    """Canonical-basis coefficient h_{x,y}; a whole column per cache miss.

    >>> a1 = build_system('A1')
    >>> print(kl_h(a1.identity, a1.simple(1)))
    t
    """
    sys = _same_system(x, y)
    if not sys.bruhat_leq(x, y):
        return ZERO
    return _h_column(y).get(x, ZERO)


def kl_P(x: Element, y: Element) -> LaurentPoly:
    """The classical polynomial in q, from h by re-indexing.

    The coefficient of t^(len(y) - len(x) - 2k) in h becomes the
    coefficient of q^k; any exponent breaking that parity means the solver
    state is corrupt, so it raises rather than returns.

    >>> a2 = build_system('A2')
    >>> print(kl_P(a2.identity, a2.longest_element()).to_str('q'))
    1
    """
    sys = _same_system(x, y)
    h = kl_h(x, y)
    if h.is_zero():
        return ZERO
    n = y.length - x.length
    terms: dict[int, int] = {}
    for exp, c in h.items():
        k2 = n - exp
        if k2 < 0 or k2 % 2:
            raise RuntimeError(
                f'exponent parity violated in column '
                f'{sys.format_word(y)} at {sys.format_word(x)}: '
                f'h = {h}')
        terms[k2 // 2] = c
    return LaurentPoly(terms)


def mu(x: Element, y: Element) -> int:
    """Coefficient of t in h_{x,y}: the edge weight of the canonical graph."""
    return kl_h(x, y).coeff(1)


# ----------------------------------------------------------------------
# self-dual simple classes

def ic_weight_vector(w: Element) -> WeightVector:
    """The self-dual class of the simple object attached to w.

    Coefficients are signed, bar-twisted canonical coefficients:
    (-1)^(len(w) - len(v)) h_{v,w}(t^-1).  The sign tracks the parity of
    the shift and the bar the symmetric normalization; the result is again
    fixed by ``dual_class`` (verified).

    >>> a1 = build_system('A1')
    >>> ic_weight_vector(a1.simple(1)).to_json_obj()
    {'e': {'-1': '-1'}, '1': {'0': '1'}}
    """
    sys = w.system
    sub = sys.enumerate_ideal(w)
    col = _h_column(w)
    coeffs: dict[Element, LaurentPoly] = {}
    for v, h in col.items():
        val = h.bar()
        if (w.length - v.length) % 2:
            val = -val
        coeffs[v] = val
    out = WeightVector(sub, coeffs, Basis.STANDARD, w)
    if dual_class(out) != out:
        raise RuntimeError(
            f'simple class at {sys.format_word(w)} is not fixed by duality')
    return out
