"""Coxeter systems from generalized Cartan matrices, with exact arithmetic.

A system is built from an integer Cartan matrix (diagonal 2, off-diagonal
<= 0, symmetric zero pattern).  Each generator s_i acts on the root lattice
by s_i(a_j) = a_j - c_ij * a_i, and every group element is interned by its
integer matrix in this reflection representation, which is faithful.  The
registry caches, per element, the ShortLex-minimal reduced word, the length,
and both descent sets, so word problems never touch floating point.

Generator labels are user-facing: finite type labels run 1..n, affine labels
run 0..n with 0 the affine node, and explicit matrices use 0..rank-1.  Rows
of the Cartan matrix follow c_ij = 2(a_i, a_j)/(a_i, a_i), which puts the -2
of type B_n at position (n, n-1); the transpose convention gives the same
Coxeter group.

>>> sys_a2 = build_system('A2')
>>> w = sys_a2.element_from_word([1, 2, 1])
>>> w.length
3
>>> sys_a2.format_word(w)
'1,2,1'
>>> sorted(w.right_descents)
[1, 2]
>>> aff = build_system('affine A1')
>>> len(aff.enumerate_ball(3))
7
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    'CoxeterDescriptor',
    'CoxeterSystem',
    'Element',
    'Ideal',
    'ParabolicData',
    'build_system',
]

Matrix = tuple[tuple[int, ...], ...]


# ----------------------------------------------------------------------
# descriptors and type labels

@dataclass(frozen=True)
class CoxeterDescriptor:
    """What the user asked for: a label, or an explicit Cartan matrix."""

    cartan: Matrix
    index_base: int
    label: str | None = None

    def to_json_obj(self) -> dict:
        return {
            'label': self.label,
            'cartan': [list(row) for row in self.cartan],
            'index_base': self.index_base,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> 'CoxeterDescriptor':
        return cls(
            cartan=tuple(tuple(int(c) for c in row) for row in obj['cartan']),
            index_base=int(obj['index_base']),
            label=obj.get('label'),
        )


_LABEL_RE = re.compile(r'^\s*(affine\s+)?([A-Ga-g])\s*(\d+)\s*$')


def _chain(n: int) -> list[list[int]]:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
    for i in range(n - 1):
        rows[i][i + 1] = -1
        rows[i + 1][i] = -1
    return rows


def _finite_cartan(family: str, n: int) -> list[list[int]]:
    if family == 'A' and n >= 1:
        return _chain(n)
    if family == 'B' and n >= 2:
        rows = _chain(n)
        rows[n - 1][n - 2] = -2  # short last root
        return rows
    if family == 'C' and n >= 2:
        rows = _chain(n)
        rows[n - 2][n - 1] = -2  # long last root
        return rows
    if family == 'D' and n >= 3:
        rows = _chain(n - 1)
        for row in rows:
            row.append(0)
        rows.append([0] * n)
        rows[n - 1][n - 1] = 2
        # last node hangs off node n-2, next to the chain's end
        rows[n - 1][n - 3] = -1
        rows[n - 3][n - 1] = -1
        rows[n - 2][n - 3] = -1   # already set by _chain; keep explicit
        return rows
    if family == 'E' and n in (6, 7, 8):
        # Bourbaki: chain 1-3-4-5-...-n, with 2 attached to 4.
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 2
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)][:n - 2]
        edges.append((2, 4))
        for a, b in edges:
            rows[a - 1][b - 1] = -1
            rows[b - 1][a - 1] = -1
        return rows
    if family == 'F' and n == 4:
        rows = _chain(4)
        rows[2][1] = -2  # double bond 2 => 3, roots 3 and 4 short
        return rows
    if family == 'G' and n == 2:
        return [[2, -3], [-1, 2]]
    raise ValueError(f'unknown type label: {family}{n}')


def _affine_cartan(family: str, n: int) -> list[list[int]]:
    if family == 'A' and n == 1:
        return [[2, -2], [-2, 2]]
    if family == 'A' and n >= 2:
        m = n + 1
        rows = [[0] * m for _ in range(m)]
        for i in range(m):
            rows[i][i] = 2
            rows[i][(i + 1) % m] = -1
            rows[i][(i - 1) % m] = -1
        return rows
    # remaining families: extend the finite matrix by the affine node,
    # attached where the highest root meets the simple roots
    if family == 'B' and n >= 3:
        attach = [(2, -1, -1)]
    elif family == 'C' and n >= 2:
        attach = [(1, -1, -2)]  # node 0 long, node 1 short
    elif family == 'D' and n >= 4:
        attach = [(2, -1, -1)]
    elif family == 'E' and n == 6:
        attach = [(2, -1, -1)]
    elif family == 'E' and n == 7:
        attach = [(1, -1, -1)]
    elif family == 'E' and n == 8:
        attach = [(8, -1, -1)]
    elif family == 'F' and n == 4:
        attach = [(1, -1, -1)]
    elif family == 'G' and n == 2:
        attach = [(2, -1, -1)]
    else:
        raise ValueError(f'unknown type label: affine {family}{n}')
    fin = _finite_cartan(family, n)
    m = n + 1
    rows = [[0] * m for _ in range(m)]
    rows[0][0] = 2
    for i in range(n):
        for j in range(n):
            rows[i + 1][j + 1] = fin[i][j]
    for node, c0j, cj0 in attach:
        rows[0][node] = c0j
        rows[node][0] = cj0
    return rows


def _parse_label(text: str) -> CoxeterDescriptor:
    m = _LABEL_RE.match(text)
    if not m:
        raise ValueError(f'unknown type label: {text!r}')
    affine, family, rank = bool(m.group(1)), m.group(2).upper(), int(m.group(3))
    if affine:
        cartan = _affine_cartan(family, rank)
        base = 0
        label = f'affine {family}{rank}'
    else:
        cartan = _finite_cartan(family, rank)
        base = 1
        label = f'{family}{rank}'
    rows = tuple(tuple(row) for row in cartan)
    return CoxeterDescriptor(cartan=rows, index_base=base, label=label)


def _validate_cartan(rows: Matrix) -> None:
    n = len(rows)
    if n == 0:
        raise ValueError('invalid Cartan matrix: empty')
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError('invalid Cartan matrix: not square')
        for j, c in enumerate(row):
            if i == j and c != 2:
                raise ValueError(
                    f'invalid Cartan matrix: diagonal entry {c} at {i}')
            if i != j and c > 0:
                raise ValueError(
                    f'invalid Cartan matrix: positive off-diagonal at '
                    f'({i}, {j})')
            if i != j and (c == 0) != (rows[j][i] == 0):
                raise ValueError(
                    f'invalid Cartan matrix: asymmetric zero pattern at '
                    f'({i}, {j})')


def build_system(
    descriptor: 'str | Sequence[Sequence[int]] | CoxeterDescriptor',
) -> 'CoxeterSystem':
    """Build a system from a type label, Cartan rows, or a descriptor.

    >>> build_system('B2').rank
    2
    >>> build_system([[2, -1], [-1, 2]]).labels
    (0, 1)
    >>> build_system('affine A2').labels
    (0, 1, 2)
    """
    if isinstance(descriptor, CoxeterDescriptor):
        desc = descriptor
    elif isinstance(descriptor, str):
        desc = _parse_label(descriptor)
    else:
        rows = tuple(tuple(int(c) for c in row) for row in descriptor)
        desc = CoxeterDescriptor(cartan=rows, index_base=0, label=None)
    return CoxeterSystem(desc)


# ----------------------------------------------------------------------
# elements

class Element:
    """An interned group element; compare and hash by registry slot."""

    __slots__ = ('system', 'index')

    def __init__(self, system: 'CoxeterSystem', index: int):
        self.system = system
        self.index = index

    @property
    def word(self) -> tuple[int, ...]:
        """ShortLex-minimal reduced word, as generator labels."""
        return self.system._words[self.index]

    @property
    def length(self) -> int:
        return self.system._lengths[self.index]

    @property
    def left_descents(self) -> frozenset[int]:
        return self.system._left_desc[self.index]

    @property
    def right_descents(self) -> frozenset[int]:
        return self.system._right_desc[self.index]

    def matrix(self) -> Matrix:
        """Action on the root lattice; column j is the image of a_j."""
        return self.system._matrices[self.index]

    @property
    def is_identity(self) -> bool:
        return self.index == 0

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Orders elements by (length, ShortLex word)."""
        return (self.length, self.word)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Element)
                and other.system is self.system
                and other.index == self.index)

    def __hash__(self) -> int:
        return hash((id(self.system), self.index))

    def __repr__(self) -> str:
        return f'Element({self.system.format_word(self)!r}, {self.system.name})'


# ----------------------------------------------------------------------
# the system and its registry

class CoxeterSystem:
    """A Coxeter system with an interning registry of elements.

    All state lives here; ``Element`` is a thin handle.  Registration is
    serialized through a lock so concurrent solvers can share one system.
    """

    def __init__(self, descriptor: CoxeterDescriptor):
        _validate_cartan(descriptor.cartan)
        self.descriptor = descriptor
        self.cartan = descriptor.cartan
        self.rank = len(self.cartan)
        self.index_base = descriptor.index_base
        self.labels = tuple(range(self.index_base,
                                  self.index_base + self.rank))
        self.name = descriptor.label or f'cartan{self.rank}'

        ident = tuple(
            tuple(1 if i == j else 0 for j in range(self.rank))
            for i in range(self.rank))
        self._identity_matrix = ident
        self._lock = threading.Lock()
        self._matrices: list[Matrix] = [ident]
        self._inverses: list[Matrix] = [ident]
        self._words: list[tuple[int, ...]] = [()]
        self._lengths: list[int] = [0]
        self._left_desc: list[frozenset[int]] = [frozenset()]
        self._right_desc: list[frozenset[int]] = [frozenset()]
        self._index_of: dict[Matrix, int] = {ident: 0}
        self._bruhat_memo: dict[tuple[int, int], bool] = {}
        self._longest: Element | None = None
        self._finite: bool | None = None

        self.identity = Element(self, 0)

    # -- raw matrix helpers (dense indices) -----------------------------

    def _left_mul_gen(self, m: Matrix, di: int) -> Matrix:
        """Matrix of s_i * w from the matrix of w; touches one row."""
        crow = self.cartan[di]
        new_row = tuple(
            -m[di][l] - sum(crow[k] * m[k][l]
                            for k in range(self.rank)
                            if k != di and crow[k])
            for l in range(self.rank))
        return tuple(new_row if r == di else m[r] for r in range(self.rank))

    def _right_mul_gen(self, m: Matrix, di: int) -> Matrix:
        """Matrix of w * s_i; touches one column."""
        crow = self.cartan[di]
        return tuple(
            tuple(
                -m[k][di] if l == di else m[k][l] - crow[l] * m[k][di]
                for l in range(self.rank))
            for k in range(self.rank))

    def _mat_mul(self, a: Matrix, b: Matrix) -> Matrix:
        n = self.rank
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n))

    @staticmethod
    def _column_nonpositive(m: Matrix, di: int) -> bool:
        return all(row[di] <= 0 for row in m)

    def _descent_labels(self, m: Matrix) -> frozenset[int]:
        # w(a_i) has all coordinates <= 0 exactly when s_i shortens w on
        # that side; the root dichotomy makes the sign test well defined.
        return frozenset(
            self.index_base + di
            for di in range(self.rank)
            if self._column_nonpositive(m, di))

    def _canonical_word(self, m: Matrix, mi: Matrix) -> tuple[int, ...]:
        """ShortLex-minimal reduced word by greedy left-descent stripping."""
        word: list[int] = []
        while m != self._identity_matrix:
            for di in range(self.rank):
                if self._column_nonpositive(mi, di):
                    break
            else:
                raise AssertionError('nonidentity element with no descent')
            word.append(self.index_base + di)
            m = self._left_mul_gen(m, di)
            mi = self._right_mul_gen(mi, di)
        return tuple(word)

    def _register(self, m: Matrix, mi: Matrix) -> int:
        idx = self._index_of.get(m)
        if idx is not None:
            return idx
        word = self._canonical_word(m, mi)
        with self._lock:
            idx = self._index_of.get(m)
            if idx is not None:
                return idx
            idx = len(self._matrices)
            self._matrices.append(m)
            self._inverses.append(mi)
            self._words.append(word)
            self._lengths.append(len(word))
            self._right_desc.append(self._descent_labels(m))
            self._left_desc.append(self._descent_labels(mi))
            self._index_of[m] = idx
            return idx

    # -- element construction -------------------------------------------

    def _dense(self, label: int) -> int:
        di = label - self.index_base
        if not 0 <= di < self.rank:
            raise ValueError(
                f'unknown generator {label} for {self.name}; '
                f'valid labels are {self.labels}')
        return di

    def simple(self, label: int) -> Element:
        """The generator s_label."""
        return self.multiply_gen(self.identity, label)

    def multiply_gen(self, w: Element, label: int, side: str = 'right') -> Element:
        """w * s or s * w; the length moves by exactly one.

        >>> a2 = build_system('A2')
        >>> a2.multiply_gen(a2.identity, 1).word
        (1,)
        """
        self._check_mine(w)
        di = self._dense(label)
        if side == 'right':
            m = self._right_mul_gen(self._matrices[w.index], di)
            mi = self._left_mul_gen(self._inverses[w.index], di)
        elif side == 'left':
            m = self._left_mul_gen(self._matrices[w.index], di)
            mi = self._right_mul_gen(self._inverses[w.index], di)
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        idx = self._register(m, mi)
        assert abs(self._lengths[idx] - w.length) == 1
        return Element(self, idx)

    def element_from_word(self, word: Iterable[int]) -> Element:
        """Multiply out a word; non-reduced input is normalized.

        >>> a2 = build_system('A2')
        >>> a2.element_from_word([1, 1, 2]).word
        (2,)
        """
        w = self.identity
        for label in word:
            w = self.multiply_gen(w, label)
        return w

    def product(self, x: Element, y: Element) -> Element:
        """General product x * y via the matrix representation."""
        self._check_mine(x)
        self._check_mine(y)
        m = self._mat_mul(self._matrices[x.index], self._matrices[y.index])
        mi = self._mat_mul(self._inverses[y.index], self._inverses[x.index])
        return Element(self, self._register(m, mi))

    def inverse(self, x: Element) -> Element:
        self._check_mine(x)
        return Element(self, self._register(
            self._inverses[x.index], self._matrices[x.index]))

    def _check_mine(self, w: Element) -> None:
        if w.system is not self:
            raise ValueError('element belongs to a different system')

    # -- words on the wire ----------------------------------------------

    def parse_word(self, text: str) -> Element:
        """Read "1,2,1" or "e" into an element."""
        text = text.strip()
        if text in ('e', ''):
            return self.identity
        try:
            labels = [int(part) for part in text.split(',')]
        except ValueError:
            raise ValueError(f'malformed word: {text!r}') from None
        return self.element_from_word(labels)

    def format_word(self, w: Element) -> str:
        self._check_mine(w)
        return ','.join(str(i) for i in w.word) or 'e'

    # -- descents and Bruhat order --------------------------------------

    def descents(self, w: Element, side: str = 'right') -> frozenset[int]:
        """Generator labels that shorten w on the given side.

        >>> a2 = build_system('A2')
        >>> sorted(a2.descents(a2.element_from_word([1, 2]), 'left'))
        [1]
        """
        self._check_mine(w)
        if side == 'right':
            return w.right_descents
        if side == 'left':
            return w.left_descents
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def bruhat_leq(self, x: Element, y: Element) -> bool:
        """Bruhat order, by descent recursion on y.

        Ids grow with (length, ShortLex), so every true comparison has
        id(x) <= id(y); the memo only ever holds such ordered pairs.

        >>> aff = build_system('affine A1')
        >>> aff.bruhat_leq(aff.parse_word('0'), aff.parse_word('1,0,1'))
        True
        """
        self._check_mine(x)
        self._check_mine(y)
        if x.index == y.index:
            return True
        if x.length >= y.length:
            return False
        if x.length == 0:
            return True
        key = (x.index, y.index)
        memo = self._bruhat_memo
        cached = memo.get(key)
        if cached is not None:
            return cached
        s = min(y.left_descents)
        sy = self.multiply_gen(y, s, 'left')
        if s in x.left_descents:
            result = self.bruhat_leq(self.multiply_gen(x, s, 'left'), sy)
        else:
            result = self.bruhat_leq(x, sy)
        memo[key] = result
        return result

    # -- enumeration ----------------------------------------------------

    def _bfs(self, max_length: int | None,
             keep) -> list[Element]:
        # lengths move by exactly one per generator, so levels never mix
        level = [self.identity]
        out = [self.identity]
        length = 0
        while level and (max_length is None or length < max_length):
            length += 1
            next_level: list[Element] = []
            seen_here = set()
            for w in sorted(level, key=lambda e: e.sort_key):
                for label in self.labels:
                    z = self.multiply_gen(w, label)
                    if z.length != length or z in seen_here:
                        continue
                    if not keep(z):
                        continue
                    seen_here.add(z)
                    next_level.append(z)
            next_level.sort(key=lambda e: e.sort_key)
            out.extend(next_level)
            level = next_level
        return out

    def enumerate_ball(self, max_length: int) -> 'Ideal':
        """All elements of length <= max_length, sorted (length, word).

        >>> [len(build_system('affine A1').enumerate_ball(L))
        ...  for L in range(4)]
        [1, 3, 5, 7]
        """
        if max_length < 0:
            raise ValueError('radius must be non-negative')
        elems = self._bfs(max_length, lambda z: True)
        return Ideal(self, tuple(elems), f'ball:{max_length}')

    def enumerate_ideal(self, top: Element) -> 'Ideal':
        """The lower Bruhat interval {z : z <= top}, sorted (length, word).

        Every z <= top is reachable from the identity through the interval
        one generator at a time, so a pruned search is exhaustive.
        """
        self._check_mine(top)
        elems = self._bfs(top.length, lambda z: self.bruhat_leq(z, top))
        return Ideal(self, tuple(elems), f'ideal:{self.format_word(top)}')

    # -- finiteness and the longest element -----------------------------

    def _symmetrizer(self) -> list[Fraction] | None:
        """Positive d with d_i c_ij = d_j c_ji, or None if none exists."""
        d: list[Fraction | None] = [None] * self.rank
        for start in range(self.rank):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(self.rank):
                    if i == j or not self.cartan[i][j]:
                        continue
                    val = d[i] * Fraction(self.cartan[i][j], self.cartan[j][i])
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        return None
        return d  # type: ignore[return-value]

    def is_finite_type(self) -> bool:
        """Whether the group is finite, decided exactly.

        Symmetrize the Cartan matrix over the rationals and test positive
        definiteness through leading principal minors.  Non-symmetrizable
        matrices contain a cycle and are never of finite type.

        >>> build_system('B3').is_finite_type()
        True
        >>> build_system('affine A2').is_finite_type()
        False
        """
        if self._finite is not None:
            return self._finite
        d = self._symmetrizer()
        if d is None:
            self._finite = False
            return False
        n = self.rank
        sym = [[d[i] * self.cartan[i][j] for j in range(n)] for i in range(n)]
        self._finite = all(_leading_minor(sym, k) > 0 for k in range(1, n + 1))
        return self._finite

    def longest_element(self) -> Element:
        """The longest element of a finite system.

        >>> build_system('A2').longest_element().word
        (1, 2, 1)
        >>> build_system('affine A1').longest_element()
        Traceback (most recent call last):
            ...
        ValueError: no longest element: affine A1 is not of finite type
        """
        if self._longest is not None:
            return self._longest
        if not self.is_finite_type():
            raise ValueError(
                f'no longest element: {self.name} is not of finite type')
        whole = self._bfs(None, lambda z: True)
        top = whole[-1]
        assert top.right_descents == frozenset(self.labels)
        self._longest = top
        return top

    # -- parabolic quotients --------------------------------------------

    def minimal_rep(self, w: Element, J: frozenset[int],
                    side: str = 'left') -> Element:
        """Shortest element of the coset w W_J (side='left') or W_J w."""
        self._check_mine(w)
        strip_side = 'right' if side == 'left' else 'left'
        while True:
            down = self.descents(w, strip_side) & J
            if not down:
                return w
            w = self.multiply_gen(w, min(down), strip_side)

    def coset_partition(self, ideal: 'Ideal', J: Iterable[int],
                        side: str = 'left') -> 'ParabolicData':
        """Partition an ideal into parabolic cosets with minimal reps.

        >>> a2 = build_system('A2')
        >>> ball = a2.enumerate_ball(3)
        >>> part = a2.coset_partition(ball, {1})
        >>> [a2.format_word(r) for r in part.reps]
        ['e', '2', '1,2']
        """
        if ideal.system is not self:
            raise ValueError('ideal belongs to a different system')
        J = frozenset(J)
        bad = J - set(self.labels)
        if bad:
            raise ValueError(
                f'parabolic subset {sorted(bad)} outside generators '
                f'{self.labels}')
        if side not in ('left', 'right'):
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        rep_of: dict[Element, Element] = {}
        fibers: dict[Element, list[Element]] = {}
        for w in ideal:
            rep = self.minimal_rep(w, J, side)
            # reps descend inside the coset, so a closed ideal contains them
            rep_of[w] = rep
            fibers.setdefault(rep, []).append(w)
        reps = tuple(sorted(fibers, key=lambda e: e.sort_key))
        return ParabolicData(
            system=self,
            J=J,
            side=side,
            ideal=ideal,
            rep_of=rep_of,
            fibers={rep: tuple(members) for rep, members in fibers.items()},
            reps=reps,
        )


def _leading_minor(sym: list[list[Fraction]], k: int) -> Fraction:
    """Determinant of the top-left k x k block, exact Gaussian elimination."""
    a = [row[:k] for row in sym[:k]]
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, k):
            if a[r][col]:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


# ----------------------------------------------------------------------
# ideals

class Ideal:
    """A finite, downward-closed chunk of the group, in (length, word) order.

    Solvers traverse it back to front; serializers rely on the order being
    deterministic.
    """

    def __init__(self, system: CoxeterSystem, elements: tuple[Element, ...],
                 source: str = ''):
        self.system = system
        self.elements = tuple(
            sorted(elements, key=lambda e: e.sort_key))
        self.source = source
        self._ids = frozenset(e.index for e in self.elements)
        if len(self._ids) != len(self.elements):
            raise ValueError('duplicate elements in ideal')
        self._pos = {e.index: k for k, e in enumerate(self.elements)}

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: object) -> bool:
        return (isinstance(w, Element) and w.system is self.system
                and w.index in self._ids)

    def position(self, w: Element) -> int:
        return self._pos[w.index]

    @property
    def top(self) -> Element:
        """The last element in the order; the unique maximum for intervals."""
        return self.elements[-1]

    def sub_ideal(self, top: Element) -> 'Ideal':
        """Restrict to {z : z <= top}; equals the full interval below top."""
        if top not in self:
            raise ValueError('top element outside the ideal')
        sub = tuple(z for z in self.elements
                    if self.system.bruhat_leq(z, top))
        return Ideal(self.system, sub,
                     f'ideal:{self.system.format_word(top)}')

    def is_downward_closed(self) -> bool:
        """Exact check: the union of intervals below members equals the set."""
        sys = self.system
        maximal = [z for z in self.elements
                   if not any(w != z and sys.bruhat_leq(z, w)
                              for w in self.elements)]
        closure: set[Element] = set()
        for z in maximal:
            closure.update(sys.enumerate_ideal(z))
        return closure == set(self.elements)

    def __repr__(self) -> str:
        return (f'Ideal({self.system.name}, {len(self.elements)} elements'
                + (f', {self.source})' if self.source else ')'))


# ----------------------------------------------------------------------
# parabolic data

@dataclass(frozen=True, eq=False)
class ParabolicData:
    """A coset partition of an ideal for a standard parabolic subgroup."""

    system: CoxeterSystem
    J: frozenset[int]
    side: str
    ideal: Ideal
    rep_of: dict[Element, Element]
    fibers: dict[Element, tuple[Element, ...]]
    reps: tuple[Element, ...]

    def fiber(self, rep: Element) -> tuple[Element, ...]:
        return self.fibers[rep]

    def __repr__(self) -> str:
        J = ','.join(str(j) for j in sorted(self.J)) or 'empty'
        return (f'ParabolicData({self.system.name}, J={{{J}}}, '
                f'{self.side}, {len(self.reps)} cosets)')
