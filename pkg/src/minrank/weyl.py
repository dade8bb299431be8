"""Weyl groups as groups of lattice automorphisms.

A :class:`WeylGroup` holds the whole group as integer ids ordered by
(length, canonical word), with a right-multiplication table by simple
reflections.  Everything heavier (cosets, intervals, twisted involutions)
is done on ids; :class:`WeylElement` is the value type handed to callers.

The canonical reduced word of w is built by greedy descent from the right:
take the smallest i with w(alpha_i) negative, then word(w) = word(w s_i) + [i].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import max_group_order
from .errors import DatumMismatch, GroupTooLarge
from .rootdata import Matrix, RootDatum, is_positive, reflection_matrix, weyl_group_order

Flat = tuple[int, ...]


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element; equality and hashing use the matrix (and datum)."""

    matrix: Matrix
    word: tuple[int, ...] = field(compare=False)
    length: int = field(compare=False)
    datum: RootDatum = field(repr=False)

    def __len__(self) -> int:
        return self.length

    def act(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        _same_datum(self, other)
        return element_from_matrix(self.datum, matmul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        return element_from_word(self.datum, self.word[::-1])

    def is_identity(self) -> bool:
        return self.length == 0


def _same_datum(u: WeylElement, w: WeylElement) -> None:
    if u.datum is not w.datum and u.datum != w.datum:
        raise DatumMismatch(f"{u.datum.type_label} vs {w.datum.type_label}")


# ---------------------------------------------------------------------------
# flat matrix helpers (row-major, column j = w(alpha_j))


def _flat(m: Matrix) -> Flat:
    return tuple(v for row in m for v in row)


def _nested(f: Flat, n: int) -> Matrix:
    return tuple(f[r * n : (r + 1) * n] for r in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))


def _rmul(f: Flat, i: int, cartan: Matrix, n: int) -> Flat:
    """f * s_i for 0-based i: s_i(alpha_j) = alpha_j - a_ij alpha_i."""
    out = list(f)
    row_i = cartan[i]
    for r in range(n):
        base = r * n
        ci = f[base + i]
        if ci:
            for j in range(n):
                a = row_i[j]
                if a and j != i:
                    out[base + j] -= a * ci
            out[base + i] = -ci
    return tuple(out)


def _col_negative(f: Flat, j: int, n: int) -> bool:
    for r in range(n):
        v = f[r * n + j]
        if v:
            return v < 0
    return False


# ---------------------------------------------------------------------------


class WeylGroup:
    """The full Weyl group of a root datum, enumerated by BFS."""

    def __init__(self, datum: RootDatum, max_order: int | None = None):
        bound = max_group_order() if max_order is None else max_order
        expected = weyl_group_order(datum.type_label) if _standard_label(datum) else None
        if expected is not None and expected > bound:
            raise GroupTooLarge(f"|W({datum.type_label})| = {expected} exceeds bound {bound}")
        self.datum = datum
        n = self.rank = datum.rank
        cartan = datum.cartan

        ident = _flat(identity_matrix(n))
        index = {ident: 0}
        mats = [ident]
        length = [0]
        right: list[list[int]] = [[0] * n]
        frontier = [0]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for w in frontier:
                fw = mats[w]
                row = right[w]
                for i in range(n):
                    m = _rmul(fw, i, cartan, n)
                    k = index.get(m)
                    if k is None:
                        k = len(mats)
                        if k >= bound:
                            raise GroupTooLarge(f"Weyl group of {datum.type_label} exceeds bound {bound}")
                        index[m] = k
                        mats.append(m)
                        length.append(level)
                        right.append([0] * n)
                        nxt.append(k)
                    row[i] = k
            frontier = nxt

        words: list[tuple[int, ...]] = [()] * len(mats)
        for w in sorted(range(len(mats)), key=length.__getitem__):
            if length[w] == 0:
                continue
            for i in range(n):
                if length[right[w][i]] < length[w]:
                    words[w] = words[right[w][i]] + (i + 1,)
                    break

        order = sorted(range(len(mats)), key=lambda w: (length[w], words[w]))
        new_id = [0] * len(mats)
        for new, old in enumerate(order):
            new_id[old] = new
        self._mats = [mats[o] for o in order]
        self.lengths = [length[o] for o in order]
        self.words = [words[o] for o in order]
        self.right = [[new_id[k] for k in right[o]] for o in order]
        self._index = {m: k for k, m in enumerate(self._mats)}
        self._elements: list[WeylElement | None] = [None] * len(order)
        self._inv: list[int] | None = None
        self._theta_cache: dict[tuple[int, ...], list[int]] = {}

    # -- basic access -------------------------------------------------------

    def __len__(self) -> int:
        return len(self._mats)

    def __iter__(self) -> Iterator[WeylElement]:
        return (self.element(k) for k in range(len(self)))

    def __contains__(self, item: object) -> bool:
        if not isinstance(item, WeylElement) or item.datum != self.datum:
            return False
        return _flat(item.matrix) in self._index

    def element(self, k: int) -> WeylElement:
        e = self._elements[k]
        if e is None:
            e = WeylElement(
                matrix=_nested(self._mats[k], self.rank),
                word=self.words[k],
                length=self.lengths[k],
                datum=self.datum,
            )
            self._elements[k] = e
        return e

    def flat_matrix(self, k: int) -> Flat:
        return self._mats[k]

    def index(self, w: WeylElement | Matrix) -> int:
        if isinstance(w, WeylElement):
            if w.datum != self.datum:
                raise DatumMismatch(f"{w.datum.type_label} vs {self.datum.type_label}")
            w = w.matrix
        return self._index[_flat(w)]

    def index_of_flat(self, f: Flat) -> int:
        return self._index[f]

    @property
    def identity(self) -> int:
        return 0

    @property
    def longest(self) -> int:
        return len(self) - 1

    # -- arithmetic on ids --------------------------------------------------

    def from_word(self, word: Iterable[int], start: int = 0) -> int:
        w = start
        for i in word:
            w = self.right[w][i - 1]
        return w

    def mul(self, a: int, b: int) -> int:
        return self.from_word(self.words[b], a)

    @property
    def inverses(self) -> list[int]:
        if self._inv is None:
            self._inv = [self.from_word(reversed(wd)) for wd in self.words]
        return self._inv

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def left(self, i: int, a: int) -> int:
        """s_i * a for a 1-based simple index."""
        inv = self.inverses
        return inv[self.right[inv[a]][i - 1]]

    def theta_map(self, sigma: Sequence[int]) -> list[int]:
        """Ids of sigma w sigma for a diagram automorphism (1-based images)."""
        key = tuple(sigma)
        cached = self._theta_cache.get(key)
        if cached is not None:
            return cached
        n = self.rank
        s = [x - 1 for x in sigma]
        perm = [s[r] * n + s[c] for r in range(n) for c in range(n)]
        out = [self._index[tuple(f[p] for p in perm)] for f in self._mats]
        self._theta_cache[key] = out
        return out

    # -- Bruhat order -------------------------------------------------------

    def is_reduced_for(self, word: Sequence[int], w: int) -> bool:
        return len(word) == self.lengths[w] and self.from_word(word) == w

    def leq(self, u: int, w: int, word: Sequence[int] | None = None) -> bool:
        """u <= w by descending along a reduced word of w (lifting property)."""
        if word is None:
            word = self.words[w]
        lengths, right = self.lengths, self.right
        if lengths[u] > len(word):
            return False
        for i in reversed(word):
            us = right[u][i - 1]
            if lengths[us] < lengths[u]:
                u = us
        return u == 0

    def lower_interval(self, w: int, word: Sequence[int] | None = None) -> frozenset[int]:
        """All products of subwords of a reduced word of w."""
        if word is None:
            word = self.words[w]
        reach = {0}
        right = self.right
        for i in word:
            reach |= {right[x][i - 1] for x in reach}
        return frozenset(reach)

    def subgroup_generated(self, gens: Iterable[int]) -> frozenset[int]:
        gens = list(set(gens))
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(seen)


def _standard_label(datum: RootDatum) -> bool:
    from .rootdata import build_datum, UnknownType

    try:
        return build_datum(datum.type_label).cartan == datum.cartan
    except UnknownType:
        return False


@lru_cache(maxsize=32)
def _cached_group(datum: RootDatum, bound: int) -> WeylGroup:
    return WeylGroup(datum, bound)


def enumerate_weyl(datum: RootDatum, max_order: int | None = None) -> WeylGroup:
    """The Weyl group of ``datum`` (memoized per datum and bound)."""
    bound = max_group_order() if max_order is None else max_order
    return _cached_group(datum, bound)


def clear_group_cache() -> None:
    _cached_group.cache_clear()


# ---------------------------------------------------------------------------
# element-level operations


def element_from_matrix(datum: RootDatum, matrix: Sequence[Sequence[int]]) -> WeylElement:
    """Wrap a matrix, computing its canonical word by greedy descent."""
    n = datum.rank
    f = tuple(int(v) for row in matrix for v in row)
    start = f
    letters = []
    while True:
        for i in range(n):
            if _col_negative(f, i, n):
                f = _rmul(f, i, datum.cartan, n)
                letters.append(i + 1)
                break
        else:
            break
    if f != _flat(identity_matrix(n)):
        raise ValueError("matrix is not a Weyl group element")
    return WeylElement(
        matrix=_nested(start, n), word=tuple(reversed(letters)), length=len(letters), datum=datum
    )


def word_matrix(datum: RootDatum, word: Sequence[int]) -> Matrix:
    n = datum.rank
    f = _flat(identity_matrix(n))
    for i in word:
        if not 1 <= i <= n:
            raise ValueError(f"simple index {i} out of range 1..{n}")
        f = _rmul(f, i - 1, datum.cartan, n)
    return _nested(f, n)


def element_from_word(datum: RootDatum, word: Sequence[int]) -> WeylElement:
    return element_from_matrix(datum, word_matrix(datum, word))


def identity_element(datum: RootDatum) -> WeylElement:
    return element_from_matrix(datum, identity_matrix(datum.rank))


def inversion_count(w: WeylElement) -> int:
    """|{alpha > 0 : w(alpha) < 0}|."""
    return sum(1 for a in w.datum.positive_roots if not is_positive(w.act(a)))


def longest_element(datum: RootDatum) -> WeylElement:
    """w0, built by greedy ascent: multiply by s_i while w(alpha_i) > 0."""
    n = datum.rank
    f = _flat(identity_matrix(n))
    word = []
    while True:
        for i in range(n):
            if not _col_negative(f, i, n):
                f = _rmul(f, i, datum.cartan, n)
                word.append(i + 1)
                break
        else:
            break
    return element_from_matrix(datum, _nested(f, n))


def bruhat_leq(u: WeylElement, w: WeylElement, word: Sequence[int] | None = None) -> bool:
    """u <= w in Bruhat order, via the subword criterion on a reduced word of w.

    ``word`` defaults to the cached canonical word of w; any reduced word of w
    gives the same answer.
    """
    _same_datum(u, w)
    datum = u.datum
    if word is None:
        word = w.word
    elif len(word) != w.length or word_matrix(datum, word) != w.matrix:
        raise ValueError(f"{list(word)} is not a reduced word for w")
    if u.length > len(word):
        return False
    n = datum.rank
    f = _flat(u.matrix)
    ln = u.length
    for i in reversed(word):
        if _col_negative(f, i - 1, n):  # u s_i < u
            f = _rmul(f, i - 1, datum.cartan, n)
            ln -= 1
    return ln == 0


def reflection_subgroup(datum: RootDatum, roots: Iterable[Sequence[int]]) -> frozenset[WeylElement]:
    """Group generated by the reflections s_alpha, alpha in ``roots``."""
    roots = {tuple(r) for r in roots}
    for r in roots:
        if r not in datum.root_set:
            raise ValueError(f"{list(r)} is not a root of {datum.type_label}")
    gens = {reflection_matrix(datum, r) for r in roots}
    ident = identity_matrix(datum.rank)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = matmul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(element_from_matrix(datum, m) for m in seen)


def theta_conjugate(w: WeylElement, sigma: Sequence[int]) -> WeylElement:
    """sigma w sigma for a diagram automorphism given by 1-based images."""
    n = w.datum.rank
    s = [x - 1 for x in sigma]
    m = tuple(tuple(w.matrix[s[r]][s[c]] for c in range(n)) for r in range(n))
    return element_from_matrix(w.datum, m)


def fixed_subgroup(datum: RootDatum, theta) -> frozenset[WeylElement]:
    """W^theta = {w : theta w theta = w}, filtered from the full group."""
    group = enumerate_weyl(datum)
    tmap = group.theta_map(theta.sigma)
    return frozenset(group.element(k) for k in range(len(group)) if tmap[k] == k)
