"""Finite-type root data in the adjoint convention.

Weights are integer tuples in the basis of simple roots, so the weight
lattice is the root lattice.  Simple-root indices are 1-based in the public
API.  The Cartan matrix is stored as

    cartan[i][j] = <alpha_j, alpha_i^vee>

(0-based storage), and every pairing in the package goes through
:func:`pairing` / :func:`pairings`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotDominant, UnknownType

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_LABEL = re.compile(r"^([A-G])(\d+)$")


# ---------------------------------------------------------------------------
# Cartan matrices (Bourbaki numbering)


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _cartan_simple(letter: str, n: int) -> list[list[int]]:
    if letter == "A" and n >= 1:
        return _chain(n)
    if letter == "B" and n >= 2:
        a = _chain(n)
        a[n - 1][n - 2] = -2  # alpha_n short
        return a
    if letter == "C" and n >= 2:
        a = _chain(n)
        a[n - 2][n - 1] = -2  # alpha_n long
        return a
    if letter == "D" and n >= 3:
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if letter == "E" and n in (6, 7, 8):
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a
    if letter == "F" and n == 4:
        a = _chain(4)
        a[2][1] = -2  # alpha_3, alpha_4 short
        return a
    if letter == "G" and n == 2:
        return [[2, -3], [-1, 2]]  # alpha_1 short
    raise UnknownType(f"no finite Cartan type {letter}{n}")


def parse_type(label: str) -> tuple[tuple[str, int], ...]:
    """Split ``"A1xB2"`` into ``(("A", 1), ("B", 2))``."""
    if not isinstance(label, str) or not label.strip():
        raise UnknownType(f"unparsable type label {label!r}")
    parts = []
    for piece in label.strip().split("x"):
        m = _LABEL.match(piece.strip())
        if m is None:
            raise UnknownType(f"unparsable type label {label!r}")
        letter, n = m.group(1), int(m.group(2))
        _cartan_simple(letter, n)
        parts.append((letter, n))
    return tuple(parts)


def block_diagonal(blocks: Sequence[Sequence[Sequence[int]]]) -> Matrix:
    n = sum(len(b) for b in blocks)
    a = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                a[off + i][off + j] = v
        off += len(b)
    return tuple(tuple(r) for r in a)


def weyl_group_order(label: str) -> int:
    """Classical order of the Weyl group of a (product) type."""
    order = 1
    for letter, n in parse_type(label):
        if letter == "A":
            order *= math.factorial(n + 1)
        elif letter in "BC":
            order *= 2**n * math.factorial(n)
        elif letter == "D":
            order *= 2 ** (n - 1) * math.factorial(n)
        else:
            order *= {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[
                f"{letter}{n}"
            ]
    return order


# ---------------------------------------------------------------------------
# Root datum


@dataclass(frozen=True)
class RootDatum:
    rank: int
    cartan: Matrix
    type_label: str
    positive_roots: tuple[Weight, ...] = field(compare=False, repr=False)

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(unit(self.rank, i) for i in range(1, self.rank + 1))

    @cached_property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(neg(a) for a in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset[Weight]:
        return frozenset(self.roots)

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        """Squared lengths (alpha_i, alpha_i), shortest root of each component = 2."""
        return _symmetrizer(self.cartan)

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        d = self.symmetrizer
        n = self.rank
        return tuple(tuple(d[i] * self.cartan[i][j] / 2 for j in range(n)) for i in range(n))

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        tot = [0] * self.rank
        for a in self.positive_roots:
            for k, c in enumerate(a):
                tot[k] += c
        return tuple(Fraction(t, 2) for t in tot)

    def to_dict(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(a) for a in self.positive_roots],
        }


def unit(n: int, i: int) -> Weight:
    """The simple root alpha_i (1-based) as a coordinate vector."""
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def neg(v: Weight) -> Weight:
    return tuple(-c for c in v)


def add(u: Sequence[int], v: Sequence[int]) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def height(v: Sequence[int]) -> int:
    return sum(v)


def weight_key(v: Sequence[int]) -> tuple:
    """Deterministic order on weights: by height, then lexicographically."""
    return (sum(v), tuple(v))


def is_positive(v: Sequence[int]) -> bool:
    """True for nonzero vectors with all coordinates >= 0 (roots are sign-coherent)."""
    return any(v) and all(c >= 0 for c in v)


def _symmetrizer(cartan: Matrix) -> tuple[Fraction, ...]:
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    comp.append(j)
                    stack.append(j)
        lo = min(d[k] for k in comp)
        for k in comp:
            d[k] = 2 * d[k] / lo
    return tuple(d)  # type: ignore[arg-type]


def _is_positive_definite(gram: Sequence[Sequence[Fraction]]) -> bool:
    # leading principal minors by exact elimination
    n = len(gram)
    m = [list(r) for r in gram]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


def validate_cartan(cartan: Sequence[Sequence[int]]) -> None:
    n = len(cartan)
    for i in range(n):
        if len(cartan[i]) != n:
            raise UnknownType("Cartan matrix is not square")
        if cartan[i][i] != 2:
            raise UnknownType("Cartan matrix needs 2 on the diagonal")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise UnknownType("off-diagonal Cartan entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise UnknownType("Cartan matrix zero pattern is not symmetric")
    d = _symmetrizer(tuple(tuple(r) for r in cartan))
    for i in range(n):
        for j in range(n):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                raise UnknownType("Cartan matrix is not symmetrizable")
    gram = [[d[i] * cartan[i][j] / 2 for j in range(n)] for i in range(n)]
    if not _is_positive_definite(gram):
        raise UnknownType("Cartan matrix is not of finite type")


def _positive_roots(cartan: Matrix) -> tuple[Weight, ...]:
    n = len(cartan)
    found = {unit(n, i) for i in range(1, n + 1)}
    frontier = list(found)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                m = sum(beta[j] * cartan[i][j] for j in range(n))
                if m < 0:
                    gamma = tuple(c - m if k == i else c for k, c in enumerate(beta))
                    if gamma not in found:
                        found.add(gamma)
                        nxt.append(gamma)
        frontier = nxt
    return tuple(sorted(found, key=weight_key))


def datum_from_cartan(cartan: Sequence[Sequence[int]], type_label: str) -> RootDatum:
    validate_cartan(cartan)
    a = tuple(tuple(int(v) for v in row) for row in cartan)
    return RootDatum(rank=len(a), cartan=a, type_label=type_label, positive_roots=_positive_roots(a))


def build_datum(type_label: str) -> RootDatum:
    """Root datum of a Cartan type such as ``"E6"`` or ``"A1xA2"``."""
    parts = parse_type(type_label)
    cartan = block_diagonal([_cartan_simple(letter, n) for letter, n in parts])
    return datum_from_cartan(cartan, "x".join(f"{l}{n}" for l, n in parts))


def product(*data: RootDatum) -> RootDatum:
    cartan = block_diagonal([d.cartan for d in data])
    return datum_from_cartan(cartan, "x".join(d.type_label for d in data))


# ---------------------------------------------------------------------------
# Pairings, reflections, dominance


def pairing(datum: RootDatum, weight: Sequence[int], i: int) -> int:
    """<weight, alpha_i^vee> for a 1-based simple index i."""
    row = datum.cartan[i - 1]
    return sum(c * a for c, a in zip(weight, row))


def pairings(datum: RootDatum, weight: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(c * a for c, a in zip(weight, row)) for row in datum.cartan)


def simple_reflection(datum: RootDatum, weight: Sequence[int], i: int) -> Weight:
    m = pairing(datum, weight, i)
    return tuple(c - m if k == i - 1 else c for k, c in enumerate(weight))


def is_dominant(datum: RootDatum, weight: Sequence[int]) -> bool:
    return all(m >= 0 for m in pairings(datum, weight))


def check_weight(datum: RootDatum, weight: Sequence[int], dominant: bool = True) -> Weight:
    w = tuple(int(c) for c in weight)
    if len(w) != datum.rank:
        raise ValueError(f"weight {list(w)} has {len(w)} coordinates, rank is {datum.rank}")
    if dominant and not is_dominant(datum, w):
        raise NotDominant(f"weight {list(w)} has pairings {list(pairings(datum, w))}")
    return w


def inner(datum: RootDatum, u: Sequence, v: Sequence) -> Fraction:
    g = datum.gram
    return sum((u[i] * g[i][j] * v[j] for i in range(datum.rank) for j in range(datum.rank) if u[i] and v[j]), Fraction(0))


def coroot_pairing(datum: RootDatum, weight: Sequence, root: Sequence[int]) -> Fraction:
    """<weight, root^vee> = 2 (weight, root) / (root, root) for any root."""
    return 2 * inner(datum, weight, root) / inner(datum, root, root)


def reflection_matrix(datum: RootDatum, root: Sequence[int]) -> Matrix:
    """Matrix of s_root in simple-root coordinates (column j = s_root(alpha_j))."""
    n = datum.rank
    cols = []
    for j in range(n):
        m = coroot_pairing(datum, unit(n, j + 1), root)
        if m.denominator != 1:
            raise ValueError(f"{list(root)} is not a root of {datum.type_label}")
        cols.append([(1 if k == j else 0) - int(m) * root[k] for k in range(n)])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def weyl_dim(datum: RootDatum, weight: Sequence[int]) -> int:
    """Dimension of the simple module of highest weight ``weight``."""
    lam = check_weight(datum, weight)
    rho = datum.rho
    lam_rho = tuple(l + r for l, r in zip(lam, rho))
    num = Fraction(1)
    for a in datum.positive_roots:
        num *= inner(datum, lam_rho, a) / inner(datum, rho, a)
    assert num.denominator == 1 and num > 0
    return int(num)


def dominant_weights(datum: RootDatum, max_sum: int) -> list[Weight]:
    """Dominant weights with coordinate sum <= max_sum, in weight_key order.

    Dominant elements of the root lattice have nonnegative coordinates.
    """
    out = []

    def rec(prefix: list[int], left: int) -> None:
        if len(prefix) == datum.rank:
            w = tuple(prefix)
            if is_dominant(datum, w):
                out.append(w)
            return
        for c in range(left + 1):
            prefix.append(c)
            rec(prefix, left - c)
            prefix.pop()

    rec([], max_sum)
    return sorted(out, key=weight_key)


# ---------------------------------------------------------------------------
# Type identification


def _components(cartan: Matrix) -> list[list[int]]:
    n = len(cartan)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and cartan[i][j] != 0 and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def find_relabeling(a: Matrix, b: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """A permutation p with b[p[i]][p[j]] == a[i][j], or None."""
    n = len(a)
    if len(b) != n:
        return None
    p: list[int] = []
    used = [False] * n

    def rec() -> bool:
        i = len(p)
        if i == n:
            return True
        for cand in range(n):
            if used[cand]:
                continue
            if all(b[cand][p[k]] == a[i][k] and b[p[k]][cand] == a[k][i] for k in range(i)):
                p.append(cand)
                used[cand] = True
                if rec():
                    return True
                p.pop()
                used[cand] = False
        return False

    return tuple(p) if rec() else None


def _candidates(m: int) -> Iterable[tuple[str, int]]:
    yield ("A", m)
    if m >= 2:
        yield ("B", m)
        yield ("C", m)
    if m >= 4:
        yield ("D", m)
    if m in (6, 7, 8):
        yield ("E", m)
    if m == 4:
        yield ("F", 4)
    if m == 2:
        yield ("G", 2)


def identify_type(cartan: Matrix) -> str:
    """Cartan type label of a finite-type matrix, components by smallest index.

    An exact match in standard numbering is preferred, so the rank-2 matrix
    ``[[2,-2],[-1,2]]`` is reported as C2 and its transpose as B2.
    """
    labels = []
    for comp in _components(cartan):
        sub = tuple(tuple(cartan[i][j] for j in comp) for i in comp)
        cands = list(_candidates(len(comp)))
        label = None
        for letter, m in cands:
            if _cartan_simple(letter, m) == [list(r) for r in sub]:
                label = f"{letter}{m}"
                break
        if label is None:
            for letter, m in cands:
                if find_relabeling(sub, _cartan_simple(letter, m)) is not None:
                    label = f"{letter}{m}"
                    break
        if label is None:
            raise UnknownType(f"matrix {sub} is not of finite type")
        labels.append(label)
    return "x".join(labels)
