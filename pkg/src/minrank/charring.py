"""The group ring Z[weights] with Demazure operators.

Demazure operators use the per-monomial closed form, so everything stays in
integer arithmetic.  For a 1-based simple index i and m = <lam, alpha_i^vee>:

    m >= 0   e^lam -> e^lam + e^(lam - alpha_i) + ... + e^(s_i lam)
    m == -1  e^lam -> 0
    m <= -2  e^lam -> -(e^(lam + alpha_i) + ... + e^(s_i lam - alpha_i))
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .rootdata import RootDatum, Weight, check_weight, pairing, weight_key
from .weyl import WeylElement, longest_element


class WeightPolynomial:
    """A finitely supported function weights -> Z, stored without zeros."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        acc: dict[Weight, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[tuple(w)] += c
        self._terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, weight: Sequence[int], coeff: int = 1) -> "WeightPolynomial":
        return cls({tuple(weight): coeff})

    @classmethod
    def _raw(cls, terms: dict[Weight, int]) -> "WeightPolynomial":
        p = cls.__new__(cls)
        p._terms = {w: c for w, c in terms.items() if c}
        p._hash = None
        return p

    # mapping-ish interface
    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self._terms, key=weight_key))

    def items(self) -> list[tuple[Weight, int]]:
        return [(w, self._terms[w]) for w in self]

    def __getitem__(self, weight: Sequence[int]) -> int:
        return self._terms.get(tuple(weight), 0)

    coeff = __getitem__

    @property
    def support(self) -> frozenset[Weight]:
        return frozenset(self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ring structure
    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightPolynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return WeightPolynomial._raw(out)

    def __neg__(self) -> "WeightPolynomial":
        return WeightPolynomial._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        return self + (-other)

    def __mul__(self, other: "WeightPolynomial | int") -> "WeightPolynomial":
        if isinstance(other, int):
            return WeightPolynomial._raw({w: c * other for w, c in self._terms.items()})
        out: dict[Weight, int] = defaultdict(int)
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                out[tuple(x + y for x, y in zip(u, v))] += a * b
        return WeightPolynomial._raw(out)

    __rmul__ = __mul__

    def map_weights(self, fn: Callable[[Weight], Sequence[int]]) -> "WeightPolynomial":
        out: dict[Weight, int] = defaultdict(int)
        for w, c in self._terms.items():
            out[tuple(fn(w))] += c
        return WeightPolynomial._raw(out)

    def act(self, w: WeylElement) -> "WeightPolynomial":
        return self.map_weights(w.act)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*e^{list(w)}" for w, c in reversed(self.items())]
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "coeff": c} for w, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "WeightPolynomial":
        return cls((tuple(t["weight"]), int(t["coeff"])) for t in data)


def demazure_simple(datum: RootDatum, f: WeightPolynomial, i: int) -> WeightPolynomial:
    """Demazure operator D_i on Z[weights] (i is 1-based)."""
    k = i - 1
    out: dict[Weight, int] = defaultdict(int)
    for lam, c in f._terms.items():
        m = pairing(datum, lam, i)
        if m >= 0:
            base = list(lam)
            for _ in range(m + 1):
                out[tuple(base)] += c
                base[k] -= 1
        elif m <= -2:
            base = list(lam)
            for _ in range(-m - 1):
                base[k] += 1
                out[tuple(base)] -= c
    return WeightPolynomial._raw(out)


def demazure_word(datum: RootDatum, f: WeightPolynomial, word: Sequence[int]) -> WeightPolynomial:
    """D_{i_1} ... D_{i_k} f for word [i_1, ..., i_k] (rightmost applied first)."""
    for i in reversed(word):
        f = demazure_simple(datum, f, i)
    return f


@lru_cache(maxsize=4096)
def _weyl_character(datum: RootDatum, lam: Weight) -> WeightPolynomial:
    w0 = longest_element(datum)
    return demazure_word(datum, WeightPolynomial.monomial(lam), w0.word)


def weyl_character(datum: RootDatum, weight: Sequence[int]) -> WeightPolynomial:
    """Character of the simple module with dominant highest weight ``weight``."""
    return _weyl_character(datum, check_weight(datum, weight))


def joseph_character(w: WeylElement, weight: Sequence[int]) -> WeightPolynomial:
    """Character D_w e^lam of the dual Joseph module H_w(lam)."""
    lam = check_weight(w.datum, weight)
    return demazure_word(w.datum, WeightPolynomial.monomial(lam), w.word)
