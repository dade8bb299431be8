"""B-orbits on G/K as cosets of W / W^theta.

Each coset vW^theta carries the twisted involution x = v theta(v)^-1.  Peeling
writes x = s_1 ... s_h theta(s_h) ... theta(s_1) with l(x) = 2h, always taking
the smallest simple index that lowers the length by two; s_1 ... s_h is the
canonical representative of the coset.  Orbit closures are compared through
Bruhat intervals below those representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from .config import Limits
from .errors import BruteForceTooLarge, DatumMismatch, RealOrNoncompactStep
from .folding import InvolutionDatum
from .report import Claim, Report
from .rootdata import RootDatum
from .weyl import WeylElement, WeylGroup, enumerate_weyl, theta_conjugate


# ---------------------------------------------------------------------------
# element-level operations


def twisted_involution(w: WeylElement, theta: InvolutionDatum) -> WeylElement:
    """x = w theta(w)^-1."""
    return w * theta_conjugate(w, theta.sigma).inverse()


def _peel_ids(group: WeylGroup, sigma: Sequence[int], x: int) -> tuple[int, ...]:
    lengths, right = group.lengths, group.right
    word = []
    while x != 0:
        target = lengths[x] - 2
        for i in range(1, group.rank + 1):
            y = right[group.left(i, x)][sigma[i - 1] - 1]
            if lengths[y] == target:
                word.append(i)
                x = y
                break
        else:
            raise RealOrNoncompactStep(
                f"no simple s lowers l(s x theta(s)) by 2 at {group.words[x]}"
            )
    return tuple(word)


def peel(x: WeylElement, theta: InvolutionDatum) -> tuple[int, ...]:
    """Word [s_1..s_h] with x = s_1..s_h theta(s_h)..theta(s_1) and l(x) = 2h."""
    if theta_conjugate(x, theta.sigma) != x.inverse():
        raise ValueError("x is not a twisted involution for theta")
    group = enumerate_weyl(x.datum)
    return _peel_ids(group, theta.sigma, group.index(x))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitRecord:
    coset_id: int
    h: int
    canonical_word: tuple[int, ...]
    x: WeylElement
    member_ids: tuple[int, ...] = field(repr=False)
    space: "OrbitSpace" = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.member_ids)

    @property
    def members(self) -> tuple[WeylElement, ...]:
        g = self.space.group
        return tuple(g.element(k) for k in self.member_ids)

    @property
    def representative(self) -> WeylElement:
        return self.space.group.element(self.space.rep_ids[self.coset_id])

    def to_dict(self) -> dict:
        return {
            "coset_id": self.coset_id,
            "h": self.h,
            "canonical_word": list(self.canonical_word),
            "x_word": list(self.x.word),
            "size": self.size,
        }


class OrbitSpace:
    """All B-orbits of a symmetric space given by (datum, theta)."""

    def __init__(self, datum: RootDatum, theta: InvolutionDatum):
        self.datum = datum
        self.theta = theta
        group = self.group = enumerate_weyl(datum)
        tmap = self.theta_ids = group.theta_map(theta.sigma)
        n = len(group)
        self.fixed_ids = tuple(k for k in range(n) if tmap[k] == k)

        coset_of = [-1] * n
        raw = []
        # ids run in (length, word) order, so the first hit is the minimal element
        for w in range(n):
            if coset_of[w] >= 0:
                continue
            members = sorted({group.mul(w, v) for v in self.fixed_ids})
            for m in members:
                coset_of[m] = len(raw)
            x = group.mul(w, group.inv(tmap[w]))
            word = _peel_ids(group, theta.sigma, x)
            raw.append((len(word), word, x, tuple(members)))

        order = sorted(range(len(raw)), key=lambda k: (raw[k][0], raw[k][1]))
        renumber = {old: new for new, old in enumerate(order)}
        self.coset_of = [renumber[c] for c in coset_of]
        self.records: list[OrbitRecord] = []
        self.rep_ids: list[int] = []
        for new, old in enumerate(order):
            h, word, x, members = raw[old]
            self.records.append(
                OrbitRecord(
                    coset_id=new,
                    h=h,
                    canonical_word=word,
                    x=group.element(x),
                    member_ids=members,
                    space=self,
                )
            )
            self.rep_ids.append(group.from_word(word))
        self.x_ids = [group.index(r.x) for r in self.records]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, k: int) -> OrbitRecord:
        return self.records[k]

    def orbit_of(self, w: WeylElement) -> OrbitRecord:
        return self.records[self.coset_of[self.group.index(w)]]

    @cached_property
    def below(self) -> list[frozenset[int]]:
        """below[k] = coset ids meeting the Bruhat interval under rep(k)."""
        out = []
        for rep in self.rep_ids:
            out.append(frozenset(self.coset_of[u] for u in self.group.lower_interval(rep)))
        return out

    def closure_leq(self, a: int, b: int) -> bool:
        return a in self.below[b]

    @property
    def closed_orbit(self) -> OrbitRecord:
        return self.records[0]

    @property
    def open_orbit(self) -> OrbitRecord:
        return max(self.records, key=lambda r: r.h)

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs (a, b): a < b with nothing strictly between."""
        edges = []
        for b in range(len(self)):
            strictly = self.below[b] - {b}
            for a in sorted(strictly):
                if not any(a in self.below[c] for c in strictly if c != a):
                    edges.append((a, b))
        return edges

    def to_json(self) -> list[dict]:
        return [r.to_dict() for r in self.records]

    def to_dot(self) -> str:
        name = self.theta.label or self.datum.type_label
        lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
        for r in self.records:
            word = "".join(str(i) for i in r.canonical_word) or "e"
            lines.append(f'  O{r.coset_id} [label="O{r.coset_id}\\nh={r.h}\\n{word}"];')
        for a, b in self.hasse_edges():
            lines.append(f"  O{a} -> O{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=32)
def orbit_space(datum: RootDatum, theta: InvolutionDatum) -> OrbitSpace:
    return OrbitSpace(datum, theta)


def enumerate_orbits(datum: RootDatum, theta: InvolutionDatum) -> list[OrbitRecord]:
    """One record per coset of W^theta, ordered by (h, canonical word)."""
    return list(orbit_space(datum, theta).records)


def closure_leq(lower: OrbitRecord, upper: OrbitRecord) -> bool:
    if lower.space is not upper.space:
        raise DatumMismatch("orbit records come from different spaces")
    return upper.space.closure_leq(lower.coset_id, upper.coset_id)


def no_real_roots_check(datum: RootDatum, theta: InvolutionDatum) -> Report:
    """For every orbit's x and every root a, check x(theta(a)) != -a."""
    space = orbit_space(datum, theta)
    bad = []
    roots = [(a, theta.apply(a), tuple(-c for c in a)) for a in datum.roots]
    for rec in space.records:
        for a, ta, minus_a in roots:
            if rec.x.act(ta) == minus_a:
                bad.append((rec.coset_id, a))
    detail = f"{len(space)} orbits x {len(roots)} roots"
    if bad:
        detail += "; real roots: " + ", ".join(f"O{c}:{list(a)}" for c, a in bad[:5])
    return Report((Claim("no_real_roots", not bad, detail),), catalogued=theta.catalogued)


# ---------------------------------------------------------------------------
# generic position in the Schubert case


@dataclass(frozen=True)
class GenericPosition:
    w_max: WeylElement | None
    members: frozenset[WeylElement] = field(repr=False)
    is_lower_interval: bool

    def to_dict(self) -> dict:
        return {
            "w_max": list(self.w_max.word) if self.w_max is not None else None,
            "size": len(self.members),
            "is_lower_interval": self.is_lower_interval,
        }


def generic_position_schubert(
    datum: RootDatum, y: WeylElement, z: WeylElement, limits: Limits | None = None
) -> GenericPosition:
    """M = {w : some y' <= y has w y' <= z}, its maximum and the interval check."""
    limits = limits or Limits.from_env()
    if datum.rank > limits.brute_force_rank:
        raise BruteForceTooLarge(f"rank {datum.rank} > {limits.brute_force_rank}")
    for e in (y, z):
        if e.datum != datum:
            raise DatumMismatch(f"{e.datum.type_label} vs {datum.type_label}")
    g = enumerate_weyl(datum)
    below_y = g.lower_interval(g.index(y))
    below_z = g.lower_interval(g.index(z))
    meet = {g.mul(zp, g.inv(yp)) for zp in below_z for yp in below_y}
    top_len = max(g.lengths[w] for w in meet)
    tops = [w for w in meet if g.lengths[w] == top_len]
    members = frozenset(g.element(w) for w in meet)
    if len(tops) != 1:
        return GenericPosition(w_max=None, members=members, is_lower_interval=False)
    w = tops[0]
    interval = g.lower_interval(w)
    return GenericPosition(w_max=g.element(w), members=members, is_lower_interval=interval == meet)
