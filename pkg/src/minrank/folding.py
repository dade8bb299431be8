"""Diagram involutions, the restricted lattice and the folded root datum.

An involution is always given by a permutation ``sigma`` of the simple roots
(1-based images).  The group case K x K / diag(K) is the swap of the two
factors of the datum X x X.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import AdjacentOrbit, UnknownType, UnsupportedSpace
from .lattice import inverse_unimodular, mat_mul, rank_q, smith_normal_form
from .report import Claim, Report
from .rootdata import (
    Matrix,
    RootDatum,
    Weight,
    build_datum,
    datum_from_cartan,
    identify_type,
    product,
)
from .weyl import enumerate_weyl

# Concrete spaces swept by the test suite and listed by ``minrank catalog``.
CATALOG = (
    "group:A1",
    "group:A2",
    "group:B2",
    "group:G2",
    "group:A3",
    "group:B3",
    "group:C3",
    "fold:A3",
    "fold:A5",
    "fold:D4",
    "fold:D5",
    "fold:D6",
    "fold:E6",
    "group:A1*fold:A3",
)

FAMILIES = (
    ("group:<TYPE>", "K x K / diag(K) for any finite type K"),
    ("fold:A<2n-1>", "PSL(2n) / PSp(2n), n >= 2"),
    ("fold:D<n>", "PSO(2n) / PSO(2n-1), n >= 4 (fold:D3 is read as fold:A3)"),
    ("fold:E6", "E6 / F4"),
    ("<space>*<space>", "products of the above"),
)


@dataclass(frozen=True)
class InvolutionDatum:
    sigma: tuple[int, ...]
    theta: Matrix = field(repr=False)
    catalogued: bool = True
    label: str = ""

    @property
    def rank(self) -> int:
        return len(self.sigma)

    def apply(self, weight: Sequence[int]) -> Weight:
        """theta(weight): coordinate j moves to position sigma(j)."""
        out = [0] * len(weight)
        for j, c in enumerate(weight):
            out[self.sigma[j] - 1] = c
        return tuple(out)

    def orbits(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.rank + 1):
            if i not in seen:
                orb = tuple(sorted({i, self.sigma[i - 1]}))
                seen.update(orb)
                out.append(orb)
        return out

    def to_dict(self) -> dict:
        return {"sigma": list(self.sigma), "theta": [list(r) for r in self.theta]}


def involution(datum: RootDatum, sigma: Sequence[int], catalogued: bool = False, label: str = "") -> InvolutionDatum:
    """Validate a diagram involution and build its lattice matrix."""
    n = datum.rank
    s = tuple(int(x) for x in sigma)
    if sorted(s) != list(range(1, n + 1)):
        raise ValueError(f"sigma {list(s)} is not a permutation of 1..{n}")
    if any(s[s[i] - 1] != i + 1 for i in range(n)):
        raise ValueError(f"sigma {list(s)} is not an involution")
    a = datum.cartan
    if any(a[s[i] - 1][s[j] - 1] != a[i][j] for i in range(n) for j in range(n)):
        raise ValueError(f"sigma {list(s)} is not a diagram automorphism of {datum.type_label}")
    theta = tuple(tuple(1 if s[c] - 1 == r else 0 for c in range(n)) for r in range(n))
    return InvolutionDatum(sigma=s, theta=theta, catalogued=catalogued, label=label)


# ---------------------------------------------------------------------------
# space specs

_FOLD = re.compile(r"^fold:([ADE])(\d+)$")
_GROUP = re.compile(r"^group:(.+)$")


def _factor(spec: str) -> tuple[RootDatum, tuple[int, ...], str]:
    m = _GROUP.match(spec)
    if m:
        try:
            base = build_datum(m.group(1))
        except UnknownType as exc:
            raise UnsupportedSpace(f"{spec}: {exc.detail}") from None
        n = base.rank
        sigma = tuple(range(n + 1, 2 * n + 1)) + tuple(range(1, n + 1))
        return product(base, base), sigma, f"group:{base.type_label}"
    m = _FOLD.match(spec)
    if m:
        letter, n = m.group(1), int(m.group(2))
        if letter == "D" and n == 3:
            letter = "A"
        if letter == "A" and n >= 3 and n % 2 == 1:
            return build_datum(f"A{n}"), tuple(n + 1 - i for i in range(1, n + 1)), f"fold:A{n}"
        if letter == "D" and n >= 4:
            sigma = tuple(range(1, n - 1)) + (n, n - 1)
            return build_datum(f"D{n}"), sigma, f"fold:D{n}"
        if letter == "E" and n == 6:
            return build_datum("E6"), (6, 2, 5, 4, 3, 1), "fold:E6"
    raise UnsupportedSpace(f"unsupported space {spec!r}")


def build_space(spec: str) -> tuple[RootDatum, InvolutionDatum]:
    """Root datum and involution for a space spec such as ``group:A1*fold:A3``."""
    if not isinstance(spec, str) or not spec.strip():
        raise UnsupportedSpace(f"unsupported space {spec!r}")
    factors = [_factor(p.strip()) for p in spec.strip().split("*")]
    data = [f[0] for f in factors]
    datum = data[0] if len(data) == 1 else product(*data)
    sigma: list[int] = []
    off = 0
    for d, s, _ in factors:
        sigma.extend(x + off for x in s)
        off += d.rank
    label = "*".join(f[2] for f in factors)
    return datum, involution(datum, sigma, catalogued=True, label=label)


# ---------------------------------------------------------------------------
# folding


@dataclass(frozen=True)
class FoldedDatum:
    datum: RootDatum = field(repr=False)
    theta: InvolutionDatum = field(repr=False)
    lattice_rank: int
    res_matrix: Matrix
    datum_K: RootDatum
    orbit_map: tuple[int, ...]
    elementary_divisors: tuple[int, ...]

    def res(self, weight: Sequence[int]) -> Weight:
        return tuple(sum(r * c for r, c in zip(row, weight)) for row in self.res_matrix)

    @property
    def torsion_free(self) -> bool:
        return all(d == 1 for d in self.elementary_divisors)

    def to_dict(self) -> dict:
        return {
            "type_K": self.datum_K.type_label,
            "lattice_rank": self.lattice_rank,
            "res_matrix": [list(r) for r in self.res_matrix],
            "orbit_map": list(self.orbit_map),
            "cartan_K": [list(r) for r in self.datum_K.cartan],
        }


def fold(datum: RootDatum, theta: InvolutionDatum) -> FoldedDatum:
    """Folded root datum of K = G^theta and the restriction map."""
    n = datum.rank
    orbits = theta.orbits()
    for orb in orbits:
        if len(orb) == 2 and datum.cartan[orb[0] - 1][orb[1] - 1] != 0:
            raise AdjacentOrbit(f"simple roots {orb} are adjacent")

    # Lambda_K = Z^n / image(theta - 1), read off the Smith form
    diff = [[theta.theta[r][c] - (r == c) for c in range(n)] for r in range(n)]
    d, u, _ = smith_normal_form(diff)
    nonzero = [d[k][k] for k in range(n) if d[k][k]]
    r0 = len(nonzero)
    smith_res = u[r0:]
    m = n - r0
    reps = [orb[0] for orb in orbits]
    if len(reps) != m:
        raise ValueError("quotient rank does not match the number of sigma-orbits")
    change = [[smith_res[k][rep - 1] for rep in reps] for k in range(m)]
    res = mat_mul(inverse_unimodular(change), smith_res) if m else []
    res_matrix = tuple(tuple(row) for row in res)

    orbit_of = {}
    for k, orb in enumerate(orbits):
        for i in orb:
            orbit_of[i] = k + 1
    cartan_k = [
        [sum(datum.cartan[i - 1][J[0] - 1] for i in I) for J in orbits] for I in orbits
    ]
    datum_k = datum_from_cartan(cartan_k, identify_type(tuple(tuple(r) for r in cartan_k)))
    out = FoldedDatum(
        datum=datum,
        theta=theta,
        lattice_rank=m,
        res_matrix=res_matrix,
        datum_K=datum_k,
        orbit_map=tuple(orbit_of[i] for i in range(1, n + 1)),
        elementary_divisors=tuple(nonzero),
    )
    restricted = {out.res(a) for a in datum.roots}
    if restricted != datum_k.root_set:
        raise ValueError("restricted roots differ from the folded root system")
    return out


def fixed_roots(datum: RootDatum, theta: InvolutionDatum) -> list[Weight]:
    """R^theta, in the datum's root order."""
    return [a for a in datum.roots if theta.apply(a) == a]


@dataclass(frozen=True)
class RankBookkeeping:
    r: int
    s: int

    def to_dict(self) -> dict:
        return {"r": self.r, "s": self.s}


def rank_bookkeeping(datum: RootDatum, theta: InvolutionDatum) -> RankBookkeeping:
    """r = dim of the (-1)-eigenspace of theta, s = rank of Lambda_K."""
    n = datum.rank
    plus = [[theta.theta[i][j] + (i == j) for j in range(n)] for i in range(n)]
    minus = [[theta.theta[i][j] - (i == j) for j in range(n)] for i in range(n)]
    r = n - rank_q(plus)
    s = n - rank_q(minus)
    if r + s != n:
        raise AssertionError(f"r + s = {r + s} != rank {n}")
    return RankBookkeeping(r=r, s=s)


# ---------------------------------------------------------------------------
# structure report


def _subsystem_claim(datum: RootDatum, fixed: list[Weight]) -> Claim:
    fs = set(fixed)
    for a in fixed:
        if tuple(-c for c in a) not in fs:
            return Claim("fixed_roots_subsystem", False, f"-{list(a)} missing")
        for b in fixed:
            s = tuple(x + y for x, y in zip(a, b))
            if s in datum.root_set and s not in fs:
                return Claim("fixed_roots_subsystem", False, f"{list(a)}+{list(b)} not fixed")
    return Claim("fixed_roots_subsystem", True, f"|R^theta| = {len(fixed)}")


def _multiplicity_claim(datum: RootDatum, theta: InvolutionDatum, folded: FoldedDatum) -> Claim:
    pre: dict[Weight, list[Weight]] = {}
    for a in datum.positive_roots:
        pre.setdefault(folded.res(a), []).append(a)
    if set(pre) != set(folded.datum_K.positive_roots):
        return Claim("restriction_multiplicities", False, "res(R+) != R_K+")
    for beta, alphas in pre.items():
        ok = (len(alphas) == 1 and theta.apply(alphas[0]) == alphas[0]) or (
            len(alphas) == 2 and theta.apply(alphas[0]) == alphas[1] and alphas[0] != alphas[1]
        )
        if not ok:
            return Claim("restriction_multiplicities", False, f"preimages of {list(beta)}: {alphas}")
    counts = Counter(len(v) for v in pre.values())
    return Claim("restriction_multiplicities", True, f"multiplicity 1: {counts[1]}, multiplicity 2: {counts[2]}")


def verify_structure(datum: RootDatum, theta: InvolutionDatum) -> Report:
    """Check the structural consequences of minimal rank; failures are data."""
    claims: list[Claim] = []
    folded = fold(datum, theta)
    kd = folded.datum_K
    fixed = fixed_roots(datum, theta)
    claims.append(_subsystem_claim(datum, fixed))

    n_roots = len(datum.roots)
    dim_k = folded.lattice_rank + len(fixed) + (n_roots - len(fixed)) // 2
    dim_folded = kd.rank + len(kd.roots)
    claims.append(
        Claim(
            "dimension_bookkeeping",
            dim_k == dim_folded and (n_roots - len(fixed)) % 2 == 0,
            f"dim k = {dim_k}, rk K + |R_K| = {dim_folded}",
        )
    )

    group = enumerate_weyl(datum)
    tmap = group.theta_map(theta.sigma)
    n_fixed = sum(1 for k in range(len(group)) if tmap[k] == k)
    n_k = len(enumerate_weyl(kd))
    claims.append(Claim("weyl_fixed_equals_folded", n_fixed == n_k, f"|W^theta| = {n_fixed}, |W_K| = {n_k} ({kd.type_label})"))
    w0 = group.longest
    claims.append(Claim("w0_fixed", tmap[w0] == w0, f"l(w0) = {group.lengths[w0]}"))
    claims.append(
        Claim(
            "lattice_torsion_free",
            folded.torsion_free,
            f"elementary divisors of theta - 1: {list(folded.elementary_divisors)}",
        )
    )
    restricted = {folded.res(a) for a in datum.roots}
    claims.append(Claim("restriction_of_roots", restricted == kd.root_set, f"|R_K| = {len(kd.roots)}"))
    claims.append(_multiplicity_claim(datum, theta, folded))
    rb = rank_bookkeeping(datum, theta)
    claims.append(Claim("rank_bookkeeping", rb.r + rb.s == datum.rank, f"r = {rb.r}, s = {rb.s}"))
    return Report(tuple(claims), catalogued=theta.catalogued)
