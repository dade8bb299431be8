"""The invariant suite behind ``minrank verify``.

Every check returns a :class:`~minrank.report.Claim`; nothing here raises on a
falsified claim.  ``deep=True`` widens the weight sweeps and adds the
closure-order and coset-constancy checks.
"""

from __future__ import annotations

from .branching import branch, bundle_rank, extend_weight
from .errors import MinRankError, SearchExhausted
from .folding import FoldedDatum, InvolutionDatum, build_space, fold, verify_structure
from .ktheory import indices
from .orbits import OrbitSpace, no_real_roots_check, orbit_space
from .report import Claim, Report
from .rootdata import RootDatum, dominant_weights, is_dominant
from .weyl import element_from_word, theta_conjugate

SWEEP = {False: (2, 3), True: (4, 5)}  # (branch coordinate sum, extend coordinate sum)


def _guard(claim_id: str, fn) -> Claim:
    try:
        return fn()
    except MinRankError as exc:
        return Claim(claim_id, False, f"{exc.kind}: {exc.detail}")


def check_orbit_partition(space: OrbitSpace, n_orbits: int) -> Claim:
    sizes = sum(r.size for r in space)
    closed = [r for r in space if r.h == 0]
    ok = sizes == len(space.group) and len(space) == n_orbits and len(closed) == 1
    return Claim(
        "orbit_partition",
        ok,
        f"{len(space)} cosets covering {sizes}/{len(space.group)} elements, {len(closed)} closed orbit(s)",
    )


def check_orbit_bijection(space: OrbitSpace) -> Claim:
    distinct = len(set(space.x_ids)) == len(space)
    return Claim("orbit_bijection", distinct, f"{len(set(space.x_ids))} distinct twisted involutions")


def check_peeling(space: OrbitSpace, theta: InvolutionDatum) -> Claim:
    datum = space.datum
    for rec in space:
        w = element_from_word(datum, rec.canonical_word)
        if w.length != rec.h or 2 * rec.h != rec.x.length:
            return Claim("peeling_soundness", False, f"O{rec.coset_id}: length mismatch")
        if space.coset_of[space.group.index(w)] != rec.coset_id:
            return Claim("peeling_soundness", False, f"O{rec.coset_id}: representative outside coset")
        # x = s_1..s_h theta(s_h)..theta(s_1), multiplied out as matrices
        twisted = [theta.sigma[i - 1] for i in reversed(rec.canonical_word)]
        m = element_from_word(datum, list(rec.canonical_word) + twisted).matrix
        if m != rec.x.matrix:
            return Claim("peeling_soundness", False, f"O{rec.coset_id}: reconstruction differs")
        if theta_conjugate(rec.x, theta.sigma) != rec.x.inverse():
            return Claim("peeling_soundness", False, f"O{rec.coset_id}: x is not a twisted involution")
    return Claim("peeling_soundness", True, f"{len(space)} orbits peeled, max h = {space.open_orbit.h}")


def check_open_orbit(space: OrbitSpace, folded: FoldedDatum) -> Claim:
    expected = len(space.datum.positive_roots) - len(folded.datum_K.positive_roots)
    top = [r for r in space if r.h == space.open_orbit.h]
    ok = len(top) == 1 and top[0].h == expected and all(space.closure_leq(r.coset_id, top[0].coset_id) for r in space)
    return Claim("open_orbit", ok, f"max h = {space.open_orbit.h}, |R+| - |R_K+| = {expected}")


def check_closure_order(space: OrbitSpace) -> Claim:
    n = len(space)
    leq = space.closure_leq
    for a in range(n):
        if not leq(a, a) or not leq(0, a):
            return Claim("closure_order", False, f"O{a}: not above itself or the closed orbit")
        for b in range(n):
            if a != b and leq(a, b):
                if leq(b, a):
                    return Claim("closure_order", False, f"O{a}, O{b}: not antisymmetric")
                if space[a].h >= space[b].h:
                    return Claim("closure_order", False, f"O{a} < O{b} but h does not increase")
                for c in range(n):
                    if leq(b, c) and not leq(a, c):
                        return Claim("closure_order", False, f"O{a}, O{b}, O{c}: not transitive")
    return Claim("closure_order", True, f"partial order on {n} orbits, {len(space.hasse_edges())} covers")


def check_coset_constancy(space: OrbitSpace) -> Claim:
    g = space.group
    tmap = space.theta_ids
    for rec, x in zip(space, space.x_ids):
        for w in rec.member_ids:
            if g.mul(w, g.inv(tmap[w])) != x:
                return Claim("coset_constancy", False, f"O{rec.coset_id}: x varies on the coset")
    return Claim("coset_constancy", True, f"checked {len(g)} elements")


def check_indices(datum: RootDatum, theta: InvolutionDatum, space: OrbitSpace) -> Claim:
    rep = indices(datum, theta)
    ok = (
        rep.orbit_count == len(space)
        and rep.k_dim == rep.orbit_count * rep.free_rank
        and rep.proper
        and rep.r + rep.s == datum.rank
    )
    return Claim(
        "index_identities",
        ok,
        f"orbit_count {rep.orbit_count}, k_dim {rep.k_dim}, free_rank {rep.free_rank}, proper {rep.proper}",
    )


def check_branching(folded: FoldedDatum, max_sum: int) -> Claim:
    datum = folded.datum
    weights = dominant_weights(datum, max_sum)
    for lam in weights:
        res = branch(lam, folded)
        if not res.dimension_conserved():
            return Claim("branch_sweep", False, f"{list(lam)}: dimension not conserved")
        if not res.head_is_top():
            return Claim("branch_sweep", False, f"{list(lam)}: head is not a multiplicity-one top")
        if bundle_rank(lam, folded) != res.rank:
            return Claim("branch_sweep", False, f"{list(lam)}: bundle rank differs from head dimension")
    return Claim("branch_sweep", True, f"{len(weights)} dominant weights with coordinate sum <= {max_sum}")


def check_extension(folded: FoldedDatum, max_sum: int) -> Claim:
    # A missing preimage is reported as data, not swallowed: in the adjoint
    # lattice some dominant K-weights (e.g. beta_1 + beta_2 for fold:A3) have
    # no dominant lift at all.
    mus = dominant_weights(folded.datum_K, max_sum)
    stranded = []
    for mu in mus:
        try:
            lam = extend_weight(mu, folded)
        except SearchExhausted:
            stranded.append(mu)
            continue
        if folded.res(lam) != mu or not is_dominant(folded.datum, lam):
            return Claim("extend_round_trip", False, f"{list(mu)} -> {list(lam)}")
    detail = f"{len(mus)} dominant K-weights with coordinate sum <= {max_sum}"
    if stranded:
        shown = ", ".join(str(list(mu)) for mu in stranded[:4])
        detail += f"; {len(stranded)} without a dominant preimage: {shown}"
    return Claim("extend_round_trip", not stranded, detail)


def verify_space(spec: str, deep: bool = False) -> Report:
    datum, theta = build_space(spec)
    return verify_datum(datum, theta, deep=deep)


def verify_datum(datum: RootDatum, theta: InvolutionDatum, deep: bool = False) -> Report:
    report = verify_structure(datum, theta)
    report = report + no_real_roots_check(datum, theta)
    folded = fold(datum, theta)
    space = orbit_space(datum, theta)
    n_fixed = len(space.fixed_ids)
    branch_sum, extend_sum = SWEEP[deep]
    claims = [
        check_orbit_partition(space, len(space.group) // n_fixed),
        check_orbit_bijection(space),
        check_peeling(space, theta),
        check_open_orbit(space, folded),
        check_indices(datum, theta, space),
        _guard("branch_sweep", lambda: check_branching(folded, branch_sum)),
        _guard("extend_round_trip", lambda: check_extension(folded, extend_sum)),
    ]
    if deep:
        claims += [check_closure_order(space), check_coset_constancy(space)]
    return report + Report(tuple(claims), catalogued=theta.catalogued)

