"""Command-line front end.

Weights are entered in simple-root coordinates (the adjoint convention), as
comma-separated integers: ``1,1,1`` is alpha_1 + alpha_2 + alpha_3.  Words are
comma-separated 1-based simple indices, ``e`` for the identity.

Exit codes: 0 success, 1 failed verification or computation error,
2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence

from .branching import branch, bundle_rank, extend_weight
from .charring import WeightPolynomial, demazure_word, weyl_character
from .errors import MinRankError
from .folding import CATALOG, FAMILIES, build_space, fold
from .ktheory import indices
from .orbits import generic_position_schubert, orbit_space
from .rootdata import build_datum
from .verify import verify_space
from .weyl import element_from_word

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def parse_word(text: str) -> tuple[int, ...]:
    if text.strip() in ("e", ""):
        return ()
    return parse_ints(text, "word")


def _weight_for(rank: int, text: str, what: str = "weight") -> tuple[int, ...]:
    w = parse_ints(text, what)
    if len(w) != rank:
        raise UsageError(f"{what} {text!r} needs {rank} coordinates")
    return w


def _word_for(rank: int, text: str) -> tuple[int, ...]:
    word = parse_word(text)
    bad = [i for i in word if not 1 <= i <= rank]
    if bad:
        raise UsageError(f"word {text!r} uses indices outside 1..{rank}")
    return word


def _space(spec: str):
    datum, theta = build_space(spec)
    return datum, theta, fold(datum, theta)


# ---------------------------------------------------------------------------
# commands: each returns (payload, text, exit_code)


def cmd_catalog(args):
    rows = []
    for spec in CATALOG:
        datum, theta, folded = _space(spec)
        rows.append({"spec": spec, "type_G": datum.type_label, "type_K": folded.datum_K.type_label})
    payload = {"families": [{"spec": s, "description": d} for s, d in FAMILIES], "spaces": rows}
    lines = ["families:"] + [f"  {s:<18} {d}" for s, d in FAMILIES] + ["spaces:"]
    lines += [f"  {r['spec']:<18} G = {r['type_G']:<8} K = {r['type_K']}" for r in rows]
    return payload, "\n".join(lines), 0


def cmd_info(args):
    datum, theta, folded = _space(args.spec)
    rep = indices(datum, theta)
    payload = {
        "spec": theta.label,
        "type_G": datum.type_label,
        "rank_G": datum.rank,
        "type_K": folded.datum_K.type_label,
        "rank_K": folded.datum_K.rank,
        "sigma": list(theta.sigma),
        "res_matrix": [list(r) for r in folded.res_matrix],
        "indices": rep.to_dict(),
    }
    text = "\n".join(
        [
            f"space      {theta.label}",
            f"G          {datum.type_label} (rank {datum.rank})",
            f"K          {folded.datum_K.type_label} (rank {folded.datum_K.rank})",
            f"sigma      {list(theta.sigma)}",
            f"r, s       {rep.r}, {rep.s}",
            f"orbits     {rep.orbit_count}  = [W : W^theta] = {rep.order_W}/{rep.order_fixed}",
            f"dim K(X)   {rep.k_dim}  = [W : W(R^theta)] = {rep.order_W}/{rep.order_reflection}",
            f"free rank  {rep.free_rank}",
            f"proper     {rep.proper}",
        ]
    )
    return payload, text, 0


def cmd_orbits(args):
    datum, theta = build_space(args.spec)
    space = orbit_space(datum, theta)
    payload = {"spec": theta.label, "orbits": space.to_json()}
    if args.dot:
        payload["dot"] = space.to_dot()
        return payload, space.to_dot().rstrip("\n"), 0
    lines = [f"{'id':>4} {'h':>3} {'size':>6}  canonical word / x"]
    for r in space:
        cw = ",".join(map(str, r.canonical_word)) or "e"
        xw = ",".join(map(str, r.x.word)) or "e"
        lines.append(f"{r.coset_id:>4} {r.h:>3} {r.size:>6}  {cw} / {xw}")
    return payload, "\n".join(lines), 0


def _poly_text(f: WeightPolynomial) -> str:
    return "\n".join(f"{c:>6}  e^{list(w)}" for w, c in reversed(f.items())) or "0"


def cmd_character(args):
    datum = build_datum(args.type)
    lam = _weight_for(datum.rank, args.weight)
    ch = weyl_character(datum, lam)
    payload = {"type": datum.type_label, "lambda": list(lam), "dim": ch.coefficient_sum(), "terms": ch.to_json()}
    return payload, f"dim {ch.coefficient_sum()}\n" + _poly_text(ch), 0


def cmd_demazure(args):
    datum = build_datum(args.type)
    word = _word_for(datum.rank, args.word)
    lam = _weight_for(datum.rank, args.weight)
    f = demazure_word(datum, WeightPolynomial.monomial(lam), word)
    payload = {"type": datum.type_label, "word": list(word), "lambda": list(lam), "terms": f.to_json()}
    return payload, _poly_text(f), 0


def cmd_branch(args):
    datum, theta, folded = _space(args.spec)
    lam = _weight_for(datum.rank, args.weight)
    res = branch(lam, folded)
    payload = {"spec": theta.label, **res.to_dict()}
    lines = [f"head {list(res.head)}  rank {res.rank}  dim {res.dim_G}"]
    lines += [f"{m:>4} x {list(mu)}  (dim {d})" for (mu, m), d in zip(res.constituents, res.dims)]
    return payload, "\n".join(lines), 0


def cmd_extend(args):
    datum, theta, folded = _space(args.spec)
    mu = _weight_for(folded.datum_K.rank, args.weight)
    lam = extend_weight(mu, folded)
    return {"spec": theta.label, "mu": list(mu), "lambda": list(lam)}, ",".join(map(str, lam)), 0


def cmd_rank(args):
    datum, theta, folded = _space(args.spec)
    lam = _weight_for(datum.rank, args.weight)
    r = bundle_rank(lam, folded)
    return {"spec": theta.label, "lambda": list(lam), "rank": r}, str(r), 0


def cmd_generic(args):
    datum = build_datum(args.type)
    y = element_from_word(datum, _word_for(datum.rank, args.y))
    z = element_from_word(datum, _word_for(datum.rank, args.z))
    gp = generic_position_schubert(datum, y, z)
    payload = {"type": datum.type_label, "y": list(y.word), "z": list(z.word), **gp.to_dict()}
    w = "none" if gp.w_max is None else (",".join(map(str, gp.w_max.word)) or "e")
    return payload, f"w_max {w}\nsize {len(gp.members)}\nlower interval {gp.is_lower_interval}", 0


def cmd_verify(args):
    report = verify_space(args.spec, deep=args.deep)
    datum, theta = build_space(args.spec)
    payload = {"spec": theta.label, "deep": args.deep, "pass": report.passed, **report.to_dict()}
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.id:<28} {c.detail}" for c in report.claims]
    lines.append(f"{'all claims pass' if report.passed else f'{len(report.falsified)} claim(s) falsified'}")
    return payload, "\n".join(lines), 0 if report.passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(
        prog="minrank",
        description="Combinatorics of symmetric spaces of minimal rank.",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    add("catalog", cmd_catalog, "list supported spaces")
    add("info", cmd_info, "ranks, folded type and index counts").add_argument("spec")
    sp = add("orbits", cmd_orbits, "B-orbits with twisted involutions")
    sp.add_argument("spec")
    sp.add_argument("--dot", action="store_true", help="emit the closure-order Hasse diagram")
    sp = add("character", cmd_character, "Weyl character of a dominant weight")
    sp.add_argument("type")
    sp.add_argument("weight")
    sp = add("demazure", cmd_demazure, "Demazure operator along a word applied to e^weight")
    sp.add_argument("type")
    sp.add_argument("word")
    sp.add_argument("weight")
    for name, fn, help_ in (
        ("branch", cmd_branch, "branching multiplicities from G to K"),
        ("extend", cmd_extend, "extend a dominant K-weight to G"),
        ("rank", cmd_rank, "rank of the equivariant bundle of a dominant weight"),
    ):
        sp = add(name, fn, help_)
        sp.add_argument("spec")
        sp.add_argument("weight")
    sp = add("generic", cmd_generic, "generic position of two Schubert varieties")
    sp.add_argument("type")
    sp.add_argument("y")
    sp.add_argument("z")
    sp = add("verify", cmd_verify, "run the invariant suite for a space")
    sp.add_argument("spec")
    sp.add_argument("--deep", action="store_true", help="exhaustive sweeps")
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "text")
    try:
        payload, text, code = args.func(args)
    except UsageError as exc:
        print(f"minrank {args.command}: error: {exc}", file=err)
        return 2
    except MinRankError as exc:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "error": {"kind": exc.kind, "detail": exc.detail}}), file=out)
        return 1
    if fmt == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2), file=out)
    else:
        print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
