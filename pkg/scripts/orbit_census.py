"""Orbit and index census over the catalogue.

    python3 scripts/orbit_census.py [--json] [--skip fold:E6]
"""

from __future__ import annotations

import argparse
import json
import time

from minrank.folding import CATALOG, build_space, fold
from minrank.ktheory import indices
from minrank.orbits import orbit_space


def census(specs):
    rows = []
    for spec in specs:
        t0 = time.perf_counter()
        datum, theta = build_space(spec)
        space = orbit_space(datum, theta)
        rep = indices(datum, theta)
        rows.append(
            {
                "spec": spec,
                "G": datum.type_label,
                "K": fold(datum, theta).datum_K.type_label,
                "orbits": len(space),
                "max_h": space.open_orbit.h,
                "covers": len(space.hasse_edges()),
                "k_dim": rep.k_dim,
                "free_rank": rep.free_rank,
                "r": rep.r,
                "s": rep.s,
                "seconds": round(time.perf_counter() - t0, 2),
            }
        )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--skip", action="append", default=[], help="spec to leave out (repeatable)")
    args = ap.parse_args()
    rows = census([s for s in CATALOG if s not in args.skip])
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    cols = ["spec", "G", "K", "orbits", "max_h", "covers", "k_dim", "free_rank", "r", "s", "seconds"]
    print("  ".join(f"{c:>10}" for c in cols))
    for row in rows:
        print("  ".join(f"{row[c]!s:>10}" for c in cols))


if __name__ == "__main__":
    main()
