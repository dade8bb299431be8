"""List dominant K-weights that have no dominant preimage in the adjoint lattice of G.

For each folding space, sweeps dominant mu of K up to a coordinate-sum bound
and reports the ones where extend_weight gives up, together with the
theta-symmetric rational lift (which is always dominant, but not integral).

    python3 scripts/extension_obstructions.py --max-sum 8
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from minrank.branching import extend_weight
from minrank.errors import SearchExhausted
from minrank.folding import CATALOG, build_space, fold
from minrank.rootdata import dominant_weights, weyl_dim


def symmetric_lift(mu, folded):
    sizes = {}
    for k in folded.orbit_map:
        sizes[k] = sizes.get(k, 0) + 1
    return [Fraction(mu[k - 1], sizes[k]) for k in folded.orbit_map]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-sum", type=int, default=6)
    ap.add_argument("specs", nargs="*", default=[s for s in CATALOG if "fold" in s])
    args = ap.parse_args()
    for spec in args.specs:
        folded = fold(*build_space(spec))
        mus = dominant_weights(folded.datum_K, args.max_sum)
        stranded = []
        for mu in mus:
            try:
                extend_weight(mu, folded)
            except SearchExhausted:
                stranded.append(mu)
        print(f"{spec}: {len(stranded)}/{len(mus)} dominant K-weights without a dominant lift")
        for mu in stranded:
            lift = ", ".join(str(c) for c in symmetric_lift(mu, folded))
            print(f"    {list(mu)}  dim {weyl_dim(folded.datum_K, mu)}  symmetric lift ({lift})")


if __name__ == "__main__":
    main()
