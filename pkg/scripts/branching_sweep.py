"""Branch every dominant weight up to a coordinate-sum bound and tabulate.

    python3 scripts/branching_sweep.py fold:A3 --max-sum 4
"""

from __future__ import annotations

import argparse

from minrank.branching import branch
from minrank.folding import build_space, fold
from minrank.rootdata import dominant_weights


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("spec")
    ap.add_argument("--max-sum", type=int, default=4)
    args = ap.parse_args()
    folded = fold(*build_space(args.spec))
    print(f"# {args.spec}: {folded.datum.type_label} -> {folded.datum_K.type_label}")
    for lam in dominant_weights(folded.datum, args.max_sum):
        res = branch(lam, folded)
        parts = " + ".join(f"{m}x{list(mu)}" if m > 1 else str(list(mu)) for mu, m in res.constituents)
        flag = "" if res.dimension_conserved() and res.head_is_top() else "  <-- check"
        print(f"{str(list(lam)):<20} dim {res.dim_G:>6} = {' + '.join(map(str, res.dims)):<30} {parts}{flag}")


if __name__ == "__main__":
    main()
