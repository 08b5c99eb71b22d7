#!/usr/bin/env python3
"""Walk the integer dual action on a mixed shift/matrix block and print what
contracts, how fast, and where an orbit fails to close.

Three exhibits:
  1. shift block: contraction times of sample characters into the ball U_k;
  2. matrix block: valuation growth of transposed-companion iterates, with
     the contractivity certificate that predicts it;
  3. a mixed element whose forward orbit enters every neighbourhood of zero
     without ever reaching it -- the witness index is the first iterate
     landing inside U_k blockwise.
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from contracta import (
    BlockElem,
    BlockSpec,
    EBlock,
    Modulus,
    TBlock,
    contraction_time,
    contractivity_certificate,
    dual_action_E,
    lau_monomial,
    laurent,
    nonclosed_orbit_witness,
    padic,
    poly,
    series_to_text,
)
from contracta.padic import min_entry_valuation


def shift_exhibit(p, k):
    mod = Modulus(p, 1)
    print(f"shift block over p={p}: steps until chi indexed by t^n*y is trivial on U_{k}")
    samples = [
        lau_monomial(mod, -2, 1),
        lau_monomial(mod, 0, 1),
        laurent(mod, {-1: 1, 2: 1}),
        laurent(mod, {3: 1}),
    ]
    for y in samples:
        n = contraction_time(y, k)
        print(f"  y = {series_to_text(y):<24} contraction time {n}")
    print()


def matrix_exhibit(p, coeffs, steps):
    g = poly(p, coeffs)
    cert = contractivity_certificate(g)
    m = len(coeffs)
    terms = "".join(f" + {a}*X^{i}" if i else f" + {a}" for i, a in enumerate(coeffs) if a)
    print(f"matrix block: companion of X^{m}{terms} over p={p}, contractive: {cert}")
    vec = tuple(padic(p, 1) if i == 0 else padic(p, 0) for i in range(len(coeffs)))
    vals = []
    for j in range(0, steps + 1):
        moved = dual_action_E(j, vec, g)
        vals.append(min_entry_valuation(moved))
    print(f"  min entry valuation along the orbit: {vals}")
    print()


def witness_exhibit(k, depth):
    spec = BlockSpec((TBlock(2, 1, 1), EBlock(2, poly(2, (-2, 0)), 1)))
    x = BlockElem(spec, ((lau_monomial(Modulus(2, 1), 0, 1),), ((padic(2, 1), padic(2, 0)),)))
    n = nonclosed_orbit_witness(spec, x, k, depth)
    print(f"mixed block (shift x companion of X^2 - 2): orbit of (1, e_0)")
    print(f"  first iterate inside U_{k} on both blocks: n = {n}")
    # show the near miss and the hit
    for j in (n - 1, n):
        t = lau_monomial(Modulus(2, 1), j, 1)
        vec = dual_action_E(j, x.coords[1][0], spec.blocks[1].poly)
        print(f"  n={j}: T coordinate {series_to_text(t)}, E valuation {min_entry_valuation(vec)}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--p", type=int, default=2, help="prime for the shift exhibit")
    ap.add_argument("--k", type=int, default=-1,
                    help="triviality ball index for the shift exhibit (default -1)")
    ap.add_argument("--ball", type=int, default=3,
                    help="containment ball index for the witness exhibit (default 3)")
    ap.add_argument("--steps", type=int, default=14, help="matrix orbit length")
    ap.add_argument("--depth", type=int, default=64, help="witness search depth")
    args = ap.parse_args()

    shift_exhibit(args.p, args.k)
    matrix_exhibit(2, (-2, 0), args.steps)
    matrix_exhibit(3, (3, 3, 0), args.steps)
    witness_exhibit(args.ball, args.depth)
    return 0


if __name__ == "__main__":
    sys.exit(main())
