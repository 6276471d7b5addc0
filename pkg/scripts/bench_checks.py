#!/usr/bin/env python3
"""Time the expensive cross-checks at a few window sizes; useful when
changing the straightening cache or the window calculus."""

import time

from wfengine.weightfn import check_antisymmetry
from wfengine.classical import check_q1_limit
from wfengine.modules import (spin_half, spin_one, spin_module,
                              check_factorization, eigenproduct_check)


def timed(label, fn):
    t0 = time.time()
    out = fn()
    bad = out[2] if isinstance(out, tuple) else None
    note = "" if not bad else f"  MISMATCHES {len(bad)}"
    print(f"{label:45s} {time.time() - t0:6.1f}s{note}")


if __name__ == "__main__":
    timed("antisymmetry n=2", lambda: check_antisymmetry(2))
    timed("antisymmetry n=3", lambda: check_antisymmetry(3))
    timed("q=1 limit n=3", lambda: check_q1_limit(3))
    for m1, m2 in ((spin_half(), spin_half()), (spin_one(), spin_one())):
        timed(f"factorization {m1.name}(x){m2.name} n=2",
              lambda m1=m1, m2=m2: check_factorization(m1, m2, 2))
    timed("factorization one(x)one n=3 (narrow)",
          lambda: check_factorization(spin_one(), spin_one(), 3,
                                      lo=(-3, -3, -3)))
    timed("eigenproduct spin3/2 n=3",
          lambda: eigenproduct_check(spin_module(4), 3))
