#!/usr/bin/env python3
"""Print the two- and three-variable weight series and their symmetrized
forms on the default window, for eyeballing coefficient patterns."""

from wfengine.weightfn import (universal_weight, symmetrized_weight,
                               default_window)
from wfengine.algebra import word_text
from wfengine.qfield import qrat_to_str


def show(n):
    lo, hi = default_window(n)
    w = universal_weight(n, lo, hi)
    print(f"== n={n}  window {lo}..{hi}  ({len(w.terms)} exponents)")
    for e, el in sorted(w.terms.items()):
        for u, c in sorted(el.terms.items()):
            print(f"  t^{list(e)}  [{word_text(u)}]  {qrat_to_str(c)}")
    s = symmetrized_weight(n, lo, hi)
    print(f"-- symmetrized ({len(s.terms)} exponents), all-negative support:")
    for e, el in sorted(s.terms.items())[:10]:
        assert all(x < 0 for x in e)
        print(f"  t^{list(e)}  {el}")


if __name__ == "__main__":
    show(2)
    show(3)
