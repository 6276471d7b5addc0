"""Command line front end.

Exit codes: 0 = success / all checks passed, 1 = a check found mismatches,
2 = bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .qfield import qrat_to_str
from .algebra import Elt, word_text
from .series import Series
from .weightfn import (universal_weight, symmetrized_weight, default_window,
                       check_closed_form, check_antisymmetry)
from .classical import check_classical, check_q1_limit
from . import roots as rootsmod
from .modules import (MODULES, spin_module, validate_relations,
                      check_factorization, eigenproduct_check,
                      weight_vector, rational_reconstruct)


def _coeff_text(c):
    if isinstance(c, Elt):
        return {word_text(w): qrat_to_str(x) for w, x in c.terms.items()}
    return qrat_to_str(c)


def series_jsonable(s: Series):
    return {
        "variables": list(s.names),
        "floor": list(s.lo),
        "ceiling": list(s.hi),
        "terms": [{"exp": list(e), "coeff": _coeff_text(c)}
                  for e, c in sorted(s.terms.items())],
    }


def print_series(s: Series, fmt):
    if fmt == "json":
        json.dump(series_jsonable(s), sys.stdout, indent=2)
        print()
        return
    print(f"variables: {' '.join(s.names)}")
    print(f"window:    {list(s.lo)} .. {list(s.hi)}")
    for e, c in sorted(s.terms.items()):
        mono = " ".join(f"{n}^{x}" for n, x in zip(s.names, e) if x)
        if isinstance(c, Elt):
            for w, x in sorted(c.terms.items()):
                print(f"  {mono or '1'}  [{word_text(w)}]  {qrat_to_str(x)}")
        else:
            print(f"  {mono or '1'}  {qrat_to_str(c)}")


def _parse_ints(s):
    return tuple(int(x) for x in s.split(","))


def _report(name, bad, extra=""):
    status = "ok" if not bad else f"FAIL ({len(bad)} mismatches)"
    print(f"{name}: {status}{extra}")
    for k, v in list(sorted(bad.items()))[:10]:
        print(f"    at {k}: {v}")
    return 0 if not bad else 1


# ------------------------------------------------------------- subcommands

def cmd_compute(args):
    lo, hi = default_window(args.n)
    if args.lo:
        lo = _parse_ints(args.lo)
    if args.hi:
        hi = _parse_ints(args.hi)
    if args.symmetrized:
        s = symmetrized_weight(args.n, lo, hi)
    else:
        s = universal_weight(args.n, lo, hi)
    print_series(s, args.format)
    return 0


def cmd_weight_vector(args):
    mod = _module(args)
    lo = _parse_ints(args.lo) if args.lo else tuple(-4 for _ in range(args.n))
    hi = _parse_ints(args.hi) if args.hi else \
        tuple(-1 if k == 0 else k + 1 for k in range(args.n))
    s = weight_vector(mod, args.n, lo, hi)
    if args.format == "json":
        out = {
            "variables": list(s.names),
            "floor": list(s.lo),
            "ceiling": list(s.hi),
            "terms": [{"exp": list(e),
                       "coeff": {str(list(k)): qrat_to_str(c)
                                 for k, c in v.terms.items()}}
                      for e, v in sorted(s.terms.items())],
        }
        json.dump(out, sys.stdout, indent=2)
        print()
    else:
        print(f"variables: {' '.join(s.names)}")
        for e, v in sorted(s.terms.items()):
            print(f"  {list(e)}  {v}")
    return 0


def _module(args):
    if getattr(args, "dim", None):
        return spin_module(args.dim)
    return MODULES[args.spin]()


def cmd_verify(args):
    rc = 0
    what = args.check

    if what in ("closed-form", "all"):
        _, _, bad = check_closed_form()
        rc |= _report("closed-form", bad)
    if what in ("antisymmetry", "all"):
        for n in (2, 3):
            rep = check_antisymmetry(n)
            bad = {("regularity", e): "nonnegative exponent"
                   for e in rep["regularity"]}
            for perm, b in rep["pairs"].items():
                for k, v in b.items():
                    bad[(perm, k)] = v
            rc |= _report(f"antisymmetry n={n}", bad)
    if what in ("classical", "all"):
        for colors in ((1,), (1, 2), (1, 1), (1, 2, 1), (1, 2, 2)):
            _, _, bad = check_classical(colors)
            rc |= _report(f"classical {colors}", bad)
    if what in ("q1", "all"):
        for n in (1, 2, 3):
            _, _, bad = check_q1_limit(n)
            rc |= _report(f"q=1 limit n={n}", bad)
    if what in ("relations", "all"):
        for name, mk in MODULES.items():
            fails = validate_relations(mk())
            rc |= _report(f"relations {name}",
                          {i: x for i, x in enumerate(fails)})
    if what in ("factorization", "all"):
        mods = [mk() for mk in MODULES.values()]
        for m1 in mods[:2]:
            for m2 in mods[:2]:
                _, _, bad, sup = check_factorization(m1, m2, 2)
                rc |= _report(f"factorization {m1.name}(x){m2.name} n=2",
                              bad, f" [support {sup}]")
                if sup == 0:
                    print("    vacuous comparison")
                    rc = 1
        _, _, bad, sup = check_factorization(mods[0], mods[1], 2,
                                             drop_bridge=True)
        ok = bool(bad)
        print(f"factorization negative control: "
              f"{'ok (fails as it must)' if ok else 'FAIL (still agrees)'}")
        rc |= 0 if ok else 1
    if what in ("eigenproduct", "all"):
        cases = [(MODULES["half"](), 1), (MODULES["one"](), 2),
                 (spin_module(4), 3)]
        for mod, n in cases:
            _, _, bad, sup = eigenproduct_check(mod, n)
            rc |= _report(f"eigenproduct {mod.name} n={n}", bad,
                          f" [support {sup}]")
            if sup == 0:
                print("    vacuous comparison")
                rc = 1
        _, _, bad, _ = eigenproduct_check(MODULES["one"](), 2,
                                          drop_exchange=True)
        ok = bool(bad)
        print(f"eigenproduct negative control: "
              f"{'ok (fails as it must)' if ok else 'FAIL (still agrees)'}")
        rc |= 0 if ok else 1
    if what in ("reconstruct", "all"):
        rc |= _reconstruct_demo()
    return rc


def _reconstruct_demo():
    from .qfield import QRat, ONE
    mod = MODULES["one"]()
    wv = weight_vector(mod, 2, (-6, -6), (-1, 4))
    qm2 = QRat.q_power(-2)
    q2 = QRat.q_power(2)

    def uv(i, v=1):
        return tuple(v if j == i else 0 for j in range(3))

    from .modules import _poly_mul_map
    den = {(0, 0, 0): ONE}
    for fac in ({uv(0): ONE, uv(2): -ONE}, {uv(1): ONE, uv(2): -ONE},
                {uv(0): ONE, uv(2): -qm2}, {uv(1): ONE, uv(2): -qm2},
                {uv(0): q2, uv(1): -ONE}):
        den = _poly_mul_map(den, fac)
    numer, surplus = rational_reconstruct(wv, den)
    ok = surplus >= 20 and numer
    print(f"reconstruct: {'ok' if ok else 'FAIL'} "
          f"[{len(numer)} numerator terms, {surplus} surplus zeros]")
    return 0 if ok else 1


def cmd_roots(args):
    cartan = rootsmod.preset(args.type)
    word = _parse_ints(args.word)
    if args.action == "ladder":
        ordering = rootsmod.build_ordering(cartan, word, args.count)
        for x in ordering.sequence(imaginary_up_to=args.count):
            print(list(x))
        return 0
    if args.action == "verify-ord1":
        ordering = rootsmod.build_ordering(cartan, word, 4 * args.height)
        bad = rootsmod.verify_ord1(ordering, args.height)
        return _report(f"ord1 height<={args.height}",
                       {i: x for i, x in enumerate(bad)})
    if args.action == "verify-shift":
        bad = rootsmod.verify_shift_correspondence(cartan, word, args.c,
                                                   args.count)
        return _report(f"shift c={args.c}", {i: x for i, x in enumerate(bad)})
    return 2


def cmd_module(args):
    mod = _module(args)
    fails = validate_relations(mod)
    return _report(f"module {mod.name} (dim {mod.dim})",
                   {i: x for i, x in enumerate(fails)})


def main(argv=None):
    p = argparse.ArgumentParser(prog="wf",
                                description="exact weight-function engine")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("compute", help="print a weight series")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--lo", help="comma-separated window floor")
    c.add_argument("--hi", help="comma-separated window ceiling")
    c.add_argument("--symmetrized", action="store_true")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(fn=cmd_compute)

    c = sub.add_parser("weight-vector",
                       help="weight series applied to a module highest vector")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--spin", choices=sorted(MODULES), default="one")
    c.add_argument("--dim", type=int)
    c.add_argument("--lo")
    c.add_argument("--hi")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(fn=cmd_weight_vector)

    c = sub.add_parser("verify", help="run consistency checks")
    c.add_argument("check", choices=(
        "closed-form", "antisymmetry", "classical", "q1", "relations",
        "factorization", "eigenproduct", "reconstruct", "all"))
    c.set_defaults(fn=cmd_verify)

    c = sub.add_parser("roots", help="affine root ordering tools")
    c.add_argument("action", choices=("ladder", "verify-ord1", "verify-shift"))
    c.add_argument("--type", default="a1", choices=("a1", "a2"))
    c.add_argument("--word", default="0,1")
    c.add_argument("--count", type=int, default=12)
    c.add_argument("--height", type=int, default=8)
    c.add_argument("--c", type=int, default=1)
    c.set_defaults(fn=cmd_roots)

    c = sub.add_parser("module", help="validate an evaluation module")
    c.add_argument("--spin", choices=sorted(MODULES), default="one")
    c.add_argument("--dim", type=int)
    c.set_defaults(fn=cmd_module)

    args = p.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
