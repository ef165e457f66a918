#!/usr/bin/env python3
"""Smoke test for the multisym_py extension module.

Builds nothing itself: run `cargo build -p multisym-py` (or --release) first,
then `python3 python/smoke_test.py`. The script copies the freshest built
cdylib into a temp directory under the importable name and checks a sample of
known values across the binding surface.
"""

import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libmultisym_py.so", "libmultisym_py.dylib", "multisym_py.dll")
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("no built extension found; run `cargo build -p multisym-py` first")
    newest = max(built, key=lambda p: p.stat().st_mtime)
    stage = Path(tempfile.mkdtemp(prefix="multisym-py-"))
    suffix = ".pyd" if newest.suffix == ".dll" else ".so"
    shutil.copy2(newest, stage / f"multisym_py{suffix}")
    sys.path.insert(0, str(stage))
    import multisym_py

    return multisym_py


failures = []
passes = 0


def check(name, got, want):
    global passes
    if got == want:
        passes += 1
        print(f"ok    {name}")
    else:
        print(f"FAIL  {name}: got {got!r}, want {want!r}")
        failures.append(name)


def main():
    m = load_module()

    e = m.expand("g", "s", "[2,1]")
    check("expand g->s coeffs", e.coeffs, {"[2,1]": 1, "[2]": 1})
    check("expand g->s exact", e.cap, None)
    check("expand g->s coeff()", e.coeff("[2]"), 1)
    check("expand g->m", m.expand("g", "m", "[2,1]").coeffs,
          {"[2,1]": 1, "[1,1,1]": 2, "[2]": 1, "[1,1]": 1})
    check("expand Ltilde->L", m.expand("Ltilde", "L", "(2,1)", cap=5).coeffs,
          {"(2,1)": 1, "(1,2,1)": 1, "(2,1,1)": 2,
           "(1,1,2,1)": 1, "(1,2,1,1)": 2, "(2,1,1,1)": 3})

    p = m.product("Ltilde", "(1)", "(1)", cap=3)
    check("product Ltilde", p.coeffs, {"(2)": 1, "(1,1)": 1, "(1,2)": 1, "(2,1)": 1})
    check("product Ltilde cap", p.cap, 3)
    check("product Rtilde", m.product("Rtilde", "(3,2,5,1)", "(4,2)").coeffs,
          {"(3,2,5,5,2)": 1, "(3,2,5,1,4,2)": 1, "(3,2,5,4,2)": 1})

    check("coproduct Ltilde", m.coproduct("Ltilde", "(2)").coeffs,
          {"()⊗(2)": 1, "(1)⊗(1)": 1, "(1)⊗(2)": 1, "(2)⊗()": 1, "(2)⊗(1)": 1})

    check("pump", m.pump("(2,1)", 2).coeffs,
          {"(1,1,2,1)": 1, "(1,2,1,1)": 2, "(2,1,1,1)": 3})

    check("pair g/G diagonal", m.pair("g", "G", "[2,1]", "[2,1]"), 1)
    check("pair g/G off-diagonal", m.pair("g", "G", "[2,1]", "[2]"), 0)
    check("pair Rtilde/Ltilde", m.pair("Rtilde", "Ltilde", "(2,1)", "(2,1)"), 1)
    check("pair mMR/MMR", m.pair("mMR", "MMR", "121", "[(1,3),2]"), 1)

    ops = m.oracle("set-valued", "[2,1]", maxdeg=4, route="operators")
    tab = m.oracle("set-valued", "[2,1]", maxdeg=4, route="tableaux")
    check("oracle routes agree", ops, tab)
    check("oracle nonempty", bool(ops), True)

    check("antipode", m.antipode("[1]").coeffs, {"[1]": -1})
    check("factor word", m.factor("mMR", "12"), ["1", "1"])
    check("factor Mperm", m.factor("MMR", "[2,1]"), ["[2,1]"])
    check("order leq", m.order_leq("[1,2]", "[2,1]"), True)
    check("order geq", m.order_leq("[2,1]", "[1,2]"), False)

    check("enumerate ssyt", len(m.enumerate_family("ssyt", shape="[2,1]", max_entry=3)), 8)
    check("enumerate Mperms", len(m.enumerate_family("Mperms", n=3)), 8)
    check("enumerate set-compositions", m.enumerate_family("set-compositions", n=2),
          ["[1,2]", "[2,1]", "[(1,2)]"])

    check("mjh", m.mjh(4, shape="[3,1]"), ["2134", "2314", "2341"])
    check("mjh profile", m.mjh_profile(5, shape="[3,1]"), [2, 2, 2, 2])

    check("standardize word", m.standardize_word("2,2,5,5,2"), "121")
    check("standardize setcomp",
          m.standardize_setcomp("[(1,4,5),7,(2,8,9),(6,10),3]"), "[(1,4),6,(2,7),(5,8),3]")
    check("invert word", m.invert_word("121"), "[(1,3),2]")
    check("invert setcomp", m.invert_setcomp("[(1,3),2]"), "121")

    check("apply_u adds a box", m.apply_u(5, "[4,3,3,1]", 14), {"[5,3,3,1]": 1})
    check("apply_u branches", m.apply_u(4, "[4,3,3,1]", 14),
          {"[4,4,3,1]": 1, "[4,4,4,1]": 1})
    check("apply_u vanishes", m.apply_u(6, "[4,3,3,1]", 14), {})

    check("grassmann square", m.grassmann("[1]", "[1]", 2, 4),
          {"[2]": 1, "[1,1]": 1, "[2,1]": -1})

    outcomes = m.run_checks("shapes", "small", 17)
    check("run_checks count", len(outcomes), 3)
    check("run_checks all pass", all(passed for _, _, passed, _, _ in outcomes), True)

    try:
        m.expand("g", "s", "[1]/[2]")
        check("bad label raises", "no exception", "ValueError")
    except ValueError:
        check("bad label raises", "ValueError", "ValueError")

    print()
    if failures:
        sys.exit(f"{len(failures)} of the checks failed: {', '.join(failures)}")
    print(f"all {passes} checks passed")


if __name__ == "__main__":
    main()
