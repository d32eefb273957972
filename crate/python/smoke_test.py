#!/usr/bin/env python3
"""Smoke test for the qskein_py extension module.

Builds nothing itself: it locates the cdylib produced by
`cargo build -p qskein-python` under target/, stages it under an importable
name, imports it, and checks a few known values.
"""

import json
import pathlib
import shutil
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_cdylib():
    candidates = []
    for profile in ("release", "debug"):
        for name in ("libqskein_py.so", "qskein_py.so", "libqskein_py.dylib"):
            p = ROOT / "target" / profile / name
            if p.exists():
                candidates.append(p)
    if not candidates:
        sys.exit(
            "error: extension not found; run `cargo build -p qskein-python` first"
        )
    return candidates[0]


def stage(cdylib, tmp):
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    target = pathlib.Path(tmp) / f"qskein_py{suffix}"
    shutil.copyfile(cdylib, target)
    sys.path.insert(0, tmp)


def check(name, cond):
    if not cond:
        sys.exit(f"FAIL {name}")
    print(f"PASS {name}")


def main():
    with tempfile.TemporaryDirectory() as tmp:
        stage(locate_cdylib(), tmp)
        import qskein_py

        # Colored Jones of the (2,2)-torus link [2] at color 1.
        r = json.loads(qskein_py.jones_json("2", 1))
        check("jones schema", r["algebra"] == "sl2" and r["n"] == 1 and r["spec"] == [2])
        check("jones value", r["polynomial"]["terms"] == [[6, "-1"], [30, "-1"]])

        # Color 0 is trivial.
        r = json.loads(qskein_py.jones_json("2,-2", 0))
        check("color 0 trivial", r["polynomial"]["terms"] == [[0, "1"]])

        # sl3 runs too.
        r = json.loads(qskein_py.jones_json("4", 1, algebra="sl3"))
        check("sl3 jones runs", r["algebra"] == "sl3" and len(r["polynomial"]["terms"]) > 0)

        # Kauffman relation instance: half twist at n = 1.
        e = json.loads(qskein_py.twist_expansion_json(1, 1))
        check(
            "kauffman expansion",
            e["coefficients"]["1"]["terms"] == [[3, "1"]]
            and e["coefficients"]["0"]["terms"] == [[-3, "1"]],
        )

        # Bubble collapse at n=m=k=l=1 gives the loop value -[2].
        b = json.loads(qskein_py.bubble_coefficients_json(1, 1, 1, 1))
        check("bubble loop value", b["1"]["terms"] == [[-6, "-1"], [6, "-1"]])

        # Errors surface as ValueError.
        for bad in (("3", 1), ("x", 1)):
            try:
                qskein_py.jones_json(*bad)
            except ValueError:
                pass
            else:
                sys.exit(f"FAIL expected ValueError for link {bad[0]!r}")
        print("PASS error handling")

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
