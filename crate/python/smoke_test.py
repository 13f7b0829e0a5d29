#!/usr/bin/env python3
"""Smoke test for the goursat_py extension module.

Builds the cdylib if needed, copies it into a temp directory under the
importable name, and exercises every exported class and function against
known fixtures.  Exits nonzero on the first failed assertion.
"""

import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def find_library():
    for profile in ("release", "debug"):
        path = ROOT / "target" / profile / "libgoursat_py.so"
        if path.exists():
            return path
    return None


def load_module():
    lib = find_library()
    if lib is None:
        subprocess.run(
            ["cargo", "build", "-p", "goursat-py"], cwd=ROOT, check=True
        )
        lib = find_library()
    if lib is None:
        sys.exit("libgoursat_py.so not found after cargo build")
    tmp = tempfile.mkdtemp(prefix="goursat-py-")
    shutil.copy2(lib, pathlib.Path(tmp) / "goursat_py.so")
    sys.path.insert(0, tmp)
    import goursat_py

    return goursat_py


def main():
    g = load_module()

    # Big worked fixture: a three-stage vector at level 15.
    der = g.DerivedVector([1, 1, 2, 2, 2, 2, 2, 2, 4, 6, 6, 6, 18, 24, 24])
    assert der.level == 15
    assert der.critical
    assert der.blocks == [(1, 2), (2, 6), (4, 1), (6, 3), (18, 1), (24, 2)]
    assert str(der.puiseux()) == "[24; 90, 94, 103]"

    code = der.to_code()
    assert code.word == "RRRVVTRVVRRRRRV"
    assert code.puiseux() == der.puiseux()
    assert code.to_derived() == der

    geo = der.geometry()
    assert geo == {"level": 15, "dim": 17, "sgv_length": 103, "v": 5, "g": 3}

    profile = code.profile()
    assert profile["v"] == 5
    assert profile["t"] == [0, 0, 0, 1, 0]
    assert profile["r"] == [0, 5, 0, 1, 0, 3]

    runs, strings = code.split()
    assert runs == [3, 1, 5]
    assert strings == ["VVT", "VV", "V"]

    beta, s, omega = der.truncate_last_stage()
    assert beta.flat == [1, 1, 2, 3, 3, 3, 9, 12, 12]
    assert (s, omega) == (5, "V")
    assert beta.to_code().word == "RRRVVTRVV"

    # Growth-vector round trips.
    assert g.DerivedVector.from_sgv([2, 3, 4, 4, 5]).flat == [1, 1, 2]
    assert g.DerivedVector([1, 1, 2]).to_sgv() == [2, 3, 4, 4, 5]
    assert g.DerivedVector([1, 1, 1, 3, 3]).to_sgv() == [2, 3, 4, 5, 5, 5, 6, 6, 6, 7]
    assert g.DerivedVector.from_blocks([(1, 3), (3, 2)]).flat == [1, 1, 1, 3, 3]

    # Small code fixtures.
    rrvt = g.RvtCode("RRVT")
    assert str(rrvt.puiseux()) == "[3; 7]"
    assert rrvt.to_derived().flat == [1, 1, 1, 3]
    assert repr(rrvt) == 'RvtCode("RRVT")'
    assert g.RvtCode("RRVVVV").puiseux() == g.PuiseuxCharacteristic(8, [21])

    # Errors surface as ValueError with positional context.
    for bad, needle in [("RRT", "position 3"), ("RV", "position 2"), ("RRXV", "position 3")]:
        try:
            g.RvtCode(bad)
        except ValueError as err:
            assert needle in str(err), (bad, err)
        else:
            raise AssertionError(f"RvtCode({bad!r}) should have been rejected")

    try:
        g.RvtCode("RRVR").puiseux()
    except ValueError as err:
        assert "not critical" in str(err)
    else:
        raise AssertionError("non-critical code must have no Puiseux characteristic")

    try:
        g.DerivedVector([1, 2, 3]).to_code()
    except ValueError as err:
        assert "no code" in str(err)
    else:
        raise AssertionError("(1,2,3) is not realizable by any code")

    try:
        g.DerivedVector([2, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("decreasing entries must be rejected")

    # Plane branches.
    assert str(g.puiseux_from_branch(4, [6, 7])) == "[4; 6, 7]"
    assert str(g.puiseux_from_branch(4, [8, 12, 14, 15])) == "[4; 14, 15]"
    assert str(g.puiseux_from_branch(2, [3])) == "[2; 3]"
    assert g.is_well_parametrized(4, [6, 7])
    assert not g.is_well_parametrized(6, [9, 15])
    try:
        g.puiseux_from_branch(2, [4])
    except ValueError as err:
        assert "badly parametrized" in str(err)
    else:
        raise AssertionError("(t^2, t^4) must be rejected")

    pc = g.PuiseuxCharacteristic(24, [90, 94, 103])
    assert pc.lambda0 == 24
    assert pc.exponents == [90, 94, 103]
    assert pc.g == 3
    assert pc.gcd_chain() == [24, 6, 2, 1]
    mult, exps = pc.witness()
    assert g.puiseux_from_branch(mult, exps) == pc

    # Census entry points.
    codes = g.enumerate_codes(5, only_critical=True)
    assert [c.word for c in codes] == [
        "RRV",
        "RRRV",
        "RRVV",
        "RRVT",
        "RRRRV",
        "RRRVV",
        "RRRVT",
        "RRVRV",
        "RRVVV",
        "RRVVT",
        "RRVTV",
        "RRVTT",
    ]

    report = g.cross_validate(9)
    assert report["clean"]
    assert report["failures"] == []
    assert report["total"] == 987
    assert report["critical"] == 609
    assert report["levels"][0] == (2, 1, 0)
    assert report["levels"][-1] == (9, 610, 377)

    for level, bound, longest, word in g.fibonacci_extremes(9):
        assert longest == bound
        assert word == "RR" + "V" * (level - 2)

    print("smoke test passed: 3 classes, 5 functions, all fixtures agree")


if __name__ == "__main__":
    main()
