"""Smoke test for the grasscat extension module.

Uses an installed `grasscat` (`pip install --no-build-isolation -e crates/python`)
if there is one, otherwise the library from `cargo build --release -p grasscat-python`
or the path in GRASSCAT_LIB.
"""

import importlib.machinery
import importlib.util
import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    if not os.environ.get("GRASSCAT_LIB"):
        try:
            import grasscat

            return grasscat
        except ImportError:
            pass
    candidates = [os.environ.get("GRASSCAT_LIB")] + [
        str(ROOT / "target" / profile / "libgrasscat.so") for profile in ("release", "debug")
    ]
    for path in filter(None, candidates):
        if Path(path).exists():
            loader = importlib.machinery.ExtensionFileLoader("grasscat", path)
            spec = importlib.util.spec_from_file_location("grasscat", path, loader=loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module
    sys.exit("grasscat extension not found; build it with cargo first")


def main():
    gc = load()
    s = lambda x, n: gc.KSubset.parse(x, n)

    i, j = s("236", 6), s("124", 6)
    assert not gc.weakly_separated(s("135", 6), s("246", 6))
    assert not gc.weakly_separated(i, j) and gc.weakly_separated(j, s("125", 6))
    assert not gc.ext_vanishes(i, s("145", 6))
    assert gc.ext_dim(s("135", 6), s("246", 6)) == 2 and gc.ext_dim(i, j) == 1
    assert str(gc.syzygy_profile(i)) == "124:0"
    assert gc.syzygy_profile(s("123", 6)).rank == 0

    p = gc.Profile.parse("2568|1347", 8)
    c = p.class_()
    assert c.coords == [1] * 8 and c.qform() == 0 and c.delta() == 2
    assert len(gc.Profile.parse("147|368|258", 8).cyclic_reorderings()) == 3
    assert all(x.beta().qform() == 2 for x in [i, j])

    assert len(gc.maximal_weakly_separated([], 3, 6)) == 10
    assert [len(gc.enumerate_roots(3, 8, d)) for d in (1, 2, 3)] == [56, 28, 8]

    census = gc.census(3, 6)
    assert census["total"] == 22
    assert census["degrees"]["2"]["weights"] == {"1,1,1,1,1,1": 2}
    variables = gc.enumerate_variables(2, 5)
    assert len(variables) == 10 and all(v["degree"] == 1 for v in variables)

    try:
        gc.enumerate_variables(3, 6, budget=5)
    except gc.BudgetExhausted:
        pass
    else:
        raise AssertionError("budget was not enforced")
    try:
        gc.KSubset.parse("1,9", 6)
    except gc.GrasscatError:
        pass
    else:
        raise AssertionError("bad subset accepted")

    report = gc.check_fixture("counterexample")
    assert report["ok"], report
    assert gc.fixture_dot("gr25").count(" -> ") == 18
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
