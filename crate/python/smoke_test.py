"""Smoke test for the polarlab Python extension.

Build it first with `cargo build -p polarlab-python --release`. If no
installed `polarlab` module is found, the freshly built library under
target/ is loaded directly.
"""

import importlib.machinery
import importlib.util
import json
import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    try:
        import polarlab

        return polarlab
    except ImportError:
        pass
    for profile in ("release", "debug"):
        lib = ROOT / "target" / profile / "libpolarlab_py.so"
        if lib.exists():
            loader = importlib.machinery.ExtensionFileLoader("polarlab", str(lib))
            spec = importlib.util.spec_from_loader("polarlab", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            sys.modules["polarlab"] = module
            return module
    sys.exit("polarlab extension not found; run cargo build -p polarlab-python --release")


def main():
    pl = load()
    Operator = pl.Operator

    two = Operator.fixture("two_point")
    c = two.classify()
    assert (c["monotone"], c["quasimonotone"], c["pseudomonotone"]) == (False, True, False), c

    ejem1 = Operator.fixture("ejem1")
    assert ejem1.fiber(0) == {"neg": "open", "zero": True, "pos": "open"}
    assert ejem1.fiber("-1/2") == {"neg": "open", "zero": False, "pos": "absent"}
    assert ejem1.is_polar_zero(0) and not ejem1.is_polar_zero(1)

    var = Operator.fixture("ejem-variational")
    assert var.polar_member(-1, 0)
    assert not var.polar_member(Fraction(1, 2), 0)
    assert var.polar() == Operator.fixture("ejem-variational-polar")

    polar = Operator.fixture("ejem-variational-polar")
    k = json.dumps({"finite": [["1"], ["2"]]})
    assert polar.vip(k, "S") == {"solutions": []}
    assert var.vip(k, "M") == {"solutions": [["1"], ["2"]]}

    d = Operator.fixture("dmax-example").dmax()
    assert d["d_maximal"] is True, d

    t = Operator(json.dumps({"kind": "finite", "dim": 1, "graph": [{"x": ["0"], "xs": ["1"]}, {"x": ["1"], "xs": ["1"]}]}))
    assert t.dim == 1 and t.john()["pseudomonotone"] is True
    assert Operator(t.to_json()) == t

    rep = pl.verify(seed=3, trials=50, only=["REL-SYM", "POLAR-GALOIS"])
    assert rep["summary"]["fail"] == 0, rep["summary"]
    assert "PAPER-FIXTURES" in pl.checks()

    try:
        var.polar_member(0, 0, kind="lambda")
    except ValueError:
        pass
    else:
        raise AssertionError("bad kind accepted")

    print("python smoke test ok")


if __name__ == "__main__":
    main()
