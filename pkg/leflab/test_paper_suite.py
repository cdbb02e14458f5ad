#!/usr/bin/env python3
"""
Tests for the named reproducibility checks

Everything except the slow sweeps runs by default; set LEFLAB_SLOW_TESTS=1 to include them.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from leflab.exactfield import FieldSpec, make_rng
from leflab.paper_suite import ALIASES, all_passed, list_checks, random_si_hvector, reproduce_paper_suite, resolve
from leflab.predict import is_si_sequence

FP = FieldSpec.prime()
SLOW = os.environ.get("LEFLAB_SLOW_TESTS") == "1"
SLOW_CHECKS = ("ci-3333", "ci3-sweep")


def test_registry():
    names = [name for name, _ in list_checks()]
    assert names[0] == "ci-2222"
    assert "monomial-444" in names and "inclusions" in names
    assert len(names) == len(set(names))
    assert resolve(None) == names
    assert resolve(["monomial-443"]) == ["monomial-444"]
    assert ALIASES["monomial-443"] == "monomial-444"
    try:
        resolve(["no-such-check"])
    except KeyError:
        pass
    else:
        raise AssertionError("unknown check names are rejected")


def test_random_si_hvectors():
    rng = make_rng(0, "test")
    for _ in range(10):
        h = random_si_hvector(rng, rng.randint(1, 4))
        assert h.is_symmetric() and h.socle_degree % 2 == 1
        assert is_si_sequence(h)[0]


def test_cheap_checks():
    rows = reproduce_paper_suite(FP, seed=0, only=["ci4-hvector", "dim-gor", "codim2-sweep"])
    assert [r["check"] for r in rows] == ["ci4-hvector", "dim-gor", "codim2-sweep"]
    assert all_passed(rows), rows
    assert set(rows[0]) == {"check", "status", "detail", "seconds"}


def test_fast_checks():
    names = [name for name, _ in list_checks() if name not in SLOW_CHECKS]
    assert len(names) == len(list_checks()) - len(SLOW_CHECKS)
    rows = reproduce_paper_suite(FP, seed=0, only=names)
    assert [r["check"] for r in rows] == names
    failed = [r for r in rows if r["status"] != "pass"]
    assert not failed, failed
    details = {r["check"]: r["detail"] for r in rows}
    assert "collinear" in details["gorenstein-points"]
    assert "degree n/a [gorenstein-not-decreasing]" in details["gorenstein-points"]


def test_slow_checks():
    if not SLOW:
        print("   (skipped; set LEFLAB_SLOW_TESTS=1)")
        return
    rows = reproduce_paper_suite(FP, seed=0, only=list(SLOW_CHECKS))
    failed = [r for r in rows if r["status"] != "pass"]
    assert not failed, failed


def main():
    tests = [test_registry, test_random_si_hvectors, test_cheap_checks, test_fast_checks,
             test_slow_checks]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
