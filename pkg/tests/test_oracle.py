from collections import Counter

import pytest

from parkav import oracle
from parkav.parking import (
    block_permutation,
    enumerate_parking_functions,
    parking_permutation,
)
from parkav.permutations import PatternSet, avoids_all, pattern_set


def test_brute_pk_examples():
    assert oracle.brute_pk(3, pattern_set("123")) == 10
    assert oracle.brute_pk(4, pattern_set("321")) == 102
    assert oracle.brute_pk(2, pattern_set("123", "231")) == 3
    assert oracle.brute_pk(0, pattern_set("123")) == 1


def test_brute_pf_examples():
    assert oracle.brute_pf(4, pattern_set("312", "321")) == 63
    assert oracle.brute_pf(5, pattern_set("123", "213")) == 90
    assert oracle.brute_pf(3, pattern_set("12")) == 1
    assert oracle.brute_pf(4, pattern_set("21")) == 14


def test_empty_pattern_set_counts_everything():
    empty = PatternSet(())
    for n in range(1, 8):
        assert oracle.brute_pk(n, empty) == (n + 1) ** (n - 1)
        assert oracle.brute_total(n) == (n + 1) ** (n - 1)


def test_cap():
    with pytest.raises(ValueError):
        oracle.brute_pk(9, pattern_set("123"))
    with pytest.raises(ValueError):
        oracle.brute_pf(9, pattern_set("123"))


def test_order_independence():
    """Recount with the enumeration order reversed must agree."""
    patterns = pattern_set("132")
    for n in range(1, 6):
        functions = list(enumerate_parking_functions(n))
        forward = sum(
            1 for f in functions if avoids_all(parking_permutation(f), patterns)
        )
        backward = sum(
            1
            for f in reversed(functions)
            if avoids_all(parking_permutation(f), patterns)
        )
        assert forward == backward == oracle.brute_pk(n, patterns)
        pf_forward = sum(
            1 for f in functions if avoids_all(block_permutation(f), patterns)
        )
        assert pf_forward == oracle.brute_pf(n, patterns)


def test_mixed_size_patterns():
    assert oracle.brute_pf(4, pattern_set("12")) == 1
    assert oracle.brute_pk(4, pattern_set("21")) == 24
    assert oracle.brute_pk(4, pattern_set("12", "123")) == 1


def test_reports():
    report = oracle.OracleReport("pk(123)", 3, None, 10, 10)
    assert report.agree
    assert "ok" in report.line()
    bad = oracle.OracleReport("pk(123)", 3, None, 10, 11)
    assert not bad.agree
    assert "FAIL" in bad.line()


def test_verify_all_small():
    reports = oracle.verify_all(4, "formulas,classes")
    assert reports and all(r.agree for r in reports)
    reports = oracle.verify_all(4, "bijections")
    assert reports and all(r.agree for r in reports)


def test_profile_multiplicities_match_direct_count():
    n = 4
    direct: Counter = Counter()
    for f in enumerate_parking_functions(n):
        direct[parking_permutation(f).entries] += 1
    assert sum(direct.values()) == (n + 1) ** (n - 1)
    assert oracle.brute_pk(n, PatternSet(())) == sum(direct.values())
