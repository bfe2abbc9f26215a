import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parkav.permutations import (
    PatternSet,
    Permutation,
    all_permutations,
    avoidance_class,
    avoids,
    concat,
    contains,
    direct_sum,
    ell_factor,
    ell_weight,
    format_permutation,
    identity,
    list_on_set,
    parse_pattern_set,
    parse_permutation,
    pattern_set,
    perm,
    reverse_identity,
    skew_sum,
)
from invariants import ell_weights_match_outcome_counts


def test_identity_and_reversal():
    assert identity(3) == perm("123")
    assert reverse_identity(4) == perm("4321")
    assert reverse_identity(0) == perm("")
    assert identity(0).n == 0


def test_sums():
    assert direct_sum(perm("1"), perm("21")) == perm("132")
    assert skew_sum(perm("12"), perm("1")) == perm("231")


def test_listed_set_concatenation():
    assert list_on_set({2, 5}) == (2, 5)
    assert list_on_set({1, 3, 4}, "decreasing") == (4, 3, 1)
    assert list_on_set(set()) == ()
    # increasing on {2,5}, then 6, then decreasing on {1,3,4}
    assert concat(list_on_set({2, 5}), (6,), list_on_set({1, 3, 4}, "decreasing")) == perm(
        "256431"
    )


def test_contains():
    assert contains(perm("7561243"), perm("132"))
    assert not contains(perm("7561234"), perm("132"))
    assert contains(perm("123"), perm("123"))
    assert avoids(perm("7561234"), perm("132"))


def test_avoidance_class_small():
    only = avoidance_class(3, pattern_set("123", "132", "213", "231", "312"))
    assert only == [perm("321")]
    assert len(avoidance_class(4, pattern_set("123"))) == 14
    assert avoidance_class(5, pattern_set("123", "321")) == []
    assert avoidance_class(0, pattern_set("123")) == [perm("")]


def test_ell_weight_examples():
    assert ell_weight(reverse_identity(5)) == 1
    assert ell_weight(identity(5)) == 120
    assert ell_weight(perm("7561234")) == 48
    assert [ell_factor(perm("7561234"), i) for i in range(1, 8)] == [1, 1, 2, 1, 2, 3, 4]


def test_ell_weight_is_outcome_multiplicity():
    ell_weights_match_outcome_counts(7)


def test_containment_transitive_on_random_triples():
    rng = random.Random(91)
    for _ in range(300):
        sizes = sorted(rng.randint(1, 8) for _ in range(3))
        ps = []
        for s in sizes:
            entries = list(range(1, s + 1))
            rng.shuffle(entries)
            ps.append(Permutation(tuple(entries)))
        small, mid, big = ps
        if contains(big, mid) and contains(mid, small):
            assert contains(big, small)


def test_avoidance_class_respects_union():
    for n in range(0, 7):
        sn = list(all_permutations(n))
        import itertools

        from parkav.permutations import S3_PATTERNS

        masks = {
            p.entries: tuple(contains(p, q) for q in S3_PATTERNS) for p in sn
        }
        for r in range(2, 7):
            for combo in itertools.combinations(range(6), r):
                sub = PatternSet(tuple(S3_PATTERNS[i] for i in combo))
                head = PatternSet((S3_PATTERNS[combo[0]],))
                rest = PatternSet(tuple(S3_PATTERNS[i] for i in combo[1:]))
                whole = {p.entries for p in avoidance_class(n, sub)}
                split = {p.entries for p in avoidance_class(n, head)} & {
                    p.entries for p in avoidance_class(n, rest)
                }
                assert whole == split, (n, combo)
                # sanity against the precomputed masks
                direct = {
                    e for e, m in masks.items() if not any(m[i] for i in combo)
                }
                assert whole == direct


def test_pattern_set_is_canonical():
    a = pattern_set("132", "123", "132")
    assert str(a) == "123,132"
    assert parse_pattern_set("132, 123") == a
    with pytest.raises(ValueError):
        parse_pattern_set("")
    with pytest.raises(ValueError):
        pattern_set("")


def test_parsing():
    assert parse_permutation("7561234").entries == (7, 5, 6, 1, 2, 3, 4)
    long = parse_permutation("10,3,1,2,4,5,6,7,8,9")
    assert long.n == 10
    assert format_permutation(long) == "10,3,1,2,4,5,6,7,8,9"
    assert parse_permutation(format_permutation(perm("321"))) == perm("321")
    with pytest.raises(ValueError):
        parse_permutation("122")
    with pytest.raises(ValueError):
        parse_permutation("12a")
    with pytest.raises(ValueError):
        Permutation((1, 3))


@given(st.permutations(list(range(1, 7))))
@settings(max_examples=60, deadline=None)
def test_self_containment_and_reverse(entries):
    p = Permutation(tuple(entries))
    assert contains(p, p)
    assert contains(p, Permutation((1,)))


def test_ell_factor_bounds():
    with pytest.raises(ValueError):
        ell_factor(perm("123"), 0)
    with pytest.raises(ValueError):
        ell_factor(perm("123"), 4)
