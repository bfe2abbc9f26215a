"""Brute-force ground truth for every count in the repository.

The oracle never touches the closed forms: it enumerates preference lists,
runs the parking simulation, reads the outcome/block permutations off the
result and filters by honest pattern containment.  One simulation pass per
size is cached as a pair of profiles (counts of parking functions per
containment mask of the outcome and block permutations), so sweeping all 63
pattern subsets costs a single enumeration.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .parking import (
    block_permutation_of_blocks,
    enumerate_parking_functions,
    simulate,
    to_blocks,
)
from .permutations import (
    PatternSet,
    Permutation,
    s3_containment_mask,
    s3_pattern_bits,
)

BRUTE_CAP = 8


class OracleCapExceeded(ValueError):
    """The requested size is beyond the exhaustive-simulation cap."""


def _check_cap(n: int) -> None:
    if n > BRUTE_CAP:
        raise OracleCapExceeded(
            f"oracle enumeration capped at n={BRUTE_CAP}; n={n} needs {(n + 1) ** (n - 1)} simulations"
        )


@lru_cache(maxsize=None)
def _profiles(n: int) -> tuple[dict[int, int], dict[int, int]]:
    """(outcome-permutation, block-permutation) mask profiles for size n.

    Each maps an S_3 containment bitmask to the number of parking functions
    whose respective permutation has that mask.
    """
    mask_of: dict[tuple[int, ...], int] = {}

    def mask(p: Permutation) -> int:
        m = mask_of.get(p.entries)
        if m is None:
            m = s3_containment_mask(p)
            mask_of[p.entries] = m
        return m

    rho_profile: dict[int, int] = {}
    pi_profile: dict[int, int] = {}
    for f in enumerate_parking_functions(n):
        outcome = simulate(f.prefs)
        assert outcome is not None
        rho_mask = mask(outcome.rho)
        rho_profile[rho_mask] = rho_profile.get(rho_mask, 0) + 1
        pi_mask = mask(block_permutation_of_blocks(to_blocks(f)))
        pi_profile[pi_mask] = pi_profile.get(pi_mask, 0) + 1
    return rho_profile, pi_profile


def brute_pk(n: int, patterns: PatternSet) -> int:
    """Count parking functions whose outcome permutation avoids the patterns,
    by direct simulation."""
    _check_cap(n)
    if n == 0:
        return 1
    if all(q.n == 3 for q in patterns):
        bits = s3_pattern_bits(patterns)
        rho_profile, _ = _profiles(n)
        return sum(c for mask, c in rho_profile.items() if not mask & bits)
    return _brute_general(n, patterns, use_rho=True)


def brute_pf(n: int, patterns: PatternSet) -> int:
    """Count parking functions whose block permutation avoids the patterns."""
    _check_cap(n)
    if n == 0:
        return 1
    if all(q.n == 3 for q in patterns):
        bits = s3_pattern_bits(patterns)
        _, pi_profile = _profiles(n)
        return sum(c for mask, c in pi_profile.items() if not mask & bits)
    return _brute_general(n, patterns, use_rho=False)


def _brute_general(n: int, patterns: PatternSet, use_rho: bool) -> int:
    """Simulation-based count for pattern sets of any sizes."""
    from .permutations import avoids_all

    verdicts: dict[tuple[int, ...], bool] = {}
    total = 0
    for f in enumerate_parking_functions(n):
        if use_rho:
            outcome = simulate(f.prefs)
            assert outcome is not None
            p = outcome.rho
        else:
            p = block_permutation_of_blocks(to_blocks(f))
        verdict = verdicts.get(p.entries)
        if verdict is None:
            verdict = avoids_all(p, patterns)
            verdicts[p.entries] = verdict
        total += verdict
    return total


def brute_total(n: int) -> int:
    """Number of parking functions of size n, by enumeration."""
    _check_cap(n)
    rho_profile, _ = _profiles(n)
    return sum(rho_profile.values())


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    n: int
    m: int | None
    oracle_value: int
    formula_value: int

    @property
    def agree(self) -> bool:
        return self.oracle_value == self.formula_value

    def line(self) -> str:
        tag = "ok  " if self.agree else "FAIL"
        where = f"n={self.n}" + (f" m={self.m}" if self.m is not None else "")
        out = f"[{tag}] {self.quantity} {where}: oracle={self.oracle_value} formula={self.formula_value}"
        return out


def _all_s3_subsets() -> list[PatternSet]:
    import itertools

    from .permutations import S3_PATTERNS

    out = []
    for r in range(1, 7):
        for combo in itertools.combinations(S3_PATTERNS, r):
            out.append(PatternSet(combo))
    return out


def verify_pk(n_max: int) -> list[OracleReport]:
    """pk formulas vs weighted sums vs simulation, every subset of S_3."""
    from .counting import generic_weighted_pk, pk_count

    reports = []
    for patterns in _all_s3_subsets():
        name = f"pk({patterns})"
        for n in range(1, n_max + 1):
            brute = brute_pk(n, patterns)
            formula = pk_count(patterns, n).value
            weighted = generic_weighted_pk(n, patterns).value
            reports.append(OracleReport(name, n, None, brute, formula))
            reports.append(OracleReport(name + " [weighted]", n, None, brute, weighted))
    return reports


def verify_pf(n_max: int) -> list[OracleReport]:
    """pf closed forms vs simulation for the supported pattern sets."""
    from .counting import pf_count
    from .permutations import pattern_set

    supported = [
        pattern_set("12"),
        pattern_set("21"),
        pattern_set("123", "132"),
        pattern_set("123", "213"),
        pattern_set("312", "321"),
    ]
    reports = []
    for patterns in supported:
        name = f"pf({patterns})"
        for n in range(1, n_max + 1):
            reports.append(
                OracleReport(name, n, None, brute_pf(n, patterns), pf_count(patterns, n).value)
            )
    return reports


def verify_generalized(n_max: int, m_max: int = 2) -> list[OracleReport]:
    """Class-count formulas vs the per-evaluation enumeration oracle."""
    from . import generalized

    reports = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            pairs = [
                ("hyposylvester-multi", generalized.hyposylvester_multipark(n, m),
                 generalized.multipark_class_count_by_evaluations(n, m, "hyposylvester")),
                ("metasylvester-multi", generalized.metasylvester_multipark(n, m),
                 generalized.multipark_class_count_by_evaluations(n, m, "metasylvester")),
                ("metasylvester-m", generalized.metasylvester_mpark(n, m),
                 generalized.mpark_class_count_by_evaluations(n, m, "metasylvester")),
                ("hypoplactic-m", generalized.hypoplactic_mpark(n, m),
                 generalized.mpark_class_count_by_evaluations(n, m, "hypoplactic")),
                ("hyposylvester-m", generalized.hyposylvester_mpark(n, m),
                 generalized.mpark_class_count_by_evaluations(n, m, "hyposylvester")),
            ]
            for name, formula, oracle_value in pairs:
                reports.append(OracleReport(name, n, m, oracle_value, formula))
    return reports


def verify_bijections(n_max: int) -> list[OracleReport]:
    """Roundtrip and cardinality checks for both tree bijections."""
    from . import bijections, trees

    reports = []
    for n in range(0, n_max + 1):
        for family, constraint in (("123-132", "odd_root"), ("123-213", "root_ge2")):
            functions = bijections.enumerate_pf_family(n, family)
            images = set()
            good = 0
            for blocks in functions:
                t = bijections.forward(blocks, family)
                images.add(trees.serialize_tree(t))
                if bijections.backward(t, family) == blocks:
                    good += 1
            reports.append(OracleReport(f"roundtrip {family}", n, None, len(functions), good))
            expected = trees.count_trees(n + 1, constraint)
            reports.append(OracleReport(f"image {family}", n, None, expected, len(images)))
    return reports


def verify_all(n_max: int, families: str = "all") -> list[OracleReport]:
    """Run the formula-vs-oracle pairings; one failing report fails the run.

    families: comma-joined subset of {formulas, bijections, classes} or "all".
    """
    chosen = {f.strip() for f in families.split(",")} if families != "all" else {
        "formulas", "bijections", "classes"}
    reports: list[OracleReport] = []
    if "formulas" in chosen:
        reports += verify_pk(min(n_max, BRUTE_CAP - 1))
        reports += verify_pf(min(n_max, BRUTE_CAP - 1))
    if "classes" in chosen:
        reports += verify_generalized(min(n_max, 5), 2)
    if "bijections" in chosen:
        reports += verify_bijections(min(n_max, 7))
    return reports


def slow_tests_enabled() -> bool:
    return os.environ.get("PARKAV_SLOW", "") not in ("", "0")
