"""Permutations in one-line notation, pattern containment and avoidance classes.

A permutation of size n is a bijection on {1, ..., n}, stored as the tuple
(p(1), ..., p(n)).  Size 0 is the empty permutation.  On top of the plain
carrier type this module provides the structural constructors used to
describe avoidance classes (direct and skew sums, increasing/decreasing
listings of a set) and the window statistic ``ell_weight``: the product over
positions i of the length of the longest window ending at i whose values are
all <= p(i).  That product counts the parking functions whose outcome
permutation equals p, which is what makes weighted sums over avoidance
classes count pattern-restricted parking functions.

Text format: digits for n <= 9 ("7561234"), comma-separated otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Permutation:
    """One-line notation permutation of {1..n}; n = 0 is the empty permutation."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if sorted(self.entries) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on [{n}]: {self.entries!r}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        """Value at 1-based position i."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(f"position {i} out of range 1..{len(self.entries)}")
        return self.entries[i - 1]

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r})"


def perm(entries: Iterable[int] | str) -> Permutation:
    """Convenience constructor: perm("132"), perm([1,3,2]) or perm("10,3,...")."""
    if isinstance(entries, str):
        return parse_permutation(entries)
    return Permutation(tuple(entries))


def parse_permutation(text: str) -> Permutation:
    """Parse digit form ("7561234") or comma-separated form ("10,3,1,2,...")."""
    text = text.strip()
    if text == "":
        return Permutation(())
    if "," in text:
        parts = text.split(",")
        values = []
        for i, part in enumerate(parts):
            part = part.strip()
            if not part.isdigit():
                raise ValueError(f"bad permutation entry at position {i + 1}: {part!r}")
            values.append(int(part))
        return Permutation(tuple(values))
    if not text.isdigit():
        bad = next(i for i, c in enumerate(text) if not c.isdigit())
        raise ValueError(f"bad character in permutation at column {bad + 1}: {text[bad]!r}")
    return Permutation(tuple(int(c) for c in text))


def format_permutation(p: Permutation) -> str:
    if p.n == 0:
        return ""
    if p.n <= 9:
        return "".join(str(v) for v in p.entries)
    return ",".join(str(v) for v in p.entries)


def identity(n: int) -> Permutation:
    """The increasing permutation 1 2 ... n.

    >>> str(identity(3))
    '123'
    """
    return Permutation(tuple(range(1, n + 1)))


def reverse_identity(n: int) -> Permutation:
    """The decreasing permutation n n-1 ... 1.

    >>> str(reverse_identity(4))
    '4321'
    """
    return Permutation(tuple(range(n, 0, -1)))


def direct_sum(a: Permutation, b: Permutation) -> Permutation:
    """a followed by b shifted above a; every entry of a is below every entry of b."""
    n = a.n
    return Permutation(a.entries + tuple(v + n for v in b.entries))


def skew_sum(a: Permutation, b: Permutation) -> Permutation:
    """a shifted above b, followed by b; every entry of a is above every entry of b."""
    m = b.n
    return Permutation(tuple(v + m for v in a.entries) + b.entries)


def list_on_set(values: Iterable[int], order: str = "increasing") -> tuple[int, ...]:
    """The elements of a set listed increasing or decreasing.

    Concatenating such listings (covering {1..n} overall) spells out a
    permutation in one-line notation, which is how avoidance classes are
    described structurally.
    """
    if order == "increasing":
        return tuple(sorted(values))
    if order == "decreasing":
        return tuple(sorted(values, reverse=True))
    raise ValueError(f"order must be 'increasing' or 'decreasing', got {order!r}")


def concat(*pieces: Iterable[int]) -> Permutation:
    """Build a permutation by concatenating listings that partition {1..n}."""
    return Permutation(tuple(itertools.chain.from_iterable(pieces)))


def _rank_order(values: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(range(len(values)), key=lambda j: values[j]))


def contains_sequence(seq: Sequence[int], pattern: Permutation) -> bool:
    """Order-isomorphic subsequence search on any distinct-value sequence.

    Brute force over index subsets with early exit; fine for the pattern
    sizes (<= 4) this library ever dispatches on.
    """
    m = pattern.n
    if m == 0:
        return True
    if m > len(seq):
        return False
    order = _rank_order(pattern.entries)
    for positions in itertools.combinations(range(len(seq)), m):
        if _rank_order([seq[i] for i in positions]) == order:
            return True
    return False


def contains(p: Permutation, pattern: Permutation) -> bool:
    """True iff p has a subsequence order-isomorphic to pattern."""
    return contains_sequence(p.entries, pattern)


def avoids(p: Permutation, pattern: Permutation) -> bool:
    return not contains(p, pattern)


def avoids_all(p: Permutation, patterns: Iterable[Permutation]) -> bool:
    return all(not contains(p, q) for q in patterns)


@dataclass(frozen=True)
class PatternSet:
    """Canonical (sorted, deduplicated) set of nonempty patterns.

    Ordering is lexicographic on one-line notation, then by size, which gives
    deterministic dispatch keys for the counting formulas.
    """

    patterns: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if any(q.n == 0 for q in self.patterns):
            raise ValueError("patterns must have size >= 1")
        canon = sorted(set(self.patterns), key=lambda q: (q.entries, q.n))
        object.__setattr__(self, "patterns", tuple(canon))

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __str__(self) -> str:
        return ",".join(format_permutation(q) for q in self.patterns)

    def __or__(self, other: "PatternSet") -> "PatternSet":
        return PatternSet(self.patterns + other.patterns)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(q.entries for q in self.patterns)


def pattern_set(*patterns: str | Iterable[int] | Permutation) -> PatternSet:
    out = []
    for q in patterns:
        out.append(q if isinstance(q, Permutation) else perm(q))
    return PatternSet(tuple(out))


def parse_pattern_set(text: str) -> PatternSet:
    """Parse a comma-separated pattern list such as "123,132"."""
    parts = [part for part in text.split(",") if part.strip()]
    if not parts:
        raise ValueError("empty pattern list")
    return PatternSet(tuple(parse_permutation(part) for part in parts))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


def avoidance_class(n: int, patterns: PatternSet) -> list[Permutation]:
    """All permutations of size n avoiding every pattern, in canonical
    (lexicographic) order.  Size 0 yields the empty permutation alone.

    Containment is hereditary under extension, so the search prunes any
    prefix that already contains a pattern; only subsequences through the
    newest entry need checking at each step.
    """
    pats = [(q.entries, _rank_order(q.entries)) for q in patterns]
    out: list[Permutation] = []
    prefix: list[int] = []
    free = [True] * (n + 1)

    def last_entry_completes_a_pattern() -> bool:
        i = len(prefix) - 1
        for pat, order in pats:
            m = len(pat)
            if m > i + 1:
                continue
            for combo in itertools.combinations(range(i), m - 1):
                values = [prefix[j] for j in combo]
                values.append(prefix[i])
                if _rank_order(values) == order:
                    return True
        return False

    def rec() -> None:
        if len(prefix) == n:
            out.append(Permutation(tuple(prefix)))
            return
        for v in range(1, n + 1):
            if not free[v]:
                continue
            free[v] = False
            prefix.append(v)
            if not last_entry_completes_a_pattern():
                rec()
            prefix.pop()
            free[v] = True

    rec()
    return out


def ell_factor(p: Permutation, i: int) -> int:
    """Length of the longest window ending at position i with all values <= p(i)."""
    if not 1 <= i <= p.n:
        raise ValueError(f"position {i} out of range 1..{p.n}")
    v = p.entries[i - 1]
    length = 0
    for j in range(i - 1, -1, -1):
        if p.entries[j] <= v:
            length += 1
        else:
            break
    return length


def ell_weight(p: Permutation) -> int:
    """Product of ell_factor over all positions; the number of parking
    functions whose outcome permutation is p.

    >>> ell_weight(perm("7561234"))
    48
    >>> ell_weight(identity(5)), ell_weight(reverse_identity(5))
    (120, 1)
    """
    total = 1
    for i in range(1, p.n + 1):
        total *= ell_factor(p, i)
    return total


S3_PATTERNS: tuple[Permutation, ...] = tuple(
    Permutation(entries) for entries in itertools.permutations((1, 2, 3))
)


def s3_containment_mask(p: Permutation) -> int:
    """Bitmask over the six size-3 patterns (canonical order) contained in p."""
    mask = 0
    for bit, q in enumerate(S3_PATTERNS):
        if contains(p, q):
            mask |= 1 << bit
    return mask


def s3_pattern_bits(patterns: PatternSet) -> int:
    """Bitmask of a subset of S_3 in the same order as s3_containment_mask."""
    mask = 0
    for q in patterns:
        if q.n != 3:
            raise ValueError(f"pattern {q} is not a size-3 permutation")
        mask |= 1 << S3_PATTERNS.index(q)
    return mask


@lru_cache(maxsize=None)
def _s3_profile(n: int) -> tuple[tuple[int, int], ...]:
    """(containment mask, ell weight) for every permutation of size n."""
    return tuple((s3_containment_mask(p), ell_weight(p)) for p in all_permutations(n))


def weighted_avoiders_s3(n: int, patterns: PatternSet) -> int:
    """Sum of ell_weight over permutations of size n avoiding a subset of S_3.

    Backs the generic weighted count; profiled once per n so sweeping all 63
    subsets stays cheap.
    """
    bits = s3_pattern_bits(patterns)
    return sum(w for mask, w in _s3_profile(n) if not mask & bits)
