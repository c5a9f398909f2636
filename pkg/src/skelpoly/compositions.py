"""Partitions, compositions, the graded dominance order, and the subset dictionary.

A *partition* is a weakly decreasing tuple of positive integers, a *strong
composition* an arbitrary tuple of positive integers, and a *weak composition*
a tuple of nonnegative integers.  Everything in this module is a pure function
of immutable tuples, so values can be shared and cached freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Iterator

Composition = tuple[int, ...]
Partition = tuple[int, ...]


def is_strong(alpha: Iterable[int]) -> bool:
    return all(part >= 1 for part in alpha)


def is_partition(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return is_strong(lam) and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def _require_partition(lam: Composition) -> None:
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")


def flatten(weak: Iterable[int]) -> Composition:
    """Drop zero parts, preserving order: (2,0,3) -> (2,3)."""
    return tuple(part for part in weak if part != 0)


@cache
def compositions(n: int) -> tuple[Composition, ...]:
    """All strong compositions of n, sorted by length then reverse-lex."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out = []
    for k in range(n - 1, -1, -1):
        members = combinations(range(1, n), k)
        out.extend(set_to_comp(IndexSet(n, mem)) for mem in members)
    return tuple(sorted(out, key=lambda a: (len(a), tuple(-x for x in a))))


def weak_compositions(n: int, length: int) -> Iterator[Composition]:
    """All weak compositions of n with exactly `length` parts."""
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, length - 1):
            yield (first, *rest)


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""

    def gen(remaining: int, biggest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, biggest), 0, -1):
            for rest in gen(remaining - part, part):
                yield (part, *rest)

    return tuple(gen(n, n))


def refinements(alpha: Composition) -> set[Composition]:
    """All strong compositions obtained by splitting parts of `alpha` in place.

    Each part a_i is replaced independently by one of its 2^(a_i - 1) ordered
    splits, so |refinements(alpha)| = 2^(|alpha| - len(alpha)).
    """
    if not is_strong(alpha):
        raise ValueError(f"composition must be strong: {alpha}")
    out = {()}
    for part in alpha:
        splits = [beta for beta in compositions(part)]
        out = {prefix + beta for prefix in out for beta in splits}
    return out


def dominance_leq(beta: Composition, alpha: Composition) -> bool:
    """True iff every prefix sum of `alpha` is >= the one of `beta`.

    Shorter sequences are padded with zeros; both must have the same size.
    """
    if sum(alpha) != sum(beta):
        raise ValueError(f"size mismatch: |{alpha}| != |{beta}|")
    total_a = total_b = 0
    for i in range(max(len(alpha), len(beta))):
        total_a += alpha[i] if i < len(alpha) else 0
        total_b += beta[i] if i < len(beta) else 0
        if total_a < total_b:
            return False
    return True


def depth(alpha: Composition) -> int:
    """The grading statistic sum_i (i-1)*alpha_i of the dominance order."""
    return sum(i * part for i, part in enumerate(alpha))


def raising_covers(alpha: Composition) -> list[Composition]:
    """All compositions reached from `alpha` by one raising move.

    A raising move shifts one unit from a part of size >= 2 to the part on
    its right (appending a new part 1 when applied to the last part).  Each
    result sits one depth level higher and directly below `alpha` in
    dominance order.
    """
    if not is_strong(alpha):
        raise ValueError(f"composition must be strong: {alpha}")
    out = []
    ell = len(alpha)
    for i, part in enumerate(alpha):
        if part < 2:
            continue
        if i < ell - 1:
            out.append(alpha[:i] + (part - 1, alpha[i + 1] + 1) + alpha[i + 2:])
        else:
            out.append(alpha[:i] + (part - 1, 1))
    return out


@cache
def dominance_covers(n: int) -> tuple[tuple[Composition, Composition], ...]:
    """Brute-force Hasse edges (lower, upper) of the dominance order on Comp(n)."""
    elements = compositions(n)
    strictly_below = {
        a: {b for b in elements if b != a and dominance_leq(b, a)} for a in elements
    }
    edges = []
    for upper in elements:
        below = strictly_below[upper]
        for lower in below:
            if not any(lower in strictly_below[mid] for mid in below if mid != lower):
                edges.append((lower, upper))
    return tuple(sorted(edges))


@dataclass(frozen=True, order=True)
class IndexSet:
    """A subset of {1, ..., n-1}, stored strictly sorted."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(self.members))
        if any(not 1 <= a <= self.n - 1 for a in members):
            raise ValueError(f"members must lie in [1, {self.n - 1}]: {self.members}")
        if len(set(members)) != len(members):
            raise ValueError(f"duplicate members: {self.members}")
        object.__setattr__(self, "members", members)


def comp_to_set(alpha: Composition) -> IndexSet:
    """Proper prefix sums of a strong composition, as a subset of [n-1]."""
    if not is_strong(alpha):
        raise ValueError(f"composition must be strong: {alpha}")
    total = 0
    sums = []
    for part in alpha[:-1]:
        total += part
        sums.append(total)
    return IndexSet(sum(alpha), tuple(sums))


def set_to_comp(subset: IndexSet) -> Composition:
    """Successive differences of a subset of [n-1]; inverse of comp_to_set."""
    if subset.n == 0:
        return ()
    bounds = (0, *subset.members, subset.n)
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def maj_of_set(subset: IndexSet) -> int:
    return sum(subset.members)


def subsets(n: int) -> tuple[IndexSet, ...]:
    """All 2^(n-1) subsets of [n-1], sorted."""
    ground = range(1, n)
    return tuple(
        sorted(IndexSet(n, mem) for k in range(n) for mem in combinations(ground, k))
    )


def superboolean_covers(subset: IndexSet) -> list[IndexSet]:
    """Covers of `subset` in the maj-graded order on subsets of [n-1].

    A cover either inserts 1 (when absent) or slides one member a to a+1
    (when a+1 is absent and still below n).  Either move raises maj by one.
    """
    n = subset.n
    have = set(subset.members)
    out = []
    if 1 not in have and n >= 2:
        out.append(IndexSet(n, (1, *subset.members)))
    for a in subset.members:
        if a + 1 not in have and a + 1 <= n - 1:
            out.append(IndexSet(n, tuple(sorted((have - {a}) | {a + 1}))))
    return sorted(out)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram of `lam`."""
    _require_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def max_descent_length(lam: Partition) -> int:
    """The largest number of parts a descent composition of shape `lam` can have."""
    _require_partition(lam)
    if not lam:
        raise ValueError("empty partition")
    return sum(lam) - lam[0] + 1


def is_hook(lam: Partition) -> bool:
    """True when the second row has at most one box."""
    _require_partition(lam)
    return bool(lam) and (len(lam) == 1 or lam[1] <= 1)


def is_regular(lam: Partition) -> bool:
    """True unless `lam` is a c x r rectangle with c, r >= 2."""
    _require_partition(lam)
    return not (len(lam) >= 2 and lam[0] >= 2 and len(set(lam)) == 1)


def lambda_bar(lam: Partition) -> Composition:
    """The deepest descent composition supported by shape `lam`.

    Writing the conjugate as (c_1, ..., c_l, 1^L) with every c_j >= 2, the
    result is (1^(c_1 - 1), 2, 1^(c_2 - 2), 2, ..., 2, 1^(c_l - 2), L + 1);
    a one-row shape is its own result.
    """
    _require_partition(lam)
    if not lam:
        raise ValueError("empty partition")
    conj = conjugate(lam)
    tall = [c for c in conj if c >= 2]
    trailing_ones = len(conj) - len(tall)
    if not tall:
        return lam
    parts = [1] * (tall[0] - 1)
    for c in tall[1:]:
        parts.append(2)
        parts.extend([1] * (c - 2))
    parts.append(trailing_ones + 1)
    return tuple(parts)


@dataclass(frozen=True)
class ShapeStats:
    m: int
    conjugate: Partition
    is_hook: bool
    is_regular: bool
    lambda_bar: Composition


def shape_stats(lam: Partition) -> ShapeStats:
    """Conjugate, maximal descent length, hook/rectangle flags, and lambda_bar."""
    _require_partition(lam)
    if not lam:
        raise ValueError("empty partition")
    return ShapeStats(
        m=max_descent_length(lam),
        conjugate=conjugate(lam),
        is_hook=is_hook(lam),
        is_regular=is_regular(lam),
        lambda_bar=lambda_bar(lam),
    )
