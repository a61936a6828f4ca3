"""Noise-tolerant building blocks: max-find, binary search, sort.

Each operation takes a FailTarget (base, exponent) meaning "fail with
probability at most base^(-exponent)" and internally calibrates its majority
repetitions (or walk budget) so a union bound over its noisy sub-operations
meets the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .costmodel import charge_prefix, parallel_for
from .noise import majority_vote
from .walk import noisy_binary_search_walk


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class FailTarget:
    """Target failure probability base^(-exponent)."""

    base: int
    exponent: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if self.exponent <= 0:
            raise ValueError("exponent must be positive")

    @property
    def epsilon(self) -> Fraction:
        return Fraction(1, self.base**self.exponent)


def _vote_flat(ctx, truth: bool, k: int) -> bool:
    """Majority-vote outcome and counters without the per-call span charge;
    callers metering a parallel batch add the span shape themselves."""
    m = ctx.meter
    m.raw_flips += k
    m.logical_ops += 1
    m.work += 2 * k - 1
    thr = ctx.model.majority_threshold(k)
    if thr == 0:
        return truth
    return (not truth) if ctx.draw_u64() < thr else truth


def noisy_max_find(ctx, items, less, target: FailTarget):
    """Index of the maximum under a noisy comparator, via a balanced
    tournament.  Each match is majority-voted at calibrate(base, e+1) so the
    union bound over the n-1 matches meets the target.

    `less` is the exact comparator; exact ties are forbidden by contract.
    """
    n = len(items)
    if n == 0:
        raise EmptyInput("max-find over empty input")
    if n == 1:
        return 0
    k = ctx.model.repetitions(target.base, target.exponent + 1)
    per_match_span = 1 + (k - 1).bit_length()
    alive = list(range(n))
    m = ctx.meter
    while len(alive) > 1:
        nxt = []
        for t in range(0, len(alive) - 1, 2):
            i, j = alive[t], alive[t + 1]
            truth = less(items[i], items[j])  # True -> j wins the match
            nxt.append(j if _vote_flat(ctx, truth, k) else i)
        if len(alive) % 2 == 1:
            nxt.append(alive[-1])
        m.span += per_match_span  # matches within a round run in parallel
        alive = nxt
    return alive[0]


def noisy_binary_search(ctx, sorted_seq, query, target: FailTarget, *, less=None, constant=16):
    """Insertion position of query in an exactly-sorted sequence.

    Runs the path-guided pushdown walk over the implicit BST with ancestor
    bounds; correct with probability >= 1 - base^(-exponent).
    """
    pos, _ = noisy_binary_search_walk(
        ctx, sorted_seq, query, target.epsilon, less=less, constant=constant
    )
    return pos


def noisy_sort(ctx, items, less, target: FailTarget):
    """Sorting permutation under noisy comparisons.

    Parallel merge sort with every comparison majority-voted at
    calibrate(base, e+2); with at most n*log2(n) comparisons the union bound
    lands below the target.  The output is always a permutation of
    range(len(items)), exactly sorted with the promised probability.  This is
    a deliberate O(n log^2 n) raw-flip substitute for the optimal-work
    parallel noisy sorters in the literature; span per merge is charged as
    the parallel rank-merge critical path.
    """
    n = len(items)
    if n <= 1:
        return list(range(n))
    k = ctx.model.repetitions(target.base, target.exponent + 2)
    per_cmp_span = 1 + (k - 1).bit_length()

    def msort(child, idx):
        if len(idx) <= 1:
            return idx
        mid = len(idx) // 2
        left, right = parallel_for(
            child,
            [
                lambda c, part=idx[:mid]: msort(c, part),
                lambda c, part=idx[mid:]: msort(c, part),
            ],
        )
        merged = []
        i = j = 0
        while i < len(left) and j < len(right):
            # True when items[left[i]] <= items[right[j]] (keys distinct).
            truth = not less(items[right[j]], items[left[i]])
            if _vote_flat(child, truth, k):
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        child.meter.span += max(1, (len(merged) - 1).bit_length()) * per_cmp_span
        charge_prefix(child, len(merged))
        return merged

    return msort(ctx, list(range(n)))
