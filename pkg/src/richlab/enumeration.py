"""Enumerate and count rich words by prefix-pruned depth-first search.

Every factor of a rich word is rich, so the rich words over a fixed
alphabet form a prefix tree: a branch dies the moment an appended symbol
fails to create a new palindrome.  The walk therefore touches only rich
prefixes, and the incremental index makes each extension test O(1)
amortized, with pop() rolling the index back on backtrack.

Counting can be sharded: rich prefixes of a fixed length are enumerated
sequentially and their completion counts computed in worker processes;
summation makes the merged total independent of scheduling.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .paltree import Eertree
from .words import Word

DEFAULT_SHARD_PREFIX = 8


@dataclass(frozen=True)
class EnumStats:
    """Per-length rich-word counts with timing."""

    q: int
    counts: tuple[int, ...]
    elapsed: tuple[float, ...]
    canonical: bool = False

    @property
    def max_len(self) -> int:
        return len(self.counts) - 1


def _allowed(q: int, max_used: int, canonical: bool) -> range:
    if canonical:
        return range(min(q, max_used + 2))
    return range(q)


def enumerate_rich(
    q: int, n: int, canonical: bool = False
) -> Iterator[Word]:
    """All rich words of length n over {0..q-1}, in lexicographic order.

    canonical=True yields only least representatives up to letter renaming
    (each next symbol at most one past the largest used so far).
    """
    if q < 1:
        raise ValueError("alphabet size must be >= 1")
    if n < 0:
        raise ValueError("length must be >= 0")
    tree = Eertree()
    prefix: list[int] = []

    def walk(max_used: int) -> Iterator[Word]:
        if len(prefix) == n:
            yield Word.from_symbols(prefix, q)
            return
        for c in _allowed(q, max_used, canonical):
            created = tree.append(c)
            if created:
                prefix.append(c)
                yield from walk(max(max_used, c))
                prefix.pop()
            tree.pop()

    yield from walk(-1)


def _count_completions(
    tree: Eertree, remaining: int, q: int, max_used: int, canonical: bool
) -> int:
    if remaining == 0:
        return 1
    total = 0
    for c in _allowed(q, max_used, canonical):
        if tree.append(c):
            total += _count_completions(
                tree, remaining - 1, q, max(max_used, c), canonical
            )
        tree.pop()
    return total


def _count_shard(args: tuple[int, tuple[int, ...], int, bool]) -> int:
    """Completion count below one rich prefix (worker entry point)."""
    q, prefix, n, canonical = args
    tree = Eertree()
    for c in prefix:
        if not tree.append(c):
            raise AssertionError("shard prefix is not rich")
    return _count_completions(
        tree, n - len(prefix), q, max(prefix, default=-1), canonical
    )


def count_rich(
    q: int,
    n: int,
    jobs: int = 1,
    shard_prefix: int = DEFAULT_SHARD_PREFIX,
    canonical: bool = False,
) -> int:
    """Number of rich words of length n over {0..q-1}."""
    if q < 1:
        raise ValueError("alphabet size must be >= 1")
    if n < 0:
        raise ValueError("length must be >= 0")
    if jobs <= 1 or n <= shard_prefix:
        tree = Eertree()
        return _count_completions(tree, n, q, -1, canonical)
    prefixes = [
        tuple(w) for w in enumerate_rich(q, shard_prefix, canonical=canonical)
    ]
    tasks = [(q, p, n, canonical) for p in prefixes]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_shard, tasks, chunksize=16))


def _counts_shard(
    args: tuple[int, tuple[int, ...], int, bool],
) -> tuple[int, ...]:
    """Per-depth subtree counts below one rich prefix (worker entry point)."""
    q, prefix, max_len, canonical = args
    tree = Eertree()
    for c in prefix:
        if not tree.append(c):
            raise AssertionError("shard prefix is not rich")
    counts = [0] * (max_len + 1)

    def walk(depth: int, max_used: int) -> None:
        counts[depth] += 1
        if depth == max_len:
            return
        for c in _allowed(q, max_used, canonical):
            if tree.append(c):
                walk(depth + 1, max(max_used, c))
            tree.pop()

    walk(len(prefix), max(prefix, default=-1))
    return tuple(counts)


def rich_counts(
    q: int,
    max_len: int,
    jobs: int = 1,
    shard_prefix: int = DEFAULT_SHARD_PREFIX,
    canonical: bool = False,
) -> EnumStats:
    """Rich-word counts for every length 0..max_len in one tree walk."""
    if q < 1:
        raise ValueError("alphabet size must be >= 1")
    if max_len < 0:
        raise ValueError("length must be >= 0")
    start = time.perf_counter()
    marks = [0.0] * (max_len + 1)
    if jobs <= 1 or max_len <= shard_prefix:
        counts = [0] * (max_len + 1)
        tree = Eertree()

        def walk(depth: int, max_used: int) -> None:
            counts[depth] += 1
            marks[depth] = time.perf_counter() - start
            if depth == max_len:
                return
            for c in _allowed(q, max_used, canonical):
                if tree.append(c):
                    walk(depth + 1, max(max_used, c))
                tree.pop()

        walk(0, -1)
        return EnumStats(q, tuple(counts), tuple(marks), canonical)
    p = min(shard_prefix, max_len)
    counts = [0] * (max_len + 1)
    prefixes: list[tuple[int, ...]] = []
    tree = Eertree()

    def head_walk(depth: int, max_used: int, prefix: list[int]) -> None:
        counts[depth] += 1
        if depth == p:
            prefixes.append(tuple(prefix))
            return
        for c in _allowed(q, max_used, canonical):
            if tree.append(c):
                prefix.append(c)
                head_walk(depth + 1, max(max_used, c), prefix)
                prefix.pop()
            tree.pop()

    head_walk(0, -1, [])
    tasks = [(q, pre, max_len, canonical) for pre in prefixes]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for shard in pool.map(_counts_shard, tasks, chunksize=16):
            for d in range(p + 1, max_len + 1):
                counts[d] += shard[d]
    for d in range(max_len + 1):
        marks[d] = time.perf_counter() - start
    return EnumStats(q, tuple(counts), tuple(marks), canonical)


def growth_root(q: int, n: int, count: Optional[int] = None) -> float:
    """n-th root of the number of rich words of length n."""
    if n < 1:
        raise ValueError("root needs n >= 1")
    if count is None:
        count = count_rich(q, n)
    return count ** (1.0 / n)
