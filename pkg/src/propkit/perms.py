"""Permutation-level primitives: block permutations, connectivity, counting.

Permutations are one-line words: the tuple ``(s(1), ..., s(N))`` over the
ground set ``{1..N}``.  Composition is ``(s * t)(i) = s(t(i))``.

A block tuple is a composition ``(k_1, ..., k_b)`` of positive integers; it
groups the positions ``1..N`` (``N`` the sum) into consecutive blocks.  A
permutation ``s`` is connected with respect to a pair of block tuples
``k_bar`` (grouping the value side) and ``j_bar`` (grouping the position
side) when the bipartite graph with one node per block and an edge
``block_j(i) -- block_k(s(i))`` for every position ``i`` has a single
component.

>>> is_connected((1, 3, 2, 4), (2, 2), (2, 2))
True
>>> is_connected((1, 3, 2, 4), (1, 1, 2), (2, 1, 1))
False
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, CapabilityError

# Exhaustive enumeration of S_N is the backing store for connected counts;
# beyond this the table would blow past desk scale.
MAX_COUNT_DEGREE = 8


def check_permutation(word: Sequence[int]) -> tuple[int, ...]:
    """Validate a one-line word and return it as a tuple."""
    word = tuple(word)
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise ArgumentError("not a permutation of 1..%d: %r" % (n, word))
    return word


def check_blocks(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate a block tuple (nonempty, all parts >= 1)."""
    parts = tuple(parts)
    if not parts or any(p < 1 for p in parts):
        raise ArgumentError("block tuple needs positive parts: %r" % (parts,))
    return parts


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def compose(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """(s * t)(i) = s(t(i))."""
    if len(s) != len(t):
        raise ArgumentError("size mismatch in composition")
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(s)
    for i, v in enumerate(s):
        inv[v - 1] = i + 1
    return tuple(inv)


def block_permutation(tau: Sequence[int], i_bar: Sequence[int]) -> tuple[int, ...]:
    """Permutation moving blocks of sizes ``i_bar`` as wholes according to ``tau``.

    The one-line word is the concatenation, for j = 1..n, of the runs
    ``prefix(t) + 1, ..., prefix(t) + i_t`` where ``t = tau^{-1}(j)`` and
    ``prefix(t) = i_1 + ... + i_{t-1}``.

    >>> block_permutation((2, 1), (1, 2))
    (2, 3, 1)
    >>> block_permutation((2, 1), (2, 1))
    (3, 1, 2)
    """
    tau = check_permutation(tau)
    i_bar = check_blocks(i_bar)
    if len(tau) != len(i_bar):
        raise ArgumentError(
            "block permutation needs len(tau) == len(i_bar), got %d != %d"
            % (len(tau), len(i_bar))
        )
    prefix = [0]
    for p in i_bar:
        prefix.append(prefix[-1] + p)
    inv = inverse(tau)
    word: list[int] = []
    for j in range(1, len(tau) + 1):
        t = inv[j - 1]
        word.extend(range(prefix[t - 1] + 1, prefix[t] + 1))
    return tuple(word)


def _block_of(prefix: Sequence[int], pos: int) -> int:
    # prefix is cumulative; block index b satisfies prefix[b] < pos <= prefix[b+1]
    lo, hi = 0, len(prefix) - 1
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if prefix[mid] < pos:
            lo = mid
        else:
            hi = mid
    return lo


def _prefixes(parts: Sequence[int]) -> list[int]:
    acc = [0]
    for p in parts:
        acc.append(acc[-1] + p)
    return acc


def is_connected(
    sigma: Sequence[int], k_bar: Sequence[int], j_bar: Sequence[int]
) -> bool:
    """Whether ``sigma`` is connected for the block pair ``(k_bar, j_bar)``.

    ``j_bar`` groups the positions (inputs), ``k_bar`` the values (outputs).
    Union-find over the ``len(j_bar) + len(k_bar)`` block nodes.
    """
    sigma = check_permutation(sigma)
    k_bar = check_blocks(k_bar)
    j_bar = check_blocks(j_bar)
    n = len(sigma)
    if sum(k_bar) != n or sum(j_bar) != n:
        raise ArgumentError("block tuples must both sum to %d" % n)

    a, b = len(j_bar), len(k_bar)
    parent = list(range(a + b))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    jpre = _prefixes(j_bar)
    kpre = _prefixes(k_bar)
    for i in range(1, n + 1):
        u = find(_block_of(jpre, i))
        v = find(a + _block_of(kpre, sigma[i - 1]))
        if u != v:
            parent[u] = v
    return len({find(x) for x in range(a + b)}) == 1


_count_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def connected_count(k_bar: Sequence[int], j_bar: Sequence[int]) -> int:
    """Number of connected permutations for the block pair ``(k_bar, j_bar)``.

    Exhaustive over S_N for N <= 8, memoized up to simultaneous reordering of
    the parts (connectivity only sees the multiset of block sizes on each
    side).  Single-block and all-singleton cases short-circuit:
    ``k_bar = (N)`` or ``j_bar = (N)`` gives N!, while a pair of multi-part
    tuples with one side all ones gives 0.
    """
    k_bar = check_blocks(k_bar)
    j_bar = check_blocks(j_bar)
    n = sum(k_bar)
    if sum(j_bar) != n:
        raise ArgumentError("block tuples must have equal sums")
    if len(k_bar) == 1 or len(j_bar) == 1:
        return _factorial(n)
    # both sides have >= 2 parts from here on
    if all(k == 1 for k in k_bar) or all(j == 1 for j in j_bar):
        return 0
    if n > MAX_COUNT_DEGREE:
        raise CapabilityError(
            "connected_count limited to N <= %d, got N = %d" % (MAX_COUNT_DEGREE, n)
        )
    key = (tuple(sorted(k_bar)), tuple(sorted(j_bar)))
    hit = _count_cache.get(key)
    if hit is not None:
        return hit
    count = sum(
        1 for s in itertools.permutations(range(1, n + 1)) if is_connected(s, k_bar, j_bar)
    )
    _count_cache[key] = count
    return count


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@dataclass(frozen=True)
class PartitionPair:
    """A pair of increasing ordered set partitions of ({1..m}, {1..n}).

    Parts are tuples of sorted tuples; on each side the parts are listed by
    increasing minimum.
    """

    out_parts: tuple[tuple[int, ...], ...]
    in_parts: tuple[tuple[int, ...], ...]

    def out_sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.out_parts)

    def in_sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.in_parts)


def increasing_partitions(
    n: int, sizes: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Increasing ordered set partitions of {1..n} with the given size multiset.

    The first part always contains 1; each subsequent part contains the
    smallest element not yet used.  Yielded in lexicographic order of the
    flattened part lists.
    """
    sizes = check_blocks(sizes)
    if sum(sizes) != n:
        raise ArgumentError("sizes must sum to %d" % n)

    def rec(remaining: tuple[int, ...], pool: tuple[int, ...]):
        if not remaining:
            yield ()
            return
        head = remaining[0]
        rest = remaining[1:]
        # the block containing `head` may take any size still in the pool
        for size in sorted(set(pool)):
            pool_minus = list(pool)
            pool_minus.remove(size)
            for others in itertools.combinations(rest, size - 1):
                part = (head,) + others
                left = tuple(x for x in rest if x not in others)
                for tail in rec(left, tuple(pool_minus)):
                    yield (part,) + tail

    yield from rec(tuple(range(1, n + 1)), tuple(sizes))


def partition_pairs(
    m: int, n: int, out_sizes: Sequence[int], in_sizes: Sequence[int]
) -> list[PartitionPair]:
    """All increasing ordered partition pairs with the given part sizes.

    Sizes are taken as multisets; parts on each side are reordered by their
    minima.  Deterministic lexicographic order.
    """
    out_sizes = check_blocks(out_sizes)
    in_sizes = check_blocks(in_sizes)
    if sum(out_sizes) != m or sum(in_sizes) != n:
        raise ArgumentError("part sizes must sum to m and n")
    outs = list(increasing_partitions(m, out_sizes))
    ins = list(increasing_partitions(n, in_sizes))
    return [PartitionPair(o, i) for o in outs for i in ins]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def all_compositions(total: int) -> Iterator[tuple[int, ...]]:
    for parts in range(1, total + 1):
        yield from compositions(total, parts)
