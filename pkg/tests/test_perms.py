import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from propkit.errors import ArgumentError, CapabilityError
from propkit.perms import (
    block_permutation,
    compose,
    connected_count,
    identity,
    increasing_partitions,
    inverse,
    is_connected,
    partition_pairs,
)


def naive_block_permutation(tau, i_bar):
    # direct transcription of the defining formula, kept independent of the
    # implementation's prefix bookkeeping
    n = len(tau)
    inv = {tau[t - 1]: t for t in range(1, n + 1)}
    word = []
    for j in range(1, n + 1):
        t = inv[j]
        start = sum(i_bar[: t - 1])
        word.extend(range(start + 1, start + i_bar[t - 1] + 1))
    return tuple(word)


def test_block_permutation_identity():
    assert block_permutation((1, 2, 3), (2, 1, 4)) == identity(7)


def test_block_permutation_examples():
    assert block_permutation((2, 1), (1, 2)) == (2, 3, 1)
    assert block_permutation((2, 1), (2, 1)) == (3, 1, 2)


@given(st.integers(2, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_block_permutation_matches_formula(b, data):
    tau = tuple(data.draw(st.permutations(list(range(1, b + 1)))))
    i_bar = tuple(data.draw(st.integers(1, 3)) for _ in range(b))
    assert block_permutation(tau, i_bar) == naive_block_permutation(tau, i_bar)


def test_block_permutation_mismatch():
    with pytest.raises(ArgumentError):
        block_permutation((2, 1), (1, 1, 1))


def test_is_connected_paper_examples():
    assert is_connected((1, 3, 2, 4), (2, 2), (2, 2)) is True
    assert is_connected((1, 3, 2, 4), (1, 1, 2), (2, 1, 1)) is False


def test_single_block_always_connected():
    for n in range(1, 5):
        for s in itertools.permutations(range(1, n + 1)):
            assert is_connected(s, (n,), (1,) * n)
            assert is_connected(s, (1,) * n, (n,))


def test_is_connected_size_mismatch():
    with pytest.raises(ArgumentError):
        is_connected((1, 2, 3), (2, 2), (3,))


@given(st.integers(2, 5), st.data())
@settings(max_examples=40, deadline=None)
def test_block_closure(n, data):
    # composing with block permutations on either side preserves connectivity,
    # with the block tuples reordered accordingly; the left factor's subscript
    # tuple is the tau-permuted one so position groupings line up
    sigma = tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    k_bar = tuple(data.draw(st.sampled_from([c for c in _compositions(n)])))
    j_bar = tuple(data.draw(st.sampled_from([c for c in _compositions(n)])))
    b, a = len(k_bar), len(j_bar)
    tau = tuple(data.draw(st.permutations(list(range(1, b + 1)))))
    nu = tuple(data.draw(st.permutations(list(range(1, a + 1)))))
    k_new = tuple(k_bar[tau[s - 1] - 1] for s in range(1, b + 1))
    nu_inv = inverse(nu)
    j_new = tuple(j_bar[nu_inv[s - 1] - 1] for s in range(1, a + 1))
    moved = compose(
        compose(block_permutation(tau, k_new), sigma), block_permutation(nu, j_bar)
    )
    assert is_connected(sigma, k_bar, j_bar) == is_connected(moved, k_new, j_new)


def _compositions(n):
    out = []
    def rec(left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for p in range(1, left + 1):
            rec(left - p, acc + [p])
    rec(n, [])
    return out


def test_connected_count_props():
    assert connected_count((3,), (1, 1, 1)) == 6
    assert connected_count((1, 1), (1, 1)) == 0
    assert connected_count((1, 1), (2,)) == 2
    # single block on either side gives all of S_N
    for j_bar in [(1, 2), (3,), (1, 1, 1)]:
        assert connected_count((3,), j_bar) == 6
    # multi-block against all-singletons is empty
    assert connected_count((2, 2), (1, 1, 1, 1)) == 0


def test_connected_count_matches_enumeration():
    for n in range(1, 6):
        for k_bar in _compositions(n):
            for j_bar in _compositions(n):
                brute = sum(
                    1
                    for s in itertools.permutations(range(1, n + 1))
                    if is_connected(s, k_bar, j_bar)
                )
                assert connected_count(k_bar, j_bar) == brute


def test_connected_count_block_reorder_invariance():
    assert connected_count((2, 1, 3), (3, 3)) == connected_count((3, 1, 2), (3, 3))
    assert connected_count((2, 2), (1, 2, 1)) == connected_count((2, 2), (2, 1, 1))


def test_connected_count_capability():
    with pytest.raises(CapabilityError):
        connected_count((5, 4), (4, 5))
    # shortcut cases stay available past the bound
    assert connected_count((9,), (4, 5)) == math.factorial(9)


def test_partition_pairs_small():
    pairs = partition_pairs(2, 2, (2,), (2,))
    assert len(pairs) == 1
    assert pairs[0].out_parts == ((1, 2),)
    assert pairs[0].in_parts == ((1, 2),)

    pairs = partition_pairs(2, 1, (1, 1), (1,))
    assert len(pairs) == 1
    assert pairs[0].out_parts == ((1,), (2,))

    outs = list(increasing_partitions(3, (1, 2)))
    assert len(outs) == 3
    for parts in outs:
        mins = [min(p) for p in parts]
        assert mins == sorted(mins)
        assert sorted(sum(parts, ())) == [1, 2, 3]


def test_partition_pairs_mismatch():
    with pytest.raises(ArgumentError):
        partition_pairs(3, 2, (1, 1), (2,))
