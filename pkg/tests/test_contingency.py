from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from kroncoeff import contingency
from kroncoeff.contingency import count_2d, count_tables, count_tables_naive
from kroncoeff.errors import InputError


def count_2d_bruteforce(r, s):
    """Matrices with row sums r and column sums s, listed row by row."""
    def rows(i, cols_left):
        if i == len(r):
            return 1 if not any(cols_left) else 0
        total = 0
        for row in product(*(range(min(c, r[i]) + 1) for c in cols_left)):
            if sum(row) == r[i]:
                total += rows(i + 1, tuple(c - x for c, x in zip(cols_left, row)))
        return total
    return rows(0, tuple(s))


@pytest.mark.parametrize("a, b, c, count", [
    ((5,), (5,), (5,), 1),
    ((0,), (0,), (0,), 1),
    ((1, 1), (1, 1), (1, 1), 4),
    ((1, 0), (0, 1), (1, 0), 1),
    ((2, 1), (2, 1), (3, 0), 2),
    ((1, 1), (2, 0), (1, 1), 2),
    ((0, 0), (0, 0), (0, 0), 1),
    ((1, 1, 1, 1, 1, 1, 1), (1,) * 7, (1,) * 7, 25401600),   # 7!^2
])
def test_count_examples(a, b, c, count):
    assert count_tables(a, b, c) == count


@pytest.mark.parametrize("a, b, c", [
    ((1, 1), (1, 1), (1, 1)), ((0, 0), (0, 0), (0, 0)), ((1, 1), (2, 0), (1, 1)),
])
def test_naive_examples_agree(a, b, c):
    assert count_tables_naive(a, b, c) == count_tables(a, b, c)


def test_degenerate_marginals_give_zero():
    assert count_tables((1, -1), (0, 0), (0, 0)) == 0
    assert count_tables((2, 0), (1, 0), (1, 0)) == 0


def test_length_mismatch_is_an_error():
    with pytest.raises(InputError):
        count_tables((1, 1), (2,), (1, 1))


def test_naive_refuses_out_of_contract():
    with pytest.raises(InputError):
        count_tables_naive((7, 6), (13, 0), (13, 0))
    with pytest.raises(InputError):
        count_tables_naive((1, -1), (0, 0), (0, 0))
    with pytest.raises(InputError):
        count_tables_naive((1, 0), (2, 0), (1, 0))


def test_count_2d_against_bruteforce():
    for ell in (1, 2, 3):
        for r in product(range(4), repeat=ell):
            for s in product(range(4), repeat=ell):
                if sum(r) == sum(s):
                    assert count_2d(r, s) == count_2d_bruteforce(r, s)


def test_single_depth_slice_is_two_dimensional():
    for ell in (1, 2, 3):
        for a in product(range(4), repeat=ell):
            for b in product(range(4), repeat=ell):
                if sum(a) == sum(b):
                    c = (sum(a),) + (0,) * (ell - 1)
                    assert count_tables(a, b, c) == count_2d_bruteforce(a, b)


def test_naive_grid_small_entries():
    for ell in (1, 2, 3):
        vecs = list(product(range(3), repeat=ell))
        for a, b, c in product(vecs, repeat=3):
            if sum(a) == sum(b) == sum(c):
                assert count_tables(a, b, c) == count_tables_naive(a, b, c)


def test_known_large_value():
    assert count_tables((4, 4, 4), (4, 4, 4), (4, 4, 4)) == 302274


def test_cache_capacity_does_not_change_values():
    ref = count_tables((3, 2, 2, 1), (4, 2, 1, 1), (2, 2, 2, 2))
    try:
        contingency.set_cache_capacity(4)
        assert count_tables((3, 2, 2, 1), (4, 2, 1, 1), (2, 2, 2, 2)) == ref
    finally:
        contingency.set_cache_capacity(contingency.DEFAULT_CACHE_CAPACITY)


margins = st.integers(1, 4).flatmap(lambda ell: st.tuples(
    *[st.lists(st.integers(0, 3), min_size=ell, max_size=ell) for _ in range(3)]))


@settings(max_examples=200, deadline=None)
@given(margins, st.randoms(use_true_random=False))
def test_symmetries(m, rng):
    a, b, c = m
    total = max(sum(a), sum(b), sum(c))
    # pad each vector up to a common total so the count is usually nonzero
    a, b, c = [list(v) for v in (a, b, c)]
    for v in (a, b, c):
        v[0] += total - sum(v)
    value = count_tables(a, b, c)
    assert value > 0
    for p in permutations((a, b, c)):
        assert count_tables(*p) == value
    idx = list(range(len(a)))
    rng.shuffle(idx)
    assert count_tables([a[i] for i in idx], [b[i] for i in idx], [c[i] for i in idx]) == value
