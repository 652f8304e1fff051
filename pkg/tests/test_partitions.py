import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import e_weight_oracle, partitions
from rouquier.partitions import (
    AbacusView,
    as_partition,
    beta_core,
    beta_from_core_and_quotient,
    beta_of_partition,
    conjugate,
    e_core_and_weight,
    e_quotient,
    format_partition,
    hooks,
    is_e_core,
    parse_partition,
    partition_from_core_and_quotient,
    partition_of_beta,
    partitions_of,
    remove_hook,
    runner_counts,
    shift,
    unshift,
)


@st.composite
def partition_st(draw, max_size=12):
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        k = draw(st.integers(1, n))
        parts.append(k)
        n -= k
    return tuple(sorted(parts, reverse=True))


# --- frozen examples -------------------------------------------------------


def test_beta_of_partition_examples():
    assert beta_of_partition((5, 5, 3, 2), 4) == (2, 4, 7, 8)
    assert beta_of_partition((), 3) == (0, 1, 2)
    assert beta_of_partition((1,), 3) == (0, 1, 3)


def test_partition_of_beta_examples():
    assert partition_of_beta((0, 1, 3)) == (1,)
    assert partition_of_beta((0, 1, 2)) == ()
    assert partition_of_beta((2, 4, 7, 8)) == (5, 5, 3, 2)


def test_shift_examples():
    assert shift((1,), 2) == (0, 1, 3)
    assert shift((0, 2), 0) == (0, 2)
    assert shift((), 3) == (0, 1, 2)
    assert unshift((0, 1, 3), 2) == (1,)


def test_hooks_examples():
    # beta = {2,4,7,8}: 8-6=2 is occupied, so only x=7 gives a 6-hook
    assert hooks((5, 5, 3, 2), 6) == [(7, 1)]
    assert hooks((), 2) == []
    assert hooks((2,), 1) == [(2, 1)]


def test_remove_hook_examples():
    assert remove_hook((5, 5, 3, 2), (7, 1)) == (5, 2, 1, 1)
    assert remove_hook((1,), (1, 0)) == ()
    assert {remove_hook((2, 2), h) for h in hooks((2, 2), 2)} == {(2,), (1, 1)}


def test_remove_hook_rejects_non_hooks():
    with pytest.raises(ValueError):
        remove_hook((5, 5, 3, 2), (8, 2))


def test_core_examples():
    assert e_core_and_weight((5, 5, 3, 2), 6) == ((5, 2, 1, 1), 1)
    for e in range(1, 6):
        assert e_core_and_weight((), e) == ((), 0)
    assert e_core_and_weight((3, 1), 2) == ((), 2)


def test_quotient_examples():
    assert e_quotient((3, 1), 2, (1, 4)) == [(2,), ()]
    assert e_quotient((), 3, (0, 1, 2, 3)) == [(), (), ()]
    assert sum(map(sum, e_quotient((5, 5, 3, 2), 6))) == 1


def test_quotient_needs_matching_beta():
    with pytest.raises(ValueError):
        e_quotient((3, 1), 2, (0, 4))


def test_reconstruction_examples():
    assert partition_from_core_and_quotient((), [(2,), ()], runner_counts((1, 4), 2)) == (3, 1)
    counts = runner_counts(beta_of_partition((5, 2, 1, 1), 4), 6)
    assert partition_from_core_and_quotient((5, 2, 1, 1), [()] * 6, counts) == (5, 2, 1, 1)
    beta = beta_of_partition((5, 5, 3, 2))
    quot = e_quotient((5, 5, 3, 2), 6, beta)
    assert partition_from_core_and_quotient((5, 2, 1, 1), quot, runner_counts(beta, 6)) == (5, 5, 3, 2)


def test_reconstruction_rejects_bad_counts():
    with pytest.raises(ValueError):
        beta_from_core_and_quotient((), [(), ()], (2, 0))


def test_literals():
    assert parse_partition("5,5,3,2") == (5, 5, 3, 2)
    assert parse_partition("-") == ()
    assert parse_partition("") == ()
    assert format_partition(()) == "-"
    with pytest.raises(ValueError):
        as_partition((1, 2))
    with pytest.raises(ValueError):
        beta_of_partition((3, 1), 1)


def test_abacus_view():
    view = AbacusView.of_beta((1, 4), 2)
    assert view.runner(0) == [2]
    assert view.runner(1) == [0]
    assert view.bead_counts() == (1, 1)
    assert view.render() == ".o\n..\no."


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(partitions_of(4)) == list(partitions(4))


# --- laws ------------------------------------------------------------------


@given(partition_st(), st.integers(0, 4))
def test_beta_round_trip(lam, extra):
    assert partition_of_beta(beta_of_partition(lam, len(lam) + extra)) == lam


@given(partition_st(), st.integers(0, 5))
def test_shift_invariance(lam, d):
    beta = beta_of_partition(lam)
    assert partition_of_beta(shift(beta, d)) == lam
    assert unshift(shift(beta, d), d) == beta


@given(partition_st())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(partition_st(), st.integers(1, 6))
def test_core_law(lam, e):
    core, weight = e_core_and_weight(lam, e)
    assert sum(lam) == sum(core) + e * weight
    assert is_e_core(core, e)
    assert weight == e_weight_oracle(lam, e)


@settings(max_examples=60)
@given(partition_st(), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_removal_order_independence(lam, e, seed):
    rng = random.Random(seed)
    expected = e_core_and_weight(lam, e)
    for _ in range(5):
        mu, steps = lam, 0
        while hooks(mu, e):
            mu = remove_hook(mu, rng.choice(hooks(mu, e)))
            steps += 1
        assert (mu, steps) == expected


@given(partition_st(), st.integers(1, 6), st.integers(0, 3))
def test_quotient_law(lam, e, extra):
    beta = beta_of_partition(lam, len(lam) + extra)
    quot = e_quotient(lam, e, beta)
    core, weight = e_core_and_weight(lam, e)
    assert sum(map(sum, quot)) == weight
    assert beta_from_core_and_quotient(core, quot, runner_counts(beta, e)) == beta
    assert partition_of_beta(beta_core(beta, e)[0]) == core
