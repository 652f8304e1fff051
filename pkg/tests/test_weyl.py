from math import comb, factorial

import pytest

from oracles import b_degree_oracle, partitions
from rouquier.lr import syt_count
from rouquier.weyl import DCharLabel, b_char_degree, branch_A, branch_B, branch_D, d_char_degree


def bipartitions(n):
    for k in range(n + 1):
        for a in partitions(k):
            for b in partitions(n - k):
                yield (a, b)


def d_labels(n):
    seen = set()
    for a, b in bipartitions(n):
        lab = DCharLabel(a, b)
        if lab in seen:
            continue
        seen.add(lab)
        yield lab
        if lab.degenerate:
            yield DCharLabel(a, b, primed=True)


def test_branch_A_examples():
    assert branch_A((1,), (1,), (2,)) == 1
    assert branch_A((1,), (1,), (1, 1)) == 1
    assert branch_A((2, 1), (), (2, 1)) == 1


def test_branch_B_examples():
    assert branch_B(((1,), ()), (1,), ((1,), (1,))) == 1
    assert branch_B(((1,), ()), (1,), ((2,), ())) == 1
    assert branch_B(((1,), ()), (1,), ((1, 1, 1), ())) == 0


def test_branch_D_examples():
    assert branch_D(DCharLabel((1,), ()), (1,), DCharLabel((1,), (1,))) == 1
    assert branch_D(DCharLabel((1,), ()), (1,), DCharLabel((1,), (1,), True)) == 1
    assert branch_D(DCharLabel((1,), ()), (1,), DCharLabel((2,), ())) == 1
    for primed in (False, True):
        assert branch_D(DCharLabel((1,), (1,), primed), (1,), DCharLabel((2,), (1,))) == 1


def test_d_label_invariants():
    with pytest.raises(ValueError):
        DCharLabel((1,), (), primed=True)
    assert DCharLabel((2,), (1,)) == DCharLabel((1,), (2,))
    with pytest.raises(ValueError):
        branch_D(DCharLabel((1,), (1,)), (1, 1), DCharLabel((2,), (2,)))


def test_branch_B_reduces_to_A():
    for n in range(7):
        for k in range(n + 1):
            for a in partitions(n - k):
                for g in partitions(k):
                    for b in partitions(n):
                        assert branch_B((a, ()), g, (b, ())) == branch_A(a, g, b)


def test_b_degrees():
    for n in range(7):
        assert sum(b_char_degree(lab) ** 2 for lab in bipartitions(n)) == 2**n * factorial(n)
        for lab in bipartitions(n):
            assert b_char_degree(lab) == b_degree_oracle(*lab)


@pytest.mark.parametrize("n", range(1, 7))
def test_B_frobenius(n):
    # sum of mult * degree over targets equals [W_n : W_{n-k} x S_k] * deg(source) * deg(gamma)
    for k in range(1, min(n, 3) + 1):
        index = 2**k * comb(n, k)
        for src in bipartitions(n - k):
            for g in partitions(k):
                total = sum(branch_B(src, g, tgt) * b_degree_oracle(*tgt) for tgt in bipartitions(n))
                assert total == index * b_degree_oracle(*src) * syt_count(g)


@pytest.mark.parametrize("n", range(2, 7))
def test_D_frobenius(n):
    # W~_{n-k} is a proper subgroup of index 2 in W_{n-k} only when n-k >= 1
    for k in range(1, min(n - 1, 3) + 1):
        index = 2**k * comb(n, k)
        for src in d_labels(n - k):
            for g in partitions(k):
                targets = list(d_labels(n))
                if src.degenerate and any(t.degenerate for t in targets):
                    continue  # degenerate-to-degenerate multiplicities are not defined
                total = sum(branch_D(src, g, t) * d_char_degree(t) for t in targets)
                assert total == index * d_char_degree(src) * syt_count(g)
