from math import factorial

from hypothesis import given
from hypothesis import strategies as st

from oracles import lr_oracle, partitions, syt_oracle
from rouquier.lr import lr_coeff, syt_count


def test_lr_examples():
    assert lr_coeff((3, 2), (), (3, 2)) == 1
    assert lr_coeff((2, 1), (1, 1), (3, 2)) == 1
    assert lr_coeff((1,), (1, 1), (2, 2)) == 0
    assert lr_coeff((2, 1), (2, 1), (3, 2, 1)) == 2


def test_syt_examples():
    assert syt_count((5,)) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((2, 2)) == 2
    assert syt_count(()) == 1


def test_lr_matches_schur_oracle_small():
    for n in range(7):
        for k in range(n + 1):
            for mu in partitions(k):
                for nu in partitions(n - k):
                    for lam in partitions(n):
                        assert lr_coeff(mu, nu, lam) == lr_oracle(mu, nu, lam)


small = st.integers(0, 6).flatmap(lambda n: st.sampled_from(list(partitions(n))))


@given(small, small, st.data())
def test_lr_symmetry(mu, nu, data):
    lam = data.draw(st.sampled_from(list(partitions(sum(mu) + sum(nu)))))
    assert lr_coeff(mu, nu, lam) == lr_coeff(nu, mu, lam)


def test_syt_square_sum():
    for h in range(11):
        assert sum(syt_count(s) ** 2 for s in partitions(h)) == factorial(h)


def test_syt_recursion_and_oracle():
    for n in range(11):
        for lam in partitions(n):
            assert syt_count(lam) == syt_oracle(lam)
            if n:
                corners = []
                for i, row in enumerate(lam):
                    below = lam[i + 1] if i + 1 < len(lam) else 0
                    if row > below:
                        smaller = list(lam)
                        smaller[i] -= 1
                        corners.append(tuple(x for x in smaller if x))
                assert syt_count(lam) == sum(syt_count(c) for c in corners)
