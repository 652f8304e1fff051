"""Induction multiplicities for Weyl groups of types A, B and D.

Characters of W(B_n) are ordered bipartitions.  Characters of W(D_n) are
unordered pairs, where a pair with equal halves splits into two characters
told apart by a ``primed`` flag.  Every type D number is computed from the
type B rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .lr import lr_coeff, syt_count
from .partitions import Partition, as_partition, partitions_of

BCharLabel = tuple[Partition, Partition]


@dataclass(frozen=True, order=True)
class DCharLabel:
    alpha0: Partition
    alpha1: Partition
    primed: bool = False

    def __post_init__(self):
        a0, a1 = as_partition(self.alpha0), as_partition(self.alpha1)
        if a1 < a0:
            a0, a1 = a1, a0
        object.__setattr__(self, "alpha0", a0)
        object.__setattr__(self, "alpha1", a1)
        if self.primed and a0 != a1:
            raise ValueError("only degenerate labels carry a primed version")

    @property
    def degenerate(self) -> bool:
        return self.alpha0 == self.alpha1

    @property
    def ordered(self) -> BCharLabel:
        return (self.alpha0, self.alpha1)

    @property
    def size(self) -> int:
        return sum(self.alpha0) + sum(self.alpha1)


def branch_A(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Multiplicity of gamma in Ind_{S_{n-k} x S_k}^{S_n}(alpha ⊗ beta)."""
    return lr_coeff(alpha, beta, gamma)


def branch_B(alpha: BCharLabel, gamma: Partition, beta: BCharLabel) -> int:
    """Multiplicity of beta in Ind_{W_{n-k} x S_k}^{W_n}(alpha ⊗ gamma)."""
    a0, a1 = (as_partition(x) for x in alpha)
    b0, b1 = (as_partition(x) for x in beta)
    gamma = as_partition(gamma)
    k = sum(gamma)
    if sum(a0) + sum(a1) + k != sum(b0) + sum(b1):
        return 0
    j = sum(b0) - sum(a0)
    if j < 0 or j > k:
        return 0
    total = 0
    for d0 in partitions_of(j):
        g0 = lr_coeff(a0, d0, b0)
        if not g0:
            continue
        for d1 in partitions_of(k - j):
            g1 = lr_coeff(a1, d1, b1)
            if g1:
                total += g0 * g1 * lr_coeff(d0, d1, gamma)
    return total


def branch_D(alpha: DCharLabel, delta: Partition, beta: DCharLabel) -> int:
    """Multiplicity of beta in Ind_{W~_{n-k} x S_k}^{W~_n}(alpha ⊗ delta)."""
    if alpha.degenerate and beta.degenerate:
        raise ValueError("type D branching between two degenerate labels is not determined")
    if alpha.degenerate or beta.degenerate:
        # either half-order gives the same value when one side is symmetric
        return branch_B(alpha.ordered, delta, beta.ordered)
    b0, b1 = beta.ordered
    return branch_B(alpha.ordered, delta, (b0, b1)) + branch_B(alpha.ordered, delta, (b1, b0))


def b_char_degree(label: BCharLabel) -> int:
    a0, a1 = label
    return comb(sum(a0) + sum(a1), sum(a0)) * syt_count(a0) * syt_count(a1)


def d_char_degree(label: DCharLabel) -> int:
    deg = b_char_degree(label.ordered)
    return deg // 2 if label.degenerate else deg
