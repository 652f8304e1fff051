"""Littlewood-Richardson coefficients and standard Young tableau counts."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .partitions import Partition, as_partition, conjugate, contains


def lr_coeff(mu: Partition, nu: Partition, lam: Partition) -> int:
    """Number of LR fillings of lam/mu with content nu.

    Cells are filled row by row from the top, each row right to left, which
    is exactly the reverse reading order, so the lattice condition can be
    checked on the prefix as the search goes.
    """
    mu, nu, lam = as_partition(mu), as_partition(nu), as_partition(lam)
    return _lr(mu, nu, lam)


@lru_cache(maxsize=None)
def _lr(mu: Partition, nu: Partition, lam: Partition) -> int:
    if sum(mu) + sum(nu) != sum(lam) or not contains(lam, mu):
        return 0
    if not nu:
        return 1
    mu_p = mu + (0,) * (len(lam) - len(mu))
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r] - 1, mu_p[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    used = [0] * (len(nu) + 1)
    k = len(nu)

    def search(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        hi = k
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if used[v] >= nu[v - 1]:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            used[v] += 1
            filling[(r, c)] = v
            total += search(i + 1)
            del filling[(r, c)]
            used[v] -= 1
        return total

    return search(0)


@lru_cache(maxsize=None)
def syt_count(shape: Partition) -> int:
    """Number of standard Young tableaux of ``shape`` (hook length formula)."""
    shape = as_partition(shape)
    conj = conjugate(shape)
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(shape)) // prod
