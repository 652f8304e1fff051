"""Partitions, beta-sets, hooks and the e-abacus.

Partitions are plain tuples of positive integers in weakly decreasing order
and beta-sets are sorted tuples of distinct non-negative integers.  Every
function here is pure and works on those two representations directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
BetaSet = tuple[int, ...]
Hook = tuple[int, int]

MAX_PARTITION_SIZE = 10**4
MAX_BETA_ENTRY = 10**6


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical tuple (zeros dropped)."""
    lam = tuple(int(x) for x in parts)
    if any(x < 0 for x in lam):
        raise ValueError(f"negative part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts of {lam} are not weakly decreasing")
    lam = tuple(x for x in lam if x > 0)
    if sum(lam) > MAX_PARTITION_SIZE:
        raise ValueError(f"partition size {sum(lam)} exceeds {MAX_PARTITION_SIZE}")
    return lam


def as_beta_set(entries: Iterable[int]) -> BetaSet:
    beta = tuple(sorted(int(x) for x in entries))
    if any(x < 0 for x in beta):
        raise ValueError(f"negative entry in beta-set {beta}")
    if len(set(beta)) != len(beta):
        raise ValueError(f"repeated entry in beta-set {beta}")
    if beta and beta[-1] > MAX_BETA_ENTRY:
        raise ValueError(f"beta-set entry {beta[-1]} exceeds {MAX_BETA_ENTRY}")
    return beta


def parse_partition(text: str) -> Partition:
    """Parse the literal ``"5,5,3,2"``; ``""`` and ``"-"`` are the empty partition."""
    text = text.strip().strip("()")
    if text in ("", "-", "∅"):
        return ()
    return as_partition(int(x) for x in text.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam) if lam else "-"


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def contains(lam: Partition, mu: Partition) -> bool:
    """True if the Young diagram of ``mu`` sits inside that of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


# ---------------------------------------------------------------------------
# beta-sets


def beta_of_partition(lam: Partition, s: int | None = None) -> BetaSet:
    """The beta-set of ``lam`` with ``s`` entries (default: the minimal one)."""
    lam = as_partition(lam)
    if s is None:
        s = len(lam)
    if s < len(lam):
        raise ValueError(f"beta-set size {s} is smaller than the {len(lam)} parts of {lam}")
    padded = lam + (0,) * (s - len(lam))
    return tuple(sorted(padded[i - 1] + s - i for i in range(1, s + 1)))


def partition_of_beta(beta: Iterable[int]) -> Partition:
    beta = as_beta_set(beta)
    s = len(beta)
    desc = beta[::-1]
    return tuple(x for x in (desc[i] - (s - 1 - i) for i in range(s)) if x > 0)


def shift(beta: BetaSet, d: int) -> BetaSet:
    """The d-shift: prepend ``0..d-1`` and translate the rest by ``d``."""
    if d < 0:
        raise ValueError("shift amount must be non-negative")
    return tuple(range(d)) + tuple(x + d for x in beta)


def unshift(beta: BetaSet, d: int) -> BetaSet:
    """Inverse of :func:`shift`; ``beta`` must start with ``0..d-1``."""
    if tuple(beta[:d]) != tuple(range(d)):
        raise ValueError(f"{beta} is not a {d}-shift")
    return tuple(x - d for x in beta[d:])


def reduce_beta(beta: BetaSet) -> BetaSet:
    """Strip the leading run ``0, 1, ...`` (the minimal equivalent beta-set)."""
    k = 0
    while k < len(beta) and beta[k] == k:
        k += 1
    return tuple(x - k for x in beta[k:])


# ---------------------------------------------------------------------------
# hooks and cores


def _beta_hooks(beta: BetaSet, e: int) -> list[Hook]:
    present = set(beta)
    return [(x, x - e) for x in beta if x - e >= 0 and x - e not in present]


def hooks(lam: Partition, e: int) -> list[Hook]:
    """Removable e-hooks of ``lam`` as pairs (x, x-e) on the minimal beta-set."""
    if e < 1:
        raise ValueError("e must be positive")
    return _beta_hooks(beta_of_partition(lam), e)


def _move(beta: BetaSet, x: int, y: int) -> BetaSet:
    return tuple(sorted((set(beta) - {x}) | {y}))


def remove_hook(lam: Partition, hook: Hook) -> Partition:
    beta = beta_of_partition(lam)
    x, y = hook
    if x not in beta or y in beta or y < 0 or y >= x:
        raise ValueError(f"{hook} is not a hook of {lam} on beta-set {beta}")
    return partition_of_beta(_move(beta, x, y))


def beta_core(beta: BetaSet, e: int) -> tuple[BetaSet, int]:
    """Slide every bead to the top of its runner; return (core beta-set, weight)."""
    if e < 1:
        raise ValueError("e must be positive")
    runners: dict[int, list[int]] = {}
    for x in beta:
        runners.setdefault(x % e, []).append(x)
    core = []
    weight = 0
    for j, xs in runners.items():
        for i, x in enumerate(sorted(xs)):
            core.append(e * i + j)
            weight += (x - (e * i + j)) // e
    return tuple(sorted(core)), weight


def e_core_and_weight(lam: Partition, e: int) -> tuple[Partition, int]:
    core, weight = beta_core(beta_of_partition(lam), e)
    return partition_of_beta(core), weight


def is_e_core(lam: Partition, e: int) -> bool:
    return not hooks(lam, e)


# ---------------------------------------------------------------------------
# the e-abacus


@dataclass(frozen=True)
class AbacusView:
    """Bead positions (runner, row) on an abacus with ``runner_count`` runners."""

    runner_count: int
    positions: frozenset[tuple[int, int]]

    @classmethod
    def of_beta(cls, beta: BetaSet, e: int) -> "AbacusView":
        return cls(e, frozenset((x % e, x // e) for x in beta))

    def runner(self, j: int) -> list[int]:
        return sorted(i for (r, i) in self.positions if r == j)

    def bead_counts(self) -> tuple[int, ...]:
        counts = [0] * self.runner_count
        for j, _ in self.positions:
            counts[j] += 1
        return tuple(counts)

    def render(self) -> str:
        rows = 1 + max((i for _, i in self.positions), default=-1)
        return "\n".join(
            "".join("o" if (j, i) in self.positions else "." for j in range(self.runner_count))
            for i in range(rows)
        )


def runner_counts(beta: BetaSet, e: int) -> tuple[int, ...]:
    counts = [0] * e
    for x in beta:
        counts[x % e] += 1
    return tuple(counts)


def beta_quotient(beta: BetaSet, e: int) -> list[BetaSet]:
    return [tuple(x // e for x in beta if x % e == j) for j in range(e)]


def e_quotient(lam: Partition, e: int, beta: BetaSet | None = None) -> list[Partition]:
    """The e-quotient [lam^0, ..., lam^(e-1)] read off the given representation.

    The quotient is only defined up to a cyclic rotation, so the beta-set
    fixing the abacus picture is an explicit argument (minimal one if omitted).
    """
    if beta is None:
        beta = beta_of_partition(lam)
    beta = as_beta_set(beta)
    if partition_of_beta(beta) != as_partition(lam):
        raise ValueError(f"beta-set {beta} does not represent {lam}")
    return [partition_of_beta(b) for b in beta_quotient(beta, e)]


def beta_from_core_and_quotient(
    core: Partition, quotients: Sequence[Partition], bead_counts: Sequence[int]
) -> BetaSet:
    e = len(quotients)
    if len(bead_counts) != e:
        raise ValueError("need one bead count per runner")
    core_beta = beta_of_partition(core, sum(bead_counts))
    if runner_counts(core_beta, e) != tuple(bead_counts):
        raise ValueError(
            f"bead counts {tuple(bead_counts)} do not match the core {core} "
            f"(its {sum(bead_counts)}-bead abacus has {runner_counts(core_beta, e)})"
        )
    if not is_e_core_beta(core_beta, e):
        raise ValueError(f"{core} is not an {e}-core")
    beads = []
    for j, (q, n) in enumerate(zip(quotients, bead_counts)):
        for i in beta_of_partition(q, n):
            beads.append(e * i + j)
    return tuple(sorted(beads))


def partition_from_core_and_quotient(
    core: Partition, quotients: Sequence[Partition], bead_counts: Sequence[int]
) -> Partition:
    return partition_of_beta(beta_from_core_and_quotient(core, quotients, bead_counts))


def is_e_core_beta(beta: BetaSet, e: int) -> bool:
    return not _beta_hooks(beta, e)
