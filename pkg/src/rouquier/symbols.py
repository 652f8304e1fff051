"""Symbols: unordered pairs of beta-sets up to simultaneous shift.

Also holds the (s, mu, nu) relabelling used for both partitions (through the
2-abacus) and symbols (through half sizes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import (
    AbacusView,
    BetaSet,
    Partition,
    as_beta_set,
    as_partition,
    beta_core,
    beta_of_partition,
    beta_quotient,
    format_partition,
    parse_partition,
    partition_of_beta,
    partitions_of,
    runner_counts,
    shift,
)


@dataclass(frozen=True, order=True)
class Symbol:
    """A symbol {X, Y}; build through :func:`canonical_symbol` to get the canonical form."""

    X: BetaSet
    Y: BetaSet

    @property
    def degenerate(self) -> bool:
        return self.X == self.Y

    @property
    def defect(self) -> int:
        return abs(len(self.X) - len(self.Y))

    @property
    def rank(self) -> int:
        return defect_and_rank(self)[1]

    def shifted(self, d: int) -> tuple[BetaSet, BetaSet]:
        return shift(self.X, d), shift(self.Y, d)

    def __str__(self) -> str:
        return format_symbol(self)


def _order_key(b: BetaSet):
    return (len(b), b)


def _leading_run(b: BetaSet) -> int:
    k = 0
    while k < len(b) and b[k] == k:
        k += 1
    return k


def canonical_symbol(X, Y) -> Symbol:
    """Shift both halves down as far as possible, then put the larger half first."""
    X = as_beta_set(X)
    Y = as_beta_set(Y)
    k = min(_leading_run(X), _leading_run(Y))
    if k:
        X = tuple(x - k for x in X[k:])
        Y = tuple(y - k for y in Y[k:])
    if _order_key(X) < _order_key(Y):
        X, Y = Y, X
    return Symbol(X, Y)


def is_canonical(sym: Symbol) -> bool:
    return canonical_symbol(sym.X, sym.Y) == sym


def defect_and_rank(sym: Symbol) -> tuple[int, int]:
    n = len(sym.X) + len(sym.Y)
    rank = sum(sym.X) + sum(sym.Y) - (n - 1) ** 2 // 4
    return abs(len(sym.X) - len(sym.Y)), rank


def parse_symbol(text: str) -> Symbol:
    """Parse ``"1,2|0"``; an empty half is written ``-``."""
    if "|" not in text:
        raise ValueError(f"symbol literal {text!r} needs a '|' between the halves")
    left, right = text.split("|", 1)

    def half(part: str) -> BetaSet:
        part = part.strip()
        if part in ("", "-", "∅"):
            return ()
        return as_beta_set(int(x) for x in part.split(","))

    return canonical_symbol(half(left), half(right))


def format_symbol(sym: Symbol) -> str:
    def half(b: BetaSet) -> str:
        return ",".join(str(x) for x in b) if b else "-"

    return f"{half(sym.X)}|{half(sym.Y)}"


# ---------------------------------------------------------------------------
# hooks, cores and the linear diagram


@dataclass(frozen=True)
class SymbolCore:
    core: Symbol
    copies: int
    weight: int


def symbol_hooks(sym: Symbol, e: int) -> list[tuple[int, int, int]]:
    """Removable e-hooks as (half, x, x-e) with half 0 for X and 1 for Y."""
    out = []
    for h, half in enumerate((sym.X, sym.Y)):
        present = set(half)
        out.extend((h, x, x - e) for x in half if x - e >= 0 and x - e not in present)
    return out


def remove_symbol_hook(sym: Symbol, hook: tuple[int, int, int]) -> Symbol:
    h, x, y = hook
    halves = [sym.X, sym.Y]
    if x not in halves[h] or y in halves[h] or not 0 <= y < x:
        raise ValueError(f"{hook} is not a hook of {sym}")
    halves[h] = tuple(sorted((set(halves[h]) - {x}) | {y}))
    return Symbol(*halves)


def symbol_e_core(sym: Symbol, e: int) -> SymbolCore:
    if e < 1:
        raise ValueError("e must be positive")
    cx, wx = beta_core(sym.X, e)
    cy, wy = beta_core(sym.Y, e)
    core = canonical_symbol(cx, cy)
    weight = wx + wy
    copies = 2 if core.degenerate and weight > 0 else 1
    return SymbolCore(core, copies, weight)


def is_symbol_e_core(sym: Symbol, e: int) -> bool:
    return not symbol_hooks(sym, e)


def linear_diagram(sym: Symbol, e: int) -> AbacusView:
    """The 2e-linear diagram: X on runners 0..e-1, Y on runners e..2e-1."""
    pos = {(x % e, x // e) for x in sym.X}
    pos |= {(e + y % e, y // e) for y in sym.Y}
    return AbacusView(2 * e, frozenset(pos))


def linear_runner_counts(X: BetaSet, Y: BetaSet, e: int) -> tuple[int, ...]:
    return runner_counts(X, e) + runner_counts(Y, e)


# ---------------------------------------------------------------------------
# (s, mu, nu) relabelling


@dataclass(frozen=True, order=True)
class SmnLabel:
    s: int
    mu: Partition
    nu: Partition

    def __str__(self) -> str:
        return f"{self.s}:({format_partition(self.mu)}):({format_partition(self.nu)})"


def _smn(s: int, mu: Partition, nu: Partition) -> SmnLabel:
    if s == 0 and nu < mu:
        mu, nu = nu, mu
    return SmnLabel(s, mu, nu)


def smn_relabel(sym: Symbol) -> SmnLabel:
    sym = canonical_symbol(sym.X, sym.Y)
    return _smn(len(sym.X) - len(sym.Y), partition_of_beta(sym.X), partition_of_beta(sym.Y))


def from_smn(label: SmnLabel) -> Symbol:
    """Inverse of :func:`smn_relabel` on canonical symbols."""
    ny = max(len(label.nu), len(label.mu) - label.s, 0)
    X = beta_of_partition(label.mu, ny + label.s)
    Y = beta_of_partition(label.nu, ny)
    return canonical_symbol(X, Y)


def parse_smn(text: str) -> SmnLabel:
    """Parse ``"s:(mu):(nu)"``, e.g. ``"1:(1,1):()"``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"smn literal {text!r} must look like s:(mu):(nu)")
    return _smn(int(parts[0]), parse_partition(parts[1]), parse_partition(parts[2]))


def partition_smn_beta(lam: Partition) -> BetaSet:
    """The beta-set of ``lam`` whose 2-abacus has strictly more beads on runner 0."""
    lam = as_partition(lam)
    for n in (len(lam), len(lam) + 1):
        beta = beta_of_partition(lam, n)
        c0, c1 = runner_counts(beta, 2)
        if c0 > c1:
            return beta
    raise AssertionError("unreachable: one of two consecutive sizes works")


def partition_smn(lam: Partition) -> SmnLabel:
    """(s, mu, nu) of a partition: runner excess and 2-quotient (ordered, s >= 1)."""
    beta = partition_smn_beta(lam)
    c0, c1 = runner_counts(beta, 2)
    q0, q1 = beta_quotient(beta, 2)
    return SmnLabel(c0 - c1, partition_of_beta(q0), partition_of_beta(q1))


def partition_from_smn(label: SmnLabel) -> Partition:
    if label.s < 1:
        raise ValueError("partition labels have s >= 1")
    c1 = max(len(label.nu), len(label.mu) - label.s, 0)
    c0 = c1 + label.s
    beads = [2 * i for i in beta_of_partition(label.mu, c0)]
    beads += [2 * i + 1 for i in beta_of_partition(label.nu, c1)]
    return partition_of_beta(sorted(beads))


# ---------------------------------------------------------------------------
# enumeration


def symbol_rank_offset(s: int) -> int:
    """Rank of the smallest symbol of defect ``s`` (all of whose halves are trivial)."""
    return defect_and_rank(canonical_symbol(tuple(range(s)), ()))[1]


def symbols_of_rank(r: int, defect_ok=lambda s: True) -> Iterator[Symbol]:
    """Canonical symbols of rank ``r`` in a fixed order (defect, then mu, nu)."""
    s = 0
    while symbol_rank_offset(s) <= r:
        if defect_ok(s):
            n = r - symbol_rank_offset(s)
            seen = set()
            for k in range(n, -1, -1):
                for mu in partitions_of(k):
                    for nu in partitions_of(n - k):
                        label = _smn(s, mu, nu)
                        if label in seen:
                            continue
                        seen.add(label)
                        yield from_smn(label)
        s += 1


__all__ = [
    "Symbol",
    "SymbolCore",
    "SmnLabel",
    "canonical_symbol",
    "defect_and_rank",
    "symbol_e_core",
    "linear_diagram",
    "smn_relabel",
    "from_smn",
    "partition_smn",
    "partition_from_smn",
    "parse_symbol",
    "format_symbol",
    "parse_smn",
]
