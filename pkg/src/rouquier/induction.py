"""Harish-Chandra induction multiplicities on unipotent labels, and bead slides.

The multiplicity rules reduce to Weyl group branching after the (s, mu, nu)
relabelling.  The Weyl group rank is not an input: it is forced by the label
sizes, since the source carries |alpha| + |beta| boxes and the GL factor adds
|gamma| more.

Bead slides act on a *configuration*, the tuple of beta-sets fixing an abacus
picture: one beta-set on the 2d-abacus for unitary groups, and the halves
(X, Y) of a symbol, each on a d-abacus, for the other families.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lr import lr_coeff
from .params import Family
from .partitions import BetaSet, Partition, as_partition, partition_of_beta
from .symbols import Symbol, canonical_symbol, partition_smn, smn_relabel
from .weyl import DCharLabel, branch_B, branch_D

Config = tuple[BetaSet, ...]


@dataclass(frozen=True, order=True)
class UnipotentLabel:
    label: Partition | Symbol
    primed: bool = False

    def __post_init__(self):
        if isinstance(self.label, Symbol):
            sym = canonical_symbol(self.label.X, self.label.Y)
            object.__setattr__(self, "label", sym)
            if self.primed and not sym.degenerate:
                raise ValueError(f"primed label on non-degenerate symbol {sym}")
        else:
            object.__setattr__(self, "label", as_partition(self.label))
            if self.primed:
                raise ValueError("partitions carry no primed flag")

    def __str__(self) -> str:
        if isinstance(self.label, Symbol):
            return f"{self.label}'" if self.primed else str(self.label)
        return ",".join(map(str, self.label)) or "-"


def _as_label(x) -> UnipotentLabel:
    return x if isinstance(x, UnipotentLabel) else UnipotentLabel(x)


def _check_family_label(family: Family, lab: UnipotentLabel) -> None:
    if family.uses_symbols:
        if not isinstance(lab.label, Symbol):
            raise ValueError(f"{family.value} labels are symbols, got {lab.label!r}")
        if not family.defect_ok(lab.label.defect):
            raise ValueError(f"symbol {lab.label} has defect {lab.label.defect}, wrong for {family.value}")
        if lab.primed and not family.type_d:
            raise ValueError(f"primed labels only occur for so-plus/cso-plus, not {family.value}")
    elif isinstance(lab.label, Symbol):
        raise ValueError(f"{family.value} labels are partitions, got symbol {lab.label}")


def induce_unipotent_mult(family: Family | str, gamma: Partition, source, target) -> int:
    """Multiplicity of ``target`` in R_L^G(chi_gamma ⊗ chi_source) for L = GL_k x G'.

    ``source`` and ``target`` are partitions (GL, U), symbols or
    :class:`UnipotentLabel` values (primed only for degenerate symbols in the
    type D families).
    """
    if isinstance(family, str):
        family = Family.parse(family)
    gamma = as_partition(gamma)
    src, tgt = _as_label(source), _as_label(target)
    _check_family_label(family, src)
    _check_family_label(family, tgt)
    if family is Family.GL:
        return lr_coeff(gamma, src.label, tgt.label)
    if family is Family.U:
        a, b = partition_smn(src.label), partition_smn(tgt.label)
    else:
        a, b = smn_relabel(src.label), smn_relabel(tgt.label)
    if a.s != b.s:
        return 0
    if family.type_d and a.s == 0:
        return branch_D(DCharLabel(a.mu, a.nu, src.primed), gamma, DCharLabel(b.mu, b.nu, tgt.primed))
    return branch_B((a.mu, a.nu), gamma, (b.mu, b.nu))


# ---------------------------------------------------------------------------
# bead slides


def aba_complement(d: int, alpha: int) -> Partition:
    """The hook (alpha+1, 1^(d-alpha-1)) added by a slide on runner ``alpha``."""
    if d < 1:
        raise ValueError("d must be positive")
    if not 0 <= alpha < d:
        raise ValueError(f"runner index alpha={alpha} outside 0..{d - 1}")
    return (alpha + 1,) + (1,) * (d - alpha - 1)


def hook_runner(d: int, hook: Partition) -> int:
    """Inverse of :func:`aba_complement`."""
    hook = as_partition(hook)
    alpha = hook[0] - 1 if hook else -1
    if not 0 <= alpha < d or aba_complement(d, alpha) != hook:
        raise ValueError(f"{hook} is not a hook partition of {d}")
    return alpha


def slide_runners(case: int, d: int, alpha: int) -> tuple[int, int]:
    """The two runners of the 2d-runner picture a slide for ``alpha`` may use."""
    aba_complement(d, alpha)
    return (2 * alpha, 2 * alpha + 1) if case == 1 else (alpha, alpha + d)


def slide_moves(case: int, d: int, alpha: int, config: Config) -> list[Config]:
    """Every configuration reached by sliding one bead one row down a designated runner."""
    aba_complement(d, alpha)
    out = []
    if case == 1:
        (beta,) = config
        width = 2 * d
        present = set(beta)
        for x in beta:
            if x % width in (2 * alpha, 2 * alpha + 1) and x + width not in present:
                out.append((tuple(sorted((present - {x}) | {x + width})),))
        return out
    for h, half in enumerate(config):
        present = set(half)
        for x in half:
            if x % d == alpha and x + d not in present:
                moved = tuple(sorted((present - {x}) | {x + d}))
                out.append(config[:h] + (moved,) + config[h + 1:])
    return out


def config_label(case: int, config: Config) -> Partition | Symbol:
    if case == 1:
        return partition_of_beta(config[0])
    return canonical_symbol(*config)


def bead_slide_targets(case: int, d: int, alpha: int, config: Config) -> list[tuple[Partition | Symbol, int]]:
    """Labels reached by one slide for ``alpha``, each with multiplicity 1."""
    seen = []
    for c in slide_moves(case, d, alpha, config):
        lab = config_label(case, c)
        if lab not in seen:
            seen.append(lab)
    return [(lab, 1) for lab in seen]
