"""Formal check of the endomorphism-rank identity for a Rouquier block.

Every block character of the Levi subgroup is a w-tuple of GL_d components
(a d-hook, or a non-trivial p-class with partition (1)), a central index
kappa, and the core rho (plus rho' when rho is degenerate).  Its dimension is
replaced by a product of formal variables; characters known to have equal
dimensions share a variable.  The check expands the iterated induction of
each source on the pinned abacus, sums coefficients per target character,
and compares

    sum over targets of (coefficient)^2  ==  2^w w! sum over sources of (monomial)^2

as exact polynomials.
"""

from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from .induction import Config, aba_complement, config_label, slide_moves
from .params import BlockContext, admissible_core
from .partitions import Partition, beta_quotient, format_partition, partition_of_beta
from .polynomial import FormalPolynomial, Monomial
from .symbols import Symbol


@dataclass(frozen=True, order=True)
class HookComp:
    alpha: int

    def shape(self, d: int) -> Partition:
        return aba_complement(d, self.alpha)


@dataclass(frozen=True, order=True)
class PClassComp:
    index: int


Component = HookComp | PClassComp


@dataclass(frozen=True)
class CharLabel:
    components: tuple[Component, ...]
    kappa: int = 0
    primed: bool = False


@dataclass(frozen=True, order=True)
class TargetLabel:
    kappa: int
    classes: tuple[tuple[int, Partition], ...]
    mu: Partition | Symbol
    primed: bool = False

    def render(self) -> str:
        parts = [f"k{self.kappa}"]
        parts += [f"pair{i}:({format_partition(nu)})" for i, nu in self.classes]
        mu = str(self.mu) if isinstance(self.mu, Symbol) else f"({format_partition(self.mu)})"
        parts.append(mu + ("'" if self.primed else ""))
        return " ".join(parts)


def enumerate_block_labels(ctx: BlockContext) -> list[CharLabel]:
    comps: list[Component] = [HookComp(a) for a in range(ctx.d)]
    comps += [PClassComp(i) for i in range(ctx.classes.count)]
    primes = (False, True) if ctx.degenerate else (False,)
    return [
        CharLabel(tuple(c), k, pr)
        for c in product(comps, repeat=ctx.w)
        for k in ctx.kappa_range
        for pr in primes
    ]


def expected_label_count(ctx: BlockContext) -> int:
    copies = 2 if ctx.degenerate else 1
    return (ctx.d + ctx.classes.count) ** ctx.w * len(ctx.kappa_range) * copies


def dimension_variable(ctx: BlockContext, comp: Component, canonicalize: bool = True) -> str:
    if isinstance(comp, HookComp):
        return f"h[{format_partition(comp.shape(ctx.d))}]"
    if canonicalize:
        return f"t[{ctx.classes.pair_of(comp.index)}]"
    return f"c[{comp.index}]"


def core_variable(kappa: int) -> str:
    # rho and rho' have equal dimension, so only kappa matters
    return f"r[{kappa}]"


def label_monomial(ctx: BlockContext, label: CharLabel, canonicalize: bool = True) -> Monomial:
    names = [dimension_variable(ctx, c, canonicalize) for c in label.components]
    names.append(core_variable(label.kappa))
    return tuple(sorted(names))


def _add_box(nu: Partition) -> list[Partition]:
    out = []
    for i in range(len(nu) + 1):
        row = nu[i] if i < len(nu) else 0
        if i == 0 or nu[i - 1] > row:
            out.append(nu[:i] + (row + 1,) + nu[i + 1:])
    return out


def _ordered_expansion(ctx: BlockContext, label: CharLabel) -> dict[tuple[Config, tuple[Partition, ...]], int]:
    pairs = len(ctx.classes.pairs)
    state: dict[tuple[Config, tuple[Partition, ...]], int] = {(ctx.config, ((),) * pairs): 1}
    for comp in label.components:
        nxt: dict = defaultdict(int)
        if isinstance(comp, HookComp):
            for (config, nus), c in state.items():
                for moved in slide_moves(ctx.case, ctx.d, comp.alpha, config):
                    nxt[(moved, nus)] += c
        else:
            i = ctx.classes.pair_of(comp.index)
            for (config, nus), c in state.items():
                for grown in _add_box(nus[i]):
                    nxt[(config, nus[:i] + (grown,) + nus[i + 1:])] += c
        state = nxt
    return state


def induced_expansion(ctx: BlockContext, label: CharLabel) -> dict[TargetLabel, int]:
    """Multiplicity of each target character in the iterated induction of ``label``."""
    ordered = _ordered_expansion(ctx, label)
    out: dict[TargetLabel, int] = defaultdict(int)
    for (config, nus), c in ordered.items():
        classes = tuple((i, nu) for i, nu in enumerate(nus) if nu)
        mu = config_label(ctx.case, config)
        if not ctx.degenerate:
            out[TargetLabel(label.kappa, classes, mu, False)] += c
            continue
        X, Y = config
        if X == Y:
            # chi and chi' each get the count from the sum rho + rho'; hand it to the matching half
            out[TargetLabel(label.kappa, classes, mu, label.primed)] += c
            continue
        if ordered.get(((Y, X), nus)) != c:
            raise AssertionError(f"swap symmetry fails for {config} in the degenerate flow")
        # the ordered configurations (X, Y) and (Y, X) are the same character
        out[TargetLabel(label.kappa, classes, mu, False)] += c
    if ctx.degenerate:
        for key, v in out.items():
            if not key.primed and not _label_degenerate(key.mu):
                if v % 2:
                    raise AssertionError("odd total over swapped configurations")
                out[key] = v // 2
    return dict(out)


def _label_degenerate(mu) -> bool:
    return isinstance(mu, Symbol) and mu.degenerate


def slide_quotients(ctx: BlockContext, config: Config) -> list[Partition]:
    """Per-runner slide partitions of a configuration reached from the pinned core."""
    if ctx.case == 1:
        return [partition_of_beta(b) for b in beta_quotient(config[0], 2 * ctx.d)]
    return [partition_of_beta(b) for half in config for b in beta_quotient(half, ctx.d)]


@dataclass
class RankReport:
    lhs: FormalPolynomial
    rhs: FormalPolynomial
    label_count: int
    target_count: int
    elapsed_ms: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_rank_identity(ctx: BlockContext, canonicalize: bool = True, threads: int = 1) -> RankReport:
    """Compare both sides of the rank identity as exact polynomials.

    ``canonicalize=False`` gives each p-class its own variable instead of
    sharing one per {t, t-bar} pair; the identity is then expected to fail.
    The result does not depend on ``threads``.
    """
    if not admissible_core(ctx.family, ctx.d, ctx.w, ctx.rho):
        raise ValueError(f"inadmissible block context: core {ctx.rho} at w={ctx.w}")
    start = time.perf_counter()
    labels = enumerate_block_labels(ctx)
    if len(labels) != expected_label_count(ctx):
        raise AssertionError("label count disagrees with (d+N)^w |kappa| copies")

    def expand(label):
        return label, induced_expansion(ctx, label)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            expansions = list(pool.map(expand, labels))
    else:
        expansions = [expand(lab) for lab in labels]

    acc: dict[TargetLabel, dict] = defaultdict(lambda: defaultdict(int))
    rhs_terms: dict = defaultdict(int)
    for label, targets in expansions:
        mono = label_monomial(ctx, label, canonicalize)
        rhs_terms[tuple(sorted(mono + mono))] += 1
        for tgt, mult in targets.items():
            if mult < 0:
                raise AssertionError("negative multiplicity")
            acc[tgt][mono] += mult
    lhs = FormalPolynomial()
    for tgt in sorted(acc, key=lambda t: t.render()):
        poly = FormalPolynomial(acc[tgt])
        lhs = lhs + poly * poly
    rhs = FormalPolynomial(rhs_terms) * ctx.normaliser_index
    elapsed = int((time.perf_counter() - start) * 1000)
    return RankReport(lhs, rhs, len(labels), len(acc), elapsed)
