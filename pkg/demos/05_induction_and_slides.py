"""Harish-Chandra induction of unipotent labels agrees with sliding beads on the pinned abacus."""

from rouquier import aba_complement, bead_slide_targets, block_context, induce_unipotent_mult
from rouquier.induction import config_label

ctx = block_context("so-odd", 7, 3, 2)
print(f"core {ctx.rho}, pinned halves {ctx.config}")
source = config_label(ctx.case, ctx.config)
gamma = aba_complement(ctx.d, 0)
for target, _ in bead_slide_targets(ctx.case, ctx.d, 0, ctx.config):
    mult = induce_unipotent_mult(ctx.family, gamma, source, target)
    print(f"slide gives {target}; induction multiplicity of {gamma} x {source} there: {mult}")
