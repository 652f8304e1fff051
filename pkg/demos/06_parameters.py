"""Prime parameters, p-element classes and block data for a few groups."""

from rouquier import Family, block_context, derive_params, group_order, p_element_classes

for family, q, p in [("so-odd", 7, 3), ("u", 9, 5), ("csp", 3, 5)]:
    pp = derive_params(Family.parse(family), q, p)
    print(f"{family} q={q} p={p}: d={pp.d} e={pp.e} a={pp.a} linear={pp.linear}")

print("|SO_3(7)| =", group_order(Family.SO_odd, 7, 3))
classes = p_element_classes(Family.U, 9, 5)
print("unitary p-classes:", classes.classes, "paired by", classes.involution)

ctx = block_context("cso-plus", 3, 13, 1, None)
print(f"minimal cso-plus core for q=3 p=13 w=1: {ctx.rho}, m={ctx.m}, |P|={ctx.defect_group_order}")
