"""Symbols: canonical form, defect and rank, e-cores and the (s, mu, nu) relabelling."""

from rouquier import canonical_symbol, defect_and_rank, linear_diagram, smn_relabel, symbol_e_core

sym = canonical_symbol((0, 1, 3), (0, 1))
print("canonical form of {0,1,3} | {0,1}:", sym)

for X, Y in [((1, 2), (0,)), ((2, 5), (2, 5)), ((0, 3), (0, 1))]:
    sym = canonical_symbol(X, Y)
    defect, rank = defect_and_rank(sym)
    print(f"{sym}: defect {defect}, rank {rank}, relabelled {smn_relabel(sym)}")

core = symbol_e_core(canonical_symbol((2,), (0,)), 2)
print(f"\n2-core of 2|0: {core.core} (copies {core.copies}, weight {core.weight})")

print("\nlinear diagram of 2,5|2,5 on 3 runners (runner: rows holding a bead):")
view = linear_diagram(canonical_symbol((2, 5), (2, 5)), 3)
for j in range(6):
    print(f"  runner {j}: {view.runner(j)}")
