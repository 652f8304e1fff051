"""Hooks, cores and quotients of a partition, read off its abacus."""

from rouquier import AbacusView, beta_of_partition, e_core_and_weight, e_quotient, hooks, remove_hook

lam = (5, 5, 3, 2)
beta = beta_of_partition(lam)
print(f"partition {lam} has beta-set {beta}")
print("on the 6-abacus:")
print(AbacusView.of_beta(beta, 6).render())

for h in hooks(lam, 6):
    print(f"removing the 6-hook {h} leaves {remove_hook(lam, h)}")
print("6-core and weight:", e_core_and_weight(lam, 6))

lam = (3, 1)
print(f"\n{lam}: 2-core and weight {e_core_and_weight(lam, 2)}, 2-quotient {e_quotient(lam, 2, (1, 4))}")
