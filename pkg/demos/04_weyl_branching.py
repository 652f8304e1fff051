"""Induction multiplicities for Weyl groups of type A, B and D."""

from rouquier import DCharLabel, branch_A, branch_B, branch_D

print("type A, (1) x (1) -> (2):", branch_A((1,), (1,), (2,)))
print("type B, ((1),-) x (1) -> ((1),(1)):", branch_B(((1,), ()), (1,), ((1,), (1,))))

src = DCharLabel((1,), ())
for primed in (False, True):
    tgt = DCharLabel((1,), (1,), primed)
    mark = "'" if primed else ""
    print(f"type D, {{(1),-}} x (1) -> {{(1),(1)}}{mark}:", branch_D(src, (1,), tgt))
