"""Littlewood-Richardson coefficients and standard tableaux counts."""

from math import factorial

from rouquier import lr_coeff, syt_count
from rouquier.partitions import partitions_of

print("c^{(3,2,1)}_{(2,1),(2,1)} =", lr_coeff((2, 1), (2, 1), (3, 2, 1)))
print("c^{(3,2)}_{(2,1),(1,1)} =", lr_coeff((2, 1), (1, 1), (3, 2)))

for h in range(1, 8):
    total = sum(syt_count(s) ** 2 for s in partitions_of(h))
    print(f"h={h}: sum of squared tableau counts {total} = {h}! = {factorial(h)}")
