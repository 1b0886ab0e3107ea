"""Exact Gram matrices over the unit ball: zeros are symbolic, not numeric.

Run with: python demos/orthogonality.py
"""

from gtbasis import (enumerate_harm_indices, enumerate_mon_indices, harm_basis,
                     inner_harm, inner_mon, mon_basis)

print("Gram matrix of spherical harmonics in R^3, degree <= 2")
indices = enumerate_harm_indices(3, 2)
basis = [harm_basis(idx) for idx in indices]
width = 12
print(" " * 24 + "".join(f"{str(i.k)+('+' if i.sign>0 else '-'):>{width}}" for i in indices))
for idx, p in zip(indices, basis):
    row = "".join(f"{str(inner_harm(p, q)):>{width}}" for q in basis)
    label = f"{str(idx.k)}{'+' if idx.sign > 0 else '-'}"
    print(f"{label:>24}{row}")

print()
print("Gram matrix of spherical monogenics in R^3, degree <= 2 (scalar part)")
mindices = enumerate_mon_indices(3, 2)
mbasis = [mon_basis(idx) for idx in mindices]
print(" " * 12 + "".join(f"{str(i.k):>{width}}" for i in mindices))
for idx, p in zip(mindices, mbasis):
    row = "".join(f"{str(inner_mon(p, q)):>{width}}" for q in mbasis)
    print(f"{str(idx.k):>12}{row}")

print()
print("Off-diagonal zeros are exact rational arithmetic, not small floats.")
