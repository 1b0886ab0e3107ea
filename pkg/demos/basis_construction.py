"""Build spherical harmonics and spherical monogenics and check them symbolically.

Run with: python demos/basis_construction.py
"""

from gtbasis import (BasisIndex, MonIndex, enumerate_harm_indices, harm_basis,
                     mon_basis, real_basis)

print("Spherical harmonics in R^3, degree <= 2 (factorial normalization)")
print("-" * 68)
for idx in enumerate_harm_indices(3, 2):
    poly = harm_basis(idx)
    assert poly.laplacian().is_zero()
    print(f"  {str(idx):34s} {poly}")

print()
print("Real-valued pairs from the sign=+ elements")
print("-" * 68)
for k in ((1,), (2,)):
    re, im = real_basis(BasisIndex(k))
    print(f"  k={k}:  Re = {re}")
    print(f"         Im = {im}")

print()
print("Spherical monogenics in R^3, degree <= 2")
print("-" * 68)
for k in ((0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2)):
    idx = MonIndex(k)
    poly = mon_basis(idx)
    assert poly.dirac().is_zero()
    print(f"  {str(idx):28s} {poly}")

print()
print("Every element above was verified to lie in the kernel of its operator.")
