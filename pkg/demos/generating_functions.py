"""Evaluate the generating functions three ways and watch the routes agree.

Run with: python demos/generating_functions.py
"""

from gtbasis import (gf_harm_closed, gf_harm_closed_m3, gf_harm_partial_sum,
                     gf_harm_series, gf_mon_closed, gf_mon_closed_m3,
                     gf_mon_partial_sum, harm_basis, BasisIndex)

x = (0.3, -0.2, 0.5)
h = (0.4, 0.2)

print(f"point x = {x}, h = {h}")
print()
print("Harmonic generating function H_3^+:")
closed = gf_harm_closed(3, x, h)
direct = gf_harm_closed_m3(x, h)
partial = gf_harm_partial_sum(3, x, h, 30)
print(f"  dimension recurrence : {closed}")
print(f"  m=3 closed formula   : {direct}")
print(f"  series, |k| <= 30    : {partial}")
print(f"  spread               : {max(abs(closed - direct), abs(closed - partial)):.2e}")

print()
print("Monogenic generating function M_3 (a Clifford number):")
closed_m = gf_mon_closed(3, x, h)
direct_m = gf_mon_closed_m3(x, h)
partial_m = gf_mon_partial_sum(3, x, h, 30)
print(f"  dimension recurrence : {closed_m}")
print(f"  m=3 closed formula   : {direct_m}")
print(f"  series, |k| <= 30    : {partial_m}")

print()
print("Exact series expansion of H_3^+ to order 2 (coefficients are polynomials):")
series = gf_harm_series(3, 2)
for k in sorted(series.terms):
    print(f"  h^{k}: {series.coefficient(k)}")
    assert series.coefficient(k) == harm_basis(BasisIndex(k))
print("Each coefficient equals the corresponding basis polynomial exactly.")
