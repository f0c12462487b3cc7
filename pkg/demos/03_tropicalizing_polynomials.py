"""From polynomials over the series field to tropical polynomials.

Tropicalization replaces every coefficient by its signed value and + by
the multivalued hyperfield sum.  Whatever a polynomial does at a point,
its tropicalization can do at the tropicalized point: the value of f at p
tropicalizes into the set trop(f)(trop(p)).  The disk example shows how
lossy that can be: a two-dimensional set tropicalizes to a single point,
while its tropicalized inequality still allows two whole segments.
"""

from tropreal import (
    PuiseuxSeries,
    eval_k,
    hv_contains,
    parse_polyk,
    stv,
    trop_eval,
    trop_point,
    trop_r,
    trop_sat,
)

f = parse_polyk("(x-2)^2 + (y-2)^2 - 1")
F = trop_r(f)
print(f"f = (x-2)^2 + (y-2)^2 - 1   expands to {len(f.terms)} terms")
print(f"trop(f) = {F.text()}")

two = PuiseuxSeries.const(2)
t = PuiseuxSeries.t_power(1)
p = (two + t, two)
value = eval_k(f, p)
print(f"\nf(2+t, 2) = {value.text()}  with signed value {value.signed_trop()}")

zp = trop_point(p)
hv = trop_eval(F, zp)
print(f"trop(f) at trop(2+t, 2) = {zp} evaluates to {hv}")
print(f"containment of the actual value: {hv_contains(hv, value.signed_trop())}")

print("\nthe tropical inequality at the unit point is balanced, hence <= 0:")
unit = (stv(1, 0), stv(1, 0))
print(f"  trop(f)({unit}) = {trop_eval(F, unit)}")
print(f"  satisfies <= 0 ? {trop_sat(F, unit, 'le')}")
print(f"  satisfies  > 0 ? {trop_sat(F, unit, 'gt')}")

print("\none-sided transfer: tropical positivity forces actual positivity;")
g = parse_polyk("2x + 3y - 5")
G = trop_r(g)
q = (PuiseuxSeries.t_power(-1), PuiseuxSeries.const(1))  # x = t^(-1), infinite
print(f"  trop(g) at trop(q) > 0 ? {trop_sat(G, trop_point(q), 'gt')}")
print(f"  g(q) = {eval_k(g, q).text()} > 0 ? {eval_k(g, q).sign() > 0}")
