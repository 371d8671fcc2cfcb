"""Counting discrete series and the Harish-Chandra root order."""

from bdsroots import compact_datum, make_vogan
from bdsroots.root_core import format_vec
from bdsroots.series import blattner, count_series, hc_root_order, hc_translate

for name, node in [("B4", 2), ("E6", 2), ("E7", 1), ("E7", 2), ("E8", 1)]:
    c = count_series(make_vogan(name, node))
    print(f"{name} nu=phi{node}: {c.total} classes, {c.bds} Borel-de Siebenthal")

# %% the HC order has simple roots Phi_0 and -lambda
vd = make_vogan("D5", 3)
cd = compact_datum(vd)
hc = hc_root_order(vd, cd)
print(hc.describe(vd.rank))
print("moved back to P_k:", hc_translate(vd, cd, hc).provenance.kind)

# %% Blattner parameter: add the positive roots with nu-coefficient 2
b = blattner((0,) * vd.rank, vd)
print("shift:", format_vec(b.shift, [f"phi{i + 1}" for i in range(vd.rank)]))
