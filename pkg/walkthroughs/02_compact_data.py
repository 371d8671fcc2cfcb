"""Painting one node: the gradation, eps, lambda and the diagram of k."""

from bdsroots import compact_datum, make_vogan
from bdsroots.vogan import admissible_data, compact_dynkin, describe, gradation

vd = make_vogan("E6", 2)
print(vd)
print({i: len(layer) for i, layer in gradation(vd).items()})

# %% eps completes Phi_0 to a base of the compact roots
cd = compact_datum(vd)
print(describe(vd, cd))
print(compact_dynkin(cd, vd.rs).render("k:"))

# %% a classical example where eps attaches to the diagram of Phi_0
vd = make_vogan("B5", 3)
cd = compact_datum(vd)
print(describe(vd, cd))
print(compact_dynkin(cd, vd.rs).render("k:"))

# %% every admissible datum up to rank 8
data = admissible_data(8)
print(len(data), "data,", sum(not d.hermitian for d in data), "with semisimple k")
