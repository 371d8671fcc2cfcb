"""Enumerating the Borel-de Siebenthal positive systems that contain P_k."""

from bdsroots import compact_datum, enumerate_bds, make_vogan
from bdsroots.bds import candidate_pairs, lemma_checks

for name, node in [("B4", 3), ("D6", 3), ("E6", 2), ("E7", 2), ("E8", 1)]:
    vd = make_vogan(name, node)
    systems = enumerate_bds(vd)
    print(f"{vd}: {len(systems)}")

# %% the systems for E6, with the new non-compact simple root starred
vd = make_vogan("E6", 2)
for s in enumerate_bds(vd):
    print(s.describe(vd.rank))

# %% coefficient identities behind the construction
cd = compact_datum(vd)
for pair in candidate_pairs(cd, vd):
    for c in lemma_checks(pair, cd, vd).checks:
        print(f"  {c.name:<22} expected {c.expected} got {c.actual}")

# %% hermitian case: the standard system and its opposite through -delta
vd = make_vogan("C4", 4)
for s in enumerate_bds(vd):
    print(s.describe(vd.rank))
