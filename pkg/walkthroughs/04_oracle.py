"""Checking the enumeration against a brute-force search.

The search never touches the Weyl group: it assigns signs to the non-compact
root pairs and keeps the choices closed under addition.
"""

import time

from bdsroots import make_vogan
from bdsroots.oracle import brute_bds_filter, brute_positive_systems, oracle_check

vd = make_vogan("B2", 2)
systems = brute_positive_systems(vd)
print("B2: positive systems containing P_k:", len(systems))
print("of which Borel-de Siebenthal:", len(brute_bds_filter(systems, vd)))

# %% a bigger one
t = time.perf_counter()
report = oracle_check(make_vogan("E7", 2))
print({k: report[k] for k in ("positive_systems", "weyl_quotient", "bds_brute", "bds_enumerated", "ok")})
print(f"{time.perf_counter() - t:.1f}s")
