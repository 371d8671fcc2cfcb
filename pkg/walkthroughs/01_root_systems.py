"""Root systems from Cartan matrices.

Run with ``python walkthroughs/01_root_systems.py``.
"""

from bdsroots import root_system
from bdsroots.dynkin import Diagram, recognize
from bdsroots.root_core import format_vec

# %% closure of the simple roots under root strings
e6 = root_system("E6")
names = [f"phi{i + 1}" for i in range(6)]
print("E6 has", len(e6.roots), "roots")
print("highest root:", format_vec(e6.highest_root, names))

# heights of the positive roots
heights = {}
for r in e6.positive_roots:
    heights[sum(r)] = heights.get(sum(r), 0) + 1
print("roots per height:", heights)

# %% pairings; long roots have length 2
b2 = root_system("B2")
p1, p2 = b2.simple_roots
print("B2 lengths:", b2.pairing(p1, p1), b2.pairing(p2, p2))
print("<phi1, phi2^vee> =", b2.cartan_integer(p1, p2))

# %% recognizing a diagram from its Cartan matrix
g = Diagram(tuple(names), e6.cartan)
print(g.render("E6:"))
print("recognized as", recognize(e6.cartan))

# the canonical text dump is what `bdsroots dump-roots` prints
print(root_system("G2").dump())
