"""The weights of p as a k-module, as a DOT graph.

Pipe the output through ``dot -Tsvg`` to draw it.
"""

from bdsroots import make_vogan
from bdsroots.export import weight_diagram_dot, weight_edges
from bdsroots.vogan import compact_datum

vd = make_vogan("B2", 2)
print(weight_diagram_dot(vd))

vd = make_vogan("G2", 1)
cd = compact_datum(vd)
print(len(vd.noncompact_roots), "weights,", len(weight_edges(vd, cd)), "edges")
