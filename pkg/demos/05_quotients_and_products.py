"""
Quotients and products
======================

If E/H has graded IBN then so does E, but not conversely. Products of a
cycle with a line keep a maximal cycle and so have IBN.
"""

from lpa_ibn import Graph, cartesian_product, decide_gribn, hs_enumerate, quotient
from lpa_ibn.constructions import cycle_graph, line_graph
from lpa_ibn.graphio import format_graph_text

e = Graph.from_matrix([[3, 2, 0], [1, 2, 1], [0, 0, 0]], ["u", "v", "w"])
print("hereditary saturated subsets:", [sorted(e.vertices[i] for i in h) for h in hs_enumerate(e)])
print("E has gr-IBN:", decide_gribn(e).has_gribn)

q = quotient(e, ["w"])
print(format_graph_text(q))
print("E/{w} has gr-IBN:", decide_gribn(q).has_gribn)

for m in (2, 3):
    for n in (2, 3):
        p = cartesian_product(cycle_graph(m), line_graph(n))
        print(f"C{m} x L{n}: gr-IBN={decide_gribn(p).has_gribn}")

torus = cartesian_product(cycle_graph(2), cycle_graph(2))
v = decide_gribn(torus)
print("C2 x C2:", v.has_gribn, v.reason, v.certificate.to_dict())
