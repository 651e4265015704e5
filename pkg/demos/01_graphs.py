"""
Graphs, vertex types and the covering graph
===========================================

A graph is a vertex list plus an adjacency matrix of edge multiplicities.
"""

from lpa_ibn import Graph, classify_vertices, condensation, covering_window
from lpa_ibn.graphio import format_graph_text, parse_graph_text

# u has two loops and one edge to the sink v
g = Graph.from_matrix([[2, 1], [0, 0]], ["u", "v"])
print(format_graph_text(g))

# sinks have no outgoing edges, sources no incoming ones
c = classify_vertices(g)
print("sinks:", [g.vertices[i] for i in sorted(c.sinks)])
print("regular:", [g.vertices[i] for i in sorted(c.regular)])

# strongly connected components, in order of smallest vertex
cond = condensation(g)
print("components:", cond.components, "cyclic:", cond.cyclic)

# the text format is what the command line reads and writes
fib = parse_graph_text("vertices u v\nedge u u\nedge u v\nedge v u\n")

# a window of the covering graph: one copy of the vertices per level,
# every edge climbs one level
print(format_graph_text(covering_window(fib, 0, 2)))
