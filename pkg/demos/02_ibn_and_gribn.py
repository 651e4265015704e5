"""
Deciding IBN and graded IBN
===========================

IBN is a rank comparison over the rationals. Graded IBN fails exactly when
some exponent multisets P, Q of different sizes give the same row vector
1^T sum A^p, and such a relation is returned as a certificate.
"""

from lpa_ibn import Graph, decide_gribn, decide_ibn, verify_certificate
from lpa_ibn.deciders import bounded_certificate_search, column_sum_shortcut

sink_example = Graph.from_matrix([[2, 1], [0, 0]], ["u", "v"])
fib = Graph.from_matrix([[1, 1], [1, 0]], ["u", "v"])
uniform = Graph.from_matrix([[3, 2], [1, 2]], ["u", "v"])
c4 = Graph.from_matrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])

for name, g in [("sink example", sink_example), ("fibonacci", fib),
                ("uniform columns", uniform), ("4-cycle", c4)]:
    ibn = decide_ibn(g)
    gr = decide_gribn(g)
    print(f"{name:16s} IBN={ibn.has_ibn} (ranks {ibn.rank_left}/{ibn.rank_right})  "
          f"gr-IBN={gr.has_gribn} ({gr.reason})")
    if gr.certificate is not None:
        print("   certificate", gr.certificate.to_dict(), verify_certificate(g, gr.certificate))

# a graph with a sink keeps IBN false but graded IBN true: the two notions differ

# every column of [[3,2],[1,2]] sums to 4, so one vertex at level 1 matches
# four at level 0
print("column sum:", column_sum_shortcut(uniform))

# an independent brute-force search finds the same Fibonacci relation
print("bounded search:", bounded_certificate_search(fib, 6, 8))
