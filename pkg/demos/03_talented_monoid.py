"""
Equality in the talented monoid
===============================

Elements are sums of generators v(a). A regular vertex at level a may be
replaced by the ranges of its edges at level a + 1.
"""

from lpa_ibn import Graph, equal, parse_element
from lpa_ibn.monoid import expand_to_level, format_element, shift

fib = Graph.from_matrix([[1, 1], [1, 0]], ["u", "v"])
a = parse_element("u(1)+v(1)", fib)
b = parse_element("2*u(2)+v(2)", fib)
print(format_element(a, fib), "=", format_element(b, fib), ":", equal(fib, a, b))

# the shift action moves every level at once and preserves equality
for n in (-2, 0, 3):
    print("shift", n, equal(fib, shift(a, n), shift(b, n)))

# expanding to a common level shows why
print(expand_to_level(fib, a, 2))

# with a sink, mass that lands there stays at its level
sink_example = Graph.from_matrix([[2, 1], [0, 0]], ["u", "v"])
x = parse_element("v(0)", sink_example)
y = parse_element("v(1)", sink_example)
print("v(0) = v(1)?", equal(sink_example, x, y))
