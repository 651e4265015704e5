"""
Cayley and Hopf graphs
======================

A Cayley graph of a finite group has graded IBN exactly when one generator is
used. A Hopf graph has it exactly when its common degree is at most 1.
"""

from itertools import combinations, product

from lpa_ibn import decide_gribn, decide_ibn
from lpa_ibn.constructions import (
    cayley_graph,
    conjugacy_classes,
    cyclic_group,
    generated_subgroup,
    hopf_graph,
    ramification_weight,
    symmetric_group,
)

z6 = cyclic_group(6)
for k in (1, 2):
    for gens in combinations(range(6), k):
        if len(generated_subgroup(z6, gens)) < 6:
            continue
        e = cayley_graph(z6, gens)
        print(f"Z6, S={gens}: IBN={decide_ibn(e).has_ibn} gr-IBN={decide_gribn(e).has_gribn}")

s3 = symmetric_group(3)
classes = conjugacy_classes(s3)
print("S3 classes:", [[s3.names[i] for i in c] for c in classes])

reps = [c[0] for c in classes]
for values in product(range(2), repeat=len(reps)):
    ram = dict(zip(reps, values))
    e = hopf_graph(s3, ram)
    print(f"r={values} weight={ramification_weight(s3, ram)} gr-IBN={decide_gribn(e).has_gribn}")
