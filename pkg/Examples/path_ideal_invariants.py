# IMPORT STATEMENT
from ytc import PathIdealSpec, dual_complex, dual_homotopy, pd_formula, squarefree_power_generators
from ytc.formulas import krull_formula, leray_formula
from ytc.homology import pd_oracle
from ytc.homotopy import build_reduction_graph
from ytc.pathideal import krull_height_oracle, stanley_reisner_complex

# IMPORT STATEMENT

# Paths of t vertices on the path graph P_n, squarefree power k
spec = PathIdealSpec.of(10, 2, 2)

# Generators are unions of k pairwise disjoint t-intervals
generators = squarefree_power_generators(spec)
print(len(generators.supports))

# The Alexander dual of the Stanley-Reisner complex is a Young complex, and its
# homotopy type follows from counting labelled paths in the reduction graph
print(dual_homotopy(10, 2, 2))
# 3*S^3

# Closed forms for the invariants of R/I; the oracles compute the same numbers the slow way
print(pd_formula(10, 2, 2), pd_oracle(stanley_reisner_complex(spec), spec.vertices))
print(krull_formula(10, 2, 2), krull_height_oracle(spec).dimension)
print(leray_formula(10, 2, 2))

# The dual complex itself, facet by facet
for facet in dual_complex(spec).facets:
    print(facet)

# The reduction graph renders as GraphViz source
print(build_reduction_graph(9, 3, 2).to_dot())
