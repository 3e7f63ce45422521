# IMPORT STATEMENT
from ytc import Partition, reduced_betti, young_complex, young_homotopy
from ytc.decomp import is_shellable, is_vertex_decomposable
from ytc.serialization import dumps

# IMPORT STATEMENT

# Build the t-Young complex of a partition. The facets are the column choices of the
# filled diagram, so (5, 4, 2) with t=3 gives a complex on the vertices 1..13
shape = Partition((5, 4, 2))
complex_ = young_complex(shape, 3)
for facet in complex_.facets:
    print(facet)
# (1, 2, 6, 7, 11)
# ...

# The homotopy type comes from the row-deletion recursion, no homology needed
print(young_homotopy(shape, 3))

# Exact reduced homology over Q agrees with it, degree by degree
betti = reduced_betti(complex_)
print(betti)
assert young_homotopy(shape, 3).as_dict() == betti.as_dict()

# A two-row shape with t=2 is a circle
print(young_homotopy(Partition((3, 3)), 2))
# S^1

# Vertex decomposability comes with a certificate that replays against the definition
certificate = is_vertex_decomposable(young_complex(Partition((3, 3)), 2))
print(certificate.verdict)
print(dumps(certificate))

# Shellability is searched directly over facet orders; keep shapes small
print(is_shellable(young_complex(Partition((2, 2)), 1)).order)
