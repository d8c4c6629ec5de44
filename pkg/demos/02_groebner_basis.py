"""Build the Gröbner basis from paths and compare it with plain Buchberger."""

import time

from beikit import GF32003, OrderedGraph, edge_generators, groebner_basis, normal_form
from beikit import oracle
from beikit.io import format_monomial, format_polynomial, parse_polynomial

c5 = OrderedGraph.from_edges(5, [(1, 2), (1, 3), (2, 4), (3, 5), (4, 5)])

# One element per (path, labeling); printed with its provenance.
basis = groebner_basis(c5, 2)
for e in basis:
    print(e.path.vertices, e.kappa.values, format_polynomial(e.poly),
          "  initial:", format_monomial(e.initial))

# The oracle knows nothing about paths: it runs Buchberger on the edge minors.
t0 = time.perf_counter()
reference = oracle.buchberger(edge_generators(c5, 2, GF32003))
print(f"oracle: {len(reference)} elements in {time.perf_counter() - t0:.3f}s")
ours = {e.poly for e in groebner_basis(c5, 2, GF32003)}
print("same reduced basis:", set(reference) == ours)

# With three rows the basis grows, and stays square-free.
basis3 = groebner_basis(c5, 3)
print("d0=3:", len(basis3), "elements")

# Membership by normal form.  p[1,2]*p[2,3] - p[1,3]*p[2,2] is a minor on a non-edge.
q = parse_polynomial("p[1,2]*p[2,3] - p[1,3]*p[2,2]", basis[0].poly.field)
print("normal form:", format_polynomial(normal_form(q, basis)))
# times p[1,4]*p[1,5] it does lie in the ideal (path 2,4,5,3)
q = parse_polynomial("p[1,2]*p[1,4]*p[1,5]*p[2,3] - p[1,3]*p[1,4]*p[1,5]*p[2,2]", q.field)
print("normal form:", format_polynomial(normal_form(q, basis)))
