"""Minimal primes from induced subgraphs, checked by intersecting them."""

from beikit import GF32003, OrderedGraph, component_contains, edge_generators, minimal_primes
from beikit import oracle
from beikit.io import format_polynomial

c4 = OrderedGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])

# Y = all vertices gives the full 2x2-minor ideal; {1,3} and {2,4} kill the
# opposite diagonal and leave two separate columns.
primes = minimal_primes(c4, 2)
for c in primes:
    print(c.y, c.components, [format_polynomial(q) for q in c.generators()])

# Dropping vertex 2 only from the full set is redundant: its variety sits inside.
print(component_contains(c4, (1, 3, 4), (1, 2, 3, 4)))   # True

# The intersection of the primes is the edge ideal itself.
meet = oracle.intersect_all([c.generators(GF32003) for c in primes])
print("intersection equals I_G:", oracle.ideal_equal(meet, edge_generators(c4, 2, GF32003)))

# The same subsets come out for every number of rows.
print([c.y for c in minimal_primes(c4, 5)])
