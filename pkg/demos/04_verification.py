"""The five oracle checks, on an honest input and on two corrupted ones."""

from beikit import GF32003, OrderedGraph, groebner_basis, minimal_primes
from beikit.verify import drop_component, flip_sign, run_checks


def show(title, results):
    print(title)
    for r in results:
        print(f"  {'PASS' if r.passed else 'FAIL'} {r.name} {r.detail}")


spider = OrderedGraph.from_edges(5, [(1, 3), (3, 5), (5, 2), (1, 4)])
show("spider, d0=3", run_checks(spider, 3))

k13 = OrderedGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
show("claw, one sign flipped", run_checks(k13, 2, basis=flip_sign(groebner_basis(k13, 2, GF32003))))
show("claw, one prime dropped", run_checks(k13, 2, components=drop_component(minimal_primes(k13, 2))))
