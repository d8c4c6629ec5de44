"""Cross-checks of the structured basis and decomposition against the oracle."""

from dataclasses import dataclass

from . import oracle
from .algebra import GF32003, Polynomial
from .errors import InputError
from .gbasis import (BasisElement, basis_polynomials, edge_generators, groebner_basis,
                     initial_terms_squarefree, is_reduced)
from .primdec import minimal_primes

CHECKS = ("is_groebner", "is_reduced", "squarefree_initials", "ideal_equal", "decomposition")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def flip_sign(basis, index=0):
    """Copy of ``basis`` with the trailing term of one element negated."""
    basis = list(basis)
    e = basis[index]
    poly = e.poly if isinstance(e, BasisElement) else e
    lead = poly.leading_monomial()
    F = poly.field
    flipped = Polynomial({m: (c if m == lead else F.normalize(-c))
                          for m, c in poly.terms.items()}, F)
    if isinstance(e, BasisElement):
        basis[index] = BasisElement(e.path, e.kappa, flipped, e.initial)
    else:
        basis[index] = flipped
    return basis


def drop_component(components, index=-1):
    components = list(components)
    del components[index]
    return components


def run_checks(g, d0, field=GF32003, basis=None, components=None, budget=None):
    """Run the five checks; ``basis``/``components`` override the constructed ones."""
    if d0 < 2:
        raise InputError("d0 must be at least 2")
    if basis is None:
        basis = groebner_basis(g, d0, field)
    if components is None:
        components = minimal_primes(g, d0)
    polys = basis_polynomials(basis)
    edges = edge_generators(g, d0, field)
    results = []

    ok = oracle.is_groebner(polys)
    results.append(CheckResult("is_groebner", ok, f"{len(polys)} elements"))
    results.append(CheckResult("is_reduced", is_reduced(polys)))
    results.append(CheckResult("squarefree_initials", initial_terms_squarefree(polys)))
    ok = oracle.ideal_equal(edges, polys, budget, check="ideal_equal")
    results.append(CheckResult("ideal_equal", ok))

    if components:
        meet = oracle.intersect_all([c.generators(field) for c in components],
                                    budget, check="decomposition")
    else:
        meet = [Polynomial.constant(1, field)]
    ok = oracle.ideal_equal(meet, edges, budget, check="decomposition")
    results.append(CheckResult("decomposition", ok, f"{len(components)} components"))
    return results
