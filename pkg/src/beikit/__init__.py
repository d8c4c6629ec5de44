"""Gröbner bases and minimal primes of generalized binomial edge ideals."""

from .algebra import GF32003, QQ, Polynomial, PrimeField, RationalField, make_f, make_field
from .errors import BudgetExceeded, InputError, SizeCapExceeded
from .gbasis import (BasisElement, build_generator, edge_generators, groebner_basis,
                     initial_terms_squarefree, is_reduced, normal_form)
from .graph import (AdmissiblePath, AntitoneMap, OrderedGraph, connected_components,
                    enumerate_admissible_paths, enumerate_strict_antitone, is_admissible)
from .primdec import (PrimeComponent, admissible_subsets, component_contains,
                      component_ideal, minimal_primes)

__version__ = "0.1.0"
