"""A plain Buchberger engine used only to check the structured constructions.

It shares the polynomial type with the rest of the package and nothing else:
reduction, S-polynomials and pair handling are implemented here from
scratch.  Pairs are processed smallest-lcm first (normal strategy) and pairs
with coprime leading monomials are skipped; no other criteria are used.

The auxiliary variable ``AUX`` sorts above every ``p[i,x]``, so the lex
order is an elimination order for it and :func:`ideal_intersection` needs
no separate term order.
"""

from dataclasses import dataclass
import heapq
import time

from .algebra import (AUX, ONE, Polynomial, mono_coprime, mono_div,
                      mono_divides, mono_lcm, mono_mul)
from .errors import BudgetExceeded, InputError


@dataclass
class Budget:
    max_basis: int = 20000
    max_spairs: int = 2_000_000
    max_seconds: float = 900.0


DEFAULT_BUDGET = Budget()


def _same_field(polys):
    fields = {p.field for p in polys}
    if len(fields) > 1:
        raise InputError(f"mixed fields: {sorted(map(repr, fields))}")


def s_polynomial(f, g):
    if f.is_zero() or g.is_zero():
        raise InputError("S-polynomial of a zero polynomial")
    _same_field([f, g])
    F = f.field
    mf, cf = f.leading_term()
    mg, cg = g.leading_term()
    lcm = mono_lcm(mf, mg)
    a = f.mul_term(mono_div(lcm, mf), F.inv(cf))
    b = g.mul_term(mono_div(lcm, mg), F.inv(cg))
    return a - b


def reduce(p, basis):
    """Full reduction of ``p`` modulo ``basis`` (a list of nonzero polynomials)."""
    F = p.field
    heads = [(q.leading_monomial(), F.inv(q.leading_coefficient()), q) for q in basis]
    rest = dict(p.terms)
    out = {}
    while rest:
        m = max(rest)
        c = rest.pop(m)
        for lm, inv_lc, q in heads:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                k = F.normalize(c * inv_lc)
                for qm, qc in q.terms.items():
                    if qm == lm:
                        continue
                    t = mono_mul(qm, shift)
                    s = F.normalize(rest.get(t, 0) - k * qc)
                    if s:
                        rest[t] = s
                    else:
                        rest.pop(t, None)
                break
        else:
            out[m] = c
    return Polynomial._raw(out, F)


def _interreduce(basis):
    basis = [q.monic() for q in basis]
    basis.sort(key=lambda q: q.leading_monomial())
    minimal = []
    for q in basis:
        lm = q.leading_monomial()
        if not any(mono_divides(r.leading_monomial(), lm) for r in minimal):
            minimal.append(q)
    out = []
    for k, q in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = reduce(q, others)
        out.append(r.monic())
    out.sort(key=lambda q: q.leading_monomial(), reverse=True)
    return out


def buchberger(generators, budget=None, check="buchberger"):
    """The reduced Gröbner basis (monic, sorted by descending leading monomial)."""
    budget = budget or DEFAULT_BUDGET
    gens = [q for q in generators if not q.is_zero()]
    if not gens:
        return []
    _same_field(gens)
    t0 = time.monotonic()
    G = []
    pairs = []
    spairs = 0

    def add(h):
        h = h.monic()
        lm = h.leading_monomial()
        if lm == ONE:
            return True
        for k, q in enumerate(G):
            lcm = mono_lcm(q.leading_monomial(), lm)
            heapq.heappush(pairs, (lcm, k, len(G)))
        G.append(h)
        if len(G) > budget.max_basis:
            raise BudgetExceeded(f"basis grew past {budget.max_basis} elements", check)
        return False

    for q in gens:
        h = reduce(q, G)
        if not h.is_zero() and add(h):
            return [Polynomial.constant(1, q.field)]

    while pairs:
        lcm, a, b = heapq.heappop(pairs)
        if mono_coprime(G[a].leading_monomial(), G[b].leading_monomial()):
            continue
        spairs += 1
        if spairs > budget.max_spairs:
            raise BudgetExceeded(f"more than {budget.max_spairs} S-pairs", check)
        if time.monotonic() - t0 > budget.max_seconds:
            raise BudgetExceeded(f"over {budget.max_seconds}s wall clock", check)
        h = reduce(s_polynomial(G[a], G[b]), G)
        if not h.is_zero() and add(h):
            return [Polynomial.constant(1, h.field)]
    return _interreduce(G)


def is_groebner(basis):
    """Every S-pair reduces to zero modulo ``basis``."""
    basis = [q for q in basis if not q.is_zero()]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if not reduce(s_polynomial(basis[a], basis[b]), basis).is_zero():
                return False
    return True


def ideal_equal(a, b, budget=None, check="ideal_equal"):
    ga = buchberger(a, budget, check)
    gb = buchberger(b, budget, check)
    return set(ga) == set(gb)


def ideal_contains(basis_gb, polys):
    """All of ``polys`` lie in the ideal whose Gröbner basis is ``basis_gb``."""
    return all(reduce(p, basis_gb).is_zero() for p in polys)


def ideal_intersection(a, b, budget=None, check="ideal_intersection"):
    """Generators of ``<a> ∩ <b>`` via ``t*A + (1 - t)*B`` with ``t`` eliminated."""
    polys = [q for q in list(a) + list(b) if not q.is_zero()]
    if not polys:
        return []
    _same_field(polys)
    F = polys[0].field
    if not [q for q in a if not q.is_zero()] or not [q for q in b if not q.is_zero()]:
        return []
    t = Polynomial({((AUX, 1),): 1}, F)
    one_minus_t = Polynomial.constant(1, F) - t
    gens = [t * q for q in a if not q.is_zero()]
    gens += [one_minus_t * q for q in b if not q.is_zero()]
    G = buchberger(gens, budget, check)
    return [q for q in G if AUX not in q.variables()]


def intersect_all(ideals, budget=None, check="ideal_intersection"):
    """Fold binary intersections left to right."""
    ideals = list(ideals)
    if not ideals:
        raise InputError("empty intersection")
    acc = buchberger(ideals[0], budget, check)
    for nxt in ideals[1:]:
        acc = ideal_intersection(acc, nxt, budget, check)
    return acc
