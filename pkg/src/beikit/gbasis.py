"""The Gröbner basis of a binomial edge ideal, built from paths and labelings.

No Buchberger run happens here.  Each basis element comes from one
admissible path ``x0, ..., xr`` and one strictly antitone labeling ``kappa``:

    u * (p[kappa(r), x0] * p[kappa(0), xr] - p[kappa(r), xr] * p[kappa(0), x0])

where ``u`` is the product of ``p[kappa(k), x_k]`` over the interior
positions.  Note the swap: the start vertex carries the end label.
"""

from dataclasses import dataclass

from .algebra import (QQ, Polynomial, is_squarefree, make_f, mono_div,
                      mono_divides, mono_mul, monomial)
from .errors import InputError
from .graph import (AdmissiblePath, AntitoneMap, enumerate_admissible_paths,
                    enumerate_strict_antitone, is_strictly_antitone)


@dataclass(frozen=True)
class BasisElement:
    path: AdmissiblePath
    kappa: AntitoneMap
    poly: Polynomial
    initial: tuple

    @property
    def leading_monomial(self):
        return self.initial


def interior_monomial(path, kappa):
    """``u``: the product of ``p[kappa(k), x_k]`` over interior positions."""
    vs = path.vertices
    return monomial(*((kappa[k], vs[k]) for k in range(1, len(vs) - 1)))


def build_generator(path, kappa, field=QQ):
    if not isinstance(path, AdmissiblePath):
        path = AdmissiblePath(tuple(path))
    if not isinstance(kappa, AntitoneMap):
        kappa = AntitoneMap(tuple(kappa), max(kappa))
    vs = path.vertices
    if len(kappa) != len(vs):
        raise InputError("labeling and path lengths differ")
    if not is_strictly_antitone(vs, kappa.values):
        raise InputError(f"labeling {kappa.values} is not strictly antitone on {vs}")
    x, y = vs[0], vs[-1]
    a, b = kappa[-1], kappa[0]
    u = interior_monomial(path, kappa)
    lead = mono_mul(u, monomial((a, x), (b, y)))
    trail = mono_mul(u, monomial((a, y), (b, x)))
    poly = Polynomial({lead: 1, trail: -1}, field)
    return BasisElement(path, kappa, poly, lead)


def edge_generators(g, d0, field=QQ):
    """The minors ``f^{ij}_{xy}`` with ``i < j`` over the edges ``x < y``."""
    return [make_f(i, j, x, y, field)
            for x, y in g.sorted_edges()
            for i in range(1, d0 + 1)
            for j in range(i + 1, d0 + 1)]


def groebner_basis(g, d0, field=QQ):
    """One element per (admissible path, strictly antitone labeling)."""
    basis = []
    for path in enumerate_admissible_paths(g):
        for kappa in enumerate_strict_antitone(path, d0):
            basis.append(build_generator(path, kappa, field))
    return basis


def _as_poly(e):
    return e.poly if isinstance(e, BasisElement) else e


def normal_form(p, basis):
    """Remainder of ``p`` on multivariate division by ``basis``.

    The greatest remaining term is reduced first, using the first basis
    element (in list order) whose initial term divides it.
    """
    divisors = []
    for e in basis:
        q = _as_poly(e)
        m, c = q.leading_term()
        divisors.append((m, c, q))
    F = p.field
    rest = dict(p.terms)
    remainder = {}
    while rest:
        m = max(rest)
        c = rest[m]
        for lm, lc, q in divisors:
            if mono_divides(lm, m):
                if q.field != F:
                    raise InputError(f"mixed fields: {F} and {q.field}")
                factor = F.normalize(-c * F.inv(lc))
                shift = mono_div(m, lm)
                for qm, qc in q.terms.items():
                    t = mono_mul(qm, shift)
                    s = F.normalize(rest.get(t, 0) + factor * qc)
                    if s:
                        rest[t] = s
                    else:
                        rest.pop(t, None)
                break
        else:
            remainder[m] = c
            del rest[m]
    return Polynomial._raw(remainder, F)


def is_reduced(basis):
    """Monic leading terms, and no initial term divides a term of another element."""
    polys = [_as_poly(e) for e in basis]
    heads = []
    for q in polys:
        m, c = q.leading_term()
        if c != q.field.one:
            return False
        heads.append(m)
    for a, ma in enumerate(heads):
        for b, q in enumerate(polys):
            if a == b:
                continue
            if any(mono_divides(ma, t) for t in q.terms):
                return False
    return True


def initial_terms_squarefree(basis):
    return all(is_squarefree(_as_poly(e).leading_monomial()) for e in basis)


def basis_polynomials(basis):
    return [_as_poly(e) for e in basis]
