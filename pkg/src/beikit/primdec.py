"""Minimal primes of a binomial edge ideal, read off from induced subgraphs.

For a vertex set ``Y`` the prime ``I_{G,Y}`` kills every column outside
``Y`` and forces the columns inside each connected component of ``G_Y`` to
be proportional.  The minimal primes are those ``Y`` where adding back any
missing vertex merges components.
"""

from dataclasses import dataclass
from itertools import combinations

from .algebra import QQ, Polynomial, make_f, monomial
from .errors import SizeCapExceeded
from .graph import connected_components

DEFAULT_MAX_VERTICES = 20


@dataclass(frozen=True)
class PrimeComponent:
    y: tuple
    components: tuple
    d0: int
    n: int

    @property
    def outside(self):
        ys = set(self.y)
        return tuple(v for v in range(1, self.n + 1) if v not in ys)

    def monomial_generators(self, field=QQ):
        return [Polynomial({monomial((i, x)): 1}, field)
                for x in self.outside for i in range(1, self.d0 + 1)]

    def binomial_generators(self, field=QQ):
        return [make_f(i, j, x, y, field)
                for block in self.components
                for x, y in combinations(block, 2)
                for i in range(1, self.d0 + 1)
                for j in range(i + 1, self.d0 + 1)]

    def generators(self, field=QQ):
        return self.monomial_generators(field) + self.binomial_generators(field)

    def groebner_basis(self, field=QQ):
        """The generators themselves: monomials plus all minors inside each block.

        Each block's minors are the binomial edge ideal of a complete graph,
        whose only admissible paths are edges, and the monomials live in
        disjoint variables.
        """
        return self.generators(field)

    def count_generators(self):
        pairs = sum(len(b) * (len(b) - 1) // 2 for b in self.components)
        return len(self.outside) * self.d0, pairs * self.d0 * (self.d0 - 1) // 2


def _masks_components(g):
    """Component counts of every induced subgraph, indexed by vertex bitmask."""
    n = g.n
    nbr = [0] * (n + 1)
    for x, y in g.edges:
        nbr[x] |= 1 << (y - 1)
        nbr[y] |= 1 << (x - 1)
    counts = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length()
        rest = mask & ~(1 << (low - 1))
        # components of mask = components of rest, plus one, minus those the new vertex joins
        touched = nbr[low] & rest
        if not touched:
            counts[mask] = counts[rest] + 1
            continue
        # count components of rest that meet the new vertex's neighbourhood
        seen = 0
        joined = 0
        pending = touched
        while pending:
            v = (pending & -pending).bit_length()
            comp = 1 << (v - 1)
            frontier = comp
            while frontier:
                w = (frontier & -frontier).bit_length()
                frontier &= frontier - 1
                new = nbr[w] & rest & ~comp
                comp |= new
                frontier |= new
            seen |= comp
            joined += 1
            pending &= ~seen
        counts[mask] = counts[rest] + 1 - joined
    return counts


def _check_size(g, max_vertices):
    if max_vertices is not None and g.n > max_vertices:
        raise SizeCapExceeded(f"{g.n} vertices exceeds the cap of {max_vertices}")


def _mask_to_set(mask, n):
    return tuple(v for v in range(1, n + 1) if mask >> (v - 1) & 1)


def _subset_order(ys):
    return sorted(ys, key=lambda y: (-len(y), y))


def admissible_subsets(g, max_vertices=DEFAULT_MAX_VERTICES):
    """Vertex sets ``Y`` such that every ``x`` outside ``Y`` joins two components of ``G_Y``.

    Sorted by size (largest first), then lexicographically.
    """
    _check_size(g, max_vertices)
    n = g.n
    counts = _masks_components(g)
    full = (1 << n) - 1
    out = []
    for mask in range(1 << n):
        c = counts[mask]
        missing = full & ~mask
        ok = True
        while missing:
            bit = missing & -missing
            missing &= missing - 1
            if counts[mask | bit] >= c:
                ok = False
                break
        if ok:
            out.append(_mask_to_set(mask, n))
    return _subset_order(out)


def admissible_subsets_edge_form(g, max_vertices=DEFAULT_MAX_VERTICES):
    """Same sets, tested as: every ``x`` outside ``Y`` has neighbours in two components."""
    _check_size(g, max_vertices)
    out = []
    for size in range(g.n + 1):
        for y in combinations(g.vertices, size):
            label = {}
            for k, comp in enumerate(connected_components(g, y)):
                for v in comp:
                    label[v] = k
            ok = True
            for x in g.vertices:
                if x in label:
                    continue
                hit = {label[w] for w in g.neighbors(x) if w in label}
                if len(hit) < 2:
                    ok = False
                    break
            if ok:
                out.append(y)
    return _subset_order(out)


def component_ideal(g, y, d0):
    y = tuple(sorted(set(y)))
    return PrimeComponent(y, tuple(connected_components(g, y)), d0, g.n)


def component_contains(g, y, z):
    """``V_{G,Y}`` lies inside ``V_{G,Z}``.

    Requires ``Y`` inside ``Z`` and that vertices of ``Y`` connected in
    ``G_Z`` are already connected in ``G_Y``.
    """
    y, z = set(y), set(z)
    if not y <= z:
        return False
    label_y = {}
    for k, comp in enumerate(connected_components(g, y)):
        for v in comp:
            label_y[v] = k
    for comp in connected_components(g, z):
        labels = {label_y[v] for v in comp if v in y}
        if len(labels) > 1:
            return False
    return True


def minimal_primes(g, d0, max_vertices=DEFAULT_MAX_VERTICES):
    return [component_ideal(g, y, d0) for y in admissible_subsets(g, max_vertices)]
