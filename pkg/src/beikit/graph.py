"""Totally ordered simple graphs, admissible paths and antitone labelings.

Vertices are the integers 1..n and the total order on them is integer order.
"""

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations

from .errors import InputError


@dataclass(frozen=True)
class OrderedGraph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: frozenset
    _adj: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            x, y = e
            if x == y:
                raise InputError(f"self-loop at vertex {x}")
            for v in (x, y):
                if not 1 <= v <= self.n:
                    raise InputError(f"edge endpoint {v} outside 1..{self.n}")
            norm.add((min(x, y), max(x, y)))
        adj = {v: set() for v in range(1, self.n + 1)}
        for x, y in norm:
            adj[x].add(y)
            adj[y].add(x)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @classmethod
    def from_edges(cls, n, edges):
        edges = list(edges)
        seen = set()
        for x, y in edges:
            key = (min(x, y), max(x, y))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(edges))

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def sorted_edges(self):
        return sorted(self.edges)

    def has_edge(self, x, y):
        return y in self._adj.get(x, ())

    def neighbors(self, x):
        return self._adj[x]

    def relabel(self, perm):
        """Graph with vertex ``v`` renamed ``perm[v]`` (``perm`` maps 1..n onto 1..n)."""
        return OrderedGraph(self.n, frozenset((perm[x], perm[y]) for x, y in self.edges))


# --------------------------------------------------------------------------
# induced subgraphs
# --------------------------------------------------------------------------

def _check_subset(g, y):
    y = set(y)
    for v in y:
        if not 1 <= v <= g.n:
            raise InputError(f"vertex {v} outside 1..{g.n}")
    return y


def connected_components(g, y):
    """Components of the subgraph induced by ``y``, sorted by minimum vertex."""
    y = _check_subset(g, y)
    seen = set()
    comps = []
    for start in sorted(y):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in y and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def count_components(g, y):
    return len(connected_components(g, y))


# --------------------------------------------------------------------------
# admissible paths
# --------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class AdmissiblePath:
    """Injective path ``x0, ..., xr`` with ``x0 < xr``.

    Structural invariants are checked here; admissibility with respect to a
    particular graph is checked by :func:`is_admissible`.
    """

    vertices: tuple

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 2:
            raise InputError("a path needs at least one edge")
        if len(set(vs)) != len(vs):
            raise InputError(f"path {vs} repeats a vertex")
        if vs[0] >= vs[-1]:
            raise InputError(f"path {vs} must start below its end")

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def interior(self):
        return self.vertices[1:-1]

    @property
    def r(self):
        return len(self.vertices) - 1

    def sort_key(self):
        return (self.start, self.end, len(self.vertices), self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def is_walk(g, seq):
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_admissible(g, path):
    """Check conditions (i)-(iii) of admissibility for a walk in ``g``.

    Condition (iii) is checked by brute force: every proper subset of the
    interior vertices, in every order, is tested for forming a path from the
    start to the end.
    """
    seq = tuple(path.vertices if isinstance(path, AdmissiblePath) else path)
    if len(seq) < 2:
        return False
    for v in seq:
        if not 1 <= v <= g.n:
            raise InputError(f"vertex {v} outside 1..{g.n}")
    if not is_walk(g, seq):
        raise InputError(f"{seq} is not a walk in the graph")
    x, y = seq[0], seq[-1]
    if len(set(seq)) != len(seq) or not x < y:
        return False
    interior = seq[1:-1]
    if any(x <= v <= y for v in interior):
        return False
    for size in range(len(interior)):
        for subset in combinations(interior, size):
            for order in permutations(subset):
                if is_walk(g, (x,) + order + (y,)):
                    return False
    return True


def enumerate_admissible_paths(g, start=None, end=None):
    """All admissible paths of ``g``, ordered by (start, end, length, vertices).

    Depth-first search over injective walks.  A walk whose newest vertex is
    adjacent to an earlier non-consecutive vertex has a shortcut, so every
    extension of it violates condition (iii) and the branch is cut.  Interior
    vertices above the start bound the admissible end from above.
    """
    found = []

    def extend(walk, on_walk, upper):
        last = walk[-1]
        x0 = walk[0]
        for v in sorted(g.neighbors(last)):
            if v in on_walk:
                continue
            if any(g.has_edge(v, u) for u in walk[:-1]):
                continue
            nxt = walk + (v,)
            if x0 < v < upper and is_admissible(g, nxt):
                found.append(AdmissiblePath(nxt))
            if v < x0:
                extend(nxt, on_walk | {v}, upper)
            elif x0 + 1 < min(upper, v):
                # v stays interior only if the path ends below it
                extend(nxt, on_walk | {v}, min(upper, v))

    sources = g.vertices if start is None else [start]
    for x0 in sources:
        extend((x0,), frozenset((x0,)), g.n + 1)
    if end is not None:
        found = [p for p in found if p.end == end]
    found.sort(key=AdmissiblePath.sort_key)
    return found


# --------------------------------------------------------------------------
# antitone labelings
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AntitoneMap:
    """Labels ``kappa(0), ..., kappa(r)`` in 1..d0 for the positions of a path."""

    values: tuple
    d0: int

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if any(not 1 <= k <= self.d0 for k in vals):
            raise InputError(f"labels {vals} outside 1..{self.d0}")

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def is_antitone(vertices, values):
    """``x_s < x_t`` implies ``kappa(s) >= kappa(t)`` for all positions."""
    if len(vertices) != len(values):
        raise InputError("labeling and path lengths differ")
    pairs = sorted(zip(vertices, values))
    # equal vertices (non-injective walks) impose no constraint among themselves
    for (xa, ka), (xb, kb) in combinations(pairs, 2):
        if xa < xb and ka < kb:
            return False
    return True


def is_strictly_antitone(vertices, values):
    return is_antitone(vertices, values) and values[0] > values[-1]


def enumerate_strict_antitone(path, d0):
    """All strictly antitone labelings of ``path`` into 1..d0, sorted by values."""
    vs = path.vertices if isinstance(path, AdmissiblePath) else tuple(path)
    if d0 < 2:
        return []
    order = sorted(range(len(vs)), key=lambda k: vs[k])
    out = []
    # non-increasing label sequences, assigned along increasing vertex order
    for seq in combinations_with_replacement(range(d0, 0, -1), len(vs)):
        vals = [0] * len(vs)
        for pos, lab in zip(order, seq):
            vals[pos] = lab
        if vals[0] > vals[-1]:
            out.append(AntitoneMap(tuple(vals), d0))
    out.sort(key=lambda k: k.values)
    return out
