"""Graph fixtures shared by the test modules."""

from itertools import combinations, permutations

from beikit.graph import OrderedGraph, connected_components


def graph(n, edges):
    return OrderedGraph.from_edges(n, edges)


def complete(n):
    return graph(n, combinations(range(1, n + 1), 2))


def path_graph(n):
    return graph(n, [(k, k + 1) for k in range(1, n)])


def cycle(n):
    return graph(n, [(k, k + 1) for k in range(1, n)] + [(1, n)])


SINGLE_EDGE = graph(2, [(1, 2)])
P3 = path_graph(3)
P4 = path_graph(4)
STAR3 = graph(3, [(1, 2), (1, 3)])          # 2 - 1 - 3
K13 = graph(4, [(1, 2), (1, 3), (1, 4)])    # claw, centre 1
K3 = complete(3)
C4 = cycle(4)
# 5-cycle labeled so that the admissible path 2,4,5,3 turns back above its end
C5_ZIGZAG = graph(5, [(1, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
# claw with a pendant path; admissible paths of length 3 and 4
SPIDER5 = graph(5, [(1, 3), (3, 5), (5, 2), (1, 4)])

NAMED = {
    "edge": SINGLE_EDGE, "P3": P3, "P4": P4, "star3": STAR3, "K13": K13,
    "K3": K3, "C4": C4, "C5_zigzag": C5_ZIGZAG, "spider5": SPIDER5,
}


def is_connected(g):
    return g.n > 0 and len(connected_components(g, g.vertices)) == 1


def all_labeled_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def connected_up_to_iso(n):
    """One representative per isomorphism class: the lexicographically least edge list."""
    perms = list(permutations(range(1, n + 1)))
    reps = set()
    for g in all_labeled_graphs(n):
        if not is_connected(g):
            continue
        reps.add(min(tuple(sorted((min(p[x - 1], p[y - 1]), max(p[x - 1], p[y - 1]))
                                  for x, y in g.edges))
                     for p in perms))
    return [graph(n, edges) for edges in sorted(reps)]


def acceptance_graphs(max_n=5):
    """Every connected graph on 2..max_n vertices up to isomorphism, plus named extras."""
    out = []
    for n in range(2, max_n + 1):
        out.extend(connected_up_to_iso(n))
    for g in NAMED.values():
        if g.n <= max_n and g not in out:
            out.append(g)
    return out
