"""Admissible paths and strictly antitone labelings on small graphs."""

from beikit import OrderedGraph, enumerate_admissible_paths, enumerate_strict_antitone, is_admissible

# Vertices are 1..n and the integer order is the order used everywhere.
star = OrderedGraph.from_edges(3, [(1, 2), (1, 3)])
print(enumerate_admissible_paths(star))      # the two edges, plus 2,1,3

# On the path 1-2-3 the walk 1,2,3 passes through a vertex between its ends.
p3 = OrderedGraph.from_edges(3, [(1, 2), (2, 3)])
print(is_admissible(p3, (1, 2, 3)))          # False

# In a triangle every longer path has a shortcut, so only edges survive.
k3 = OrderedGraph.from_edges(3, [(1, 2), (1, 3), (2, 3)])
print(is_admissible(k3, (1, 3, 2)))          # False

# A 5-cycle labeled so that one path runs back above its end vertex.
c5 = OrderedGraph.from_edges(5, [(1, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
for path in enumerate_admissible_paths(c5):
    print(path.vertices)

# Labelings: larger vertices get weakly smaller labels, start label > end label.
for path in enumerate_admissible_paths(star):
    for d0 in (2, 3):
        labels = [k.values for k in enumerate_strict_antitone(path, d0)]
        print(path.vertices, d0, labels)
