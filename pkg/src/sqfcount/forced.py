"""Forced-equality graphs for overlapping square constraints.

Assume a string s has a square uu as a proper prefix and a square vv as
a proper suffix.  Each assumed square forces symbol equalities: position
i must equal position i + |u| inside the prefix occurrence, and likewise
at stride |v| inside the suffix occurrence.  Union-closing those edges
partitions the positions into classes that must carry equal symbols; any
square visible at the class level is then unavoidable, no matter which
concrete symbols are chosen.
"""

from dataclasses import dataclass


class _UnionFind:
    """Array union-find with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass(frozen=True)
class ForcedEqualityGraph:
    """Positions 0..length-1 with canonical forced-equality labels.

    Labels are assigned in first-occurrence order starting at 1, so two
    positions carry the same label exactly when the assumed squares force
    their symbols to be equal.
    """

    length: int
    prefix_half: int
    suffix_half: int
    labels: tuple

    def label_string(self):
        """The labels as a digit string (labels here never exceed 9)."""
        return "".join(str(x) for x in self.labels)


def build_forced_components(length, prefix_half, suffix_half):
    """Union-close the equalities forced by a prefix square of half-length
    ``prefix_half`` and a suffix square of half-length ``suffix_half``.

    Both squares must be proper substrings: 2*half < length.
    """
    hu, hv = prefix_half, suffix_half
    if hu < 1 or hv < 1:
        raise ValueError("half-lengths must be >= 1")
    if 2 * hu >= length or 2 * hv >= length:
        raise ValueError("squares must be proper prefix/suffix")
    uf = _UnionFind(length)
    for i in range(hu):
        uf.union(i, i + hu)
    for i in range(length - 2 * hv, length - hv):
        uf.union(i, i + hv)
    labels = [0] * length
    label_of_root = {}
    for i in range(length):
        root = uf.find(i)
        if root not in label_of_root:
            label_of_root[root] = len(label_of_root) + 1
        labels[i] = label_of_root[root]
    return ForcedEqualityGraph(length, hu, hv, tuple(labels))


def find_forced_square(graph, window_start, window_end, max_half):
    """Smallest forced square inside [window_start, window_end).

    Returns (position, half_length) for the first square whose positions
    all carry pairwise-equal labels at stride half_length, scanning
    half-lengths in increasing order and positions left to right; None
    when the labeling admits a square-free assignment in the window.
    """
    if not 0 <= window_start <= window_end <= graph.length:
        raise ValueError("window out of range")
    if max_half < 1:
        raise ValueError("max_half must be >= 1")
    labels = graph.labels
    for h in range(1, max_half + 1):
        for a in range(window_start, window_end - 2 * h + 1):
            if all(labels[a + i] == labels[a + i + h] for i in range(h)):
                return (a, h)
    return None
