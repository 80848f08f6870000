"""Bijections between 132-avoiding permutations and plane trees.

Two maps are implemented, both with explicit inverses:

* the preorder-decreasing labeling read in postorder (``jr_*``): label the
  non-root vertices n, n-1, ..., 1 in preorder and read the labels in
  postorder;
* the segment-to-sibling-group map (``phi_*``): the value-consecutive
  increasing segment containing the first entry becomes the root's children,
  and every other segment hangs below the entry immediately preceding it.

Both constructions carry natural vertex labels (the permutation values); the
unlabeled shapes determine the labels uniquely, which is what the inverse
directions exploit.
"""
from __future__ import annotations

from .decompositions import ird, vcis
from .errors import DomainError
from .permutations import Permutation, avoids_132
from .trees import PlaneTree


class LabeledTree:
    """Immutable plane tree with a (hashable) label on each vertex.

    Roots of permutation images carry ``None``; alternating trees label every
    vertex.
    """

    __slots__ = ("label", "children", "_hash")

    def __init__(self, label, children: tuple["LabeledTree", ...] = ()):
        self.label = label
        self.children = tuple(children)
        self._hash = hash((label, self.children))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, LabeledTree):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.label == other.label
            and self.children == other.children
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self.children:
            return f"LabeledTree({self.label!r})"
        return f"LabeledTree({self.label!r}, {list(self.children)!r})"

    def shape(self) -> PlaneTree:
        return PlaneTree(tuple(c.shape() for c in self.children))

    def size(self) -> int:
        return sum(c.size() + 1 for c in self.children)


class _Node:
    __slots__ = ("label", "kids")

    def __init__(self, label):
        self.label = label
        self.kids: list["_Node"] = []

    def freeze(self) -> LabeledTree:
        return LabeledTree(self.label, tuple(k.freeze() for k in self.kids))


def jr_labeled_tree(pi: Permutation) -> LabeledTree:
    """Tree image of a 132-avoider with the permutation values as labels.

    Build from the increasing runs right to left: the last run becomes a path
    with its maximum adjacent to the root; each earlier run is attached as a
    path below the smallest vertex of the current leftmost path exceeding the
    run's maximum (below the root if none), becoming the new leftmost branch.
    """
    if not avoids_132(pi):
        raise DomainError("the tree construction is defined only on 132-avoiders")
    root = _Node(None)
    for seg in reversed(ird(pi).segments):
        chain_top = _Node(seg.values[-1])
        node = chain_top
        for v in reversed(seg.values[:-1]):
            child = _Node(v)
            node.kids.append(child)
            node = child
        x = seg.values[-1]
        attach = root
        cur = root
        while cur.kids:
            cur = cur.kids[0]
            if cur.label > x:
                attach = cur
            else:
                break
        attach.kids.insert(0, chain_top)
    return root.freeze()


def jr_perm_to_tree(pi: Permutation) -> PlaneTree:
    return jr_labeled_tree(pi).shape()


def jr_tree_to_perm(tree: PlaneTree) -> Permutation:
    """Label non-root vertices n..1 in preorder, read labels in postorder."""
    n = tree.size
    counter = n
    out: list[int] = []

    def rec(node: PlaneTree) -> None:
        nonlocal counter
        label = counter
        counter -= 1
        for child in node.children:
            rec(child)
        out.append(label)

    for child in tree.children:
        rec(child)
    return Permutation(out)


def phi_perm_to_tree(pi: Permutation) -> LabeledTree:
    """Value-consecutive segments become sibling groups (labels = values).

    The segment containing the first entry forms the root's children; every
    other segment's elements become the children of the entry immediately
    preceding the segment in the permutation.
    """
    if not avoids_132(pi):
        raise DomainError("the segment-to-sibling map is defined only on 132-avoiders")
    vals = pi.values
    if not vals:
        return LabeledTree(None)
    nodes = {v: _Node(v) for v in vals}
    root = _Node(None)
    for seg in vcis(pi).segments:
        first_pos = seg.positions[0]
        parent = root if first_pos == 1 else nodes[vals[first_pos - 2]]
        parent.kids.extend(nodes[v] for v in seg.values)
    return root.freeze()


def phi_canonical_labeling(tree: PlaneTree) -> LabeledTree:
    """The unique labeling recovered from a bare shape.

    Walking internal vertices depth-first left to right, the children of the
    current vertex take the largest values not yet used, increasing left to
    right.
    """
    high = tree.size

    def rec(node: PlaneTree, label) -> LabeledTree:
        nonlocal high
        k = len(node.children)
        block = range(high - k + 1, high + 1)
        high -= k
        kids = tuple(rec(child, lbl) for child, lbl in zip(node.children, block))
        return LabeledTree(label, kids)

    return rec(tree, None)


def phi_tree_to_perm(tree: PlaneTree) -> Permutation:
    """Read the canonical labels in preorder."""
    labeled = phi_canonical_labeling(tree)
    out: list[int] = []

    def rec(node: LabeledTree) -> None:
        if node.label is not None:
            out.append(node.label)
        for child in node.children:
            rec(child)

    rec(labeled)
    return Permutation(out)


# ---------------------------------------------------------------------------
# labeled-tree statistics used by the structural checks


def labeled_vertices(tree: LabeledTree) -> list[tuple[LabeledTree, int, bool]]:
    """Preorder list of (node, depth, is_leaf); the root is never a leaf."""
    out: list[tuple[LabeledTree, int, bool]] = []

    def rec(node: LabeledTree, depth: int, is_root: bool) -> None:
        out.append((node, depth, not node.children and not is_root))
        for child in node.children:
            rec(child, depth + 1, False)

    rec(tree, 0, True)
    return out


def sibling_label_groups(tree: LabeledTree) -> list[tuple[int, ...]]:
    """For each internal vertex, the sorted tuple of its children's labels."""
    groups: list[tuple[int, ...]] = []
    for node, _, _ in labeled_vertices(tree):
        if node.children:
            groups.append(tuple(sorted(c.label for c in node.children)))
    return sorted(groups)
