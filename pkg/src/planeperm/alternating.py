"""Labelled set-alternating trees and the small-forest bijection.

An E-tree places labels from a pool E on its even levels (root included) and
labels from a pool O on its odd levels; an O-tree swaps the roles.  Here
E = {1..k} and O = {~1..~(b+1)}, with every element of E ordered below every
element of O.  A small tree has two levels.

The forward map repeatedly detaches the minimal internal vertex whose children
are all leaves, together with its children, and leaves a starred placeholder
label behind: detached E-vertices are replaced by (k+1)*, (k+2)*, ... and
detached O-vertices by ~(b+2)*, ~(b+3)*, ... in order of removal.  The result
is a forest of small trees over the enlarged pools.  The backward map greedily
merges the minimal-rooted star-free small tree into the smallest matching
starred slot until a single tree remains.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations

from .bijections import LabeledTree
from .errors import DomainError
from .trees import PlaneTree, enumerate_trees


@dataclass(frozen=True)
class AltLabel:
    """A pool label: parity E or O, 1-based value, optional star."""

    parity: str
    value: int
    starred: bool = False

    def key(self) -> tuple[int, int, int]:
        return (0 if self.parity == "E" else 1, self.value, int(self.starred))

    def __str__(self) -> str:
        text = str(self.value) if self.parity == "E" else f"~{self.value}"
        return text + ("*" if self.starred else "")


def _other(parity: str) -> str:
    return "O" if parity == "E" else "E"


class _ANode:
    __slots__ = ("label", "kids")

    def __init__(self, label: AltLabel):
        self.label = label
        self.kids: list["_ANode"] = []

    def freeze(self) -> LabeledTree:
        return LabeledTree(self.label, tuple(k.freeze() for k in self.kids))


def _thaw(tree: LabeledTree) -> _ANode:
    node = _ANode(tree.label)
    node.kids = [_thaw(c) for c in tree.children]
    return node


def _tree_sort_key(tree: LabeledTree):
    return tree.label.key()


@dataclass(frozen=True)
class SmallForest:
    """Unordered collection of small trees; equality is by label multiset."""

    trees: tuple[LabeledTree, ...]

    def __init__(self, trees):
        object.__setattr__(self, "trees", tuple(sorted(trees, key=_tree_sort_key)))

    def __iter__(self):
        return iter(self.trees)

    def __len__(self) -> int:
        return len(self.trees)


def validate_alternating_tree(tree: LabeledTree) -> tuple[int, int]:
    """Check the E-tree hypotheses; return (k, b).

    Even levels must carry exactly the unstarred E labels 1..k with the root
    labelled k; odd levels exactly the unstarred O labels ~1..~(b+1).
    """
    evens: list[AltLabel] = []
    odds: list[AltLabel] = []

    def rec(node: LabeledTree, depth: int) -> None:
        label = node.label
        if not isinstance(label, AltLabel):
            raise DomainError("malformed alternation: every vertex needs a pool label")
        if label.starred:
            raise DomainError("malformed alternation: starred label inside the input tree")
        (evens if depth % 2 == 0 else odds).append(label)
        for child in node.children:
            rec(child, depth + 1)

    rec(tree, 0)
    if any(l.parity != "E" for l in evens) or any(l.parity != "O" for l in odds):
        raise DomainError("malformed alternation: level parity does not alternate E/O")
    k = len(evens)
    b = len(odds) - 1
    if sorted(l.value for l in evens) != list(range(1, k + 1)):
        raise DomainError(f"malformed alternation: even labels must be exactly 1..{k}")
    if odds and sorted(l.value for l in odds) != list(range(1, b + 2)):
        raise DomainError(f"malformed alternation: odd labels must be exactly ~1..~{b + 1}")
    if tree.label.value != k:
        raise DomainError(f"root must carry the maximal even label {k}")
    return k, b


def alt_tree_to_forest(tree: LabeledTree) -> SmallForest:
    """Decompose a labelled set-alternating E-tree into small trees."""
    k, b = validate_alternating_tree(tree)
    root = _thaw(tree)
    i_e = i_o = 0
    small: list[LabeledTree] = []

    def candidates(node: _ANode, out: list[tuple[_ANode, _ANode, int]], parent, slot) -> None:
        if node.kids and all(not c.kids for c in node.kids) and parent is not None:
            out.append((node, parent, slot))
        for i, child in enumerate(node.kids):
            candidates(child, out, node, i)

    while root.kids and any(c.kids for c in root.kids):
        found: list[tuple[_ANode, _ANode, int]] = []
        candidates(root, found, None, -1)
        node, parent, slot = min(found, key=lambda item: item[0].label.key())
        small.append(node.freeze())
        if node.label.parity == "E":
            star = AltLabel("E", k + i_e + 1, starred=True)
            i_e += 1
        else:
            star = AltLabel("O", b + 1 + i_o + 1, starred=True)
            i_o += 1
        parent.kids[slot] = _ANode(star)
    small.append(root.freeze())
    return SmallForest(small)


def _has_star(tree: LabeledTree) -> bool:
    if tree.label.starred:
        return True
    return any(_has_star(c) for c in tree.children)


def _forest_labels(forest: SmallForest) -> list[AltLabel]:
    labels: list[AltLabel] = []

    def rec(node: LabeledTree) -> None:
        labels.append(node.label)
        for child in node.children:
            rec(child)

    for tree in forest:
        rec(tree)
    return labels


def validate_forest(forest: SmallForest) -> tuple[int, int, int, int]:
    """Check the small-forest conditions; return (k, b, l_e, l_o).

    (a) the E-trees have distinct unstarred roots 1..? including the maximal
    even label k; (b) the largest starred O label is a leaf of the k-rooted
    tree; (c) the O-trees have distinct unstarred roots.  Pool consistency
    (each label of the enlarged pools used exactly once, stars forming the
    contiguous blocks the forward map produces) is checked alongside.
    """
    if not len(forest):
        raise DomainError("empty forest")
    for tree in forest:
        if any(c.children for c in tree.children):
            raise DomainError("malformed small tree: more than two levels")
        if not isinstance(tree.label, AltLabel):
            raise DomainError("malformed small tree: unlabelled root")
        if any(c.label.parity != _other(tree.label.parity) for c in tree.children):
            raise DomainError("malformed small tree: leaf parity must oppose the root")

    e_roots = [t.label for t in forest if t.label.parity == "E"]
    o_roots = [t.label for t in forest if t.label.parity == "O"]
    if any(l.starred for l in e_roots):
        raise DomainError("condition (a) violated: starred E root")
    if any(l.starred for l in o_roots):
        raise DomainError("condition (c) violated: starred O root")
    l_e, l_o = len(e_roots), len(o_roots)

    labels = _forest_labels(forest)
    if len(set(labels)) != len(labels):
        raise DomainError("malformed forest: repeated label")
    plain_e = sorted(l.value for l in labels if l.parity == "E" and not l.starred)
    plain_o = sorted(l.value for l in labels if l.parity == "O" and not l.starred)
    star_e = sorted(l.value for l in labels if l.parity == "E" and l.starred)
    star_o = sorted(l.value for l in labels if l.parity == "O" and l.starred)
    k = plain_e[-1] if plain_e else 0
    b = (plain_o[-1] if plain_o else 0) - 1
    if plain_e != list(range(1, k + 1)):
        raise DomainError("condition (a) violated: unstarred E labels must be 1..k")
    if plain_o != list(range(1, b + 2)):
        raise DomainError("condition (c) violated: unstarred O labels must be ~1..~(b+1)")
    if star_e != list(range(k + 1, k + l_e)):
        raise DomainError("condition (a) violated: starred E labels must be (k+1)*..(k+l_e-1)*")
    if star_o != list(range(b + 2, b + 2 + l_o)):
        raise DomainError("condition (c) violated: starred O labels must be ~(b+2)*..~(b+1+l_o)*")
    if k not in (l.value for l in e_roots):
        raise DomainError("condition (a) violated: no small tree rooted at k")
    if l_o:
        top_star = AltLabel("O", b + 1 + l_o, starred=True)
        k_tree = next(t for t in forest if t.label == AltLabel("E", k))
        if all(c.label != top_star for c in k_tree.children):
            raise DomainError(
                "condition (b) violated: the maximal starred O label "
                f"{top_star} must be a leaf of the tree rooted at {k}"
            )
    return k, b, l_e, l_o


def forest_to_alt_tree(forest: SmallForest) -> LabeledTree:
    """Reassemble the unique set-alternating E-tree from a valid forest."""
    validate_forest(forest)
    trees = [_thaw(t) for t in forest]

    def node_has_star(node: _ANode) -> bool:
        return node.label.starred or any(node_has_star(c) for c in node.kids)

    def find_star(nodes: list[_ANode], parity: str):
        best = None
        for tree in nodes:
            for i, child in enumerate(tree.kids):
                lbl = child.label
                if lbl.starred and lbl.parity == parity:
                    if best is None or lbl.value < best[2].value:
                        best = (tree, i, lbl)
        return best

    while len(trees) > 1:
        starless = [t for t in trees if not node_has_star(t)]
        if not starless:
            raise DomainError("condition (a)/(c) violated: every tree still carries a star")
        chosen = min(starless, key=lambda t: t.label.key())
        slot = find_star(trees, chosen.label.parity)
        if slot is None:
            raise DomainError(
                f"condition ({'a' if chosen.label.parity == 'E' else 'c'}) violated: "
                f"no starred slot left for root {chosen.label}"
            )
        holder, i, _ = slot
        holder.kids[i] = chosen
        trees.remove(chosen)
    result = trees[0].freeze()
    validate_alternating_tree(result)
    return result


def enumerate_alt_trees(max_edges: int, max_e: int, max_o: int):
    """All labelled set-alternating E-trees with the given size caps.

    Shapes come from the plane-tree generator; even-level vertices receive
    1..k with the root forced to k, odd-level vertices receive ~1..~o, in
    every possible way.
    """
    for edges in range(1, max_edges + 1):
        for shape in enumerate_trees(edges):
            slots = _parity_slots(shape)
            k = sum(1 for p in slots if p == "E")
            o = len(slots) - k
            if k > max_e or o > max_o:
                continue
            for even_perm in iter_permutations(range(1, k)):
                for odd_perm in iter_permutations(range(1, o + 1)):
                    yield _label_shape(shape, k, list(even_perm), list(odd_perm))


def _parity_slots(shape: PlaneTree) -> list[str]:
    out: list[str] = []

    def rec(node: PlaneTree, depth: int) -> None:
        out.append("E" if depth % 2 == 0 else "O")
        for child in node.children:
            rec(child, depth + 1)

    rec(shape, 0)
    return out


def _label_shape(shape: PlaneTree, k: int, even_values: list[int], odd_values: list[int]) -> LabeledTree:
    even_iter = iter(even_values)
    odd_iter = iter(odd_values)

    def rec(node: PlaneTree, depth: int, is_root: bool) -> LabeledTree:
        if depth % 2 == 0:
            label = AltLabel("E", k if is_root else next(even_iter))
        else:
            label = AltLabel("O", next(odd_iter))
        return LabeledTree(label, tuple(rec(c, depth + 1, False) for c in node.children))

    return rec(shape, 0, True)
