"""Plane trees: codec, exhaustive generation, statistics, and transforms.

A plane tree is an unlabeled rooted tree whose children are linearly ordered;
its size is the edge count n.  The text codec is the balanced-parenthesis
word: each matched pair is an edge, siblings read left to right, and the empty
word is the single-vertex tree.

Terminology used throughout: a leaf is a non-root vertex without children, an
internal vertex is every other vertex (the root included); the height of a
vertex is its edge-distance from the root.
"""
from __future__ import annotations

from collections.abc import Iterator

from .errors import DomainError, ParseError
from .permutations import _check_bound


class PlaneTree:
    """Immutable ordered rooted tree; ``size`` is the number of edges."""

    __slots__ = ("children", "size", "_hash")

    def __init__(self, children: tuple["PlaneTree", ...] = ()):
        kids = tuple(children)
        self.children = kids
        self.size = sum(c.size + 1 for c in kids)
        self._hash = hash(kids)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.size == other.size
            and self.children == other.children
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PlaneTree.parse({to_text(self)!r})"


LEAF = PlaneTree()


def parse_tree(text: str) -> PlaneTree:
    """Parse a balanced-parenthesis word; raises ParseError with the offset."""
    word = text.strip()
    stack: list[list[PlaneTree]] = [[]]
    for i, ch in enumerate(word):
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if len(stack) == 1:
                raise ParseError("unmatched ')'", offset=i)
            kids = stack.pop()
            stack[-1].append(PlaneTree(tuple(kids)))
        else:
            raise ParseError(f"unexpected character {ch!r}", offset=i)
    if len(stack) != 1:
        raise ParseError("unmatched '('", offset=len(word))
    return PlaneTree(tuple(stack[0]))


def to_text(tree: PlaneTree) -> str:
    parts: list[str] = []

    def emit(node: PlaneTree) -> None:
        for child in node.children:
            parts.append("(")
            emit(child)
            parts.append(")")

    emit(tree)
    return "".join(parts)


_TREE_CACHE: dict[int, list[PlaneTree]] = {0: [LEAF]}


def _trees_upto(m: int) -> list[PlaneTree]:
    """Memoized list of all plane trees with m edges (deterministic order)."""
    for k in range(len(_TREE_CACHE), m + 1):
        level: list[PlaneTree] = []
        for j in range(k):
            for first in _TREE_CACHE[j]:
                for rest in _TREE_CACHE[k - 1 - j]:
                    level.append(PlaneTree((first,) + rest.children))
        _TREE_CACHE[k] = level
    return _TREE_CACHE[m]


def enumerate_trees(n: int, bound: int | None = None) -> Iterator[PlaneTree]:
    """Yield every plane tree with n edges exactly once (catalan(n) trees).

    Trees with fewer edges are memoized and shared; the top level streams.
    """
    _check_bound(n, bound)
    if n == 0:
        yield LEAF
        return
    for j in range(n):
        for first in _trees_upto(j):
            for rest in _trees_upto(n - 1 - j):
                yield PlaneTree((first,) + rest.children)


# ---------------------------------------------------------------------------
# vertex walks


def _walk(tree: PlaneTree) -> list[tuple[PlaneTree, int, int, int]]:
    """Preorder list of (node, depth, parent_index, index_in_parent)."""
    out: list[tuple[PlaneTree, int, int, int]] = []
    stack: list[tuple[PlaneTree, int, int, int]] = [(tree, 0, -1, -1)]
    while stack:
        node, depth, parent, slot = stack.pop()
        idx = len(out)
        out.append((node, depth, parent, slot))
        for i in range(len(node.children) - 1, -1, -1):
            stack.append((node.children[i], depth + 1, idx, i))
    return out


def vertex_count(tree: PlaneTree) -> int:
    return tree.size + 1


def heights(tree: PlaneTree) -> tuple[int, ...]:
    """Multiset (ascending) of the root-distances of all n+1 vertices."""
    return tuple(sorted(depth for _, depth, _, _ in _walk(tree)))


def tree_height(tree: PlaneTree) -> int:
    return max(depth for _, depth, _, _ in _walk(tree))


def resolve_vertex(tree: PlaneTree, address: tuple[int, ...]) -> PlaneTree:
    node = tree
    for i in address:
        if not 0 <= i < len(node.children):
            raise DomainError(f"invalid vertex address {address!r}")
        node = node.children[i]
    return node


def rsw(tree: PlaneTree, address: tuple[int, ...]) -> int:
    """Right spanning width at the vertex addressed by child indices.

    Outdegree of the vertex plus, for each proper ancestor, the number of that
    ancestor's children strictly to the right of the path.
    """
    node = tree
    total = 0
    for i in address:
        if not 0 <= i < len(node.children):
            raise DomainError(f"invalid vertex address {address!r}")
        total += len(node.children) - i - 1
        node = node.children[i]
    return total + len(node.children)


def _rsw_all(tree: PlaneTree) -> list[tuple[int, bool]]:
    """Preorder list of (rsw(v), is_leaf(v)); single pass over the tree."""
    out: list[tuple[int, bool]] = []

    def rec(node: PlaneTree, hanging: int, is_root: bool) -> None:
        deg = len(node.children)
        out.append((hanging + deg, deg == 0 and not is_root))
        for i, child in enumerate(node.children):
            rec(child, hanging + deg - i - 1, False)

    rec(tree, 0, True)
    return out


def rsw_multiset(tree: PlaneTree, population: str = "all") -> tuple[int, ...]:
    """Right spanning widths over all vertices, internal vertices, or leaves."""
    pairs = _rsw_all(tree)
    if population == "all":
        vals = [v for v, _ in pairs]
    elif population == "internal":
        vals = [v for v, is_leaf in pairs if not is_leaf]
    elif population == "leaves":
        vals = [v for v, is_leaf in pairs if is_leaf]
    else:
        raise DomainError(f"unknown population {population!r}")
    return tuple(sorted(vals))


def rsw_tree(tree: PlaneTree) -> int:
    """Maximum right spanning width over internal vertices (n >= 1)."""
    if tree.size == 0:
        raise DomainError("rsw of a tree needs at least one edge")
    return max(v for v, is_leaf in _rsw_all(tree) if not is_leaf)


def leaf_heights(tree: PlaneTree) -> tuple[int, ...]:
    return tuple(sorted(depth for node, depth, p, _ in _walk(tree) if not node.children and p >= 0))


def left_paths(tree: PlaneTree) -> tuple[int, ...]:
    """Leaf-anchored path lengths, leaves in depth-first order, sorted desc.

    The first path climbs from the first leaf to the root; each later path
    climbs from its leaf to the first vertex already covered.  The lengths
    partition the edge set, so they sum to n.
    """
    verts = _walk(tree)
    visited = [False] * len(verts)
    visited[0] = True
    lengths: list[int] = []
    for idx, (node, _, parent, _) in enumerate(verts):
        if node.children or parent < 0:
            continue
        steps = 0
        cur = idx
        while not visited[cur]:
            visited[cur] = True
            steps += 1
            cur = verts[cur][2]
        lengths.append(steps)
    return tuple(sorted(lengths, reverse=True))


def right_paths(tree: PlaneTree) -> tuple[int, ...]:
    """Same as left_paths but with leaves taken in mirror order."""
    return left_paths(mirror(tree))


def internal_outdegrees(tree: PlaneTree) -> tuple[int, ...]:
    """Child counts over internal vertices (root included), sorted desc.

    Empty for the single-vertex tree, whose childless root contributes no
    positive part.
    """
    if tree.size == 0:
        return ()
    verts = _walk(tree)
    degs = [len(node.children) for node, _, parent, _ in verts if node.children or parent < 0]
    return tuple(sorted(degs, reverse=True))


def level_profile(tree: PlaneTree) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(odd-level outdegrees with zeros kept, even-level degrees), sorted desc.

    The degree of a non-root even vertex counts its parent edge; the root's
    degree is its child count.  Every edge meets exactly one even-level
    vertex, so the even degrees sum to n (empty for the single-vertex tree).
    """
    odd: list[int] = []
    even: list[int] = []
    for node, depth, parent, _ in _walk(tree):
        if depth % 2 == 1:
            odd.append(len(node.children))
        else:
            deg = len(node.children) + (0 if parent < 0 else 1)
            if deg > 0:
                even.append(deg)
    return tuple(sorted(odd, reverse=True)), tuple(sorted(even, reverse=True))


def level_degree_distributions(tree: PlaneTree) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(even-level, odd-level) graph-degree multisets, sorted desc."""
    even: list[int] = []
    odd: list[int] = []
    for node, depth, parent, _ in _walk(tree):
        deg = len(node.children) + (0 if parent < 0 else 1)
        (even if depth % 2 == 0 else odd).append(deg)
    return tuple(sorted(even, reverse=True)), tuple(sorted(odd, reverse=True))


def level_populations(tree: PlaneTree) -> tuple[int, int]:
    """(#even-level vertices, #odd-level vertices)."""
    even = odd = 0
    for _, depth, _, _ in _walk(tree):
        if depth % 2 == 0:
            even += 1
        else:
            odd += 1
    return even, odd


def level_outdegree_maxima(tree: PlaneTree) -> tuple[int, int]:
    """(max outdegree on even levels, max outdegree on odd levels); 0 if none."""
    even = [0]
    odd = [0]
    for node, depth, _, _ in _walk(tree):
        (even if depth % 2 == 0 else odd).append(len(node.children))
    return max(even), max(odd)


def mirror(tree: PlaneTree) -> PlaneTree:
    """Reverse child order recursively (an involution)."""
    return PlaneTree(tuple(mirror(c) for c in reversed(tree.children)))


def level_switch(tree: PlaneTree) -> PlaneTree:
    """Re-root at the leftmost child of the root, swapping level parities.

    The old root, keeping its remaining children, becomes the leftmost child
    of the lifted vertex; with this convention the transform is an involution.
    Even- and odd-level vertex populations swap, as do the level-wise degree
    distributions.
    """
    if not tree.children:
        raise DomainError("level_switch needs a root with at least one child")
    lifted = tree.children[0]
    old_root = PlaneTree(tree.children[1:])
    return PlaneTree((old_root,) + lifted.children)


def stats_jsonable(tree: PlaneTree) -> dict:
    odd_out, even_deg = level_profile(tree)
    out = {
        "heights": list(heights(tree)),
        "rsw_all": list(rsw_multiset(tree, "all")),
        "rsw_internal": list(rsw_multiset(tree, "internal")),
        "rsw_leaves": list(rsw_multiset(tree, "leaves")),
        "left_paths": list(left_paths(tree)),
        "right_paths": list(right_paths(tree)),
        "internal_outdegrees": list(internal_outdegrees(tree)),
        "even_degrees": list(even_deg),
        "odd_outdegrees": list(odd_out),
        "tree_height": tree_height(tree),
    }
    if tree.size >= 1:
        out["rsw_tree"] = rsw_tree(tree)
    return out
