"""Request handlers behind both the HTTP endpoints and the CLI.

Handlers take validated request models and return response models, raising the
package's typed errors (DomainError / ParseError / ResourceLimitError); the
two front ends translate those uniformly.
"""
from __future__ import annotations

from ..alternating import AltLabel, SmallForest, alt_tree_to_forest, forest_to_alt_tree
from ..bijections import (
    LabeledTree,
    jr_perm_to_tree,
    jr_tree_to_perm,
    phi_perm_to_tree,
    phi_tree_to_perm,
)
from ..counting import (
    binomial,
    bounded_compositions,
    catalan,
    count_bounded_ir,
    count_bounded_runs,
    count_consec_pattern,
    count_start_descents,
    count_start_end_descents,
    gen_narayana,
    kappa,
    narayana,
)
from ..decompositions import decompose, length_distribution
from ..errors import DomainError
from ..oracle import run_claim
from ..permutations import Permutation, enumerate_avoiders
from ..trees import (
    PlaneTree,
    enumerate_trees,
    heights,
    internal_outdegrees,
    leaf_heights,
    left_paths,
    level_profile,
    level_switch,
    mirror,
    parse_tree,
    right_paths,
    rsw_multiset,
    rsw_tree,
    to_text,
    tree_height,
)
from . import models


# --- codecs between wire models and core objects ---------------------------


def labeled_to_model(tree: LabeledTree) -> models.LabeledNode:
    return models.LabeledNode(
        label=tree.label, children=[labeled_to_model(c) for c in tree.children]
    )


def alt_to_model(tree: LabeledTree) -> models.AltNode:
    label: AltLabel = tree.label
    return models.AltNode(
        label=label.value,
        parity=label.parity,
        starred=label.starred,
        children=[alt_to_model(c) for c in tree.children],
    )


def model_to_alt(node: models.AltNode) -> LabeledTree:
    return LabeledTree(
        AltLabel(node.parity, node.label, node.starred),
        tuple(model_to_alt(c) for c in node.children),
    )


# --- handlers ---------------------------------------------------------------


def handle_decompose(req: models.DecomposeRequest) -> models.DecomposeResponse:
    pi = Permutation.parse(req.perm)
    dec = decompose(pi, req.method)
    return models.DecomposeResponse(
        kind=dec.kind,
        segments=[list(s.values) for s in dec.segments],
        positions=[list(s.positions) for s in dec.segments],
        distribution=list(length_distribution(dec)),
    )


def handle_map(req: models.MapRequest) -> models.MapResponse:
    b = req.bijection
    if b == "jr":
        tree = _require_tree(req)
        return models.MapResponse(bijection=b, perm=str(jr_tree_to_perm(tree)))
    if b == "jr-inv":
        pi = _require_perm(req)
        return models.MapResponse(bijection=b, tree=to_text(jr_perm_to_tree(pi)))
    if b == "phi":
        pi = _require_perm(req)
        labeled = phi_perm_to_tree(pi)
        return models.MapResponse(
            bijection=b, labeled_tree=labeled_to_model(labeled), tree=to_text(labeled.shape())
        )
    if b == "phi-inv":
        tree = _require_tree(req)
        return models.MapResponse(bijection=b, perm=str(phi_tree_to_perm(tree)))
    if b == "mirror":
        tree = _require_tree(req)
        return models.MapResponse(bijection=b, tree=to_text(mirror(tree)))
    if b == "level-switch":
        tree = _require_tree(req)
        return models.MapResponse(bijection=b, tree=to_text(level_switch(tree)))
    if b == "alt-to-forest":
        if req.alt_tree is None:
            raise DomainError("alt-to-forest needs an alt_tree payload")
        forest = alt_tree_to_forest(model_to_alt(req.alt_tree))
        return models.MapResponse(bijection=b, forest=[alt_to_model(t) for t in forest])
    if b == "forest-to-alt":
        if req.forest is None:
            raise DomainError("forest-to-alt needs a forest payload")
        tree = forest_to_alt_tree(SmallForest([model_to_alt(t) for t in req.forest]))
        return models.MapResponse(bijection=b, alt_tree=alt_to_model(tree))
    raise DomainError(f"unknown bijection {b!r}")


def _require_perm(req: models.MapRequest) -> Permutation:
    if req.perm is None:
        raise DomainError(f"bijection {req.bijection!r} needs a perm payload")
    return Permutation.parse(req.perm)


def _require_tree(req: models.MapRequest) -> PlaneTree:
    if req.tree is None:
        raise DomainError(f"bijection {req.bijection!r} needs a tree payload")
    return parse_tree(req.tree)


def handle_stats(req: models.StatsRequest) -> models.StatsResponse:
    tree = parse_tree(req.tree)
    out = models.StatsResponse(tree=to_text(tree))
    want = req.what
    if want in ("heights", "all"):
        out.heights = list(heights(tree))
        out.tree_height = tree_height(tree)
    if want in ("rsw", "all"):
        out.rsw_all = list(rsw_multiset(tree, "all"))
        out.rsw_internal = list(rsw_multiset(tree, "internal"))
        out.rsw_leaves = list(rsw_multiset(tree, "leaves"))
        if tree.size >= 1:
            out.rsw_tree = rsw_tree(tree)
    if want in ("paths", "all"):
        out.left_paths = list(left_paths(tree))
        out.right_paths = list(right_paths(tree))
        out.internal_outdegrees = list(internal_outdegrees(tree))
    if want in ("levels", "all"):
        odd_out, even_deg = level_profile(tree)
        out.odd_outdegrees = list(odd_out)
        out.even_degrees = list(even_deg)
    return out


FORMULA_PARAMS = {
    "binomial": ("a", "b"),
    "catalan": ("n",),
    "narayana": ("n", "k"),
    "gen-narayana": ("i", "n", "j"),
    "kappa": ("t", "n", "m"),
    "bounded-compositions": ("n", "k", "w"),
    "start-descents": ("n", "i", "k"),
    "start-end-descents": ("n", "i", "j", "k"),
    "bounded-runs": ("n", "p", "q", "h", "l"),
    "bounded-ir": ("n", "h"),
    "consec-pattern": ("n", "k", "m"),
}

_FORMULA_FNS = {
    "binomial": binomial,
    "catalan": catalan,
    "narayana": narayana,
    "gen-narayana": gen_narayana,
    "kappa": kappa,
    "bounded-compositions": bounded_compositions,
    "start-descents": count_start_descents,
    "start-end-descents": count_start_end_descents,
    "bounded-runs": count_bounded_runs,
    "bounded-ir": count_bounded_ir,
    "consec-pattern": count_consec_pattern,
}


_ALL_SYMBOLS = ("n", "i", "j", "k", "p", "q", "h", "l", "m", "t", "w", "a", "b")


def handle_count(req: models.CountRequest) -> models.CountResponse:
    names = FORMULA_PARAMS[req.formula]
    args: list[int] = []
    params: dict[str, int] = {}
    for name in names:
        value = getattr(req, name)
        if value is None:
            raise DomainError(f"formula {req.formula!r} needs parameter --{name}")
        args.append(value)
        params[name] = value
    for name in _ALL_SYMBOLS:
        if name not in names and getattr(req, name) is not None:
            raise DomainError(f"formula {req.formula!r} does not take parameter --{name}")
    value = _FORMULA_FNS[req.formula](*args)
    return models.CountResponse(formula=req.formula, params=params, value=value)


def _parse_distribution(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise DomainError(f"bad distribution filter value {text!r}") from exc
    return tuple(sorted(parts, reverse=True))


def _avoider_predicate(filters: dict[str, str]):
    from ..decompositions import drd, ird, lde, vcis
    from ..permutations import descent_set

    checks = []
    for key, raw in sorted(filters.items()):
        if key in ("ird-dist", "drd-dist", "vcis-dist", "lde-dist"):
            want = _parse_distribution(raw)
            fn = {"ird-dist": ird, "drd-dist": drd, "vcis-dist": vcis, "lde-dist": lde}[key]
            checks.append(lambda p, fn=fn, want=want: length_distribution(fn(p)) == want)
        elif key == "descents":
            want = int(raw)
            checks.append(lambda p, want=want: len(descent_set(p)) == want)
        elif key == "start":
            want = int(raw)
            checks.append(lambda p, want=want: len(p) > 0 and p[0] == want)
        elif key == "end":
            want = int(raw)
            checks.append(lambda p, want=want: len(p) > 0 and p[-1] == want)
        else:
            raise DomainError(f"unknown avoider filter {key!r}")
    return lambda p: all(c(p) for c in checks)


def _tree_predicate(filters: dict[str, str]):
    checks = []
    for key, raw in sorted(filters.items()):
        if key == "leaves":
            want = int(raw)
            checks.append(lambda t, want=want: len(leaf_heights(t)) == want)
        elif key == "height":
            want = int(raw)
            checks.append(lambda t, want=want: tree_height(t) == want)
        elif key == "rsw":
            want = int(raw)
            checks.append(lambda t, want=want: t.size >= 1 and rsw_tree(t) == want)
        elif key == "internal-outdegrees":
            want = _parse_distribution(raw)
            checks.append(lambda t, want=want: internal_outdegrees(t) == want)
        elif key == "left-paths":
            want = _parse_distribution(raw)
            checks.append(lambda t, want=want: left_paths(t) == want)
        elif key == "even-degrees":
            want = _parse_distribution(raw)
            checks.append(lambda t, want=want: level_profile(t)[1] == want)
        elif key == "odd-outdegrees":
            want = _parse_distribution(raw)
            checks.append(lambda t, want=want: level_profile(t)[0] == want)
        else:
            raise DomainError(f"unknown tree filter {key!r}")
    return lambda t: all(c(t) for c in checks)


def handle_enumerate(req: models.EnumerateRequest) -> models.EnumerateResponse:
    items: list[str] = []
    count = 0
    truncated = False
    if req.what == "avoiders":
        keep = _avoider_predicate(req.filters)
        for p in enumerate_avoiders(req.n):
            if keep(p):
                count += 1
                if req.limit is None or len(items) < req.limit:
                    items.append(str(p))
                else:
                    truncated = True
    else:
        keep = _tree_predicate(req.filters)
        for t in enumerate_trees(req.n):
            if keep(t):
                count += 1
                if req.limit is None or len(items) < req.limit:
                    items.append(to_text(t))
                else:
                    truncated = True
    return models.EnumerateResponse(
        what=req.what, n=req.n, count=count, items=items, truncated=truncated
    )


def handle_verify(req: models.VerifyRequest) -> models.VerifyResponse:
    try:
        report = run_claim(req.claim, req.max_n, req.shards, req.bound)
    except KeyError as exc:
        raise DomainError(str(exc)) from exc
    return models.VerifyResponse(
        report=models.ReportPayload(**report.payload()),
        elapsed_seconds=report.elapsed_seconds,
    )
