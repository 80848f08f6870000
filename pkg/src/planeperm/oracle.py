"""Exhaustive desk-scale verification of every structural claim.

Each checker enumerates its whole object class up to a bound, tallies or
asserts, and returns a VerificationReport whose JSON payload is byte-stable:
fixed iteration order, sorted keys, no timestamps inside the payload (wall
time is carried outside it).  Enumeration splits into shards by item index
modulo the shard count; per-shard tallies are pure and merged by commutative
addition, so sharded and serial runs produce identical payloads.
"""
from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .alternating import alt_tree_to_forest, enumerate_alt_trees, forest_to_alt_tree, validate_forest
from .bijections import (
    LabeledTree,
    jr_labeled_tree,
    jr_tree_to_perm,
    labeled_vertices,
    phi_canonical_labeling,
    phi_perm_to_tree,
    phi_tree_to_perm,
    sibling_label_groups,
)
from .counting import (
    catalan,
    count_bounded_ir,
    count_bounded_runs,
    count_consec_pattern,
    count_start_descents,
    count_start_end_descents,
    lemma_a1_check,
)
from .decompositions import drd, ird, lde, length_distribution, vcis
from .errors import ResourceLimitError
from .permutations import (
    Permutation,
    avoids_132,
    consecutive_occurrences,
    descent_set,
    enumerate_avoiders,
    lis_from,
    maximal_run_drop_count,
)
from .trees import (
    enumerate_trees,
    heights,
    internal_outdegrees,
    leaf_heights,
    left_paths,
    level_outdegree_maxima,
    level_populations,
    level_profile,
    right_paths,
    rsw_multiset,
    rsw_tree,
    tree_height,
)

MAX_WITNESSES = 10


@dataclass
class VerificationReport:
    claim: str
    n: int
    checked: int
    status: str
    witnesses: list[dict]
    elapsed_seconds: float = 0.0

    def payload(self) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "checked": self.checked,
            "status": self.status,
            "witnesses": self.witnesses,
        }

    def to_json(self) -> str:
        return json.dumps(self.payload(), sort_keys=True, separators=(",", ":"))

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _finish(claim: str, n: int, checked: int, witnesses: list[dict], t0: float) -> VerificationReport:
    witnesses = sorted(witnesses, key=lambda w: json.dumps(w, sort_keys=True))[:MAX_WITNESSES]
    return VerificationReport(
        claim=claim,
        n=n,
        checked=checked,
        status="pass" if not witnesses else "fail",
        witnesses=witnesses,
        elapsed_seconds=time.perf_counter() - t0,
    )


def _shard_results(worker: Callable[[int], object], shards: int) -> list:
    if shards <= 1:
        return [worker(0)]
    with ThreadPoolExecutor(max_workers=shards) as pool:
        return list(pool.map(worker, range(shards)))


def _sharded(stream_factory: Callable[[], Iterable], shards: int, sid: int) -> Iterable:
    for idx, obj in enumerate(stream_factory()):
        if idx % shards == sid:
            yield obj


def _merge_counters(parts: list[Counter]) -> Counter:
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    return total


# ---------------------------------------------------------------------------
# catalan counts


def verify_catalan_counts(n_max: int = 12, shards: int = 1) -> VerificationReport:
    t0 = time.perf_counter()
    checked = 0
    witnesses: list[dict] = []
    for n in range(n_max + 1):
        avoider_count = sum(
            _shard_results(
                lambda sid: sum(1 for _ in _sharded(lambda: enumerate_avoiders(n), shards, sid)),
                shards,
            )
        )
        tree_count = sum(
            _shard_results(
                lambda sid: sum(1 for _ in _sharded(lambda: enumerate_trees(n), shards, sid)),
                shards,
            )
        )
        expected = catalan(n)
        checked += avoider_count + tree_count
        if not avoider_count == tree_count == expected:
            witnesses.append(
                {"n": n, "avoiders": avoider_count, "trees": tree_count, "catalan": expected}
            )
    return _finish("catalan-counts", n_max, checked, witnesses, t0)


# ---------------------------------------------------------------------------
# four-way equidistribution of decomposition length profiles


def _profile_counters(n: int, shards: int) -> tuple[Counter, Counter, int]:
    def worker(sid: int) -> tuple[Counter, Counter, int]:
        run_env: Counter = Counter()
        seg_drop: Counter = Counter()
        seen = 0
        for p in _sharded(lambda: enumerate_avoiders(n), shards, sid):
            lam = length_distribution(ird(p))
            mu = length_distribution(lde(p))
            run_env[(lam, mu)] += 1
            seg_drop[(length_distribution(vcis(p)), length_distribution(drd(p)))] += 1
            seen += 1
        return run_env, seg_drop, seen

    parts = _shard_results(worker, shards)
    return (
        _merge_counters([p[0] for p in parts]),
        _merge_counters([p[1] for p in parts]),
        sum(p[2] for p in parts),
    )


def verify_equidistribution(n_max: int = 9, shards: int = 1) -> VerificationReport:
    """For every partition pair, the four filtered classes have equal size."""
    t0 = time.perf_counter()
    checked = 0
    witnesses: list[dict] = []
    for n in range(n_max + 1):
        run_env, seg_drop, seen = _profile_counters(n, shards)
        checked += seen
        keys = set(run_env) | {(mu, lam) for lam, mu in run_env}
        keys |= set(seg_drop) | {(mu, lam) for lam, mu in seg_drop}
        for lam, mu in sorted(keys):
            counts = (
                run_env.get((lam, mu), 0),
                run_env.get((mu, lam), 0),
                seg_drop.get((lam, mu), 0),
                seg_drop.get((mu, lam), 0),
            )
            if len(set(counts)) != 1:
                witnesses.append(
                    {
                        "n": n,
                        "lambda": list(lam),
                        "mu": list(mu),
                        "counts": list(counts),
                    }
                )
    return _finish("equidistribution", n_max, checked, witnesses, t0)


# ---------------------------------------------------------------------------
# heights vs right spanning widths


def verify_heights_rsw(n_max: int = 10, shards: int = 1) -> VerificationReport:
    """Heights and right spanning widths are equidistributed (full, refined,
    and at the level of tree maxima)."""
    t0 = time.perf_counter()
    checked = 0
    witnesses: list[dict] = []
    for n in range(1, n_max + 1):

        def worker(sid: int):
            height_ms: Counter = Counter()
            rsw_ms: Counter = Counter()
            leaf_ms: Counter = Counter()
            internal_ms: Counter = Counter()
            max_height: Counter = Counter()
            max_rsw: Counter = Counter()
            seen = 0
            for tree in _sharded(lambda: enumerate_trees(n), shards, sid):
                height_ms[heights(tree)] += 1
                rsw_ms[rsw_multiset(tree, "all")] += 1
                leaf_ms[leaf_heights(tree)] += 1
                internal_ms[rsw_multiset(tree, "internal")] += 1
                max_height[tree_height(tree)] += 1
                max_rsw[rsw_tree(tree)] += 1
                seen += 1
            return height_ms, rsw_ms, leaf_ms, internal_ms, max_height, max_rsw, seen

        parts = _shard_results(worker, shards)
        merged = [_merge_counters([p[i] for p in parts]) for i in range(6)]
        checked += sum(p[6] for p in parts)
        pairs = [
            ("full-multiset", merged[0], merged[1]),
            ("refined-leaves-vs-internal", merged[2], merged[3]),
            ("tree-maxima", merged[4], merged[5]),
        ]
        for name, left, right in pairs:
            for key in sorted(set(left) | set(right)):
                if left.get(key, 0) != right.get(key, 0):
                    witnesses.append(
                        {
                            "n": n,
                            "statement": name,
                            "key": list(key) if isinstance(key, tuple) else key,
                            "height_side": left.get(key, 0),
                            "rsw_side": right.get(key, 0),
                        }
                    )
    return _finish("heights-rsw", n_max, checked, witnesses, t0)


# ---------------------------------------------------------------------------
# joint fiber/path vs level profile identity


def verify_chen_identity(n_max: int = 10, shards: int = 1) -> VerificationReport:
    """Joint law of (internal outdegrees, left paths) matches the joint law of
    (odd-level outdegrees + 1, even-level degrees)."""
    t0 = time.perf_counter()
    checked = 0
    witnesses: list[dict] = []
    for n in range(1, n_max + 1):

        def worker(sid: int):
            vertical: Counter = Counter()
            levelled: Counter = Counter()
            seen = 0
            for tree in _sharded(lambda: enumerate_trees(n), shards, sid):
                alpha = internal_outdegrees(tree)
                beta = left_paths(tree)
                vertical[(alpha, beta)] += 1
                odd_out, even_deg = level_profile(tree)
                shifted = tuple(sorted((d + 1 for d in odd_out), reverse=True))
                levelled[(shifted, even_deg)] += 1
                seen += 1
            return vertical, levelled, seen

        parts = _shard_results(worker, shards)
        vertical = _merge_counters([p[0] for p in parts])
        levelled = _merge_counters([p[1] for p in parts])
        checked += sum(p[2] for p in parts)
        for key in sorted(set(vertical) | set(levelled)):
            if vertical.get(key, 0) != levelled.get(key, 0):
                alpha, beta = key
                witnesses.append(
                    {
                        "n": n,
                        "alpha": list(alpha),
                        "beta": list(beta),
                        "vertical": vertical.get(key, 0),
                        "level": levelled.get(key, 0),
                    }
                )
    return _finish("level-joint", n_max, checked, witnesses, t0)


# ---------------------------------------------------------------------------
# structural lemmas


def _structural_failures(p: Permutation) -> list[str]:
    """Names of the per-permutation structural checks that fail (avoiders)."""
    bad: list[str] = []
    desc = descent_set(p)
    seg = vcis(p)
    if len(ird(p).segments) != len(desc):
        bad.append("ird-run-count-equals-descents")
    if len(seg.segments) != len(desc):
        bad.append("vcis-count-equals-descents")
    positions = [s.positions for s in seg.segments]
    for (pa, pb) in itertools.combinations(positions, 2):
        labels = sorted([(pos, 0) for pos in pa] + [(pos, 1) for pos in pb])
        flips = sum(1 for x, y in zip(labels, labels[1:]) if x[1] != y[1])
        if flips >= 3:
            bad.append("vcis-non-crossing")
            break
    for sa, sb in itertools.combinations(seg.segments, 2):
        if not (_nested_below(sa, sb) or _nested_below(sb, sa) or _left_above(sa, sb) or _left_above(sb, sa)):
            bad.append("vcis-nesting-order")
            break

    labeled = jr_labeled_tree(p)
    pos_of = {v: i + 1 for i, v in enumerate(p.values)}
    for node, depth, is_leaf in labeled_vertices(labeled):
        if is_leaf and lis_from(p, pos_of[node.label]) != depth:
            bad.append("jr-leaf-height-equals-lis")
            break
    shape = labeled.shape()
    env = lde(p)
    if internal_outdegrees(shape) != length_distribution(env):
        bad.append("jr-outdegrees-equal-envelope")
    if right_paths(shape) != length_distribution(ird(p)):
        bad.append("jr-right-paths-equal-runs")
    groups = sorted(tuple(sorted(s.values)) for s in env.segments)
    if sibling_label_groups(labeled) != groups:
        bad.append("jr-sibling-groups-equal-envelope-groups")

    phi_tree = phi_perm_to_tree(p)
    if internal_outdegrees(phi_tree.shape()) != length_distribution(seg):
        bad.append("phi-outdegrees-equal-segments")
    if left_paths(phi_tree.shape()) != length_distribution(drd(p)):
        bad.append("phi-left-paths-equal-decreasing-runs")
    return bad


def _nested_below(inner, outer) -> bool:
    """inner sits between two consecutive positions of outer, values below."""
    lo, hi = None, None
    for a, b in zip(outer.positions, outer.positions[1:]):
        if a < inner.positions[0] and inner.positions[-1] < b:
            lo, hi = a, b
            break
    if lo is None:
        return False
    return max(inner.values) < min(outer.values)


def _left_above(left, right) -> bool:
    """left lies entirely before right starts, with larger values."""
    return left.positions[-1] < right.positions[0] and min(left.values) > max(right.values)


def verify_structural_lemmas(n_max: int = 9, shards: int = 1) -> VerificationReport:
    t0 = time.perf_counter()
    checked = 0
    witnesses: list[dict] = []

    # run-count = descent count over whole symmetric groups (not just avoiders)
    for n in range(min(n_max, 8) + 1):

        def worker(sid: int):
            bad: list[str] = []
            seen = 0
            stream = lambda: itertools.permutations(range(1, n + 1))
            for vals in _sharded(stream, shards, sid):
                p = Permutation(vals)
                if len(ird(p).segments) != len(descent_set(p)):
                    bad.append(str(p))
                seen += 1
            return bad, seen

        parts = _shard_results(worker, shards)
        checked += sum(p[1] for p in parts)
        for part in parts:
            witnesses.extend(
                {"n": n, "perm": w, "check": "ird-run-count-equals-descents"} for w in part[0]
            )

    # the classic witness that segment-count = descents needs avoidance
    out_of_class = Permutation([1, 5, 3, 6, 4, 2])
    checked += 1
    if avoids_132(out_of_class) or len(vcis(out_of_class).segments) == len(descent_set(out_of_class)):
        witnesses.append(
            {"n": 6, "perm": str(out_of_class), "check": "non-avoider-counterexample-confirmed"}
        )

    for n in range(n_max + 1):

        def worker(sid: int):
            bad: list[tuple[str, str]] = []
            seen = 0
            for p in _sharded(lambda: enumerate_avoiders(n), shards, sid):
                for name in _structural_failures(p):
                    bad.append((str(p), name))
                seen += 1
            return bad, seen

        parts = _shard_results(worker, shards)
        checked += sum(p[1] for p in parts)
        for part in parts:
            witnesses.extend({"n": n, "perm": w, "check": name} for w, name in part[0])

    return _finish("structural-lemmas", n_max, checked, witnesses, t0)


# ---------------------------------------------------------------------------
# closed forms vs enumeration

FORMULA_IDS = (
    "start-descents",
    "start-end-descents",
    "bounded-runs",
    "bounded-ir",
    "consec-pattern",
)


def _formula_pass(n: int, shards: int):
    def worker(sid: int):
        start_desc: Counter = Counter()
        start_end: Counter = Counter()
        run_keys: Counter = Counter()
        consec: dict[int, Counter] = {3: Counter(), 4: Counter(), 5: Counter()}
        seen = 0
        for p in _sharded(lambda: enumerate_avoiders(n), shards, sid):
            k = len(descent_set(p))
            start_desc[(p[0], k)] += 1
            start_end[(p[0], p[-1], k)] += 1
            ir_lens = [len(s) for s in ird(p).segments]
            env_lens = [len(s) for s in lde(p).segments]
            run_keys[
                (
                    len(ir_lens),
                    len(env_lens),
                    ir_lens[-1],
                    max(ir_lens[:-1], default=0),
                    max(env_lens, default=0),
                )
            ] += 1
            for kk in (3, 4, 5):
                pattern = Permutation(list(range(2, kk + 1)) + [1])
                windows = consecutive_occurrences(p, pattern)
                if windows != maximal_run_drop_count(p, kk):
                    consec[kk][("window-vs-maximal-mismatch", str(p))] += 1
                consec[kk][windows] += 1
            seen += 1
        return start_desc, start_end, run_keys, consec, seen

    parts = _shard_results(worker, shards)
    start_desc = _merge_counters([p[0] for p in parts])
    start_end = _merge_counters([p[1] for p in parts])
    run_keys = _merge_counters([p[2] for p in parts])
    consec = {kk: _merge_counters([p[3][kk] for p in parts]) for kk in (3, 4, 5)}
    seen = sum(p[4] for p in parts)
    return start_desc, start_end, run_keys, consec, seen


def _tree_run_keys(n: int, shards: int) -> Counter:
    def worker(sid: int):
        keys: Counter = Counter()
        for tree in _sharded(lambda: enumerate_trees(n), shards, sid):
            evens, odds = level_populations(tree)
            max_even, max_odd = level_outdegree_maxima(tree)
            keys[(evens, odds, max_even, max_odd)] += 1
        return keys

    return _merge_counters(_shard_results(worker, shards))


def verify_formulas(
    n_max: int = 9, shards: int = 1, which: tuple[str, ...] = FORMULA_IDS
) -> VerificationReport:
    t0 = time.perf_counter()
    checked = 0
    witnesses: list[dict] = []
    selected = set(which)
    claim = "formulas" if selected == set(FORMULA_IDS) else "formula-" + "+".join(sorted(selected))

    for n in range(1, n_max + 1):
        start_desc, start_end, run_keys, consec, seen = _formula_pass(n, shards)
        checked += seen

        if "start-descents" in selected:
            for i in range(1, n + 1):
                for k in range(1, n + 1):
                    expected = start_desc.get((i, k), 0)
                    got = count_start_descents(n, i, k)
                    checked += 1
                    if got != expected:
                        witnesses.append(
                            {
                                "formula": "start-descents",
                                "n": n,
                                "params": {"i": i, "k": k},
                                "enumerated": expected,
                                "closed_form": got,
                            }
                        )

        if "start-end-descents" in selected and n >= 2:
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j:
                        continue
                    for k in range(1, n + 1):
                        expected = start_end.get((i, j, k), 0)
                        got = count_start_end_descents(n, i, j, k)
                        checked += 1
                        if got != expected:
                            witnesses.append(
                                {
                                    "formula": "start-end-descents",
                                    "n": n,
                                    "params": {"i": i, "j": j, "k": k},
                                    "enumerated": expected,
                                    "closed_form": got,
                                }
                            )

        if "bounded-runs" in selected:
            tree_keys = _tree_run_keys(n, shards)
            checked += sum(tree_keys.values())
            for p_runs in range(n + 2):
                q_groups = n + 1 - p_runs
                if q_groups < 0:
                    continue
                for h in range(n + 1):
                    for l in range(n + 1):
                        perm_side = sum(
                            cnt
                            for (pp, qq, last, others, env), cnt in run_keys.items()
                            if pp == p_runs
                            and qq == q_groups
                            and last <= h
                            and others <= h + 1
                            and env <= l + 1
                        )
                        tree_side = sum(
                            cnt
                            for (ev, od, max_even, max_odd), cnt in tree_keys.items()
                            if ev == p_runs and od == q_groups and max_even <= h and max_odd <= l
                        )
                        got = count_bounded_runs(n, p_runs, q_groups, h, l)
                        checked += 1
                        if not perm_side == tree_side == got:
                            witnesses.append(
                                {
                                    "formula": "bounded-runs",
                                    "n": n,
                                    "params": {"p": p_runs, "q": q_groups, "h": h, "l": l},
                                    "perm_side": perm_side,
                                    "tree_side": tree_side,
                                    "closed_form": got,
                                }
                            )

        if "bounded-ir" in selected:
            for h in range(1, n + 1):
                expected = sum(
                    cnt
                    for (_, _, last, others, _), cnt in run_keys.items()
                    if last <= h and others <= h + 1
                )
                got = count_bounded_ir(n, h)
                checked += 1
                if got != expected:
                    witnesses.append(
                        {
                            "formula": "bounded-ir",
                            "n": n,
                            "params": {"h": h},
                            "enumerated": expected,
                            "closed_form": got,
                        }
                    )

        if "consec-pattern" in selected:
            for kk in (3, 4, 5):
                tally = consec[kk]
                for key in tally:
                    if isinstance(key, tuple):
                        witnesses.append(
                            {
                                "formula": "consec-pattern",
                                "n": n,
                                "params": {"k": kk},
                                "detail": list(key),
                            }
                        )
                total = 0
                for m in range(n + 1):
                    expected = tally.get(m, 0)
                    got = count_consec_pattern(n, kk, m)
                    total += got
                    checked += 1
                    if got != expected:
                        witnesses.append(
                            {
                                "formula": "consec-pattern",
                                "n": n,
                                "params": {"k": kk, "m": m},
                                "enumerated": expected,
                                "closed_form": got,
                            }
                        )
                if total != catalan(n):
                    witnesses.append(
                        {
                            "formula": "consec-pattern",
                            "n": n,
                            "params": {"k": kk},
                            "detail": f"total mass {total} != catalan {catalan(n)}",
                        }
                    )

    return _finish(claim, n_max, checked, witnesses, t0)


# ---------------------------------------------------------------------------
# round trips


def _alt_profile(tree: LabeledTree):
    root_deg = len(tree.children)
    even_internal: list[int] = []
    odd_internal: list[int] = []

    def rec(node: LabeledTree, depth: int) -> None:
        if node.children and depth > 0:
            (even_internal if depth % 2 == 0 else odd_internal).append(len(node.children))
        for child in node.children:
            rec(child, depth + 1)

    rec(tree, 0)
    return root_deg, sorted(even_internal), sorted(odd_internal)


def verify_roundtrips(
    n_max: int = 9,
    shards: int = 1,
    which: tuple[str, ...] = ("jr", "phi", "alt"),
    alt_edges: int = 6,
) -> VerificationReport:
    t0 = time.perf_counter()
    checked = 0
    witnesses: list[dict] = []
    selected = set(which)
    if selected == {"jr", "phi", "alt"}:
        claim, reported_n = "roundtrips", n_max
    elif selected == {"alt"}:
        claim, reported_n = "alt-roundtrips", alt_edges
    else:
        claim, reported_n = "roundtrips-" + "+".join(sorted(selected)), n_max

    if selected & {"jr", "phi"}:
        from .bijections import jr_perm_to_tree
        from .trees import to_text

        for n in range(n_max + 1):

            def worker(sid: int):
                bad: list[dict] = []
                jr_images: set = set()
                phi_images: set = set()
                seen = 0
                for p in _sharded(lambda: enumerate_avoiders(n), shards, sid):
                    if "jr" in selected:
                        tree = jr_perm_to_tree(p)
                        jr_images.add(tree)
                        if jr_tree_to_perm(tree) != p:
                            bad.append({"n": n, "perm": str(p), "check": "jr-round-trip"})
                    if "phi" in selected:
                        labeled = phi_perm_to_tree(p)
                        shape = labeled.shape()
                        phi_images.add(shape)
                        if phi_tree_to_perm(shape) != p:
                            bad.append({"n": n, "perm": str(p), "check": "phi-round-trip"})
                        if phi_canonical_labeling(shape) != labeled:
                            bad.append({"n": n, "perm": str(p), "check": "phi-label-canonicity"})
                    seen += 1
                return bad, jr_images, phi_images, seen

            parts = _shard_results(worker, shards)
            for part in parts:
                witnesses.extend(part[0])
            checked += sum(p[3] for p in parts)
            expected = catalan(n)
            if "jr" in selected:
                image = set().union(*(p[1] for p in parts))
                if len(image) != expected:
                    witnesses.append({"n": n, "check": "jr-image-cardinality", "got": len(image)})
            if "phi" in selected:
                image = set().union(*(p[2] for p in parts))
                if len(image) != expected:
                    witnesses.append({"n": n, "check": "phi-image-cardinality", "got": len(image)})

            def tree_worker(sid: int):
                bad: list[dict] = []
                seen = 0
                for tree in _sharded(lambda: enumerate_trees(n), shards, sid):
                    if "jr" in selected:
                        p = jr_tree_to_perm(tree)
                        if not avoids_132(p) or jr_perm_to_tree(p) != tree:
                            bad.append({"n": n, "tree": to_text(tree), "check": "jr-tree-side"})
                    if "phi" in selected:
                        p = phi_tree_to_perm(tree)
                        if not avoids_132(p) or phi_perm_to_tree(p).shape() != tree:
                            bad.append({"n": n, "tree": to_text(tree), "check": "phi-tree-side"})
                    seen += 1
                return bad, seen

            parts = _shard_results(tree_worker, shards)
            for part in parts:
                witnesses.extend(part[0])
            checked += sum(p[1] for p in parts)

    if "alt" in selected:

        def alt_worker(sid: int):
            bad: list[dict] = []
            seen = 0
            for tree in _sharded(lambda: enumerate_alt_trees(alt_edges, 4, 4), shards, sid):
                forest = alt_tree_to_forest(tree)
                _, _, l_e, l_o = validate_forest(forest)
                root_deg, even_internal, odd_internal = _alt_profile(tree)
                expected_forest = 1 + len(even_internal) + len(odd_internal)
                sizes_e = sorted(
                    t.size() for t in forest if t.label.parity == "E" and t.label.value != _root_value(tree)
                )
                sizes_o = sorted(t.size() for t in forest if t.label.parity == "O")
                k_size = next(
                    t.size() for t in forest if t.label.parity == "E" and t.label.value == _root_value(tree)
                )
                if len(forest) != l_e + l_o or len(forest) != expected_forest:
                    bad.append({"edges": tree.size(), "check": "alt-forest-size"})
                elif sizes_e != even_internal or sizes_o != odd_internal or k_size != root_deg:
                    bad.append({"edges": tree.size(), "check": "alt-size-distributions"})
                elif forest_to_alt_tree(forest) != tree:
                    bad.append({"edges": tree.size(), "check": "alt-round-trip"})
                seen += 1
            return bad, seen

        parts = _shard_results(alt_worker, shards)
        for part in parts:
            witnesses.extend(part[0])
        checked += sum(p[1] for p in parts)

    return _finish(claim, reported_n, checked, witnesses, t0)


def _root_value(tree: LabeledTree) -> int:
    return tree.label.value


# ---------------------------------------------------------------------------
# series identity grid


def verify_lemma_a1(grid_max: int = 8, shards: int = 1) -> VerificationReport:
    t0 = time.perf_counter()
    shards = max(shards, 1)
    triples = [
        (p, q, l)
        for p in range(grid_max + 1)
        for q in range(grid_max + 1)
        for l in range(grid_max + 1)
    ]

    def worker(sid: int):
        bad = []
        seen = 0
        for p, q, l in _sharded(lambda: triples, shards, sid):
            if not lemma_a1_check(p, q, l):
                bad.append({"p": p, "q": q, "l": l, "check": "series-identity"})
            seen += 1
        return bad, seen

    parts = _shard_results(worker, shards)
    witnesses: list[dict] = []
    for part in parts:
        witnesses.extend(part[0])
    checked = sum(p[1] for p in parts)
    return _finish("series-identity", grid_max, checked, witnesses, t0)


# ---------------------------------------------------------------------------
# claim registry


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    description: str
    default_n: int
    max_n: int
    runner: Callable[[int, int], VerificationReport]
    aliases: tuple[str, ...] = field(default=())


def _formula_runner(which: tuple[str, ...]):
    return lambda n, shards: verify_formulas(n, shards, which=which)


CLAIMS: tuple[ClaimSpec, ...] = (
    ClaimSpec(
        "catalan-counts",
        "avoider and tree enumerations both have Catalan size",
        12,
        14,
        lambda n, s: verify_catalan_counts(n, s),
        ("catalan", "counts"),
    ),
    ClaimSpec(
        "equidistribution",
        "four-way equidistribution of run/envelope and segment/run profiles",
        9,
        12,
        lambda n, s: verify_equidistribution(n, s),
        ("thm4.1",),
    ),
    ClaimSpec(
        "heights-rsw",
        "heights and right spanning widths are equidistributed (full, refined, maxima)",
        10,
        12,
        lambda n, s: verify_heights_rsw(n, s),
        ("thm3.6", "cor3.7"),
    ),
    ClaimSpec(
        "level-joint",
        "joint fiber/path law equals the joint level-profile law",
        10,
        12,
        lambda n, s: verify_chen_identity(n, s),
        ("thm3.1",),
    ),
    ClaimSpec(
        "structural-lemmas",
        "per-permutation structural facts (run counts, segments, tree images)",
        9,
        11,
        lambda n, s: verify_structural_lemmas(n, s),
        ("lemmas", "lemma2.1", "lemma2.2", "lemma2.3", "lemma2.4", "lemma3.2", "lemma3.3", "lemma3.4"),
    ),
    ClaimSpec(
        "formulas",
        "every closed-form count against brute-force enumeration",
        9,
        10,
        lambda n, s: verify_formulas(n, s),
        (),
    ),
    ClaimSpec(
        "formula-start-descents",
        "count by first entry and descent number",
        9,
        10,
        _formula_runner(("start-descents",)),
        ("thm3.5",),
    ),
    ClaimSpec(
        "formula-start-end-descents",
        "count by first entry, last entry, and descent number",
        9,
        10,
        _formula_runner(("start-end-descents",)),
        ("eq1",),
    ),
    ClaimSpec(
        "formula-bounded-runs",
        "count by bounded runs and envelope groups, both characterizations",
        9,
        10,
        _formula_runner(("bounded-runs",)),
        ("thm4.2", "eq2"),
    ),
    ClaimSpec(
        "formula-bounded-ir",
        "count by bounded runs only",
        9,
        10,
        _formula_runner(("bounded-ir",)),
        ("cor4.3",),
    ),
    ClaimSpec(
        "formula-consec-pattern",
        "count by occurrences of the rising-run-then-drop window",
        9,
        10,
        _formula_runner(("consec-pattern",)),
        ("thm4.5",),
    ),
    ClaimSpec(
        "roundtrips",
        "bijection round trips, injectivity, and image cardinalities",
        9,
        10,
        lambda n, s: verify_roundtrips(n, s),
        ("bijections",),
    ),
    ClaimSpec(
        "alt-roundtrips",
        "set-alternating tree to small-forest bijection on the exhaustive pool",
        6,
        7,
        lambda n, s: verify_roundtrips(0, s, which=("alt",), alt_edges=n),
        ("thm4.4",),
    ),
    ClaimSpec(
        "series-identity",
        "truncated-series coefficient identity over the parameter grid",
        8,
        16,
        lambda n, s: verify_lemma_a1(n, s),
        ("lemmaA.1", "lemmaa.1", "lemma-a1"),
    ),
)


def claim_registry() -> dict[str, ClaimSpec]:
    table: dict[str, ClaimSpec] = {}
    for spec in CLAIMS:
        table[spec.claim_id] = spec
        for alias in spec.aliases:
            table[alias.lower()] = spec
    return table


def available_claims() -> list[str]:
    return [spec.claim_id for spec in CLAIMS]


def run_claim(
    claim: str, n_max: int | None = None, shards: int = 1, bound: int | None = None
) -> VerificationReport:
    table = claim_registry()
    spec = table.get(claim) or table.get(claim.lower())
    if spec is None:
        raise KeyError(f"unknown claim {claim!r}; known: {', '.join(available_claims())}")
    limit = spec.max_n if bound is None else bound
    n = spec.default_n if n_max is None else n_max
    if n > limit:
        raise ResourceLimitError(f"max-n {n} exceeds the bound {limit} for claim {spec.claim_id}")
    if shards < 1:
        shards = 1
    return spec.runner(n, shards)


def run_all(n_overrides: dict[str, int] | None = None, shards: int = 1) -> list[VerificationReport]:
    overrides = n_overrides or {}
    out = []
    for spec in CLAIMS:
        if spec.claim_id.startswith("formula-"):
            continue  # covered by the grouped "formulas" run
        out.append(run_claim(spec.claim_id, overrides.get(spec.claim_id), shards))
    return out
