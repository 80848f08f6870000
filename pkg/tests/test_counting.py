import itertools

import pytest

from planeperm import (
    DomainError,
    Permutation,
    binomial,
    bounded_compositions,
    catalan,
    consecutive_occurrences,
    count_bounded_ir,
    count_bounded_runs,
    count_consec_pattern,
    count_start_descents,
    count_start_end_descents,
    descent_set,
    enumerate_avoiders,
    enumerate_trees,
    gen_narayana,
    ird,
    kappa,
    kappa_dp,
    lde,
    narayana,
)
from planeperm.trees import level_outdegree_maxima, level_populations


class TestBinomial:
    def test_conventions(self):
        assert binomial(-1, 0) == 1
        assert binomial(8, 4) == 70
        assert binomial(-1, -1) == 0
        assert binomial(-5, 3) == 0
        assert binomial(3, 5) == 0
        assert binomial(0, 0) == 1


class TestCatalanNarayana:
    def test_catalan_values(self):
        assert catalan(0) == 1
        assert catalan(4) == 14
        assert catalan(10) == 16796
        assert catalan(12) == 208012

    def test_narayana_values(self):
        assert narayana(4, 2) == 6
        assert narayana(0, 0) == 1
        assert narayana(0, 2) == 0

    def test_narayana_row_sums_to_catalan(self):
        for n in range(1, 10):
            assert sum(narayana(n, k) for k in range(n + 1)) == catalan(n)


def dyck_paths(n):
    """All Dyck words of semilength n as +1/-1 step tuples."""
    def rec(up, down, h, acc):
        if up == down == 0:
            yield tuple(acc)
            return
        if up:
            acc.append(1)
            yield from rec(up - 1, down, h + 1, acc)
            acc.pop()
        if down and h > 0:
            acc.append(-1)
            yield from rec(up, down - 1, h - 1, acc)
            acc.pop()

    yield from rec(n, n, 0, [])


def returns_and_peaks(path):
    h = 0
    returns = peaks = 0
    for a, b in zip(path, path[1:] + (None,)):
        h += a
        if h == 0 and a == -1:
            returns += 1
        if a == 1 and b == -1:
            peaks += 1
    return returns, peaks


class TestGeneralizedNarayana:
    def test_documented_value_against_path_listing(self):
        paths = [p for p in dyck_paths(3) if returns_and_peaks(p) == (1, 2)]
        assert len(paths) == 1
        assert gen_narayana(1, 3, 2) == 1

    @pytest.mark.parametrize("n", range(7))
    def test_grid_against_path_listing(self, n):
        from collections import Counter

        tally = Counter(returns_and_peaks(p) for p in dyck_paths(n))
        for i in range(n + 2):
            for j in range(n + 2):
                assert gen_narayana(i, n, j) == tally.get((i, j), 0)


class TestKappa:
    def test_documented_values(self):
        assert kappa(2, 2, 2) == 3
        assert kappa(7, 0, 4) == 1
        assert kappa(1, 3, 5) == binomial(5, 3)
        assert kappa(3, 0, 0) == 1
        assert kappa(3, 1, 0) == 0
        assert kappa(3, 2, -1) == 0

    def test_inclusion_exclusion_equals_dp(self):
        for t in range(13):
            for n in range(13):
                for m in range(13):
                    assert kappa(t, n, m) == kappa_dp(t, n, m)


class TestBoundedCompositions:
    def test_documented_values(self):
        assert bounded_compositions(4, 2, 3) == 3
        assert bounded_compositions(3, 1, 5) == 1
        assert bounded_compositions(7, 1, 5) == 0
        assert bounded_compositions(0, 0, 9) == 1

    @pytest.mark.parametrize("w", [1, 2, 3, 5])
    def test_against_direct_enumeration(self, w):
        for n in range(9):
            for k in range(6):
                direct = sum(
                    1
                    for parts in itertools.product(range(1, w + 1), repeat=k)
                    if sum(parts) == n
                )
                assert bounded_compositions(n, k, w) == direct


def _run_profile(p):
    lens = [len(s) for s in ird(p).segments]
    env = [len(s) for s in lde(p).segments]
    return {
        "first": p[0],
        "last": p[-1],
        "descents": len(descent_set(p)),
        "p": len(lens),
        "q": len(env),
        "last_run": lens[-1],
        "other_runs": max(lens[:-1], default=0),
        "env_max": max(env, default=0),
    }


class TestStartDescents:
    def test_documented_values(self):
        assert count_start_descents(3, 3, 2) == 1
        assert count_start_descents(3, 3, 3) == 1
        for n in range(1, 9):
            assert count_start_descents(n, 1, 1) == 1

    def test_out_of_range_start_rejected(self):
        with pytest.raises(DomainError):
            count_start_descents(3, 4, 1)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_full_grid_against_enumeration(self, n):
        from collections import Counter

        tally = Counter()
        for p in enumerate_avoiders(n):
            info = _run_profile(p)
            tally[(info["first"], info["descents"])] += 1
        for i in range(1, n + 1):
            for k in range(1, n + 1):
                assert count_start_descents(n, i, k) == tally.get((i, k), 0)

    def test_total_mass_is_catalan(self):
        for n in range(1, 13):
            total = sum(
                count_start_descents(n, i, k)
                for i in range(1, n + 1)
                for k in range(1, n + 1)
            )
            assert total == catalan(n)


class TestStartEndDescents:
    def test_documented_values(self):
        assert count_start_end_descents(3, 3, 1, 3) == 1
        assert count_start_end_descents(3, 2, 3, 2) == 1

    def test_equal_endpoints_rejected(self):
        with pytest.raises(DomainError):
            count_start_end_descents(3, 2, 2, 1)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_full_grid_against_enumeration(self, n):
        from collections import Counter

        tally = Counter()
        for p in enumerate_avoiders(n):
            info = _run_profile(p)
            tally[(info["first"], info["last"], info["descents"])] += 1
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                for k in range(1, n + 1):
                    assert count_start_end_descents(n, i, j, k) == tally.get((i, j, k), 0)


class TestBoundedRuns:
    def test_empty_classes(self):
        assert count_bounded_runs(4, 0, 5, 2, 2) == 0
        assert count_bounded_runs(4, 2, 2, 2, 2) == 0  # p + q != n + 1

    def test_tiny_case_by_hand(self):
        # n=2: only 1 2 has one run and two groups; its run has length 2
        assert count_bounded_runs(2, 1, 2, 1, 1) == 0
        assert count_bounded_runs(2, 1, 2, 2, 1) == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_both_characterizations(self, n):
        perms = [_run_profile(p) for p in enumerate_avoiders(n)]
        trees = [
            level_populations(t) + level_outdegree_maxima(t) for t in enumerate_trees(n)
        ]
        for p_runs in range(n + 2):
            q_groups = n + 1 - p_runs
            for h in range(n + 1):
                for l in range(n + 1):
                    perm_side = sum(
                        1
                        for info in perms
                        if info["p"] == p_runs
                        and info["q"] == q_groups
                        and info["last_run"] <= h
                        and info["other_runs"] <= h + 1
                        and info["env_max"] <= l + 1
                    )
                    tree_side = sum(
                        1
                        for (ev, od, me, mo) in trees
                        if ev == p_runs and od == q_groups and me <= h and mo <= l
                    )
                    got = count_bounded_runs(n, p_runs, q_groups, h, l)
                    assert perm_side == tree_side == got


class TestBoundedRunsTotalMass:
    def test_unbounded_sums_to_catalan(self):
        for n in range(1, 10):
            total = sum(
                count_bounded_runs(n, p, n + 1 - p, n, n) for p in range(n + 2)
            )
            assert total == catalan(n)


class TestBoundedRunsOnly:
    def test_unbounded_gives_catalan(self):
        for n in range(1, 9):
            assert count_bounded_ir(n, n) == catalan(n)

    def test_one_one(self):
        assert count_bounded_ir(1, 1) == 1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_against_enumeration(self, n):
        perms = [_run_profile(p) for p in enumerate_avoiders(n)]
        for h in range(1, n + 1):
            expected = sum(
                1 for info in perms if info["last_run"] <= h and info["other_runs"] <= h + 1
            )
            assert count_bounded_ir(n, h) == expected


class TestConsecPattern:
    def test_k_must_exceed_two(self):
        with pytest.raises(DomainError):
            count_consec_pattern(5, 2, 1)

    @pytest.mark.parametrize("n", range(1, 8))
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_against_window_counts(self, n, k):
        from collections import Counter

        pattern = Permutation(list(range(2, k + 1)) + [1])
        tally = Counter(consecutive_occurrences(p, pattern) for p in enumerate_avoiders(n))
        for m in range(n + 1):
            assert count_consec_pattern(n, k, m) == tally.get(m, 0)

    def test_total_mass_and_capacity(self):
        for n in range(1, 9):
            for k in (3, 4, 5):
                assert sum(count_consec_pattern(n, k, m) for m in range(n + 1)) == catalan(n)
                for m in range((n - 1) // (k - 1) + 1, n + 1):
                    assert count_consec_pattern(n, k, m) == 0
