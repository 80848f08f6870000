import json

import pytest
from click.testing import CliRunner

from planeperm.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, *args, env=None):
    return runner.invoke(main, list(args), env=env, catch_exceptions=False)


class TestDecompose:
    def test_text_output(self, runner):
        res = run(runner, "decompose", "--method", "vcis", "--perm", "5 3 4 6 1 2 7")
        assert res.exit_code == 0
        assert "5 6 7 / 3 4 / 1 2" in res.output

    def test_json_matches_text_information(self, runner):
        res = run(runner, "decompose", "--method", "vcis", "--perm", "5 3 4 6 1 2 7", "--json")
        body = json.loads(res.output)
        assert body == {
            "kind": "VCIS",
            "segments": [[5, 6, 7], [3, 4], [1, 2]],
            "distribution": [3, 2, 2],
        }

    def test_domain_error_exit_2_with_code(self, runner):
        res = run(runner, "decompose", "--method", "lde", "--perm", "1 3 2")
        assert res.exit_code == 2
        assert json.loads(res.stderr)["code"] == "domain-error"

    def test_parse_error_exit_2(self, runner):
        res = run(runner, "decompose", "--method", "ird", "--perm", "1 2 2")
        assert res.exit_code == 2
        assert json.loads(res.stderr)["code"] == "parse-error"

    def test_unknown_flag_rejected(self, runner):
        res = run(runner, "decompose", "--method", "ird", "--perm", "1", "--bogus")
        assert res.exit_code == 2


class TestCount:
    def test_catalan_example(self, runner):
        res = run(runner, "count", "--formula", "catalan", "--n", "4")
        assert res.exit_code == 0
        assert res.output.strip() == "14"

    def test_json_mode(self, runner):
        res = run(runner, "count", "--formula", "narayana", "--n", "4", "--k", "2", "--json")
        assert json.loads(res.output) == {
            "formula": "narayana",
            "params": {"n": 4, "k": 2},
            "value": 6,
        }

    def test_missing_parameter(self, runner):
        res = run(runner, "count", "--formula", "narayana", "--n", "4")
        assert res.exit_code == 2

    def test_extraneous_parameter(self, runner):
        res = run(runner, "count", "--formula", "catalan", "--n", "4", "--k", "1")
        assert res.exit_code == 2


class TestMapRoundTrips:
    def test_jr_both_ways_byte_exact(self, runner):
        word = "((()(()()))()(()()))(())"
        res = run(runner, "map", "--bijection", "jr", "--in", word)
        perm = res.output.strip()
        assert perm == "10 8 7 9 11 6 4 3 5 12 1 2"
        back = run(runner, "map", "--bijection", "jr-inv", "--in", perm)
        assert back.output.strip() == word

    def test_phi_both_ways(self, runner):
        res = run(runner, "map", "--bijection", "phi", "--in", "2 1 3")
        labeled = res.output.strip()
        back = run(runner, "map", "--bijection", "phi-inv", "--in", labeled)
        assert back.output.strip() == "2 1 3"
        by_word = run(runner, "map", "--bijection", "phi-inv", "--in", "(())()")
        assert by_word.output.strip() == "2 1 3"

    def test_mirror_twice_is_identity(self, runner):
        word = "((())())(())"
        once = run(runner, "map", "--bijection", "mirror", "--in", word).output.strip()
        twice = run(runner, "map", "--bijection", "mirror", "--in", once).output.strip()
        assert twice == word

    def test_level_switch_twice_is_identity(self, runner):
        word = "((())())()"
        once = run(runner, "map", "--bijection", "level-switch", "--in", word).output.strip()
        twice = run(runner, "map", "--bijection", "level-switch", "--in", once).output.strip()
        assert twice == word
        assert once != word

    def test_alt_round_trip_via_files(self, runner, tmp_path):
        tree = {
            "label": 2,
            "parity": "E",
            "starred": False,
            "children": [
                {
                    "label": 1,
                    "parity": "O",
                    "starred": False,
                    "children": [{"label": 1, "parity": "E", "starred": False, "children": []}],
                },
                {"label": 2, "parity": "O", "starred": False, "children": []},
            ],
        }
        src = tmp_path / "tree.json"
        src.write_text(json.dumps(tree))
        res = run(runner, "map", "--bijection", "alt-to-forest", "--in", str(src))
        assert res.exit_code == 0
        forest = json.loads(res.output)
        assert len(forest) == 2
        mid = tmp_path / "forest.json"
        mid.write_text(res.output)
        back = run(runner, "map", "--bijection", "forest-to-alt", "--in", str(mid))
        assert json.loads(back.output) == tree


class TestStats:
    def test_all_contains_canonical_keys(self, runner):
        res = run(runner, "stats", "--tree", "(())()", "--what", "all", "--json")
        body = json.loads(res.output)
        for key in (
            "heights",
            "rsw_all",
            "rsw_internal",
            "left_paths",
            "even_degrees",
            "odd_outdegrees",
        ):
            assert key in body
        assert body["heights"] == [0, 1, 1, 2]

    def test_selector_restricts_output(self, runner):
        res = run(runner, "stats", "--tree", "(())()", "--what", "levels", "--json")
        body = json.loads(res.output)
        assert "even_degrees" in body and "heights" not in body

    def test_text_and_json_carry_the_same_fields(self, runner):
        as_json = json.loads(
            run(runner, "stats", "--tree", "()()", "--what", "rsw", "--json").output
        )
        text = run(runner, "stats", "--tree", "()()", "--what", "rsw").output
        for key, value in as_json.items():
            if key == "tree":
                continue
            assert f"{key}: {value}" in text


class TestEnumerate:
    def test_filtered_listing(self, runner):
        res = run(runner, "enumerate", "--what", "avoiders", "--n", "4", "--filter", "ird-dist=2,2")
        lines = res.output.strip().splitlines()
        assert lines[-1] == "count: 2"
        assert set(lines[:-1]) == {"2 3 1 4", "3 4 1 2"}

    def test_tree_filter_and_count_only(self, runner):
        res = run(
            runner,
            "enumerate",
            "--what",
            "trees",
            "--n",
            "4",
            "--filter",
            "leaves=2",
            "--count-only",
        )
        assert res.output.strip() == "6"  # Narayana N(4, 2)

    def test_resource_limit_exit_3(self, runner):
        res = run(runner, "enumerate", "--what", "avoiders", "--n", "40")
        assert res.exit_code == 3
        assert json.loads(res.stderr)["code"] == "resource-limit"

    def test_environment_bound(self, runner):
        res = run(
            runner,
            "enumerate",
            "--what",
            "avoiders",
            "--n",
            "4",
            env={"PLANEPERM_MAX_N": "3"},
        )
        assert res.exit_code == 3

    def test_bad_filter(self, runner):
        res = run(runner, "enumerate", "--what", "avoiders", "--n", "3", "--filter", "nope=1")
        assert res.exit_code == 2


class TestVerify:
    def test_documented_example(self, runner):
        res = run(runner, "verify", "--claim", "thm4.1", "--max-n", "7")
        assert res.exit_code == 0
        assert "status=pass" in res.output

    def test_failure_exits_1(self, runner, monkeypatch):
        from planeperm import cli
        from planeperm.oracle import VerificationReport

        failing = VerificationReport(
            claim="equidistribution",
            n=3,
            checked=1,
            status="fail",
            witnesses=[{"n": 3, "detail": "forced"}],
        )
        monkeypatch.setattr(cli, "run_claim", lambda *a, **k: failing)
        res = run(runner, "verify", "--claim", "thm4.1", "--max-n", "3")
        assert res.exit_code == 1
        assert "status=fail" in res.stdout
        assert "witness" in res.stdout

    def test_json_reports_are_deterministic(self, runner):
        a = run(runner, "verify", "--claim", "thm3.6", "--max-n", "5", "--json")
        b = run(runner, "verify", "--claim", "thm3.6", "--max-n", "5", "--json")
        assert a.stdout == b.stdout  # wall time goes to stderr, not the payload
        payload = json.loads(a.stdout)
        assert payload["status"] == "pass"
        assert set(payload) == {"claim", "n", "checked", "status", "witnesses"}

    def test_sharded_output_matches_serial(self, runner):
        serial = run(runner, "verify", "--claim", "thm4.1", "--max-n", "5", "--json").stdout
        sharded = run(
            runner, "verify", "--claim", "thm4.1", "--max-n", "5", "--shards", "3", "--json"
        ).stdout
        assert serial == sharded

    def test_unknown_claim_exit_2(self, runner):
        res = run(runner, "verify", "--claim", "bogus")
        assert res.exit_code == 2

    def test_bound_exceeded_exit_3(self, runner):
        res = run(runner, "verify", "--claim", "thm4.1", "--max-n", "99")
        assert res.exit_code == 3

    def test_list(self, runner):
        res = run(runner, "verify", "--claim", "list")
        assert "equidistribution" in res.output
