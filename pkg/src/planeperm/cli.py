"""Command-line front end: a thin client over the service handlers.

Each subcommand parses argv into the same request models the HTTP API uses,
calls the shared handler in process, and renders the response as text or
canonical JSON.  Exit codes: 0 success or verification pass, 1 verification
failure, 2 usage or parse error, 3 resource limit.
"""
from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click
from pydantic import ValidationError

from .errors import DomainError, ParseError, ResourceLimitError
from .oracle import available_claims, run_all, run_claim
from .service import handlers, models

EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _fail(code: str, message: str, exit_code: int) -> None:
    body = models.ErrorBody(code=code, message=message)
    click.echo(json.dumps(body.model_dump(), sort_keys=True), err=True)
    sys.exit(exit_code)


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParseError as exc:
            _fail("parse-error", str(exc), EXIT_USAGE)
        except DomainError as exc:
            _fail("domain-error", str(exc), EXIT_USAGE)
        except ValidationError as exc:
            _fail("usage-error", str(exc), EXIT_USAGE)
        except ResourceLimitError as exc:
            _fail("resource-limit", str(exc), EXIT_RESOURCE)

    return wrapper


def _emit(payload: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


@click.group()
def main() -> None:
    """Decompositions, bijections, statistics, exact counts, enumeration,
    and exhaustive verification for 132-avoiding permutations and plane
    trees."""


@main.command()
@click.option("--method", type=click.Choice(["ird", "drd", "vcis", "lde"]), required=True)
@click.option("--perm", required=True, help='one-line notation, e.g. "5 3 4 6 1 2 7"')
@click.option("--json", "as_json", is_flag=True, help="emit JSON instead of text")
@_guard
def decompose(method: str, perm: str, as_json: bool) -> None:
    """Cut a permutation into one of the four kinds of segments."""
    resp = handlers.handle_decompose(models.DecomposeRequest(method=method, perm=perm))
    payload = {"kind": resp.kind, "segments": resp.segments, "distribution": resp.distribution}
    lines = [
        f"kind: {resp.kind}",
        "segments: " + " / ".join(" ".join(map(str, seg)) for seg in resp.segments),
        "distribution: " + " ".join(map(str, resp.distribution)),
    ]
    _emit(payload, as_json, lines)


def _map_request(bijection: str, payload: str) -> models.MapRequest:
    if bijection in ("jr", "phi-inv", "mirror", "level-switch"):
        return models.MapRequest(bijection=bijection, tree=payload)
    if bijection in ("jr-inv", "phi"):
        return models.MapRequest(bijection=bijection, perm=payload)
    # structurally rich inputs travel as JSON files
    try:
        data = json.loads(Path(payload).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {payload!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {payload!r}: {exc}") from exc
    if bijection == "alt-to-forest":
        return models.MapRequest(bijection=bijection, alt_tree=models.AltNode(**data))
    nodes = data["forest"] if isinstance(data, dict) else data
    return models.MapRequest(bijection=bijection, forest=[models.AltNode(**n) for n in nodes])


@main.command(name="map")
@click.option(
    "--bijection",
    type=click.Choice(
        ["jr", "jr-inv", "phi", "phi-inv", "mirror", "level-switch", "alt-to-forest", "forest-to-alt"]
    ),
    required=True,
)
@click.option("--in", "payload", required=True, help="perm/tree inline; JSON file path for alt forms")
@click.option("--json", "as_json", is_flag=True)
@_guard
def map_cmd(bijection: str, payload: str, as_json: bool) -> None:
    """Apply one of the bijections or tree transforms."""
    if bijection == "phi-inv" and payload.lstrip().startswith("{"):
        # accept the labelled JSON that `map --bijection phi` emits
        try:
            data = json.loads(payload)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid labelled-tree JSON: {exc}") from exc
        node = models.LabeledNode(**data)
        payload = _labeled_shape_word(node)
    resp = handlers.handle_map(_map_request(bijection, payload))
    body = resp.model_dump(exclude_none=True)
    if bijection == "jr" or bijection == "phi-inv":
        _emit(body, as_json, [resp.perm])
    elif bijection in ("jr-inv", "mirror", "level-switch"):
        _emit(body, as_json, [resp.tree])
    elif bijection == "phi":
        text = json.dumps(resp.labeled_tree.model_dump(), sort_keys=True)
        _emit(body, as_json, [text])
    elif bijection == "alt-to-forest":
        text = json.dumps([t.model_dump() for t in resp.forest], sort_keys=True)
        _emit(body, as_json, [text])
    else:
        text = json.dumps(resp.alt_tree.model_dump(), sort_keys=True)
        _emit(body, as_json, [text])


def _labeled_shape_word(node: models.LabeledNode) -> str:
    return "".join("(" + _labeled_shape_word(c) + ")" for c in node.children)


@main.command()
@click.option("--tree", required=True, help='parenthesis word, e.g. "(())()"')
@click.option(
    "--what", type=click.Choice(["heights", "rsw", "paths", "levels", "all"]), default="all"
)
@click.option("--json", "as_json", is_flag=True)
@_guard
def stats(tree: str, what: str, as_json: bool) -> None:
    """Vertex statistics of a plane tree."""
    resp = handlers.handle_stats(models.StatsRequest(tree=tree, what=what))
    body = resp.model_dump(exclude_none=True)
    lines = [f"{key}: {value}" for key, value in sorted(body.items()) if key != "tree"]
    _emit(body, as_json, lines)


@main.command()
@click.option("--formula", type=click.Choice(sorted(handlers.FORMULA_PARAMS)), required=True)
@click.option("--n", type=int, default=None)
@click.option("--i", type=int, default=None)
@click.option("--j", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--p", type=int, default=None)
@click.option("--q", type=int, default=None)
@click.option("--h", type=int, default=None)
@click.option("--l", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--t", type=int, default=None)
@click.option("--w", type=int, default=None)
@click.option("--a", type=int, default=None)
@click.option("--b", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@_guard
def count(formula: str, as_json: bool, **symbols: int | None) -> None:
    """Evaluate one of the exact counting formulas."""
    resp = handlers.handle_count(models.CountRequest(formula=formula, **symbols))
    _emit(resp.model_dump(), as_json, [str(resp.value)])


@main.command(name="enumerate")
@click.option("--what", type=click.Choice(["avoiders", "trees"]), required=True)
@click.option("--n", type=int, required=True)
@click.option(
    "--filter",
    "filters",
    multiple=True,
    help="key=value, e.g. ird-dist=3,3,1 or descents=2; repeatable",
)
@click.option("--limit", type=int, default=None, help="cap the listed items (count stays exact)")
@click.option("--count-only", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@_guard
def enumerate_cmd(what: str, n: int, filters: tuple[str, ...], limit: int | None, count_only: bool, as_json: bool) -> None:
    """Stream a whole object class, optionally filtered by statistics."""
    table: dict[str, str] = {}
    for item in filters:
        if "=" not in item:
            raise DomainError(f"filter {item!r} is not key=value")
        key, _, value = item.partition("=")
        table[key.strip()] = value.strip()
    resp = handlers.handle_enumerate(
        models.EnumerateRequest(what=what, n=n, filters=table, limit=0 if count_only else limit)
    )
    if count_only:
        _emit({"what": resp.what, "n": resp.n, "count": resp.count}, as_json, [str(resp.count)])
    else:
        _emit(resp.model_dump(), as_json, resp.items + [f"count: {resp.count}"])


@main.command()
@click.option("--claim", required=True, help="claim id; `list` shows the registry")
@click.option("--max-n", "max_n", type=int, default=None)
@click.option("--shards", type=int, default=1)
@click.option("--bound", type=int, default=None, help="raise the per-claim resource bound")
@click.option("--json", "as_json", is_flag=True)
@_guard
def verify(claim: str, max_n: int | None, shards: int, bound: int | None, as_json: bool) -> None:
    """Exhaustively verify a claim; exit 0 on pass, 1 on failure."""
    if claim == "list":
        for name in available_claims():
            click.echo(name)
        return
    if claim == "all":
        reports = run_all(shards=shards)
    else:
        try:
            reports = [run_claim(claim, max_n, shards, bound)]
        except KeyError as exc:
            raise DomainError(str(exc)) from exc
    ok = True
    for report in reports:
        ok = ok and report.passed
        if as_json:
            click.echo(report.to_json())
        else:
            click.echo(
                f"claim={report.claim} n={report.n} checked={report.checked} status={report.status}"
            )
            for w in report.witnesses:
                click.echo(f"  witness: {json.dumps(w, sort_keys=True)}")
        click.echo(f"elapsed_seconds={report.elapsed_seconds:.3f}", err=True)
    if not ok:
        sys.exit(EXIT_VERIFY_FAIL)


if __name__ == "__main__":
    main()
