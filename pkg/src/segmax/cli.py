"""Command-line front end.

Subcommands: mss (list algorithms), tree (generic pipeline), prune
(enumerate or count prunings), laws (run the law registry), bench
(wall-clock comparison of the list algorithms).

Exit statuses: 0 ok, 2 usage or parse problem, 3 distributivity gate,
4 arithmetic overflow, 5 collection size guard, 6 bench budget.
"""

from __future__ import annotations

import json
import random
import statistics
import sys
import time

import click

from .errors import (
    BenchBudgetError,
    CarrierError,
    DistributivityError,
    ReduceLawError,
    SegmaxError,
    ShapeMismatchError,
    SizeGuardError,
    TermSyntaxError,
    UnknownLawError,
)
from .horner import (
    SEMIRINGS,
    max_prefix_sum,
    mss_generic,
    mss_linear,
    mss_quadratic,
    mss_spec,
)
from .ints import check_i64
from .lawcheck import reports_to_json, run_all
from .monads import CollectionKind, to_text
from .pruning import prune as prune_term
from .pruning import prune_count
from .shapes import ShapeKind, parse_term, print_pruned, term_size

EXIT_USAGE = 2
EXIT_GATE = 3
EXIT_OVERFLOW = 4
EXIT_GUARD = 5
EXIT_BUDGET = 6

MAX_LIST_LEN = 10**6
MAX_TREE_NODES = 10**5

_SHAPE_CHOICES = [k.value for k in ShapeKind]
_MONAD_CHOICES = [k.value for k in CollectionKind]


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _run(body) -> None:
    try:
        body()
    except DistributivityError as e:
        _fail(EXIT_GATE, str(e))
    except SizeGuardError as e:
        _fail(EXIT_GUARD, str(e))
    except BenchBudgetError as e:
        _fail(EXIT_BUDGET, str(e))
    except OverflowError as e:
        _fail(EXIT_OVERFLOW, str(e))
    except (TermSyntaxError, ShapeMismatchError, CarrierError, ReduceLawError,
            UnknownLawError, ValueError) as e:
        _fail(EXIT_USAGE, str(e))
    except SegmaxError as e:
        _fail(EXIT_USAGE, str(e))


def _read_source(inline: str | None, path: str | None) -> str:
    if (inline is None) == (path is None):
        _fail(EXIT_USAGE, "provide exactly one of --input or --file")
    if inline is not None:
        return inline
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        _fail(EXIT_USAGE, f"cannot read {path}: {e}")
    raise AssertionError  # unreachable


def _parse_int_list(text: str) -> list[int]:
    parts = text.replace(",", " ").split()
    try:
        xs = [check_i64(int(p), "element") for p in parts]
    except ValueError:
        raise TermSyntaxError("list elements must be integers", 0) from None
    if len(xs) > MAX_LIST_LEN:
        raise TermSyntaxError(f"list longer than {MAX_LIST_LEN} elements", 0)
    return xs


def _parse_tree(text: str, shape: ShapeKind):
    t = parse_term(text, shape)
    if term_size(t) > MAX_TREE_NODES:
        raise TermSyntaxError(f"tree larger than {MAX_TREE_NODES} nodes", 0)
    return t


@click.group()
def main() -> None:
    """Segment sums over lists and shaped terms, with an executable law suite."""


@main.command()
@click.option("--algo", type=click.Choice(["spec", "quadratic", "linear", "prefix"]),
              default="linear", show_default=True)
@click.option("--input", "inline", default=None,
              help="Comma or space separated integers.")
@click.option("--file", "path", default=None, help="Read the list from a file.")
@click.option("--json", "as_json", is_flag=True)
def mss(algo: str, inline: str | None, path: str | None, as_json: bool) -> None:
    """Maximum segment sum of an integer list (prefix = best prefix sum)."""

    def body() -> None:
        xs = _parse_int_list(_read_source(inline, path))
        fn = {"spec": mss_spec, "quadratic": mss_quadratic,
              "linear": mss_linear, "prefix": max_prefix_sum}[algo]
        value = fn(xs)
        if as_json:
            click.echo(json.dumps({"algo": algo, "value": value, "n": len(xs)}))
        else:
            click.echo(str(value))

    _run(body)


@main.command()
@click.option("--shape", type=click.Choice(_SHAPE_CHOICES), default="htree",
              show_default=True)
@click.option("--semiring", "semiring_name", type=click.Choice(list(SEMIRINGS)),
              default="max-plus", show_default=True)
@click.option("--monad", type=click.Choice(_MONAD_CHOICES), default="bag",
              show_default=True)
@click.option("--via", type=click.Choice(["scan", "brute"]), default="scan",
              show_default=True)
@click.option("--check", "check_both", is_flag=True,
              help="Run both routes and require agreement.")
@click.option("--input", "inline", default=None, help="Term s-expression.")
@click.option("--file", "path", default=None)
@click.option("--force", is_flag=True, help="Bypass the distributivity gate.")
@click.option("--json", "as_json", is_flag=True)
def tree(shape: str, semiring_name: str, monad: str, via: str, check_both: bool,
         inline: str | None, path: str | None, force: bool, as_json: bool) -> None:
    """Best segment value of a shaped term, by scan or brute enumeration."""

    def body() -> None:
        s = SEMIRINGS[semiring_name]
        kind = CollectionKind(monad)
        t = _parse_tree(_read_source(inline, path), ShapeKind(shape))
        if check_both:
            scan_v = mss_generic(s, None, t, via="scan", kind=kind, force=force)
            brute_v = mss_generic(s, None, t, via="brute", kind=kind, force=force)
            if scan_v != brute_v:
                _fail(1, f"routes disagree: scan={scan_v} brute={brute_v}")
            if as_json:
                click.echo(json.dumps({"scan": scan_v, "brute": brute_v,
                                       "semiring": semiring_name, "monad": monad}))
            else:
                click.echo(f"scan = {scan_v}")
                click.echo(f"brute = {brute_v}")
            return
        value = mss_generic(s, None, t, via=via, kind=kind, force=force)
        if as_json:
            click.echo(json.dumps({"via": via, "value": value,
                                   "semiring": semiring_name, "monad": monad}))
        else:
            click.echo(str(value))

    _run(body)


@main.command()
@click.option("--shape", type=click.Choice(_SHAPE_CHOICES), default="htree",
              show_default=True)
@click.option("--monad", type=click.Choice(_MONAD_CHOICES), default="bag",
              show_default=True)
@click.option("--count", "count_only", is_flag=True,
              help="Print the number of prunings without enumerating.")
@click.option("--input", "inline", default=None, help="Term s-expression.")
@click.option("--file", "path", default=None)
@click.option("--json", "as_json", is_flag=True)
def prune(shape: str, monad: str, count_only: bool, inline: str | None,
          path: str | None, as_json: bool) -> None:
    """Enumerate (or count) all prunings of a term."""

    def body() -> None:
        t = _parse_tree(_read_source(inline, path), ShapeKind(shape))
        if count_only:
            n = prune_count(t)
            click.echo(json.dumps({"count": n}) if as_json else str(n))
            return
        c = prune_term(t, CollectionKind(monad))
        if as_json:
            click.echo(json.dumps({"kind": monad,
                                   "items": [print_pruned(p) for p in c.items]}))
        else:
            click.echo(to_text(c, print_pruned))

    _run(body)


@main.command()
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--trials", type=int, default=200, show_default=True)
@click.option("--id", "ids", multiple=True, help="Run only these law ids.")
@click.option("--json", "as_json", is_flag=True)
def laws(seed: int, trials: int, ids: tuple[str, ...], as_json: bool) -> None:
    """Run the law registry; nonzero exit if any expectation is missed."""

    def body() -> None:
        reports = run_all(seed, trials, list(ids) or None)
        if as_json:
            click.echo(reports_to_json(reports))
        else:
            width = max(len(r.id) for r in reports)
            for r in reports:
                status = "ok" if r.ok else "UNEXPECTED"
                line = f"{r.id:<{width}}  {r.outcome:<18} trials={r.trials:<6} {status}"
                click.echo(line)
                if r.witness is not None:
                    click.echo(f"{'':<{width}}  witness: {r.witness}")
        if not all(r.ok for r in reports):
            sys.exit(1)

    _run(body)


_BENCH_ALGOS = {"spec": mss_spec, "quadratic": mss_quadratic, "linear": mss_linear}


def _bench_input(n: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    bound = 1 << 20
    return [rng.randint(-bound, bound) for _ in range(n)]


def bench_run(sizes: list[int], algos: list[str], seed: int = 42,
              reps: int = 3, budget: float = 120.0) -> list[dict]:
    """Median-of-reps wall times for each (algo, n); raises
    BenchBudgetError when the accumulated time passes the budget."""
    rows = []
    started = time.perf_counter()
    for algo in algos:
        fn = _BENCH_ALGOS[algo]
        for n in sizes:
            xs = _bench_input(n, seed)
            times = []
            for _ in range(reps):
                if time.perf_counter() - started > budget:
                    raise BenchBudgetError(f"bench budget of {budget}s exceeded")
                t0 = time.perf_counter()
                fn(xs)
                times.append(time.perf_counter() - t0)
            rows.append({"algo": algo, "n": n,
                         "seconds": statistics.median(times)})
    return rows


@main.command()
@click.option("--sizes", default="200,400,800", show_default=True,
              help="Comma-separated ascending list lengths.")
@click.option("--algos", default="spec,quadratic,linear", show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--assert", "do_assert", is_flag=True,
              help="Require spec > quadratic > linear at the largest size.")
@click.option("--budget", type=float, default=120.0, show_default=True,
              help="Total wall-clock budget in seconds.")
@click.option("--json", "as_json", is_flag=True)
def bench(sizes: str, algos: str, seed: int, do_assert: bool, budget: float,
          as_json: bool) -> None:
    """Compare the list algorithms' wall-clock growth."""

    def body() -> None:
        try:
            ns = [int(p) for p in sizes.split(",") if p.strip()]
        except ValueError:
            raise TermSyntaxError("sizes must be integers", 0) from None
        if not ns or any(n <= 0 for n in ns) or ns != sorted(ns):
            _fail(EXIT_USAGE, "sizes must be positive and ascending")
        names = [a.strip() for a in algos.split(",") if a.strip()]
        unknown = [a for a in names if a not in _BENCH_ALGOS]
        if unknown:
            _fail(EXIT_USAGE, f"unknown algorithms: {', '.join(unknown)}")
        rows = bench_run(ns, names, seed, budget=budget)
        if as_json:
            click.echo(json.dumps(rows))
        else:
            for row in rows:
                click.echo(f"{row['algo']:<10} n={row['n']:<8} {row['seconds']:.6f}s")
        if do_assert and len(names) > 1:
            top = ns[-1]
            at_top = {r["algo"]: r["seconds"] for r in rows if r["n"] == top}
            order = [a for a in ("spec", "quadratic", "linear") if a in at_top]
            for fast, slow in zip(order[1:], order[:-1]):
                if not at_top[slow] > at_top[fast]:
                    _fail(1, f"expected {slow} slower than {fast} at n={top}")

    _run(body)


if __name__ == "__main__":
    main()
