#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
reisctl — liczenie i wyliczanie klas konfiguracji Reisa z linii poleceń.
Przykłady:
reisctl count --n 24 --gap 1 --rotsym --method both
reisctl enumerate --n 12 --alphabet 3 --gap 1 --rotsym --format tsv
reisctl tables --which 1 --check
reisctl verify --suite cross --n-max 14 --gap-max 2
reisctl axes --n 24 --gap 1 --rotsym

Kody wyjścia: 0 – sukces, 1 – wykryta niezgodność, 2 – złe argumenty / dziedzina.
"""
from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger
from pydantic import ValidationError
from rich import box
from rich.console import Console
from rich.table import Table

from reiscount.core.errors import ReisError
from reiscount.counting.dispatch import formula_count, has_formula
from reiscount.oracle.classes import axis_breakdown, count_classes, enumerate_classes
from reiscount.oracle.engines import ENGINES
from reiscount.oracle.fixtures import FIXTURE_FILES, load_fixture
from reiscount.oracle.query import Query
from reiscount.protocol.report import RunReport
from reiscount.utils.config import get_settings
from reiscount.utils.logs import setup_logging
from reiscount.verify.suites import SUITES, run_suite


class _Run:
    """Stan jednego wywołania: stoper i opcja --no-timing."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.started = time.perf_counter()

    def elapsed(self) -> Optional[int]:
        if getattr(self.args, "no_timing", False):
            return None
        return int((time.perf_counter() - self.started) * 1000)


# ---------------------------------------------------------------------------
# Zapytanie z argumentów
# ---------------------------------------------------------------------------

def _add_query_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet", type=int, choices=(2, 3), default=2)
    p.add_argument("--gap", type=int, default=0, help="minimalna przerwa m (0 = bez ograniczenia)")
    p.add_argument("--k", type=int, help="liczba niezerowych symboli")
    p.add_argument("--rotsym", action="store_true", help="tylko klasy symetryczne obrotowo")
    p.add_argument("--diameter", action="store_true", help="tylko klasy ze średnicą symetrii")
    p.add_argument("--axis", help="no-axis | gap-gap-only | point:a-b")
    p.add_argument("--engine", choices=ENGINES, default="auto")


def _add_output_args(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--no-timing", action="store_true", help="bez elapsed_ms (wynik stabilny bajtowo)")


def _query(args: argparse.Namespace) -> Query:
    return Query(
        n=args.n,
        alphabet=args.alphabet,
        min_gap=args.gap,
        k=args.k,
        require_rotsym=args.rotsym,
        require_reflective=args.diameter,
        axis_filter=args.axis,
    )


# ---------------------------------------------------------------------------
# Wyjście
# ---------------------------------------------------------------------------

def _console() -> Console:
    return Console(file=sys.stdout, highlight=False, soft_wrap=True)


def _print_kv(title: str, rows: Dict[str, Any]) -> None:
    table = Table(title=title, box=box.SIMPLE, show_header=False)
    table.add_column("key", style="bold")
    table.add_column("value")
    for key, value in rows.items():
        table.add_row(str(key), str(value))
    _console().print(table)


def _print_classes(title: str, words: List[str], ks: List[int]) -> None:
    # układ tabel źródłowych: numer, konfiguracja, liczba niezerowych symboli
    table = Table(title=title, box=None, show_header=True, pad_edge=False)
    table.add_column("#", justify="right")
    table.add_column("configuration")
    table.add_column("k", justify="right")
    for i, (word, k) in enumerate(zip(words, ks), start=1):
        table.add_row(str(i), " ".join(word), str(k))
    _console().print(table)


def _emit(report: RunReport, fmt: str) -> None:
    if fmt == "json":
        print(report.dumps())
        return
    if report.classes is not None and fmt == "tsv":
        for i, word in enumerate(report.classes, start=1):
            print(f"{i}\t{word}\t{sum(1 for s in word if s != '0')}")
        return
    if report.classes is not None:
        _print_classes(f"{report.command} {report.query}", report.classes,
                       [sum(1 for s in w if s != "0") for w in report.classes])
    header: Dict[str, Any] = {"query": report.query}
    for key in ("method", "op", "value", "values", "matches", "known_divergence", "summary", "elapsed_ms"):
        value = getattr(report, key)
        if value is not None:
            header[key] = value
    if report.histogram is not None:
        header.update(report.histogram)
    _print_kv(report.command, header)
    for item in report.items or []:
        _console().print(item)
    for note in report.notes or []:
        _console().print(f"note: {note}")


# ---------------------------------------------------------------------------
# Podkomendy
# ---------------------------------------------------------------------------

def cmd_count(run: _Run) -> int:
    args = run.args
    q = _query(args)
    method = args.method or ("formula" if has_formula(q) else "oracle")
    notes: List[str] = []

    if method == "formula" and q.alphabet == 3 and not args.allow_approx:
        logger.warning("[CLI] ternary closed form refused without --allow-approx; using the oracle")
        notes.append("ternary closed forms diverge from the class count; oracle used (pass --allow-approx to override)")
        method = "oracle"

    if method == "formula":
        answer = formula_count(q)
        if not answer.exact:
            notes.append(f"{answer.op} is known to diverge from the exhaustive count")
        report = RunReport(command="count", query=q.echo(), method="formula", op=answer.op,
                           value=answer.value, notes=notes or None, elapsed_ms=run.elapsed())
    elif method == "oracle":
        value = count_classes(q, engine=args.engine)
        report = RunReport(command="count", query=q.echo(), method="oracle", value=value,
                           notes=notes or None, elapsed_ms=run.elapsed())
    else:
        answer = formula_count(q)
        oracle = count_classes(q, engine=args.engine)
        matches = answer.value == oracle
        report = RunReport(
            command="count", query=q.echo(), method="both", op=answer.op,
            values={"formula": answer.value, "oracle": oracle}, matches=matches,
            known_divergence=(not answer.exact and not matches) or None,
            elapsed_ms=run.elapsed(),
        )
        if not matches:
            logger.warning(f"[CLI] formula {answer.value} != oracle {oracle} for {q.echo()}")

    _emit(report, args.format)
    return 1 if report.failed else 0


def cmd_enumerate(run: _Run) -> int:
    args = run.args
    q = _query(args)
    classes = enumerate_classes(q, engine=args.engine)
    report = RunReport(command="enumerate", query=q.echo(), method="oracle", value=len(classes),
                       classes=[str(c) for c in classes], elapsed_ms=run.elapsed())
    _emit(report, args.format)
    return 0


def cmd_tables(run: _Run) -> int:
    args = run.args
    fixture = load_fixture(args.which)
    q = Query(n=fixture.n, alphabet=fixture.alphabet, min_gap=1, require_rotsym=True)
    found = enumerate_classes(q)
    histogram = {f"k={k}": c for k, c in sorted(Counter(c.k for c in found).items())}
    report = RunReport(command="tables", query={"which": args.which, **q.echo()}, method="oracle",
                       value=len(found), classes=[str(c) for c in found], histogram=histogram)

    if args.check:
        golden = fixture.classes()
        missing = sorted(str(c) for c in golden - set(found))
        extra = sorted(str(c) for c in set(found) - golden)
        items = [{"missing": w} for w in missing] + [{"extra": w} for w in extra]
        notes = [f"printed row {row} corrected in the fixture: {word}" for row, word in sorted(fixture.printed_rows.items())]
        report = report.model_copy(update={
            "matches": not items, "items": items, "notes": notes or None,
        })
    report = report.model_copy(update={"elapsed_ms": run.elapsed()})
    _emit(report, args.format)
    return 1 if report.failed else 0


def cmd_verify(run: _Run) -> int:
    args = run.args
    result = run_suite(args.suite, n_max=args.n_max, gap_max=args.gap_max)
    report = result.to_report(timing=not args.no_timing)
    _emit(report, args.format)
    return 0 if result.passed else 1


def cmd_axes(run: _Run) -> int:
    args = run.args
    q = _query(args)
    hist = axis_breakdown(q, engine=args.engine)
    report = RunReport(command="axes", query=q.without_axis().echo(), method="oracle",
                       value=sum(hist[key] for key in ("no-axis", "gap-gap-only", "point-axis")),
                       histogram=hist, elapsed_ms=run.elapsed())
    _emit(report, args.format)
    return 0


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "tables": cmd_tables,
    "verify": cmd_verify,
    "axes": cmd_axes,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reisctl", description="Reis-problem configuration counts")
    sub = ap.add_subparsers(dest="cmd", required=True)

    ap_count = sub.add_parser("count")
    _add_query_args(ap_count)
    ap_count.add_argument("--method", choices=("formula", "oracle", "both"))
    ap_count.add_argument("--allow-approx", action="store_true",
                          help="pozwól na wzór dla alfabetu {0,1,2} (znana rozbieżność)")
    _add_output_args(ap_count, ("json", "text"), "json")

    ap_enum = sub.add_parser("enumerate")
    _add_query_args(ap_enum)
    _add_output_args(ap_enum, ("json", "tsv", "text"), "tsv")

    ap_tables = sub.add_parser("tables")
    ap_tables.add_argument("--which", type=int, choices=sorted(FIXTURE_FILES), required=True)
    ap_tables.add_argument("--check", action="store_true")
    _add_output_args(ap_tables, ("json", "text"), "text")

    ap_verify = sub.add_parser("verify")
    ap_verify.add_argument("--suite", choices=SUITES, required=True)
    ap_verify.add_argument("--n-max", type=int)
    ap_verify.add_argument("--gap-max", type=int)
    _add_output_args(ap_verify, ("json", "text"), "json")

    ap_axes = sub.add_parser("axes")
    _add_query_args(ap_axes)
    _add_output_args(ap_axes, ("json", "text"), "json")
    return ap


def run(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        setup_logging(get_settings().log_level)
        logger.debug(f"[CLI] {args.cmd} {vars(args)}")
        return COMMANDS[args.cmd](_Run(args))
    except ValidationError as e:
        first = e.errors()[0]
        print(f"error: {first.get('msg')} ({'.'.join(str(x) for x in first.get('loc', ()))})", file=sys.stderr)
        ap.print_usage(sys.stderr)
        return 2
    except ReisError as e:
        print(f"error: {e.code}: {e}", file=sys.stderr)
        return 2 if e.code.startswith("REFUSE") else 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        ap.print_usage(sys.stderr)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
