"""Batch front end: classify, oracle, construct, brace, rump, aut, sweep.

Reports are line-oriented ``key: value`` text with a stable key order, so
reruns are byte-identical and diffs stay meaningful.  Exit codes: 0 for a
realizable verdict (or plain success), 1 for not realizable, 2 for errors
such as parse failures or exceeded bounds.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .groups import BoundExceeded, FiniteGroup, GroupDefinitionError, generating_set
from .holomorph import (DEFAULT_HOL_BOUND, cyclic_regular_oracle,
                        skew_brace_from_regular, subgroup_generated_by_hol)
from .realizability import (classify, classify_rump, corpus_representatives,
                            generate_corpus)
from .specs import SpecError, load_cayley_table, parse_group_spec

BOUND_ENV_VAR = "HOLOREG_BOUND"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


@dataclass
class Request:
    """One batch command: exactly one group source plus options."""

    command: str
    spec: Optional[str] = None
    table: Optional[str] = None
    hol_bound: int = DEFAULT_HOL_BOUND
    workers: int = 1
    out: Optional[str] = None
    limit: Optional[int] = None

    def __post_init__(self):
        if self.hol_bound <= 0:
            raise SpecError("bounds must be positive")
        if self.command != "sweep" and (self.spec is None) == (self.table is None):
            raise SpecError("exactly one of --spec or --table is required")


class _Report:
    def __init__(self):
        self.lines = []

    def add(self, key: str, value):
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.lines.append(f"{key}: {value}")

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def default_hol_bound() -> int:
    value = os.environ.get(BOUND_ENV_VAR)
    if value is None:
        return DEFAULT_HOL_BOUND
    try:
        bound = int(value)
    except ValueError:
        raise SpecError(f"{BOUND_ENV_VAR} must be an integer, got {value!r}")
    if bound <= 0:
        raise SpecError(f"{BOUND_ENV_VAR} must be positive")
    return bound


def _load_group(request: Request) -> FiniteGroup:
    if request.spec is not None:
        return parse_group_spec(request.spec)
    return load_cayley_table(request.table)


def _group_source(request: Request) -> str:
    return request.spec if request.spec is not None else f"table:{request.table}"


def _witness_lines(report: _Report, group: FiniteGroup, witness):
    report.add("witness_translation", group.format_element(witness.translation))
    gens = generating_set(group)
    images = ", ".join(
        f"{group.format_element(g)}->{group.format_element(witness.twist[g])}"
        for g in gens)
    report.add("witness_twist", images if images else "id")


def _classify_report(request: Request) -> tuple:
    group = _load_group(request)
    verdict = classify(group)
    report = _Report()
    report.add("command", "classify")
    report.add("spec", _group_source(request))
    report.add("order", group.order)
    report.add("realizable", verdict.realizable)
    report.add("reason", verdict.reason)
    if verdict.decomposition is not None:
        report.add("decomposition", verdict.decomposition.summary())
    if verdict.witness is not None:
        _witness_lines(report, group, verdict.witness)
    return report.text(), EXIT_OK if verdict.realizable else EXIT_NEGATIVE


def _oracle_report(request: Request) -> tuple:
    group = _load_group(request)
    found = cyclic_regular_oracle(group, hol_bound=request.hol_bound)
    report = _Report()
    report.add("command", "oracle")
    report.add("spec", _group_source(request))
    report.add("order", group.order)
    report.add("generator_count", len(found))
    for idx, h in enumerate(found):
        gens = generating_set(group)
        twist = ",".join(
            f"{group.format_element(g)}->{group.format_element(h.twist[g])}"
            for g in gens)
        report.add(f"generator_{idx}",
                   f"({group.format_element(h.translation)}; {twist or 'id'})")
    return report.text(), EXIT_OK if found else EXIT_NEGATIVE


def _construct_report(request: Request) -> tuple:
    group = _load_group(request)
    verdict = classify(group)
    report = _Report()
    report.add("command", "construct")
    report.add("spec", _group_source(request))
    report.add("order", group.order)
    report.add("realizable", verdict.realizable)
    report.add("reason", verdict.reason)
    if not verdict.realizable:
        return report.text(), EXIT_NEGATIVE
    witness = verdict.witness
    _witness_lines(report, group, witness)
    report.add("witness_order", witness.order())
    report.add("cycle_length", witness.cycle_length_through_identity())
    return report.text(), EXIT_OK


def _brace_report(request: Request) -> tuple:
    group = _load_group(request)
    verdict = classify(group)
    report = _Report()
    report.add("command", "brace")
    report.add("spec", _group_source(request))
    report.add("order", group.order)
    report.add("realizable", verdict.realizable)
    if not verdict.realizable:
        report.add("reason", verdict.reason)
        return report.text(), EXIT_NEGATIVE
    subgroup = subgroup_generated_by_hol(verdict.witness)
    brace = skew_brace_from_regular(group, subgroup)
    report.add("additive", group.name or "table input")
    report.add("circle_cyclic",
               int(max(brace.multiplicative.orders)) == group.order)
    for a in range(group.order):
        row = " ".join(str(int(v)) for v in brace.circle_table[a])
        report.add(f"circle_row_{a}", row)
    return report.text(), EXIT_OK


def _rump_report(request: Request) -> tuple:
    group = _load_group(request)
    verdict = classify_rump(group)
    report = _Report()
    report.add("command", "rump")
    report.add("spec", _group_source(request))
    report.add("order", group.order)
    report.add("realizable_over_cyclic_target", verdict)
    return report.text(), EXIT_OK if verdict else EXIT_NEGATIVE


def _aut_report(request: Request) -> tuple:
    from .groups import automorphism_group
    group = _load_group(request)
    auts = automorphism_group(group, bound=None,
                              max_count=max(request.hol_bound // group.order, 1))
    report = _Report()
    report.add("command", "aut")
    report.add("spec", _group_source(request))
    report.add("order", group.order)
    report.add("aut_count", len(auts))
    gens = generating_set(group)
    for idx, aut in enumerate(auts):
        images = ", ".join(
            f"{group.format_element(g)}->{group.format_element(aut(g))}" for g in gens)
        report.add(f"aut_{idx}", images or "id")
    return report.text(), EXIT_OK


def sweep_one(spec: str, hol_bound: int) -> tuple:
    """Classify one corpus spec and compare with the oracle; picklable for workers."""
    group = parse_group_spec(spec)
    verdict = classify(group)
    try:
        found = cyclic_regular_oracle(group, hol_bound=hol_bound)
        oracle = "nonempty" if found else "empty"
        agree = verdict.realizable == bool(found)
    except BoundExceeded:
        oracle = "skipped(bound)"
        agree = True
    return spec, group.order, verdict.realizable, verdict.reason, oracle, agree


def _sweep_report(request: Request) -> tuple:
    entries = corpus_representatives(generate_corpus())
    if request.limit is not None:
        entries = entries[:request.limit]
    specs = [e.spec for e in entries]
    if request.workers > 1:
        with ProcessPoolExecutor(max_workers=request.workers) as pool:
            rows = list(pool.map(sweep_one, specs,
                                 [request.hol_bound] * len(specs)))
    else:
        rows = [sweep_one(s, request.hol_bound) for s in specs]
    report = _Report()
    report.add("command", "sweep")
    report.add("corpus_size", len(rows))
    disagreements = 0
    skipped = 0
    realizable = 0
    for spec, order, ok, reason, oracle, agree in rows:
        flag = "agree" if agree else "DISAGREE"
        if oracle == "skipped(bound)":
            skipped += 1
            flag = "skipped"
        if not agree:
            disagreements += 1
        if ok:
            realizable += 1
        report.add("group", f"{spec} | order={order} | classify={str(ok).lower()} "
                            f"({reason}) | oracle={oracle} | {flag}")
    report.add("realizable_count", realizable)
    report.add("oracle_skipped", skipped)
    report.add("disagreements", disagreements)
    return report.text(), EXIT_OK if disagreements == 0 else EXIT_NEGATIVE


_HANDLERS = {
    "classify": _classify_report,
    "oracle": _oracle_report,
    "construct": _construct_report,
    "brace": _brace_report,
    "rump": _rump_report,
    "aut": _aut_report,
    "sweep": _sweep_report,
}


def run(request: Request) -> tuple:
    """Execute a request; returns (report text, exit code)."""
    handler = _HANDLERS.get(request.command)
    if handler is None:
        return f"error: unknown command {request.command!r}\n", EXIT_ERROR
    try:
        return handler(request)
    except (SpecError, GroupDefinitionError) as exc:
        return f"error: {exc}\n", EXIT_ERROR
    except BoundExceeded as exc:
        return f"error: bound exceeded: {exc}\n", EXIT_ERROR
    except FileNotFoundError as exc:
        return f"error: {exc}\n", EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holoreg",
        description="Decide, construct, and verify cyclic regular subgroups "
                    "in holomorphs of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        cmd = sub.add_parser(name)
        if name != "sweep":
            cmd.add_argument("--spec", help="group spec in the mini-language")
            cmd.add_argument("--table", help="path to a Cayley-table file")
        cmd.add_argument("--hol-bound", type=int, default=None,
                         help="holomorph size bound (default 20000, or "
                              f"${BOUND_ENV_VAR})")
        cmd.add_argument("--workers", type=int, default=1,
                         help="parallel workers (sweep only)")
        cmd.add_argument("--out", help="write the report to this file")
        if name == "sweep":
            cmd.add_argument("--limit", type=int, default=None,
                             help="only sweep the first K corpus entries")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        bound = args.hol_bound if args.hol_bound is not None else default_hol_bound()
        request = Request(command=args.command,
                          spec=getattr(args, "spec", None),
                          table=getattr(args, "table", None),
                          hol_bound=bound,
                          workers=args.workers,
                          out=args.out,
                          limit=getattr(args, "limit", None))
    except SpecError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    text, code = run(request)
    if request.out:
        with open(request.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
