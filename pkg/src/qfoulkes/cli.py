"""Command-line front end.

Exit codes: 0 when the checked statement holds, 1 when a counterexample or
mismatch is found, 2 for usage and internal errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
import traceback
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from . import cache as memo_cache
from . import configsearch as cs
from . import foulkes as fk
from . import qone
from .goldens import run_goldens
from .hall_littlewood import kostka_foulkes, kostka_number
from .partition import dominance_leq, partitions_of
from .properties import run_properties
from .subring import canonical_form, format_form, in_natural_span
from .symfunc import SchurExpansion, dim_of

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    degree_cap: int = 20
    jobs: int = 1
    cache_path: Path | None = None
    emit: str = "text"
    seed: int = 0
    verdict_only: bool = False
    timing: bool = True

    def __post_init__(self):
        if self.degree_cap < 1:
            raise UsageError("--degree-cap must be at least 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if self.emit not in ("json", "text"):
            raise UsageError("--emit must be json or text")


@dataclass
class Outcome:
    code: int
    payload: dict[str, Any]
    lines: list[str]


# helpers

def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {' '.join(missing)}")


def _cap(cfg: RunConfig, degree: int) -> None:
    if degree > cfg.degree_cap:
        raise UsageError(f"degree {degree} exceeds --degree-cap {cfg.degree_cap}")


def _mode(args) -> str:
    return "q0" if args.q0 else "q1" if args.q1 else "q"


def _expansion_block(cfg: RunConfig, label: str, e: SchurExpansion) -> tuple[dict, list[str]]:
    w = e.witness()
    data = {"positive": e.is_positive(),
            "witness": None if w is None else {"partition": str(w[0]), "coeff": w[1].to_json()}}
    lines = [f"{label}: {'Schur positive' if data['positive'] else 'NOT Schur positive'}"]
    if w is not None:
        lines.append(f"  witness: ({w[1]}) * s{w[0]}")
    if not cfg.verdict_only:
        data["expansion"] = e.to_json()
        lines.append(f"  = {e}")
    return data, lines


def _timed(fn: Callable[[], Outcome], cfg: RunConfig) -> Outcome:
    start = time.perf_counter()
    out = fn()
    if cfg.timing:
        out.payload["ms"] = int((time.perf_counter() - start) * 1000)
    return out


def _q1_block(label: str, value, closed=None) -> tuple[bool, dict, list[str]]:
    form = canonical_form(value)
    natural = in_natural_span(value)
    data = {"form": format_form(form), "in_natural_span": natural}
    lines = [f"{label} = {format_form(form)}",
             f"  in N[h1,h2,e2]: {natural}"]
    ok = natural
    if closed is not None:
        agrees = closed == value
        data["closed_form_agrees"] = agrees
        lines.append(f"  closed form agrees: {agrees}")
        ok = ok and agrees
    return ok, data, lines


# subcommands

def cmd_foulkes(args, cfg: RunConfig) -> Outcome:
    _need(args, "a", "b")
    a, b = args.a, args.b
    if not 0 < a <= b:
        raise UsageError("foulkes needs 0 < a <= b")
    _cap(cfg, a * b)
    mode = _mode(args)
    params = {"a": a, "b": b, "mode": mode}
    if mode == "q1":
        closed = qone.f_q1_closed(a, b) if 1 < a < b else None
        ok, data, lines = _q1_block(f"F_{{{a},{b}}}(x;1)", qone.f_q1(a, b), closed)
        return Outcome(EXIT_OK if ok else EXIT_FOUND, {"kind": "foulkes", "params": params, **data}, lines)
    e = fk.f_classic(a, b) if mode == "q0" else fk.f_q(a, b)
    label = f"f_{{{a},{b}}}" if mode == "q0" else f"F_{{{a},{b}}}(x;q)"
    data, lines = _expansion_block(cfg, label, e)
    return Outcome(EXIT_OK if data["positive"] else EXIT_FOUND,
                   {"kind": "foulkes", "params": params, **data}, lines)


def cmd_stability(args, cfg: RunConfig) -> Outcome:
    _need(args, "a", "b")
    a, b = args.a, args.b
    if not 0 < a <= b:
        raise UsageError("stability needs 0 < a <= b")
    _cap(cfg, a * (b + 1))
    classical = _mode(args) == "q0"
    e = fk.stability_diff(a, b, classical=classical)
    data, lines = _expansion_block(cfg, f"bar F_{{{a},{b + 1}}} - bar F_{{{a},{b}}}", e)
    return Outcome(EXIT_OK if data["positive"] else EXIT_FOUND,
                   {"kind": "stability", "params": {"a": a, "b": b, "classical": classical}, **data}, lines)


def cmd_manivel(args, cfg: RunConfig) -> Outcome:
    _need(args, "a", "b")
    a, b = args.a, args.b
    if not 0 < a < b:
        raise UsageError("manivel needs 0 < a < b")
    _cap(cfg, (a + 1) * (b + 1))
    classical = _mode(args) == "q0"
    e = fk.manivel_diff(a, b, classical=classical)
    data, lines = _expansion_block(cfg, f"double difference at a={a}, b={b}", e)
    return Outcome(EXIT_OK if data["positive"] else EXIT_FOUND,
                   {"kind": "manivel", "params": {"a": a, "b": b, "classical": classical}, **data}, lines)


def cmd_dims(args, cfg: RunConfig) -> Outcome:
    _need(args, "a", "b")
    a, b = args.a, args.b
    if not 0 < a < b:
        raise UsageError("dims needs 0 < a < b")
    _cap(cfg, a * b)
    engine = dim_of(fk.f_q_power(a, b))
    closed = fk.dim_Fq_closed(a, b)
    at1 = engine.at_one()
    want1 = fk.dim_Fq_at1(a, b)
    at0 = engine[0]
    want0 = fk.dim_h_plethysm(b, a) - fk.dim_h_plethysm(a, b)
    ok = engine == closed and at1 == want1 and at0 == want0
    payload = {"kind": "dims", "params": {"a": a, "b": b}, "dim": engine.to_json(),
               "closed_form_agrees": engine == closed, "at_q1": str(at1), "at_q1_agrees": at1 == want1,
               "at_q0": str(at0), "at_q0_agrees": at0 == want0}
    lines = [f"dim F_{{{a},{b}}}(x;q) = {engine}",
             f"  closed form agrees: {engine == closed}",
             f"  at q=1: {at1} (expected {want1})",
             f"  at q=0: {at0} (expected {want0})"]
    return Outcome(EXIT_OK if ok else EXIT_FOUND, payload, lines)


def cmd_q1_forms(args, cfg: RunConfig) -> Outcome:
    _need(args, "a", "b")
    a, b = args.a, args.b
    payload: dict[str, Any] = {"kind": "q1-forms", "params": {"a": a, "b": b}}
    lines: list[str] = []
    ok = True
    if args.c is not None or args.d is not None:
        _need(args, "c", "d")
        c, d = args.c, args.d
        _cap(cfg, a * b)
        payload["params"].update(c=c, d=d)
        good, data, more = _q1_block(f"lim (H_{c}[H_{d}] - H_{a}[H_{b}])/(1-q)",
                                     qone.generalized_q1(a, b, c, d), qone.generalized_q1_closed(a, b, c, d))
        payload["generalized"] = data
        return Outcome(EXIT_OK if good else EXIT_FOUND, payload, more)
    if not 1 < a < b:
        raise UsageError("q1-forms needs 1 < a < b")
    _cap(cfg, a * b)
    lemma_ok = qone.lemma31(a, b) == qone.lemma31_engine(a, b)
    payload["lemma_agrees"] = lemma_ok
    lines.append(f"lim (h1^{a * b} - H_{a}[H_{b}])/(1-q): closed form agrees: {lemma_ok}")
    good, data, more = _q1_block(f"F_{{{a},{b}}}(x;1)", qone.f_q1(a, b), qone.f_q1_closed(a, b))
    payload["F"] = data
    ok = lemma_ok and good
    return Outcome(EXIT_OK if ok else EXIT_FOUND, payload, lines + more)


def cmd_theta(args, cfg: RunConfig) -> Outcome:
    _need(args, "a", "b")
    a, bmax = args.a, args.b
    if not 2 <= a <= bmax:
        raise UsageError("theta needs 2 <= a <= b (b is the largest index reported)")
    _cap(cfg, a * (bmax + 1))
    report = qone.theta_recurrence_check(a, bmax)
    ok = all(r.in_natural_span and r.seeded_agrees is not False for r in report.rows)
    lines = [f"Theta_{a}(b) for b = {a}..{bmax}"]
    for r in report.rows:
        lines.append(f"  b={r.b}: {r.direct}")
        lines.append(f"    in N[h1,h2,e2]={r.in_natural_span} printed seeds/recurrence agree={r.printed_agrees}"
                     f" recurrence from extracted seeds={r.seeded_agrees}"
                     f" bridge={r.bridge_agrees} shifted bridge={r.shifted_bridge_agrees}")
    return Outcome(EXIT_OK if ok else EXIT_FOUND, report.to_json(), lines)


def cmd_generalized(args, cfg: RunConfig) -> Outcome:
    _need(args, "a", "b", "c", "d")
    a, b, c, d = args.a, args.b, args.c, args.d
    if a * b != c * d or not 1 <= a <= c <= b:
        raise UsageError("generalized needs ab = cd and a <= c <= b")
    _cap(cfg, a * b)
    mode = _mode(args)
    params = {"a": a, "b": b, "c": c, "d": d, "mode": mode}
    if mode == "q1":
        ok, data, lines = _q1_block("limit at q=1", qone.generalized_q1(a, b, c, d),
                                    qone.generalized_q1_closed(a, b, c, d))
        return Outcome(EXIT_OK if ok else EXIT_FOUND, {"kind": "generalized", "params": params, **data}, lines)
    if mode == "q0":
        e, label = fk.generalized_classic(a, b, c, d), f"h_{c}[h_{d}] - h_{a}[h_{b}]"
    else:
        e, label = fk.generalized_f_q(a, b, c, d), f"(H_{c}[H_{d}] - H_{a}[H_{b}])/(1-q)"
    data, lines = _expansion_block(cfg, label, e)
    return Outcome(EXIT_OK if data["positive"] else EXIT_FOUND,
                   {"kind": "generalized", "params": params, **data}, lines)


def cmd_configs(args, cfg: RunConfig) -> Outcome:
    if args.guess:
        _need(args, "a", "b", "c", "d", "k")
        _cap(cfg, args.a * args.b * args.k)
        rep = cs.check_guess_patterns(args.a, args.b, args.c, args.d, args.k)
        ok = rep.config_61 and rep.holds_62 and rep.holds_63
        lines = [f"<[{args.a}, {args.b}^{args.k}]:[{args.c}, {args.d}^{args.k}]>_q: {rep.config_61}",
                 f"  h_a[s_(b^k)] <= h_c[s_(d^k)]: {rep.classical_61}",
                 f"  h_c[s_(d^k)] <= h_b[s_(a^k)]: {rep.holds_62}"
                 + (f" (witness {rep.witness_62})" if rep.witness_62 else ""),
                 f"  h_a[h_b^k] <= h_c[h_d^k]: {rep.holds_63}"]
        return Outcome(EXIT_OK if ok else EXIT_FOUND, rep.to_json(), lines)
    _need(args, "n")
    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    _cap(cfg, n)
    if args.conj4:
        rep = cs.check_conjecture4(n, jobs=cfg.jobs)
        data = rep.to_json(timing=cfg.timing)
        lines = [f"n={n}: {rep.checked_pairs} ordered pairs satisfy the e-condition",
                 f"  both: {len(rep.both)}; only classical: {rep.only_classical}; only q: {rep.only_q}",
                 f"  biconditional holds: {rep.holds}"]
        return Outcome(EXIT_OK if rep.holds else EXIT_FOUND, data, lines)
    if args.check_table:
        table = cs.TABLE2 if args.q else cs.TABLE1
        ns = [m for m in range(1, n + 1) if m in table]
        counts = cs.table_counts(ns, q=args.q, jobs=cfg.jobs)
        bad = {m: (counts[m], table[m]) for m in ns if counts[m] != table[m]}
        lines = [f"n={m}: {counts[m]} (table {table[m]})" + ("" if m not in bad else "  MISMATCH") for m in ns]
        data = {"kind": "configs-table", "q": args.q, "counts": {str(m): counts[m] for m in ns},
                "mismatches": {str(m): list(v) for m, v in bad.items()}}
        return Outcome(EXIT_FOUND if bad else EXIT_OK, data, lines)
    configs = (cs.enumerate_q_configs(n, jobs=cfg.jobs) if args.q
               else cs.enumerate_foulkes_configs(n, jobs=cfg.jobs))
    data = {"kind": "configs", "n": n, "q": args.q, "count": len(configs)}
    lines = [f"n={n}: {len(configs)} {'q-Foulkes' if args.q else 'Foulkes'} configurations"]
    if not cfg.verdict_only:
        data["configurations"] = [c.to_json() for c in configs]
        lines += [f"  {c}" for c in configs]
    return Outcome(EXIT_OK, data, lines)


def cmd_kostka(args, cfg: RunConfig) -> Outcome:
    _need(args, "n")
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    _cap(cfg, max(n, 1))
    rows, lines, ok = [], [], True
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            if not dominance_leq(mu, lam):
                continue
            k = kostka_foulkes(lam, mu)
            matches = k.at_one() == kostka_number(lam, mu)
            ok = ok and matches
            rows.append({"lam": str(lam), "mu": str(mu), "K": k.to_json(), "at_q1_is_kostka_number": matches})
            if not cfg.verdict_only:
                lines.append(f"K_{{{lam},{mu}}}(q) = {k}")
    lines.append(f"K(1) equals the Kostka number in every case: {ok}")
    data = {"kind": "kostka", "n": n, "all_match_at_q1": ok}
    if not cfg.verdict_only:
        data["table"] = rows
    return Outcome(EXIT_OK if ok else EXIT_FOUND, data, lines)


def cmd_iterated(args, cfg: RunConfig) -> Outcome:
    _need(args, "a", "b", "c")
    a, b, c = args.a, args.b, args.c
    if not 1 < a < b < c:
        raise UsageError("iterated needs 1 < a < b < c")
    _cap(cfg, a * b * c)
    if args.immanant:
        e, label = fk.immanant_case(a, b, c), f"2h<{c},{b},{a}> - h<{b},{a},{c}> - h<{a},{c},{b}>"
    else:
        e, label = fk.alternating_sum((c, b, a)), f"alternating sum over ({c},{b},{a})"
    data, lines = _expansion_block(cfg, label, e)
    return Outcome(EXIT_OK if data["positive"] else EXIT_FOUND,
                   {"kind": "iterated", "params": {"a": a, "b": b, "c": c, "immanant": args.immanant}, **data},
                   lines)


def _suite_rows(rows: list[tuple[str, bool, str]]) -> tuple[list[dict], list[str], bool]:
    data = [{"name": n, "ok": ok, **({"detail": d} if d else {})} for n, ok, d in rows]
    lines = [f"{'PASS' if ok else 'FAIL'}  {n}" + (f"  ({d[:200]})" if d else "") for n, ok, d in rows]
    return data, lines, all(ok for _, ok, _ in rows)


def suite_tables(cfg: RunConfig) -> list[tuple[str, bool, str]]:
    rows = []
    for n in range(1, min(16, cfg.degree_cap) + 1):
        found = cs.enumerate_foulkes_configs(n, jobs=cfg.jobs)
        ok = len(found) == cs.TABLE1[n]
        if ok and n in cs.REFERENCE_FOULKES:
            ok = cs.found_set(found) == cs.reference_set(cs.REFERENCE_FOULKES[n])
        rows.append((f"Foulkes configurations n={n}", ok, "" if ok else f"found {len(found)}"))
    for n in range(1, min(20, cfg.degree_cap) + 1):
        found = cs.enumerate_q_configs(n, jobs=cfg.jobs)
        ok = len(found) == cs.TABLE2[n]
        if ok and n in cs.REFERENCE_Q:
            ok = cs.found_set(found) == cs.reference_set(cs.REFERENCE_Q[n])
        rows.append((f"q-Foulkes configurations n={n}", ok, "" if ok else f"found {[str(c) for c in found]}"))
    for n in range(1, min(16, cfg.degree_cap) + 1):
        rep = cs.check_conjecture4(n, jobs=cfg.jobs)
        rows.append((f"e-condition biconditional n={n}", rep.holds,
                     "" if rep.holds else f"{rep.only_classical} {rep.only_q}"))
    return rows


def cmd_suite(args, cfg: RunConfig) -> Outcome:
    if args.name == "paper-goldens":
        rows = run_goldens()
    elif args.name == "tables":
        rows = suite_tables(cfg)
    else:
        rows = run_properties(seed=cfg.seed)
    data, lines, ok = _suite_rows(rows)
    lines.append(f"{sum(r['ok'] for r in data)}/{len(data)} passed")
    return Outcome(EXIT_OK if ok else EXIT_FOUND, {"kind": "suite", "name": args.name, "results": data}, lines)


COMMANDS = {
    "foulkes": cmd_foulkes, "stability": cmd_stability, "manivel": cmd_manivel, "dims": cmd_dims,
    "q1-forms": cmd_q1_forms, "theta": cmd_theta, "generalized": cmd_generalized,
    "configs": cmd_configs, "kostka": cmd_kostka, "iterated": cmd_iterated, "suite": cmd_suite,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for searches")
    common.add_argument("--cache", nargs="?", const="", default=None, metavar="PATH",
                        help=f"load and store memo tables (default path from ${memo_cache.ENV_VAR})")
    common.add_argument("--emit", choices=("json", "text"), default="text")
    common.add_argument("--degree-cap", type=int, default=20, help="refuse work above this degree")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--verdict-only", action="store_true", help="omit full expansions")
    common.add_argument("--no-timing", action="store_true", help="leave timing fields out of reports")
    for name in "abcdnk":
        common.add_argument(f"--{name}", type=int)
    q = common.add_mutually_exclusive_group()
    q.add_argument("--q", action="store_true", help="q-analog (default)")
    q.add_argument("--q0", action="store_true", help="classical case q = 0")
    q.add_argument("--q1", action="store_true", help="limit at q = 1")

    parser = _Parser(prog="qfoulkes", description="Exact checks of plethysm positivity statements.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "configs":
            p.add_argument("--check-table", action="store_true")
            p.add_argument("--conj4", action="store_true", help="test the e-condition biconditional")
            p.add_argument("--guess", action="store_true", help="pattern <[a, b^k]:[c, d^k]>_q")
        if name == "iterated":
            p.add_argument("--immanant", action="store_true")
        if name == "suite":
            p.add_argument("name", choices=("paper-goldens", "tables", "properties"))
    return parser


def _config(args) -> RunConfig:
    path = None
    if args.cache is not None:
        path = Path(args.cache) if args.cache else memo_cache.default_path()
    elif os.environ.get(memo_cache.ENV_VAR):
        path = memo_cache.default_path()
    return RunConfig(degree_cap=args.degree_cap, jobs=args.jobs, cache_path=path, emit=args.emit,
                     seed=args.seed, verdict_only=args.verdict_only, timing=not args.no_timing)


def _emit(cfg: RunConfig, out: Outcome, stream) -> None:
    if cfg.emit == "json":
        stream.write(json.dumps(out.payload, indent=2, sort_keys=True) + "\n")
    else:
        stream.write("\n".join(out.lines) + "\n")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        if cfg.cache_path is not None:
            memo_cache.cache_load(cfg.cache_path)
        out = _timed(lambda: COMMANDS[args.command](args, cfg), cfg)
        if cfg.cache_path is not None:
            memo_cache.cache_store(cfg.cache_path)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except Exception as exc:
        stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        if os.environ.get("QFOULKES_DEBUG"):
            traceback.print_exc(file=stderr)
        return EXIT_USAGE
    _emit(cfg, out, stdout)
    return out.code


def main() -> None:
    sys.exit(run())
