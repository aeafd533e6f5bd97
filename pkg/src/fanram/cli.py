"""Command-line front end.

Every run prints one JSON report with fixed field order on standard output.
Exit codes: 0 found/true/valid, 1 absent/false/invalid, 2 usage or runtime
error. Reports contain nothing run-dependent (no timestamps, no thread
hints), so identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, io, patterns, search
from .cache import ResultRecord, cache_lookup, cache_store, load_records
from .colorings import (
    Certificate,
    burr_coloring,
    certificate_payload,
    check_free,
    lemma27_construction,
    load_certificate,
    thm17_construction,
)
from .errors import CorruptRecord, FanramError, RangeError
from .graph6 import encode
from .patterns import format_target, parse_target, pattern_graph

REPORT_FORMAT = "fanram-report-1"


def _report(command: str, **fields) -> dict:
    doc = {"format": REPORT_FORMAT, "command": command}
    doc.update(fields)
    return doc


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _cert_obj(cert: Certificate) -> dict:
    doc = certificate_payload(cert)
    doc["content_hash"] = cert.content_hash
    return doc


def _validity_obj(v: bounds.Validity) -> dict:
    return {"condition": v.condition, "satisfied": v.satisfied, "assumed": v.assumed}


def _bound_obj(rep: bounds.BoundReport) -> dict:
    return {
        "formula_id": rep.formula_id,
        "params": rep.params,
        "value": rep.value,
        "kind": rep.kind,
        "validity": _validity_obj(rep.validity),
    }


def _stats_obj(st: search.SearchStats) -> dict:
    return {
        "nodes": st.nodes,
        "red_prunes": st.red_prunes,
        "blue_prunes": st.blue_prunes,
        "iso_prunes": st.iso_prunes,
    }


def _search_config(args) -> search.SearchConfig:
    cfg = search.SearchConfig()
    if getattr(args, "budget", None) is not None:
        cfg.node_budget = args.budget
    if getattr(args, "threads", None) is not None:
        cfg.thread_count_hint = args.threads
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    return cfg


def _cache_path(args) -> str | None:
    if getattr(args, "cache", None):
        return args.cache
    return os.environ.get("FANRAM_CACHE") or None


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _replay(path: str, kind: str, red: str, blue: str, params: dict) -> dict | None:
    """Newest matching cache record whose embedded certificate still
    re-validates; failures warn and count as a miss."""
    rec = cache_lookup(path, kind, red, blue, params)
    if rec is None:
        return None
    cert_obj = rec.artifact.get("certificate") or rec.artifact.get("witness")
    if cert_obj is not None:
        try:
            load_certificate(json.dumps(cert_obj))
        except CorruptRecord as exc:
            _warn(f"cached record failed re-validation, recomputing: {exc}")
            return None
    return rec.artifact


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_construct(args) -> int:
    family = args.family
    if family == "thm17":
        for name in ("m", "s", "t", "n"):
            _require(args, name, family)
        coloring = thm17_construction(args.m, args.s, args.t, args.n)
        params = {"m": args.m, "s": args.s, "t": args.t, "n": args.n}
        red = f"K{args.m}"
        blue = format_target(
            patterns.copies_pattern(args.s, patterns.Fan(args.t, args.n))
        )
    elif family == "lemma27":
        for name in ("s", "t", "n"):
            _require(args, name, family)
        coloring = lemma27_construction(args.s, args.t, args.n)
        params = {"s": args.s, "t": args.t, "n": args.n}
        red = f"M:{args.s}"
        blue = f"F:{args.t},{args.n}"
    elif family == "burr":
        for name in ("chi", "surplus", "h_order"):
            _require(args, name, family)
        coloring = burr_coloring(args.chi, args.surplus, args.h_order)
        params = {"chi": args.chi, "surplus": args.surplus, "h_order": args.h_order}
        red = args.red
        blue = args.blue
        if (red is None) != (blue is None):
            raise UsageError("burr certification needs both --red and --blue")
    else:
        raise UsageError(f"unknown family {family!r}")
    if args.red is not None:
        red = args.red
    if args.blue is not None:
        blue = args.blue
    cert = check_free(coloring, red, blue) if red and blue else None
    metadata = {"family": family}
    metadata.update({k: str(v) for k, v in params.items()})
    if red and blue:
        metadata["red_target"] = format_target(parse_target(red))
        metadata["blue_target"] = format_target(parse_target(blue))
    if args.out:
        io.save_coloring(args.out, coloring, metadata)
    doc = _report(
        "construct",
        family=family,
        params=params,
        order=coloring.host.order,
        host=encode(coloring.host),
        red=encode(coloring.red_graph()),
        out=args.out,
        certificate=_cert_obj(cert) if cert else None,
    )
    _emit(doc)
    if cert is not None and not cert.valid:
        return 1
    return 0


def _cmd_check_free(args) -> int:
    coloring, metadata = io.load_coloring(args.file)
    red = args.red or metadata.get("red_target")
    blue = args.blue or metadata.get("blue_target")
    if not red or not blue:
        raise UsageError(
            "no targets: pass --red/--blue or use a file with target metadata"
        )
    red_c = format_target(parse_target(red))
    blue_c = format_target(parse_target(blue))
    params = {"host": encode(coloring.host), "red": encode(coloring.red_graph())}
    cache_file = _cache_path(args)
    if cache_file:
        stored = _replay(cache_file, "certificate", red_c, blue_c, params)
        if stored is not None:
            _emit(stored)
            return 0 if stored["certificate"]["red_witness"] is None and stored[
                "certificate"
            ]["blue_witness"] is None else 1
    cert = check_free(coloring, red, blue)
    doc = _report("check-free", file=args.file, certificate=_cert_obj(cert))
    _emit(doc)
    if cache_file:
        cache_store(
            cache_file,
            ResultRecord(
                kind="certificate",
                red_target=red_c,
                blue_target=blue_c,
                params=params,
                value=None,
                artifact=doc,
            ),
        )
    return 0 if cert.valid else 1


def _cmd_detect(args) -> int:
    g = pattern_graph(parse_target(args.graph))
    target = parse_target(args.target)
    w = patterns.contains_target(g, target)
    doc = _report(
        "detect",
        graph=encode(g),
        target=format_target(target),
        found=w is not None,
        witness=None
        if w is None
        else {"pattern_order": w.pattern_order, "groups": [list(gr) for gr in w.groups]},
    )
    _emit(doc)
    return 0 if w is not None else 1


def _cmd_bound(args) -> int:
    if args.kind == "formula":
        if not args.formula:
            raise UsageError("bound --kind formula needs --formula")
        params = {}
        for name in ("m", "s", "t", "n", "base"):
            value = getattr(args, name)
            if value is not None:
                params[name] = value
        rep = bounds.closed_formula(args.formula, params)
    else:
        if not args.g or not args.h:
            raise UsageError(f"bound --kind {args.kind} needs --g and --h")
        g = pattern_graph(parse_target(args.g))
        h = pattern_graph(parse_target(args.h))
        if args.kind == "burr":
            rep = bounds.burr_bound(g, h)
        else:
            rep = bounds.star_lower_bound(g, h)
    doc = _report("bound", kind=args.kind, report=_bound_obj(rep))
    _emit(doc)
    return 0 if rep.validity.satisfied else 1


def _search_report(command: str, args, result: search.SearchResult, extra: dict) -> dict:
    witness_obj = None
    if result.witness is not None:
        witness_obj = _cert_obj(check_free(result.witness, args.red, args.blue))
    doc = _report(
        command,
        red=format_target(parse_target(args.red)),
        blue=format_target(parse_target(args.blue)),
        **extra,
        value=result.value,
        status=result.status,
        witness=witness_obj,
        stats=_stats_obj(result.stats),
    )
    return doc


def _finish_search(
    args, command: str, kind: str, params: dict, runner
) -> int:
    red_c = format_target(parse_target(args.red))
    blue_c = format_target(parse_target(args.blue))
    cache_file = _cache_path(args)
    if cache_file:
        stored = _replay(cache_file, kind, red_c, blue_c, params)
        if stored is not None:
            _emit(stored)
            return _search_exit(stored.get("status"), stored.get("value"))
    try:
        result = runner()
    except RangeError as exc:
        doc = _report(
            command,
            red=red_c,
            blue=blue_c,
            **params,
            value=None,
            status="no_value_in_range",
            error=str(exc),
        )
        _emit(doc)
        return 1
    doc = _search_report(command, args, result, params)
    _emit(doc)
    if cache_file and result.status == "exact":
        cache_store(
            cache_file,
            ResultRecord(
                kind=kind,
                red_target=red_c,
                blue_target=blue_c,
                params=params,
                value=result.value,
                artifact=doc,
            ),
        )
    return _search_exit(result.status, result.value)


def _search_exit(status, value) -> int:
    if status == "exact" and value is not None:
        return 0
    if status == "budget_exhausted":
        return 2
    return 1


def _cmd_ramsey(args) -> int:
    cfg = _search_config(args)
    params = {"lo": args.lo, "hi": args.hi}
    return _finish_search(
        args,
        "ramsey",
        "ramsey",
        params,
        lambda: search.ramsey_number(args.red, args.blue, args.lo, args.hi, cfg),
    )


def _cmd_star(args) -> int:
    cfg = _search_config(args)
    params = {"r": args.r}
    return _finish_search(
        args,
        "star",
        "star",
        params,
        lambda: search.star_critical(args.red, args.blue, args.r, cfg),
    )


def _cmd_packing_check(args) -> int:
    cfg = _search_config(args)
    rep = search.packing_property_check(args.t, args.n, args.trials, cfg)
    doc = _report(
        "packing-check",
        t=rep.t,
        n=rep.n,
        trials=rep.trials,
        seed=rep.seed,
        min_degree_floor=rep.min_degree_floor,
        failures=list(rep.failures),
        ok=rep.ok,
    )
    _emit(doc)
    return 0 if rep.ok else 1


def _cmd_cache(args) -> int:
    path = _cache_path(args)
    if not path:
        raise UsageError("no cache file: pass --cache or set FANRAM_CACHE")
    records = load_records(path)
    by_kind: dict[str, int] = {}
    entries = []
    for rec in records:
        by_kind[rec.kind] = by_kind.get(rec.kind, 0) + 1
        entries.append(
            {
                "kind": rec.kind,
                "red_target": rec.red_target,
                "blue_target": rec.blue_target,
                "params": rec.params,
                "value": rec.value,
            }
        )
    doc = _report(
        "cache", path=path, records=len(records), by_kind=by_kind, entries=entries
    )
    _emit(doc)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class UsageError(Exception):
    pass


def _require(args, name: str, family: str) -> None:
    if getattr(args, name) is None:
        raise UsageError(f"family {family!r} needs --{name.replace('_', '-')}")


def _add_cache_flag(p) -> None:
    p.add_argument("--cache", help="result cache file (or FANRAM_CACHE env)")


def _add_search_flags(p) -> None:
    p.add_argument("--red", required=True, help="red target (grammar: K3, F:2,1, M:2, 2xF:2,2, G6:...)")
    p.add_argument("--blue", required=True, help="blue target")
    p.add_argument("--budget", type=int, help="DFS node budget")
    p.add_argument("--threads", type=int, help="parallelism hint (results independent of it)")
    p.add_argument("--seed", type=int, help="randomness seed for sampling harnesses")
    _add_cache_flag(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanram",
        description="Certify and search Ramsey and star-critical Ramsey numbers "
        "of cliques, matchings, and fans.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("construct", help="build a named extremal coloring")
    p.add_argument("--family", required=True, choices=("thm17", "lemma27", "burr"))
    p.add_argument("--m", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--chi", type=int)
    p.add_argument("--surplus", type=int)
    p.add_argument("--h-order", dest="h_order", type=int)
    p.add_argument("--red", help="red target to certify against (defaults per family)")
    p.add_argument("--blue", help="blue target to certify against")
    p.add_argument("--out", help="write the coloring to this .fr2 file")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check-free", help="certify a coloring file against a target pair")
    p.add_argument("--file", required=True, help=".fr2 coloring file")
    p.add_argument("--red", help="red target (default: file metadata)")
    p.add_argument("--blue", help="blue target (default: file metadata)")
    _add_cache_flag(p)
    p.set_defaults(func=_cmd_check_free)

    p = sub.add_parser("detect", help="look for a target pattern in a graph")
    p.add_argument("--graph", required=True, help="graph in target grammar (e.g. G6:D~{ or K5)")
    p.add_argument("--target", required=True, help="pattern in target grammar")
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("bound", help="evaluate a closed formula or structural bound")
    p.add_argument("--kind", choices=("formula", "burr", "star"), default="formula")
    p.add_argument("--formula", help="formula id (see docs) for --kind formula")
    p.add_argument("--m", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--base", type=int, help="base Ramsey value for formulas that take one")
    p.add_argument("--g", help="first graph (target grammar) for structural bounds")
    p.add_argument("--h", help="second graph (target grammar) for structural bounds")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("ramsey", help="exact Ramsey number by exhaustive search")
    _add_search_flags(p)
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int, required=True)
    p.set_defaults(func=_cmd_ramsey)

    p = sub.add_parser("star", help="exact star-critical Ramsey number")
    _add_search_flags(p)
    p.add_argument("--r", type=int, required=True, help="the exact Ramsey number of the pair")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("packing-check", help="randomized clique-packing property harness")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--threads", type=int)
    p.set_defaults(func=_cmd_packing_check)

    p = sub.add_parser("cache", help="summarize a result cache file")
    _add_cache_flag(p)
    p.set_defaults(func=_cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FanramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
