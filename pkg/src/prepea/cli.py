"""Command-line front end.

Models are read from a path (text or JSON, sniffed) or from a built-in
fixture given as ``fixture:<name>``.  Exit codes: 0 pass, 1 a check or
property failed, 2 the input did not parse, 3 a size limit was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .checks import (
    check_cancellative,
    check_commutative,
    check_gppea,
    check_pea,
    check_ppea,
    check_wppea,
    verify_derived_props,
)
from .errors import (
    DerivationFailed,
    InvalidPartition,
    MultiValuedCell,
    NotWeakCongruence,
    OrderInvalid,
    ParseError,
    PreconditionFailed,
    PrepeaError,
    SizeLimitExceeded,
)
from .serialize import Bundle, dumps_json, dumps_text, load_path
from .structures import Carrier, Poset, WppeaModel

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT = 0, 1, 2, 3

FIXTURE_PREFIX = "fixture:"


def load_bundle(ref: str) -> Bundle:
    from .fixtures import fixture

    if ref.startswith(FIXTURE_PREFIX):
        return fixture(ref[len(FIXTURE_PREFIX):])
    try:
        return load_path(ref)
    except OSError as exc:
        raise ParseError(f"cannot read {ref}: {exc.strerror}") from exc


def load_model(ref: str, kind: str | None = None):
    return load_bundle(ref).to_model(kind)


def _emit(args, obj, text: str | None = None):
    out = dumps_json(obj) if args.json else (text if text is not None else dumps_text(obj))
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(out if out.endswith("\n") else out + "\n")
    else:
        print(out.rstrip("\n"))


def _print_json(data):
    print(json.dumps(data, indent=1))


# -- check ------------------------------------------------------------------

_CHECKERS = {
    "wppea": check_wppea,
    "ppea": check_ppea,
    "pea": check_pea,
    "commutative": check_commutative,
    "cancellative": check_cancellative,
    "gppea": check_gppea,
}


def cmd_check(args) -> int:
    bundle = load_bundle(args.file)
    kind = args.kind or bundle.kind
    if kind not in _CHECKERS:
        raise ParseError(f"cannot check kind {kind!r}")
    model_kind = "gppea" if kind == "gppea" or bundle.kind == "gppea" else "wppea"
    model = bundle.to_model(model_kind)
    report = _CHECKERS[kind](model)
    if args.derived and report.overall:
        report = report.merged(verify_derived_props(model))
    if args.json:
        _print_json(report.to_dict())
    else:
        print(report.render(model.carrier.names))
    return EXIT_OK if report.overall else EXIT_FAIL


# -- derive -----------------------------------------------------------------

def _failure_exit(args, failures, names) -> int:
    if args.json:
        _print_json({"ok": False, "failures": [f.to_dict() for f in failures]})
    else:
        for f in failures:
            print("failure: " + f.describe(names))
    return EXIT_FAIL


def cmd_derive(args) -> int:
    from .derive import minus_from_plus, plus_from_lminus, plus_from_rminus
    from .orders import derived_order

    bundle = load_bundle(args.file)
    names = bundle.carrier.names
    carrier = Carrier(bundle.n, bundle.carrier.zero, None, bundle.carrier.labels)
    if args.source == "plus":
        bundle.require("plus")
        if bundle.leq is not None:
            order = bundle.leq
        elif bundle.kind == "gppea":
            order = Poset(bundle.to_model("gppea").order_relation())
        else:
            order = derived_order(bundle.to_model("wppea"))
        outcome = minus_from_plus(bundle.tables["plus"], order, zero=bundle.carrier.zero)
        if outcome.failures:
            return _failure_exit(args, outcome.failures, names)
        rminus, lminus = outcome.result
        if not args.json:
            for o in outcome.overrides:
                print(f"# {names[o.pair[0]]}{o.op}{names[o.pair[1]]} forced to zero "
                      f"(candidate set gave {bundle.carrier.name(o.computed)})")
        result = Bundle("gppea", carrier, {"plus": bundle.tables["plus"], "rminus": rminus,
                                           "lminus": lminus}, {}, None)
    else:
        key = args.source
        bundle.require(key)
        derive = plus_from_lminus if key == "lminus" else plus_from_rminus
        outcome = derive(bundle.tables[key])
        if outcome.failures:
            return _failure_exit(args, outcome.failures, names)
        order, plus = outcome.result
        result = Bundle("tables", carrier, {"plus": plus, key: bundle.tables[key]}, {}, order)
    _emit(args, result)
    if args.check and result.kind == "gppea":
        report = check_gppea(result.to_model())
        print(report.render(names), file=sys.stderr)
        return EXIT_OK if report.overall else EXIT_FAIL
    return EXIT_OK


# -- enumerate --------------------------------------------------------------

def _summary_text(s) -> str:
    lines = [f"n = {s.n}", f"bounded posets: {s.bounded_posets}",
             f"admissible orders: {s.wppea_admissible}",
             f"docposet-admissible orders: {s.docposet_admissible}",
             f"wppea models: {s.wppea_models}"]
    if s.posets_with_bottom is not None:
        lines.append(f"posets with bottom: {s.posets_with_bottom}")
        lines.append(f"gppea models: {s.gppea}")
    lines.append("order  covers" + " " * 42 + "docposets  wppea")
    for r in s.rows:
        cov = " ".join(f"{a}<{b}" for a, b in r.covers)
        lines.append(f"{r.index:>5}  {cov:<48} {r.docposets:>9}  {r.wppea:>5}")
    return "\n".join(lines)


def cmd_enumerate(args) -> int:
    from . import enumeration as en

    poset = load_model(args.poset, "poset") if args.poset else None
    n = poset.size if poset is not None else args.n
    if n is None:
        raise ParseError("--n or --poset is required")
    kind = args.kind
    if kind == "posets":
        items = en.enumerate_bounded_posets(n) if n >= 2 else []
        if args.count_only:
            print(len(items))
            return EXIT_OK
        for i, p in enumerate(items, 1):
            print(f"{i}: " + " ".join(f"{a}<{b}" for a, b in p.covers()))
        print(f"bounded posets: {len(items)}")
        return EXIT_OK
    if kind == "wppea":
        if poset is not None:
            models = en.enumerate_wppea(poset)
            if args.count_only:
                print(f"wppea models: {len(models)}")
                return EXIT_OK
            _listing(args, models)
            print(f"wppea models: {len(models)}")
            return EXIT_OK
        s = en.count_summary(n, with_gppea=False)
        if args.json:
            _print_json(s.to_dict())
            return EXIT_OK
        if not args.count_only:
            _listing(args, en.all_wppea(n))
        print(_summary_text(s))
        return EXIT_OK
    if kind == "docposets":
        posets = [poset] if poset is not None else en.enumerate_bounded_posets(n)
        items = [d for p in posets for d in en.enumerate_docposets(p)]
        if not args.count_only:
            _listing(args, items)
        print(f"docposets: {len(items)}")
        return EXIT_OK
    if kind == "gppea":
        models = en.enumerate_gppea(poset) if poset is not None else en.all_gppea(n)
        if not args.count_only:
            _listing(args, models)
        print(f"gppea models: {len(models)}")
        return EXIT_OK
    raise ParseError(f"unknown kind {kind!r}")


def _listing(args, items):
    if args.json:
        from .serialize import to_json_dict
        _print_json([to_json_dict(x) for x in items])
        return
    for i, x in enumerate(items, 1):
        print(f"# model {i}")
        print(dumps_text(x), end="")


# -- construct --------------------------------------------------------------

def cmd_construct(args) -> int:
    from . import constructions as cons

    if args.unitize:
        result = cons.unitize(load_model(args.file, "gppea"))
    elif args.from_docposet:
        result = cons.wppea_from_docposet(load_model(args.file, "docposet"))
    elif args.trivial:
        bundle = load_bundle(args.file)
        poset = bundle.to_model("poset")
        result = cons.trivial_gppea_from_poset(poset, bundle.carrier.labels)
    else:
        result = cons.restrict_wppea_to_gppea(load_model(args.file, "wppea"))
    _emit(args, result)
    report = check_wppea(result) if isinstance(result, WppeaModel) else check_gppea(result)
    print("self-check " + report.render(result.carrier.names), file=sys.stderr)
    return EXIT_OK if report.overall else EXIT_FAIL


# -- props ------------------------------------------------------------------

def cmd_props(args) -> int:
    from . import properties as pr

    model = load_model(args.file, "gppea")
    chosen = [p for p, flag in ((pr.RDP, args.rdp), (pr.RIP, args.rip), (pr.LMODRIP, args.lmodrip),
                                (pr.RMODRIP, args.rmodrip), (pr.LRMODRIP, args.lrmodrip)) if flag]
    if not chosen:
        chosen = [pr.RDP, pr.RIP, *pr.MODIFIED]
    verdicts = pr.check_all(model, chosen)
    if args.json:
        _print_json([v.to_dict() for v in verdicts])
    else:
        names = model.carrier.names
        for v in verdicts:
            print(v.render(names))
            if args.all and len(v.counterexamples) > 1:
                for c in v.counterexamples:
                    print("    (" + ", ".join(names[x] for x in c) + ")")
    return EXIT_OK if all(v.holds for v in verdicts) else EXIT_FAIL


# -- congruences ------------------------------------------------------------

def cmd_congruences(args) -> int:
    from . import congruence as cg

    model = load_model(args.file, "gppea")
    names = model.carrier.names
    if args.quotient is None:
        parts = cg.enumerate_congruences(model)
        rows = []
        for part in parts:
            q, report = cg.quotient(model, part)
            lemmas = cg.check_quotient_lemmas(q)
            rows.append((part, report, lemmas))
        if args.json:
            _print_json([{"blocks": [list(b) for b in p.blocks], "quotient_check": r.to_dict(),
                          "lemmas": [v.to_dict() for v in lm]} for p, r, lm in rows])
        else:
            for p, r, lm in rows:
                tags = ", ".join(v.render() for v in lm)
                print(f"{p.render(names)}    quotient {'PASS' if r.overall else 'FAIL'}; {tags}")
            print(f"congruences: {len(parts)}")
        return EXIT_OK if all(all(v.holds for v in lm) for _, _, lm in rows) else EXIT_FAIL
    part = cg.parse_partition(args.quotient, names)
    verdict = cg.check_congruence(model, part)
    if not verdict.holds:
        print(verdict.render(names))
        return EXIT_FAIL
    q, report = cg.quotient(model, part)
    _emit(args, q)
    print(report.render(q.carrier.names), file=sys.stderr)
    for v in cg.check_quotient_lemmas(q):
        print(v.render(q.carrier.names), file=sys.stderr)
    return EXIT_OK


# -- conjectures ------------------------------------------------------------

def cmd_conjectures(args) -> int:
    from .conjectures import conjecture_scan

    report = conjecture_scan(args.n)
    if args.json:
        _print_json(report.to_dict())
    else:
        for r in report.records:
            print(r.render() + f"; {r.cases_scanned} cases")
    return EXIT_OK


# -- verify-paper -----------------------------------------------------------

def cmd_verify_paper(args) -> int:
    from .verify import replay_all

    t = time.perf_counter()
    results = replay_all()
    total = time.perf_counter() - t
    bad = [r for r in results if not r.ok]
    if args.json:
        _print_json({"ok": not bad, "seconds": round(total, 2),
                     "replays": [r.to_dict() for r in results]})
    else:
        for r in results:
            print(r.render())
        print(f"{len(results) - len(bad)}/{len(results)} reproduced in {total:.1f}s")
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_fixtures(args) -> int:
    from .fixtures import fixture, names

    if args.name:
        print(dumps_text(fixture(args.name)), end="")
        return EXIT_OK
    for nm in names():
        print(nm)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prepea", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("check", cmd_check, "check a model against an axiom system")
    sp.add_argument("file")
    sp.add_argument("--kind", choices=sorted(_CHECKERS))
    sp.add_argument("--derived", action="store_true", help="also check the derived properties")

    sp = add("derive", cmd_derive, "rebuild operations from one of them")
    sp.add_argument("file")
    sp.add_argument("--from", dest="source", choices=("plus", "lminus", "rminus"), required=True)
    sp.add_argument("--check", action="store_true", help="check the derived model")
    sp.add_argument("-o", "--output")

    sp = add("enumerate", cmd_enumerate, "list models up to isomorphism")
    sp.add_argument("--n", type=int)
    sp.add_argument("--kind", choices=("posets", "wppea", "docposets", "gppea"), default="posets")
    sp.add_argument("--poset", help="restrict to this order")
    sp.add_argument("--count-only", action="store_true")

    sp = add("construct", cmd_construct, "build a model from another")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--unitize", action="store_true")
    g.add_argument("--from-docposet", action="store_true")
    g.add_argument("--trivial", action="store_true")
    g.add_argument("--restrict", action="store_true")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    sp = add("props", cmd_props, "decomposition and interpolation properties")
    sp.add_argument("file")
    for flag in ("rdp", "rip", "lmodrip", "rmodrip", "lrmodrip"):
        sp.add_argument(f"--{flag}", action="store_true")
    sp.add_argument("--all", action="store_true", help="list every failing instance")

    sp = add("congruences", cmd_congruences, "congruences and quotients")
    sp.add_argument("file")
    sp.add_argument("--quotient", metavar="PARTITION", help='blocks like "0 | a b | 1"')
    sp.add_argument("-o", "--output")

    sp = add("conjectures", cmd_conjectures, "exhaustive scans of the open claims")
    sp.add_argument("--n", type=int, default=5)

    add("verify-paper", cmd_verify_paper, "replay every documented example")

    sp = add("fixtures", cmd_fixtures, "list built-in models or print one")
    sp.add_argument("name", nargs="?")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, InvalidPartition) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DerivationFailed as exc:
        for f in exc.failures:
            print("failure: " + f.describe(), file=sys.stderr)
        return EXIT_FAIL
    except (PreconditionFailed, NotWeakCongruence, MultiValuedCell, OrderInvalid) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except PrepeaError as exc:
        print(f"failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
