"""Command-line surface: every library operation behind one argparse tree.

Records go to stdout as JSON (default) or CSV; table-shaped commands
(plot-ld, glue scan, family med4 --grid) default to CSV since they exist to
feed plots.  Exact rationals are emitted as {num, den, float}; CSV tables
carry num/den columns plus a float convenience column.  Timing goes to
stderr so identical invocations stay byte-identical on stdout.

Exit codes: 0 success, 2 domain errors (bad generators, invalid gluing, ...),
1 unexpected internal errors, 64 usage errors.
"""
import argparse
import csv
import io
import json
import os
import sys
import time

from . import density, factor, families, gluings
from .config import CSV_FLOAT_DIGITS, JOBS_ENV
from .core import NumericalSemigroup
from .errors import DomainError

__all__ = ["main", "script"]


class _Usage(Exception):
    """Bad flag combinations detected after parsing."""


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _rat(q):
    return {"num": q.numerator, "den": q.denominator, "float": float(q)}


def _ffmt(q):
    return format(float(q), f".{CSV_FLOAT_DIGITS}g")


def _gen_list(text):
    try:
        gens = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not gens:
        raise argparse.ArgumentTypeError("expected at least one generator")
    return gens


def _jobs(args):
    n = args.jobs if args.jobs is not None else int(os.environ.get(JOBS_ENV, "1") or 1)
    return max(n, 1)


# -- command handlers --------------------------------------------------------
# Each returns (record, csv_header, csv_rows, default_format); csv_rows=None
# means CSV output falls back to a one-row key/value table.


def _cmd_invariants(args):
    S = NumericalSemigroup(args.gens)
    rec = {
        "generators": list(S.generators),
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "frobenius": S.frobenius(),
        "apery": list(S.apery()),
    }
    if S.embedding_dimension >= 2:
        p, growth = S.period_constants()
        rec.update(min_delta=S.min_delta(), period=p, growth=growth)
    return rec, None, None, "json"


def _cmd_length_set(args):
    S = NumericalSemigroup(args.gens)
    lengths = factor.length_set(S, args.n)
    return (
        {"generators": list(S.generators), "n": args.n, "lengths": list(lengths)},
        None,
        None,
        "json",
    )


def _cmd_factorizations(args):
    S = NumericalSemigroup(args.gens)
    facts = factor.factorizations(S, args.n)
    return (
        {
            "generators": list(S.generators),
            "n": args.n,
            "factorizations": [list(z) for z in facts],
        },
        None,
        None,
        "json",
    )


def _cmd_betti(args):
    S = NumericalSemigroup(args.gens)
    body = [
        {
            "element": bd.element,
            "lengths": list(bd.lengths),
            "delta": list(bd.delta),
            "components": [[list(z) for z in comp] for comp in bd.components],
        }
        for bd in factor.betti_elements(S)
    ]
    return {"generators": list(S.generators), "betti": body}, None, None, "json"


def _cmd_delta(args):
    S = NumericalSemigroup(args.gens)
    if args.n is not None:
        gaps = factor.delta_of(S, args.n)
        rec = {"generators": list(S.generators), "n": args.n, "delta": list(gaps)}
    else:
        sd = factor.delta_of_semigroup(S, ns_bound=args.ns_bound)
        rec = {
            "generators": list(S.generators),
            "delta": list(sd.gaps),
            "attained_at": [
                {"gap": g, "first": sd.attained_at[g]} for g in sd.gaps
            ],
        }
    return rec, None, None, "json"


def _cmd_ld(args):
    S = NumericalSemigroup(args.gens)
    q = density.ld_of_element(S, args.n)
    return (
        {"generators": list(S.generators), "n": args.n, "ld": _rat(q)},
        None,
        None,
        "json",
    )


def _classification_record(c):
    cert = c.certificate
    return {
        "verdict": c.verdict,
        "ld": _rat(c.ld),
        "witness": c.witness,
        "max_delta": c.max_delta,
        "certificate": {
            "start": cert.start,
            "period": cert.period,
            "growth": cert.growth,
            "checked_spans": cert.checked_spans,
        },
    }


def _cmd_classify(args):
    S = NumericalSemigroup(args.gens)
    c = density.ld_of_semigroup(S, ns_bound=args.ns_bound)
    rec = {"generators": list(S.generators)}
    rec.update(_classification_record(c))
    return rec, None, None, "json"


def _cmd_plot_ld(args):
    S = NumericalSemigroup(args.gens)
    profile = density.ld_profile(S, args.max)
    rec = {
        "generators": list(S.generators),
        "max": args.max,
        "profile": [{"n": n, "ld": _rat(q)} for n, q in profile],
    }
    rows = [(n, q.numerator, q.denominator, _ffmt(q)) for n, q in profile]
    return rec, ("n", "num", "den", "ld"), rows, "csv"


def _cmd_presentation(args):
    S = NumericalSemigroup(args.gens)
    rels = factor.minimal_presentation(S)
    return (
        {
            "generators": list(S.generators),
            "relations": [[list(a), list(b)] for a, b in rels],
        },
        None,
        None,
        "json",
    )


def _cmd_family_supersym(args):
    S, q, verdict = families.supersymmetric(args.t)
    return (
        {
            "t": sorted(args.t, reverse=True),
            "generators": list(S.generators),
            "ld": _rat(q),
            "verdict": verdict,
        },
        None,
        None,
        "json",
    )


def _cmd_family_threegen(args):
    S = NumericalSemigroup(args.gens)
    rep = families.classify_threegen(S)
    return (
        {
            "generators": list(S.generators),
            "betti": list(rep.betti),
            "rule": rep.rule,
            "verdict": rep.verdict,
        },
        None,
        None,
        "json",
    )


def _cmd_family_med4(args):
    if args.grid:
        if args.n2 is None or args.max is None or args.n:
            raise _Usage("--grid needs --n2 and --max, and no positional n1 n2 n3")
        cells = families.med4_grid(args.n2, args.max)
        rec = {
            "n2": args.n2,
            "max": args.max,
            "cells": [
                {"n1": a, "n3": b, "verdict": v, "provenance": pr}
                for a, b, v, pr in cells
            ],
        }
        return rec, ("n1", "n3", "verdict", "provenance"), cells, "csv"
    if len(args.n) != 3:
        raise _Usage("expected exactly three values: n1 n2 n3 (or --grid)")
    r = families.classify_med4(*args.n)
    return (
        {
            "n": list(args.n),
            "generators": list(r.semigroup.generators),
            "verdict": r.verdict,
            "provenance": r.provenance,
        },
        None,
        None,
        "json",
    )


def _cmd_family_med_prime(args):
    S = NumericalSemigroup(args.gens)
    verdict = families.med_prime_bland(S)
    return {"generators": list(S.generators), "verdict": verdict}, None, None, "json"


def _cmd_family_med_composite(args):
    bland, tasty = families.med_composite_construct(args.p, args.q)
    return (
        {
            "m": args.p * args.q,
            "bland": list(bland.generators),
            "tasty": list(tasty.generators),
        },
        None,
        None,
        "json",
    )


def _cmd_glue_classify(args):
    spec = gluings.GluingSpec(
        NumericalSemigroup(args.s1), NumericalSemigroup(args.s2), args.lam, args.mu
    )
    c = gluings.classify_gluing(spec)
    rec = {
        "s1": list(spec.s1.generators),
        "s2": list(spec.s2.generators),
        "lam": args.lam,
        "mu": args.mu,
        "generators": list(gluings.glue(spec).generators),
    }
    rec.update(_classification_record(c))
    return rec, None, None, "json"


def _cmd_glue_scan(args):
    lam_max = args.lam_max if args.lam_max is not None else args.max
    mu_max = args.mu_max if args.mu_max is not None else args.max
    if lam_max is None or mu_max is None:
        raise _Usage("need --max, or both --lam-max and --mu-max")
    res = gluings.scan_gluings(
        NumericalSemigroup(args.s1),
        NumericalSemigroup(args.s2),
        lam_max,
        mu_max,
        jobs=_jobs(args),
    )
    rec = {
        "s1": list(args.s1),
        "s2": list(args.s2),
        "lam_max": lam_max,
        "mu_max": mu_max,
        "rows": [{"lam": l, "mu": m, "verdict": v} for l, m, v in res.rows],
        "skipped_atom": res.skipped_atom,
        "skipped_noncoprime": res.skipped_noncoprime,
    }
    return rec, ("lam", "mu", "verdict"), list(res.rows), "csv"


def _cmd_glue_proportion(args):
    S = NumericalSemigroup(args.s)
    pr = gluings.tasty_proportion(S, args.max, jobs=_jobs(args))
    return (
        {
            "generators": list(S.generators),
            "max": args.max,
            "tasty": pr.tasty,
            "total": pr.total,
            "ratio": _rat(pr.ratio),
        },
        None,
        None,
        "json",
    )


def _cmd_glue_regions(args):
    rb = gluings.self_glue_region_bounds(NumericalSemigroup(args.s))
    def line(pair):
        slope, offset = pair
        return {"slope": _rat(slope), "offset": _rat(offset)}
    return (
        {
            "generators": list(args.s),
            "floor": rb.floor,
            "tasty_line": line(rb.tasty_line),
            "bland_line": line(rb.bland_line),
        },
        None,
        None,
        "json",
    )


# -- plumbing ----------------------------------------------------------------


def _flat_row(record):
    cells = []
    for v in record.values():
        if isinstance(v, dict) and set(v) == {"num", "den", "float"}:
            cells.append(f"{v['num']}/{v['den']}")
        elif isinstance(v, (list, dict)):
            cells.append(json.dumps(v, separators=(",", ":")))
        else:
            cells.append(v)
    return cells


def _emit(args, record, header, rows, default):
    fmt = args.format or default
    buf = io.StringIO()
    if fmt == "json":
        json.dump(record, buf, indent=2)
        buf.write("\n")
    else:
        w = csv.writer(buf, lineterminator="\n")
        if rows is None:
            w.writerow(list(record))
            w.writerow(_flat_row(record))
        else:
            w.writerow(header)
            w.writerows(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())


def _add_common(sp):
    sp.add_argument("--format", choices=("json", "csv"), default=None)
    sp.add_argument("--out", metavar="PATH", help="write output to a file")
    sp.add_argument("--jobs", type=int, default=None, help="parallel workers for scans")
    sp.add_argument(
        "--ns-bound",
        dest="ns_bound",
        type=int,
        default=None,
        help="override the periodicity-window floor (still verified)",
    )


def _sub(subparsers, name, handler, help_text, gens=False):
    sp = subparsers.add_parser(name, help=help_text)
    _add_common(sp)
    if gens:
        sp.add_argument("gens", nargs="+", type=int, help="semigroup generators")
    sp.set_defaults(handler=handler)
    return sp


def build_parser():
    parser = _Parser(prog="semigroup-ld", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    _sub(subparsers, "invariants", _cmd_invariants, "basic invariants", gens=True)
    sp = _sub(subparsers, "length-set", _cmd_length_set, "L(n)", gens=True)
    sp.add_argument("-n", type=int, required=True)
    sp = _sub(subparsers, "factorizations", _cmd_factorizations, "Z(n)", gens=True)
    sp.add_argument("-n", type=int, required=True)
    _sub(subparsers, "betti", _cmd_betti, "Betti elements with components", gens=True)
    sp = _sub(subparsers, "delta", _cmd_delta, "Δ(n), or Δ(S) without -n", gens=True)
    sp.add_argument("-n", type=int, default=None)
    sp = _sub(subparsers, "ld", _cmd_ld, "length density of one element", gens=True)
    sp.add_argument("-n", type=int, required=True)
    _sub(subparsers, "classify", _cmd_classify, "LD(S) and tasty/bland verdict", gens=True)
    sp = _sub(subparsers, "plot-ld", _cmd_plot_ld, "(n, LD(n)) table", gens=True)
    sp.add_argument("--max", type=int, required=True)
    _sub(subparsers, "presentation", _cmd_presentation, "minimal presentation", gens=True)

    family = subparsers.add_parser("family", help="family constructors/classifiers")
    fsub = family.add_subparsers(dest="family_command", required=True)
    sp = fsub.add_parser("supersym", help="⟨s/t1, ..., s/tk⟩ with closed-form LD")
    _add_common(sp)
    sp.add_argument("t", nargs="+", type=int, help="pairwise coprime parameters")
    sp.set_defaults(handler=_cmd_family_supersym)
    sp = fsub.add_parser("threegen", help="classify a 3-generated semigroup")
    _add_common(sp)
    sp.add_argument("gens", nargs="+", type=int)
    sp.set_defaults(handler=_cmd_family_threegen)
    sp = fsub.add_parser("med4", help="multiplicity-4 MED classifier / grid")
    _add_common(sp)
    sp.add_argument("n", nargs="*", type=int, help="n1 n2 n3")
    sp.add_argument("--grid", action="store_true")
    sp.add_argument("--n2", type=int, default=None)
    sp.add_argument("--max", type=int, default=None)
    sp.set_defaults(handler=_cmd_family_med4)
    sp = fsub.add_parser("med-prime", help="prime-multiplicity MED verdict")
    _add_common(sp)
    sp.add_argument("gens", nargs="+", type=int)
    sp.set_defaults(handler=_cmd_family_med_prime)
    sp = fsub.add_parser("med-composite", help="bland+tasty pair at multiplicity p*q")
    _add_common(sp)
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.set_defaults(handler=_cmd_family_med_composite)

    glue = subparsers.add_parser("glue", help="gluings μS1 + λS2")
    gsub = glue.add_subparsers(dest="glue_command", required=True)
    sp = gsub.add_parser("classify", help="classify one gluing")
    _add_common(sp)
    sp.add_argument("--s1", type=_gen_list, required=True)
    sp.add_argument("--s2", type=_gen_list, required=True)
    sp.add_argument("--lam", type=int, required=True)
    sp.add_argument("--mu", type=int, required=True)
    sp.set_defaults(handler=_cmd_glue_classify)
    sp = gsub.add_parser("scan", help="classify all gluings in a (λ, μ) box")
    _add_common(sp)
    sp.add_argument("--s1", type=_gen_list, required=True)
    sp.add_argument("--s2", type=_gen_list, required=True)
    sp.add_argument("--max", type=int, default=None)
    sp.add_argument("--lam-max", dest="lam_max", type=int, default=None)
    sp.add_argument("--mu-max", dest="mu_max", type=int, default=None)
    sp.set_defaults(handler=_cmd_glue_scan)
    sp = gsub.add_parser("proportion", help="tasty share of self-gluings below --max")
    _add_common(sp)
    sp.add_argument("--s", type=_gen_list, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.set_defaults(handler=_cmd_glue_proportion)
    sp = gsub.add_parser("regions", help="self-gluing verdict region bounds")
    _add_common(sp)
    sp.add_argument("--s", type=_gen_list, required=True)
    sp.set_defaults(handler=_cmd_glue_regions)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    started = time.perf_counter()
    try:
        record, header, rows, default = args.handler(args)
        _emit(args, record, header, rows, default)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1
    elapsed = time.perf_counter() - started
    print(f"[semigroup-ld] {args.command} took {elapsed:.3f}s", file=sys.stderr)
    return 0


def script():
    raise SystemExit(main())
