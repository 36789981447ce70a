"""Command-line front end.

Every subcommand prints one JSON object (or CSV with ``--format csv``) and
appends its result to the store named by ``--store`` or ``$STORE_PATH``.
Exit codes: 0 success, 1 computation error (``{"error": ...}`` on stdout),
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .algebra import Convention
from .arrangement import ArrangementSpec, arrangement, format_rational, parse_coefficients
from .chambers import enumerate_chambers
from .charpoly import (betti_numbers, chamber_count, char_poly_finite_field, char_poly_nbc,
                       nbc_counts)
from .equivariant import (chamber_character, character, padded_multiplicity_table,
                          row_bound_report, total_character)
from .errors import ResonanceError, StoreConflict
from .fsop import BettiModule, certify_generation, minimal_generation_degree, tensor_generators
from .genfun import fit_exp_poly, fq_betti, fq_hilbert_series, to_rational_function
from .store import Store, default_store_path, make_key
from .symmetric import decompose, parse_partition, partition_str
from .verify import Limits, verify_all


def _coefficients(text: str):
    try:
        cs = parse_coefficients(text)
        ArrangementSpec(cs, 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return cs


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _S(args) -> List[str]:
    return [format_rational(v) for v in args.S]


# ------------------------------------------------------------- commands

def _chi_job(S, n, method):
    g = arrangement(S.values, n)
    return (char_poly_nbc(g) if method == "nbc" else char_poly_finite_field(g)).to_json()


def cmd_chi(args, store):
    methods = ["nbc", "finite-field"] if args.method == "both" else [args.method]
    if args.jobs > 1 and len(methods) > 1:
        with ProcessPoolExecutor(max_workers=min(args.jobs, len(methods))) as pool:
            results = list(pool.map(_chi_job, [args.S] * len(methods), [args.n] * len(methods), methods))
    else:
        results = [_chi_job(args.S, args.n, m) for m in methods]
    key = make_key(_S(args), args.n, "chi")
    for method, res in zip(methods, results):
        store.put(key, res, method)
    if any(r != results[0] for r in results):
        raise ResonanceError(f"characteristic polynomials disagree: {dict(zip(methods, results))}")
    return results[0]


def cmd_betti(args, store):
    chi = char_poly_nbc(arrangement(args.S.values, args.n))
    out = {"betti": betti_numbers(chi)}
    store.put(make_key(_S(args), args.n, "betti"), out, "nbc")
    return out


def cmd_chambers(args, store):
    g = arrangement(args.S.values, args.n)
    out = {}
    counts = {}
    if args.method in ("nbc", "both"):
        counts["nbc"] = chamber_count(char_poly_nbc(g))
    if args.method in ("bfs", "both"):
        chambers = enumerate_chambers(g, limit=args.limit)
        counts["oracle"] = len(chambers)
        if args.list:
            out["chambers"] = [str(c) for c in chambers]
    values = list(counts.values())
    out = {"count": values[0], "agree": all(v == values[0] for v in values), **out}
    key = make_key(_S(args), args.n, "chambers")
    for prov, v in counts.items():
        store.put(key, v, prov)
    return out


def _char_payload(args):
    g = arrangement(args.S.values, args.n)
    if args.chambers:
        return g, chamber_character(g)
    if args.i is None:
        return g, total_character(g, args.parity)
    return g, character(g, args.parity, args.i)


def cmd_character(args, store):
    _, chi = _char_payload(args)
    out = {"character": chi.to_json()}
    store.put(make_key(_S(args), args.n, "character", i=args.i, parity=args.parity,
                       chambers=args.chambers or None), out, "oracle" if args.chambers else "nbc")
    return out


def cmd_decompose(args, store):
    _, chi = _char_payload(args)
    out = {"multiplicities": {partition_str(k): v for k, v in decompose(chi).items()}}
    store.put(make_key(_S(args), args.n, "decompose", i=args.i, parity=args.parity,
                       chambers=args.chambers or None), out, "oracle" if args.chambers else "nbc")
    return out


def cmd_rowbound(args, store):
    g = arrangement(args.S.values, args.n)
    out = row_bound_report(g, args.parity, args.i).to_json()
    store.put(make_key(_S(args), args.n, "rowbound", i=args.i, parity=args.parity), out, "nbc")
    return out


def cmd_padded(args, store):
    table = padded_multiplicity_table(args.S.values, args.parity, args.i, args.core,
                                      range(args.nmin, args.n + 1), args.fit_degree)
    out = table.to_json()
    store.put(make_key(_S(args), args.n, "padded", i=args.i, parity=args.parity,
                       partition=partition_str(args.core), nmin=args.nmin), out, "fit")
    return out


def cmd_fsgen(args, store):
    module = BettiModule(args.S.values, args.parity, args.i)
    bound = len(module.coefficients) ** args.i
    at_bound = certify_generation(args.S.values, args.parity, args.i, args.E, bound, module)
    minimal = minimal_generation_degree(args.S.values, args.parity, args.i, args.E, module)
    out = {"E": args.E, "i": args.i, "bound": bound, "minimal": minimal,
           "status": "generated" if at_bound.generated else "deficit", "deficit": at_bound.deficit}
    store.put(make_key(_S(args), args.E, "fsgen", i=args.i, parity=args.parity), out, "rank")
    return out


def cmd_tensorlemma(args, store):
    certs = tensor_generators(args.m1, args.m2, args.E)
    out = {"E": args.E, "m1": args.m1, "m2": args.m2, "certificates": len(certs),
           "verified": all(c.verified for c in certs),
           "maxImage": max((len(c.image) for c in certs), default=0)}
    return out


def cmd_fit(args, store):
    top = args.n
    J = args.J or len(args.S) ** args.i
    seq = [(n, nbc_counts(arrangement(args.S.values, n), max_size=args.i)[args.i])
           for n in range(1, top + 1)]
    form = fit_exp_poly(seq, J, args.max_poly_degree,
                        require_leading_constant=not args.allow_nonconstant)
    rat = to_rational_function(form, seq)
    out = {**form.to_json(), "rational": rat.to_json(), "sequence": [v for _, v in seq]}
    store.put(make_key(_S(args), top, "fit", i=args.i), out, "fit")
    return out


def cmd_fqseries(args, store):
    series = fq_hilbert_series(args.q, args.i, args.n)
    return {"q": args.q, "i": args.i, "series": series,
            "betti": {str(n): fq_betti(args.q, n, args.i) for n in range(args.i, args.n + 1)}}


def cmd_verify_all(args, store):
    limits = Limits.tiny() if args.tiny else Limits()
    if args.max_n is not None:
        limits = limits.capped(args.max_n)
    echo = (lambda line: print(line, file=sys.stderr)) if args.format == "json" else None
    results = verify_all(limits, store=store if store.path else None, echo=echo)
    rows = [r.to_json() for r in results]
    return {"passed": all(r.passed for r in results), "criteria": rows}


COMMANDS = {
    "chi": cmd_chi, "betti": cmd_betti, "chambers": cmd_chambers, "character": cmd_character,
    "decompose": cmd_decompose, "rowbound": cmd_rowbound, "padded": cmd_padded,
    "fsgen": cmd_fsgen, "tensorlemma": cmd_tensorlemma, "fit": cmd_fit,
    "fqseries": cmd_fqseries, "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--store", default=None, help="NDJSON store (default $STORE_PATH)")
    common.add_argument("--jobs", type=_positive, default=1)

    def arr(p, need_n=True):
        p.add_argument("--S", type=_coefficients, required=True, help="comma-separated rationals")
        if need_n:
            p.add_argument("--n", type=_positive, required=True)

    def parity(p):
        p.add_argument("--parity", type=Convention.parse, choices=list(Convention), default=Convention.OS,
                       metavar="{os,cordovil}")

    parser = argparse.ArgumentParser(prog="resonance", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common])
    arr(p)
    p.add_argument("--method", choices=("nbc", "finite-field", "both"), default="both")

    p = sub.add_parser("betti", parents=[common])
    arr(p)

    p = sub.add_parser("chambers", parents=[common])
    arr(p)
    p.add_argument("--method", choices=("nbc", "bfs", "both"), default="both")
    p.add_argument("--list", action="store_true", help="also print sign vectors")
    p.add_argument("--limit", type=_positive, default=63, help="maximum number of hyperplanes for BFS")

    for name in ("character", "decompose"):
        p = sub.add_parser(name, parents=[common])
        arr(p)
        parity(p)
        p.add_argument("--i", type=_nonnegative, default=None, help="degree (default: all degrees)")
        p.add_argument("--chambers", action="store_true", help="permutation character on chambers")

    p = sub.add_parser("rowbound", parents=[common])
    arr(p)
    parity(p)
    p.add_argument("--i", type=_nonnegative, required=True)

    p = sub.add_parser("padded", parents=[common])
    arr(p)
    parity(p)
    p.add_argument("--i", type=_nonnegative, required=True)
    p.add_argument("--lambda", dest="core", type=_partition, required=True)
    p.add_argument("--nmin", type=_positive, default=1)
    p.add_argument("--fit-degree", type=_nonnegative, default=1)

    p = sub.add_parser("fsgen", parents=[common])
    arr(p, need_n=False)
    parity(p)
    p.add_argument("--i", type=_nonnegative, required=True)
    p.add_argument("--E", type=_positive, required=True)

    p = sub.add_parser("tensorlemma", parents=[common])
    p.add_argument("--m1", type=_positive, required=True)
    p.add_argument("--m2", type=_positive, required=True)
    p.add_argument("--E", type=_positive, required=True)

    p = sub.add_parser("fit", parents=[common])
    arr(p)
    p.add_argument("--i", type=_nonnegative, required=True)
    p.add_argument("--J", type=_positive, default=None, help="pole bound (default |S|^i)")
    p.add_argument("--max-poly-degree", type=_nonnegative, default=0)
    p.add_argument("--allow-nonconstant", action="store_true")

    p = sub.add_parser("fqseries", parents=[common])
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--i", type=_nonnegative, required=True)
    p.add_argument("--n", type=_nonnegative, required=True, help="truncation order")

    p = sub.add_parser("verify-all", parents=[common])
    p.add_argument("--max-n", type=_positive, default=None, help="cap every size limit")
    p.add_argument("--tiny", action="store_true", help="smallest instances only")
    return parser


def _flatten(prefix, value, row):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, row)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for k, v in enumerate(value):
            _flatten(f"{prefix}.{k}", v, row)
    elif isinstance(value, list):
        row[prefix] = " ".join(str(v) for v in value)
    else:
        row[prefix] = value


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=False)
    row: dict = {}
    _flatten("", payload, row)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
    writer.writeheader()
    writer.writerow(row)
    return buf.getvalue().rstrip("\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format
    try:
        path = args.store or default_store_path()
        store = Store(path, strict=args.command != "verify-all")
        payload = COMMANDS[args.command](args, store)
    except StoreConflict as exc:
        print(render({"error": str(exc), "key": exc.key, "values": list(exc.values)}, "json"))
        return 1
    except (ResonanceError, ValueError, ArithmeticError) as exc:
        print(render({"error": f"{type(exc).__name__}: {exc}"}, "json"))
        return 1
    print(render(payload, fmt))
    if args.command == "verify-all" and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
