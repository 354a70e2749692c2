"""Command-line interface.

Exit codes: 0 ok, 1 property violated, 2 usage or input error,
3 internal invariant failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import counting, tables, verify
from .alphabet import InvariantError, Params, check_cap
from .circuits import n_i_counts_enumerated
from .graph import Sequence, build_X, nos_from_X
from .lift import os_from_X

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(ValueError):
    pass


def manifest(kind: str, seq: Sequence) -> dict:
    text = seq.to_text()
    return {
        "kind": kind,
        "k": seq.k,
        "order": seq.order,
        "period": seq.claimed_period,
        "sha256": hashlib.sha256(text.encode("ascii")).hexdigest(),
    }


def parse_sequence(text: str, k: int | None, order: int | None = None) -> Sequence:
    """Parse the text format, or the JSON document written by ``generate``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
            body = doc["sequence"]
            meta = doc.get("manifest", {})
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"bad JSON sequence document: {exc}") from None
        k = k if k is not None else meta.get("k")
        order = order if order is not None else meta.get("order")
    else:
        body = text[:-1] if text.endswith("\n") else text
    if k is None:
        raise InputError("--k is required")
    if not body:
        raise InputError("empty sequence")
    if any(ch.isspace() for ch in body):
        raise InputError("whitespace inside the sequence line")
    try:
        symbols = [int(x) for x in body.split(",")] if "," in body else [int(ch) for ch in body]
    except ValueError:
        raise InputError("sequence contains a non-numeric symbol") from None
    for s in symbols:
        if not 0 <= s < k:
            raise InputError(f"symbol {s} out of range for k={k}")
    return Sequence(symbols, k, order if order is not None else 0)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    Params(args.k, args.n)
    if args.kind == "nos":
        check_cap(args.k, args.n)
        seq, mode, order = nos_from_X(args.k, args.n), "nos", args.n
    else:
        check_cap(args.k, args.n + 1)
        seq, mode, order = os_from_X(args.k, args.n), "os", args.n + 1
    text = seq.to_text()
    # certify the emitted artifact itself, not just the in-memory value
    if verify.find_violation(parse_sequence(text + "\n", args.k), order, mode) is not None:
        raise InvariantError("generated sequence failed re-verification")
    man = manifest(args.kind, seq)
    if args.format == "json":
        _emit(json.dumps({"manifest": man, "sequence": text}, indent=2) + "\n", args.out)
    else:
        _emit(text + "\n", args.out)
        man_text = json.dumps(man, indent=2) + "\n"
        if args.out:
            Path(args.out + ".manifest.json").write_text(man_text)
        else:
            sys.stderr.write(man_text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.path}: {exc.strerror}") from None
    seq = parse_sequence(text, args.k, args.n)
    n = args.n if args.n is not None else seq.order
    if not n:
        raise InputError("--n is required")
    v = verify.find_violation(seq, n, args.mode)
    report = {"mode": args.mode, "k": seq.k, "order": n, "period": seq.claimed_period,
              "ok": v is None}
    if v is not None:
        report["violation"] = v._asdict()
    if args.format == "json":
        print(json.dumps(report))
    elif v is None:
        print(f"ok: {args.mode} property holds at order {n} (period {seq.claimed_period})")
    else:
        print(f"violation: i={v.i} j={v.j} transform={v.transform}")
    return EXIT_OK if v is None else EXIT_VIOLATION


def cmd_counts(args) -> int:
    rep = counting.count_report(args.k, args.n)
    check_cap(args.k, args.n)
    data = rep.as_dict()
    data["n_counts_enumerated"] = list(n_i_counts_enumerated(args.k, args.n))
    data["achieved_X"] = len(build_X(args.k, args.n))
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        width = max(map(len, data))
        for key, val in data.items():
            if isinstance(val, list):
                val = "(" + ",".join(map(str, val)) + ")"
            print(f"{key.ljust(width)}  {val}")
    return EXIT_OK


def parse_range(text: str) -> range:
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A-B") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def cmd_table(args) -> int:
    ks, ns = args.k, args.n
    for k in ks:
        for n in ns:
            # orientable orders are one above the construction order
            Params(k, n - 1 if args.which == "os_periods" else n)
    cells = tables.TABLES[args.which](ks, ns)
    if args.format == "json":
        print(json.dumps(tables.to_records(cells), indent=2))
    else:
        print(tables.render(cells, ks, ns))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oseq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct a NOS_k(n) or an OS_k(n+1)")
    g.add_argument("--kind", choices=["nos", "os"], required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--n", type=int, required=True, help="construction order")
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check window properties of a sequence file")
    v.add_argument("path")
    v.add_argument("--k", type=int)
    v.add_argument("--n", type=int, help="window order to check")
    v.add_argument("--mode", choices=["window", "os", "nos"], required=True)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("counts", help="counts and bounds for one (k, n)")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_counts)

    t = sub.add_parser("table", help="reproduce a table over a (k, n) grid")
    t.add_argument("which", choices=sorted(tables.TABLES))
    t.add_argument("--k", type=parse_range, required=True, help="e.g. 3-6")
    t.add_argument("--n", type=parse_range, required=True, help="e.g. 3-8")
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
