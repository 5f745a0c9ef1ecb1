"""Command line front end.

    opetokit validate FILE [--kind K] [--format text|json]
    opetokit universal FILE (--cell ID | --all) [--direct-niche-search]
    opetokit convert FILE --to {bicat,opic} [--arity-bound M] [--out PATH]
    opetokit roundtrip FILE [--arity-bound M]
    opetokit classify SOURCE TARGET MORPHISM

Exit codes: 0 clean, 1 validation or classification negative, 2 parse or
I/O error.  ``classify`` exits 0 for strict and weak verdicts and 1 for lax
(a universal occupant exists whose image is not universal).
The environment variable OPETOKIT_ARITY_BOUND overrides the default bound 4.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize
from .bicat import validate_bicategory, validate_category
from .core import validate_op1, validate_op2
from .equivalences import (
    choose_biasing,
    classify_morphism,
    from_bicategory,
    from_category,
    to_bicategory,
    to_category,
)
from .errors import OpetokitError, ParseError, UnknownKind
from .universality import check_coherence, is_universal_2cell


def _bound(args) -> int:
    if getattr(args, "arity_bound", None):
        return args.arity_bound
    return int(os.environ.get("OPETOKIT_ARITY_BOUND", "4"))


def _load(filename: str):
    doc = serialize.load_path(filename)
    return doc["kind"], serialize.from_doc(doc)


def _report_payload(kind: str, report) -> dict:
    return {
        "kind": kind,
        "ok": report.ok,
        "violations": [
            {"rule": v.rule, "witness": list(v.witness), "message": v.message}
            for v in report.violations
        ],
    }


def _emit(args, payload: dict) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    if payload.get("ok"):
        print(f"{payload['kind']}: ok")
    else:
        print(f"{payload['kind']}: {len(payload['violations'])} violation(s)")
        for v in payload["violations"]:
            detail = f" {v['message']}" if v.get("message") else ""
            print(f"  {v['rule']} {tuple(v['witness'])}{detail}")


def cmd_validate(args) -> int:
    kind, obj = _load(args.file)
    if args.kind and args.kind != kind:
        raise UnknownKind(f"file is {kind!r}, asked to validate as {args.kind!r}")
    if kind == "category":
        report = validate_category(obj)
    elif kind == "bicategory":
        report = validate_bicategory(obj)
    elif kind == "op1cat":
        report = validate_op1(obj)
    elif kind == "op2cat":
        report = validate_op2(obj[0])
    elif kind == "laxfunctor":
        raise UnknownKind("validating a laxfunctor needs its endpoint bicategories; "
                          "use the library call validate_lax_functor")
    else:
        raise UnknownKind(f"no validator for kind {kind!r}")
    _emit(args, _report_payload(kind, report))
    return 0 if report.ok else 1


def cmd_universal(args) -> int:
    kind, obj = _load(args.file)
    if kind != "op2cat":
        raise UnknownKind("universality checks need an op2cat file")
    X, _ = obj
    if args.cell is not None:
        verdict = is_universal_2cell(X, args.cell)
        payload = {"kind": kind, "ok": verdict, "cell": args.cell,
                   "universal": verdict, "violations": []}
        if args.format == "json":
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(f"{args.cell}: {'universal' if verdict else 'non-universal'}")
        return 0 if verdict else 1
    report = check_coherence(X, direct_niche_search=args.direct_niche_search)
    verdicts = {cid: cid in report.universal_two_cells for cid in sorted(X.cells2)}
    if args.format == "json":
        payload = {
            "kind": kind,
            "ok": report.ok,
            "cells": verdicts,
            "universal_one_cells": sorted(report.universal_one_cells),
            "violations": [
                {"rule": v.rule, "witness": list(v.witness), "message": v.message}
                for v in report.violations
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for cid, ok in verdicts.items():
            print(f"{cid}: {'universal' if ok else 'non-universal'}")
        print(f"coherence: {report}")
    return 0 if report.ok else 1


def _default_out(filename: str, new_kind: str) -> str:
    base = filename[:-5] if filename.endswith(".json") else filename
    return f"{base}.{new_kind}.json"


def cmd_convert(args) -> int:
    kind, obj = _load(args.file)
    bound = _bound(args)
    if args.to == "opic":
        if kind == "category":
            out = serialize.to_doc(from_category(obj, bound))
        elif kind == "bicategory":
            X, biasing = from_bicategory(obj, bound)
            out = serialize.to_doc(X, biasing)
        else:
            raise UnknownKind(f"cannot convert {kind!r} to the opetopic side")
    elif args.to == "bicat":
        if kind == "op1cat":
            out = serialize.to_doc(to_category(obj))
        elif kind == "op2cat":
            X, biasing = obj
            if biasing is None or args.seedless_tiebreak:
                biasing = choose_biasing(X)
            out = serialize.to_doc(to_bicategory(X, biasing))
        else:
            raise UnknownKind(f"cannot convert {kind!r} to the classical side")
    else:
        raise UnknownKind(f"unknown conversion target {args.to!r}")
    target = args.out or _default_out(args.file, out["kind"])
    serialize.save_path(target, out)
    print(target)
    return 0


def cmd_roundtrip(args) -> int:
    kind, obj = _load(args.file)
    bound = _bound(args)
    if kind == "category":
        back = serialize.to_doc(to_category(from_category(obj, bound)))
        original = serialize.to_doc(obj)
    elif kind == "bicategory":
        X, biasing = from_bicategory(obj, bound)
        back = serialize.to_doc(to_bicategory(X, biasing))
        original = serialize.to_doc(obj)
    elif kind == "op1cat":
        back = serialize.to_doc(from_category(to_category(obj), obj.arity_bound))
        original = serialize.to_doc(obj)
    elif kind == "op2cat":
        X, biasing = obj
        if biasing is None:
            biasing = choose_biasing(X)
        regenerated, regenerated_biasing = from_bicategory(
            to_bicategory(X, biasing), X.arity_bound
        )
        back = serialize.to_doc(regenerated, regenerated_biasing)
        original = serialize.to_doc(X, biasing)
    else:
        raise UnknownKind(f"cannot roundtrip kind {kind!r}")
    if back == original:
        print("roundtrip: identical")
        return 0
    diffs = _doc_diff(original, back)
    print(f"roundtrip: {len(diffs)} difference(s)")
    for d in diffs[:20]:
        print(f"  {d}")
    return 1


def _doc_diff(a: dict, b: dict, prefix: str = "") -> list[str]:
    out = []
    for key in sorted(set(a) | set(b)):
        here = f"{prefix}.{key}" if prefix else str(key)
        if key not in a:
            out.append(f"{here}: only in result")
        elif key not in b:
            out.append(f"{here}: only in original")
        elif isinstance(a[key], dict) and isinstance(b[key], dict):
            out.extend(_doc_diff(a[key], b[key], here))
        elif isinstance(a[key], list) and isinstance(b[key], list) and a[key] != b[key]:
            rows_a = {json.dumps(r, sort_keys=True) for r in a[key]}
            rows_b = {json.dumps(r, sort_keys=True) for r in b[key]}
            changed = rows_a ^ rows_b
            sample = sorted(changed)[0] if changed else ""
            out.append(f"{here}: {len(changed)} row(s) differ, e.g. {sample}")
        elif a[key] != b[key]:
            out.append(f"{here}: {a[key]!r} != {b[key]!r}")
    return out


def cmd_classify(args) -> int:
    kind_x, obj_x = _load(args.source)
    kind_y, obj_y = _load(args.target)
    kind_f, morphism = _load(args.morphism)
    if kind_x != "op2cat" or kind_y != "op2cat" or kind_f != "opmorphism":
        raise UnknownKind("classify needs two op2cat files and one opmorphism file")
    X, b = obj_x
    Y, b2 = obj_y
    if b is None:
        b = choose_biasing(X)
    if b2 is None:
        b2 = choose_biasing(Y)
    result = classify_morphism(morphism, X, Y, b, b2)
    print(result)
    return 0 if result.verdict in ("strict", "weak") else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opetokit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run the validator matching a file's kind")
    p.add_argument("file")
    p.add_argument("--kind", choices=serialize.KINDS)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("universal", help="universality verdicts and coherence summary")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cell")
    group.add_argument("--all", action="store_true")
    p.add_argument("--direct-niche-search", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=cmd_universal)

    p = sub.add_parser("convert", help="convert between opetopic and classical files")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=("bicat", "opic"))
    p.add_argument("--arity-bound", type=int)
    p.add_argument("--seedless-tiebreak", action="store_true",
                   help="ignore any stored biasing and re-choose lexicographically")
    p.add_argument("--out")
    p.set_defaults(run=cmd_convert)

    p = sub.add_parser("roundtrip", help="convert there and back, diff the tables")
    p.add_argument("file")
    p.add_argument("--arity-bound", type=int)
    p.set_defaults(run=cmd_roundtrip)

    p = sub.add_parser("classify", help="strict / weak / lax verdict for a morphism")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("morphism")
    p.set_defaults(run=cmd_classify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (ParseError, UnknownKind) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OpetokitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
