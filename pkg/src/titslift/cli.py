"""Command-line front end.

Three subcommands: ``verify`` runs the relation sweep for one rank and
emits a JSON report, ``eval-word`` evaluates a braid word as a monomial
matrix and shows its decomposition, ``normalizer-check`` tests whether a
matrix read from JSON normalizes the diagonal torus.

Exit codes: 0 when everything passed, 1 when a relation failed or the
matrix was not in the normalizer, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .autos import (RelationReport, report_to_json, verify_group_relations,
                    verify_theorem1)
from .braid import is_pure, natural_projection, parse_word
from .linalg import canonical, matrix_from_json, matrix_to_json, scalar_to_str
from .tits import (GroupElement, NotInNormalizer, TitsSection, coset_class,
                   evaluate_word, normalizer_decompose)

USAGE_ERROR = 2
RELATION_ERROR = 1


def _parse_params(n: int, text: str | None) -> TitsSection:
    if text is None:
        return TitsSection.ones(n)
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) != n:
        raise ValueError(f"expected {n} parameters, got {len(parts)}")
    return TitsSection(n, tuple(canonical(p) for p in parts))


def _merge_reports(reports: list[RelationReport]) -> dict:
    n = reports[0].n
    rels = []
    for rep in reports:
        rels.extend(report_to_json(rep)["relations"])
    rels.sort(key=lambda r: (r["tag"], r["i"], r["j"]))
    return {
        "n": n,
        "relations": rels,
        "all_pass": all(rep.all_pass for rep in reports),
    }


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n < 1:
        print(f"error: rank must be at least 1, got {args.n}",
              file=sys.stderr)
        return USAGE_ERROR
    if args.n > args.max_rank:
        print(f"error: rank {args.n} exceeds cap {args.max_rank}; "
              "raise it with --max-rank", file=sys.stderr)
        return USAGE_ERROR
    try:
        section = _parse_params(args.n, args.params)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: bad --params: {exc}", file=sys.stderr)
        return USAGE_ERROR

    reports = []
    if args.level in ("adjoint", "all"):
        reports.append(verify_theorem1(args.n))
    if args.level in ("group", "all"):
        reports.append(verify_group_relations(section))
    payload = _merge_reports(reports)

    text = json.dumps(payload, indent=2)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if payload["all_pass"] else RELATION_ERROR


def cmd_eval_word(args: argparse.Namespace) -> int:
    if args.n < 1:
        print(f"error: rank must be at least 1, got {args.n}",
              file=sys.stderr)
        return USAGE_ERROR
    try:
        section = _parse_params(args.n, args.params)
        word = parse_word(args.n, args.word)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    g = evaluate_word(section, word)
    dec = normalizer_decompose(g)
    proj = natural_projection(word)
    payload = {
        "n": args.n,
        "word": args.word.strip(),
        "matrix": matrix_to_json(g.m),
        "permutation": list(dec.sigma.images),
        "scales": [scalar_to_str(x) for x in dec.scales],
        "projection": list(proj.images),
        "pure": is_pure(word),
    }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_normalizer_check(args: argparse.Namespace) -> int:
    try:
        with open(args.matrix, encoding="utf-8") as fh:
            obj = json.load(fh)
        m = matrix_from_json(obj)
    except (OSError, ValueError) as exc:
        print(f"error: cannot read matrix: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        g = GroupElement(m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        dec = normalizer_decompose(g)
    except NotInNormalizer as exc:
        print(json.dumps({"in_normalizer": False, "reason": str(exc)}))
        return RELATION_ERROR
    payload = {
        "in_normalizer": True,
        "permutation": list(dec.sigma.images),
        "scales": [scalar_to_str(x) for x in dec.scales],
        "coset": list(coset_class(g).images),
    }
    print(json.dumps(payload, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="titslift",
        description="verify braid-lift relations and decompose monomial "
                    "matrices, all in exact rational arithmetic")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="run the relation sweep for one rank")
    p_verify.add_argument("--n", type=int, required=True, help="rank")
    p_verify.add_argument("--level", choices=("group", "adjoint", "all"),
                          default="all",
                          help="which family of relations to check")
    p_verify.add_argument("--params", default=None, metavar="a1,a2,...",
                          help="section parameters, rational, default all 1")
    p_verify.add_argument("--json", default=None, metavar="PATH",
                          help="write the report here instead of stdout")
    p_verify.add_argument("--max-rank", type=int, default=8,
                          help="refuse ranks above this (default 8)")
    p_verify.set_defaults(func=cmd_verify)

    p_eval = sub.add_parser(
        "eval-word", help="evaluate a braid word as a monomial matrix")
    p_eval.add_argument("--n", type=int, required=True, help="rank")
    p_eval.add_argument("--word", required=True, metavar='"i j -k"',
                        help="signed generator indices")
    p_eval.add_argument("--params", default=None, metavar="a1,a2,...",
                        help="section parameters, rational, default all 1")
    p_eval.set_defaults(func=cmd_eval_word)

    p_norm = sub.add_parser(
        "normalizer-check",
        help="test whether a matrix normalizes the diagonal torus")
    p_norm.add_argument("--matrix", required=True, metavar="PATH",
                        help="matrix JSON file")
    p_norm.set_defaults(func=cmd_normalizer_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize anything else
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
