"""Command-line front end.

Subcommands: identities, check, classify, enumerate, distinguish,
poset, verify-paper.  File outputs are written atomically and JSON is
dumped with sorted keys, so identical invocations produce identical
bytes at any worker-pool size.  Exit codes: 0 on success, 1 when
verify-paper finds a failing check, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import reference
from .algebra import FiniteZroupoid, classify, satisfies
from .catalog import AXIOM_NAMES, IDENTITY_TAGS, axiom, bol_moufang_catalog, catalog_by_label
from .enumerator import DEFAULT_SIZE_CAP, SearchSpec, enumerate_models
from .terms import Identity, print_term
from .varieties import compare, poset, variety, verify_paper


class UsageError(Exception):
    pass


def _dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(", ", ": "))


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".zlab-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_algebra(path: str) -> FiniteZroupoid:
    try:
        with open(path) as handle:
            return FiniteZroupoid.from_json(handle.read())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load algebra from {path}: {exc}") from exc


def _resolve_identity(name: str) -> Identity:
    table = catalog_by_label()
    if name in table:
        return table[name]
    if name == "SL":
        raise UsageError('"SL" is the pair I10 and C; check them separately')
    if name in AXIOM_NAMES:
        return axiom(name)
    raise UsageError(f"unknown identity {name!r}")


def _resolve_required(names: str) -> tuple[Identity, ...]:
    out: list[Identity] = []
    for name in names.split(","):
        name = name.strip()
        if not name:
            continue
        if name == "SL":
            out.extend(axiom("SL"))
        else:
            out.append(_resolve_identity(name))
    if not out:
        raise UsageError("no identities given")
    return tuple(out)


def _workers(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("ZLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"bad ZLAB_THREADS value {env!r}")
    return os.cpu_count() or 1


def _cmd_identities(args) -> int:
    entries = bol_moufang_catalog()
    if args.json:
        data = [
            {
                "label": e.label,
                "lhs": print_term(e.lhs),
                "rhs": print_term(e.rhs),
                "lhs_raw": print_term(e.lhs, "raw"),
                "rhs_raw": print_term(e.rhs, "raw"),
                "variables": list(e.var_set),
                "tag": IDENTITY_TAGS.get(e.label),
            }
            for e in entries
        ]
        print(_dumps(data))
        return 0
    for e in entries:
        tag = f"  ({IDENTITY_TAGS[e.label]})" if e.label in IDENTITY_TAGS else ""
        print(f"{e.label}: {e.render()}{tag}")
    return 0


def _cmd_check(args) -> int:
    alg = _load_algebra(args.algebra)
    ident = _resolve_identity(args.identity)
    result = satisfies(alg, ident, all_failures=args.all_failures)
    if args.json:
        print(_dumps({"identity": args.identity, **result.to_dict()}))
        return 0
    if result.holds:
        print(f"{args.identity} holds")
        return 0
    env = ", ".join(f"{k}={v}" for k, v in sorted(result.witness.items()))
    print(
        f"{args.identity} fails at {env or 'the empty assignment'}: "
        f"lhs={result.lhs_value} rhs={result.rhs_value}"
    )
    if args.all_failures:
        print(f"failing assignments: {len(result.failures)}")
    return 0


def _cmd_classify(args) -> int:
    alg = _load_algebra(args.algebra)
    report = classify(alg)
    if args.json:
        print(_dumps(report.to_dict()))
        return 0
    for key, value in report.to_dict().items():
        print(f"{key}: {value}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.size > DEFAULT_SIZE_CAP and not args.allow_large:
        raise UsageError(
            f"size {args.size} exceeds the default cap {DEFAULT_SIZE_CAP}; "
            "pass --allow-large if you really want this (runtime grows steeply)"
        )
    spec = SearchSpec(
        size=args.size,
        required=_resolve_required(args.require),
        dedup="up_to_iso" if args.upto_iso else "none",
        limit=args.limit,
    )
    models = enumerate_models(spec, workers=_workers(args))
    lines = "".join(_dumps(m.to_dict()) + "\n" for m in models)
    if args.out:
        _write_atomic(args.out, lines)
        print(f"{len(models)} models -> {args.out}")
    else:
        sys.stdout.write(lines)
    return 0


def _cmd_distinguish(args) -> int:
    report = compare(args.left, args.right, args.max_size, workers=_workers(args))
    if args.json:
        print(_dumps(report.to_dict()))
        return 0
    print(report.wording())
    for name, model in (
        (f"in {args.left} only", report.left_witness),
        (f"in {args.right} only", report.right_witness),
    ):
        if model is not None:
            print(f"{name}: {_dumps(model.to_dict())}")
    return 0


def _cmd_poset(args) -> int:
    labels = tuple(x.strip() for x in args.labels.split(",") if x.strip())
    report = poset(labels, args.max_size, workers=_workers(args))
    if args.json_out:
        _write_atomic(args.json_out, _dumps(report.to_dict()) + "\n")
    if args.dot:
        _write_atomic(args.dot, report.to_dot())
    classes = ", ".join("{" + ", ".join(c) + "}" for c in report.classes)
    print(f"classes up to size {report.bound}: {classes}")
    for lo, hi in report.covers:
        print(f"{lo} < {hi}")
    exceeds = [f for f in report.flags if f[2] != "consistent"]
    for a, b, status in exceeds:
        print(f"note: {a} <= {b} is {status}")
    return 0


def _cmd_verify_paper(args) -> int:
    if args.max_size is not None:
        bound = args.max_size
    else:
        bound = 4 if args.deep else 3
    report = verify_paper(bound, workers=_workers(args))
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status} {check.name}: {check.detail}")
    if args.report:
        _write_atomic(args.report, _dumps(report.to_dict()) + "\n")
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zlab",
        description="Finite-model laboratory for implication zroupoids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_threads(p):
        p.add_argument(
            "--threads",
            type=int,
            default=None,
            help="worker pool size (default: ZLAB_THREADS or machine parallelism)",
        )

    p = sub.add_parser("identities", help="list the 60 catalog identities")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("check", help="check one identity on one algebra")
    p.add_argument("--algebra", required=True, help="path to algebra JSON")
    p.add_argument("--identity", required=True, help="catalog label or axiom name")
    p.add_argument("--all-failures", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("classify", help="class memberships of one algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="enumerate models of given identities")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--require", required=True, help="comma-separated names, e.g. I,I0,I20,MC")
    p.add_argument("--upto-iso", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out", default=None, help="write JSON lines here instead of stdout")
    p.add_argument("--allow-large", action="store_true")
    add_threads(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("distinguish", help="compare two variety labels by bounded search")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--json", action="store_true")
    add_threads(p)
    p.set_defaults(func=_cmd_distinguish)

    p = sub.add_parser("poset", help="bounded inclusion poset of variety labels")
    p.add_argument(
        "--labels",
        default=",".join(reference.POSET_NODES),
        help="comma-separated variety labels",
    )
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--dot", default=None, help="write a DOT diagram here")
    p.add_argument("--json", dest="json_out", default=None, help="write a JSON report here")
    add_threads(p)
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("verify-paper", help="replay the reference classification")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--deep", action="store_true", help="default bound 4 instead of 3")
    p.add_argument("--report", default=None, help="write a JSON report here")
    add_threads(p)
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"zlab: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"zlab: {exc.args[0]}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"zlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
