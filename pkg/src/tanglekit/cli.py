"""Command-line interface: ``tanglekit {enumerate,eval,verify,table,render}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import correspondences as corr
from .algebra import AlgebraKind, Variant, classify, enumerate_basis
from .element import GeneratorWord, evaluate_word, structure_constants
from .errors import TangleKitError
from .report import VerificationReport
from .scalar import Scalar
from .tables import cache_dir, dumps_table, load_table, persist_table, table_filename
from .words import verify_rewrites, verify_word_lemmas

ALGEBRAS = {
    "tl": Variant.TL,
    "blob": Variant.BLOB,
    "typeB": Variant.TYPE_B,
    "typeD": Variant.TYPE_D,
    "dquot": Variant.D_QUOTIENT,
}
SUITES = ("counts", "presentation", "symmetric", "embedding", "words", "rewrites", "associativity", "confluence")
MAX_RANK = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_kind(algebra: str, rank: int, delta: str | None = None, delta_prime: str | None = None) -> AlgebraKind:
    if not 1 <= rank <= MAX_RANK:
        raise UsageError(f"--rank {rank} outside 1..{MAX_RANK}")
    variant = ALGEBRAS[algebra]
    try:
        extra = {}
        if delta is not None:
            extra["delta"] = Scalar.parse(delta)
        if delta_prime is not None:
            if variant not in (Variant.BLOB, Variant.TYPE_B):
                raise UsageError(f"--delta-prime does not apply to {algebra}")
            extra["delta_prime"] = Scalar.parse(delta_prime)
    except ValueError as exc:
        raise UsageError(f"--delta/--delta-prime: {exc}") from exc
    make = {
        Variant.TL: AlgebraKind.tl,
        Variant.BLOB: AlgebraKind.blob,
        Variant.TYPE_B: AlgebraKind.type_b,
        Variant.TYPE_D: AlgebraKind.type_d,
        Variant.D_QUOTIENT: AlgebraKind.d_quotient,
    }[variant]
    return make(rank, **extra)


def _kind_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algebra", required=True, choices=sorted(ALGEBRAS))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--delta", help="loop value, e.g. 'v + v^-1' (default: the variant's own)")
    p.add_argument("--delta-prime", help="decorated loop value (blob and typeB)")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tanglekit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list the basis diagrams with their classes")
    _kind_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("eval", help="evaluate a word in the generators")
    _kind_args(p)
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("table", help="structure constants, persisted in the cache")
    _kind_args(p)
    p.add_argument("--cache-dir")
    p.add_argument("--out")

    p = sub.add_parser("render", help="canonical text form of generators or of a word's diagrams")
    _kind_args(p)
    p.add_argument("--word")
    p.add_argument("--out")
    return parser


# commands ------------------------------------------------------------------

def cmd_enumerate(args, kind: AlgebraKind) -> tuple[str, int]:
    rows = [(str(t), classify(t, kind).value) for t in enumerate_basis(kind)]
    if args.format == "json":
        return json.dumps([{"diagram": t, "class": c} for t, c in rows], indent=1, ensure_ascii=False), 0
    return "\n".join(f"{t}\t{c}" for t, c in rows), 0


def _word(kind: AlgebraKind, text: str) -> GeneratorWord:
    try:
        return GeneratorWord.parse(kind, text)
    except TangleKitError as exc:
        raise UsageError(f"--word: {exc}") from exc


def cmd_eval(args, kind: AlgebraKind) -> tuple[str, int]:
    value = evaluate_word(_word(kind, args.word))
    if args.format == "json":
        doc = {
            "kind": kind.variant.value,
            "rank": kind.rank,
            "word": args.word,
            "terms": [{"diagram": str(t), "coeff": c.to_json()} for t, c in value.items()],
        }
        return json.dumps(doc, indent=1, ensure_ascii=False), 0
    return str(value), 0


def cmd_render(args, kind: AlgebraKind) -> tuple[str, int]:
    if args.word is None:
        return "\n".join(f"{g}\t{kind.generator(g)}" for g in kind.standard_generators()), 0
    value = evaluate_word(_word(kind, args.word))
    return "\n".join(str(t) for t, _ in value.items()) or "0", 0


def cmd_table(args, kind: AlgebraKind) -> tuple[str, int]:
    directory = cache_dir(args.cache_dir)
    path = directory / table_filename(kind)
    if path.exists():
        table = load_table(path, kind)
    else:
        table = structure_constants(kind)
        persist_table(kind, path, table)
    return dumps_table(table).rstrip("\n"), 0


def suite_reports(suite: str, max_rank: int, max_len: int) -> list[VerificationReport]:
    """Reports for one suite, restricted to the ranks where each claim applies."""
    ranks = range(1, max_rank + 1)
    out: list[VerificationReport] = []
    if suite == "counts":
        for n in ranks:
            if n >= 2:
                out.append(corr.verify_counts(AlgebraKind.tl(n)))
                out.append(corr.verify_counts(AlgebraKind.type_b(n)))
                out.append(corr.verify_counts(AlgebraKind.d_quotient(n)))
            out.append(corr.verify_counts(AlgebraKind.blob(n)))
            if n >= 4:
                out.append(corr.verify_counts(AlgebraKind.type_d(n)))
    elif suite == "presentation":
        for n in ranks:
            if n >= 2:
                out.append(corr.verify_presentation(AlgebraKind.tl(n)))
                out.append(corr.verify_presentation(AlgebraKind.type_b(n)))
            out.append(corr.verify_presentation(AlgebraKind.blob(n)))
            if n >= 4:
                out.append(corr.verify_presentation(AlgebraKind.type_d(n)))
    elif suite == "symmetric":
        out += [corr.verify_symmetric(n) for n in ranks]
    elif suite == "embedding":
        out += [corr.verify_embedding(n) for n in ranks if n >= 2]
    elif suite == "words":
        for n in ranks:
            if n >= 2:
                out.append(verify_word_lemmas(AlgebraKind.tl(n), max_len))
                out.append(verify_word_lemmas(AlgebraKind.blob(n), max_len))
    elif suite == "rewrites":
        out += [verify_rewrites(n, max_len) for n in ranks if n >= 2]
    elif suite == "associativity":
        for n in ranks:
            kinds = [AlgebraKind.tl(n), AlgebraKind.blob(n), AlgebraKind.type_b(n), AlgebraKind.d_quotient(n)]
            if n >= 4:
                kinds.append(AlgebraKind.type_d(n))
            for k in kinds:
                out.append(corr.verify_associativity(k, exhaustive=n <= 2))
    elif suite == "confluence":
        for n in ranks:
            for k in (AlgebraKind.tl(n), AlgebraKind.blob(n), AlgebraKind.type_b(n), AlgebraKind.type_d(n), AlgebraKind.d_quotient(n)):
                out.append(corr.verify_confluence(k, samples=200))
    return out


def cmd_verify(args) -> tuple[str, int]:
    if not 1 <= args.max_rank <= MAX_RANK:
        raise UsageError(f"--max-rank {args.max_rank} outside 1..{MAX_RANK}")
    if args.max_len < 0:
        raise UsageError("--max-len must be non-negative")
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [r for name in names for r in suite_reports(name, args.max_rank, args.max_len)]
    ok = all(r.overall for r in reports)
    if args.format == "json":
        text = json.dumps({"reports": [r.to_json() for r in reports], "overall": ok}, indent=1, ensure_ascii=False)
    else:
        width = max((len(r.suite) for r in reports), default=5)
        lines = [
            f"{'PASS' if r.overall else 'FAIL'}  {r.suite:<{width}}  rank={r.rank}  checks={len(r.checks)}"
            for r in reports
        ]
        for r in reports:
            for c in r.failures():
                lines.append(f"  {r.suite} rank={r.rank} {c.id}: observed {c.observed}, expected {c.expected}")
        lines.append(f"overall: {'PASS' if ok else 'FAIL'} ({sum(r.overall for r in reports)}/{len(reports)} reports)")
        text = "\n".join(lines)
    return text, 0 if ok else 1


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = make_parser().parse_args(argv)
        if args.command == "verify":
            text, status = cmd_verify(args)
        else:
            kind = build_kind(args.algebra, args.rank, args.delta, args.delta_prime)
            handler = {"enumerate": cmd_enumerate, "eval": cmd_eval, "table": cmd_table, "render": cmd_render}[args.command]
            text, status = handler(args, kind)
    except UsageError as exc:
        print(f"tanglekit: usage error: {exc}", file=stderr)
        return 2
    except TangleKitError as exc:
        print(f"tanglekit: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text, file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
