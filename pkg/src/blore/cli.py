"""Command-line front end.

Exit codes: 0 success, 1 mismatch found, 2 input error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from blore.block_reversal import DEFAULT_MAX_LEN, br_contains, br_count, enumerate_br
from blore.classifier import classify, dump_forms
from blore.errors import ResourceLimitError, WordSyntaxError
from blore.palindromes import (
    PalindromeIndex,
    find_glen_violation,
    is_circularly_rich,
    is_product_of_two_palindromes,
    is_rich,
    is_rich_prefix_property,
)
from blore.verifier import (
    VerificationError,
    check_identity_laws,
    count_all_rich_sequence,
    oracle_all_rich,
    fixture_suite,
    sweep,
)
from blore.words import (
    fractional_power,
    parse_word,
    render,
    rle,
    run_length,
    run_sequence,
    trace,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
ENV_MAX_BLOCK_LEN = "BLORE_MAX_BLOCK_LEN"


class InputError(Exception):
    pass


def _default_max_block_len() -> int:
    raw = os.environ.get(ENV_MAX_BLOCK_LEN)
    if raw is None:
        return DEFAULT_MAX_LEN
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{ENV_MAX_BLOCK_LEN} must be an integer, got {raw!r}")


def _word(args, text: str):
    return parse_word(text, getattr(args, "alphabet", None))


def _emit(args, payload: dict, text_lines: list[str], csv_rows: list[list] | None = None) -> None:
    fmt = args.format
    if fmt == "json":
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        if csv_rows is None:
            csv_rows = [[k, json.dumps(v) if isinstance(v, (list, dict)) else v] for k, v in payload.items()]
            csv_rows.insert(0, ["key", "value"])
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        out = buf.getvalue()
    else:
        out = "\n".join(text_lines) + "\n"
    _write(args, out)


def _write(args, out: str) -> None:
    path = getattr(args, "out", None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def cmd_rle(args) -> int:
    w = _word(args, args.word)
    if not w.text:
        raise InputError("the empty word has no run-length encoding")
    r = rle(w)
    seq = list(run_sequence(r))
    payload = {
        "word": render(w), "rle": str(r), "trace": render(trace(r)),
        "run_sequence": seq, "run_length": run_length(w),
    }
    _emit(args, payload, [
        f"rle: {r}", f"trace: {render(trace(r))}",
        f"run sequence: ({', '.join(map(str, seq))})", f"l(w) = {run_length(w)}",
    ])
    return EXIT_OK


def cmd_pal(args) -> int:
    w = _word(args, args.word)
    tree = PalindromeIndex(w.text)
    pals = sorted(tree.palindromes(), key=lambda s: (len(s), s))
    payload = {
        "word": render(w), "palindromes": pals, "pal_count": tree.pal_count,
        "length": len(w), "rich": tree.pal_count == len(w),
    }
    _emit(args, payload, [
        "palindromes: " + ", ".join(pals),
        f"P(w) = {tree.pal_count}, |w| = {len(w)}",
        f"rich={_bool(payload['rich'])}",
    ])
    return EXIT_OK


def cmd_rich(args) -> int:
    w = _word(args, args.word)
    rich = is_rich(w)
    payload: dict = {"word": render(w), "rich": rich, "prefix_property": is_rich_prefix_property(w)}
    lines = [f"rich={_bool(rich)}"]
    if not rich:
        witness = find_glen_violation(w)
        payload["witness"] = {
            "kind": witness.kind.value,
            "factor": render(witness.factor),
            "palindrome": render(witness.palindrome),
        }
        lines.append(
            f"witness: factor {render(witness.factor)} has palindrome "
            f"{render(witness.palindrome)} exactly twice, as prefix and suffix only"
        )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_power(args) -> int:
    w = _word(args, args.word)
    try:
        k = Fraction(args.k)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad exponent {args.k!r}; expected p/q or an integer")
    p = fractional_power(w, k)
    _emit(args, {"word": render(w), "k": str(k), "power": render(p), "length": len(p)}, [render(p)])
    return EXIT_OK


def cmd_circ(args) -> int:
    w = _word(args, args.word)
    circ = is_circularly_rich(w)
    payload = {
        "word": render(w), "circularly_rich": circ,
        "product_of_two_palindromes": is_product_of_two_palindromes(w),
        "square_rich": is_rich(w + w),
    }
    _emit(args, payload, [f"circularly_rich={_bool(circ)}", f"ww rich={_bool(payload['square_rich'])}"])
    return EXIT_OK


def cmd_br(args) -> int:
    w = _word(args, args.word)
    bound = args.max_block_len
    if args.action == "member":
        if args.candidate is None:
            raise InputError("br member needs a candidate word")
        v = parse_word(args.candidate, w.alphabet_size)
        member = br_contains(w, v)
        _emit(args, {"word": render(w), "candidate": render(v), "member": member}, [_bool(member)])
        return EXIT_OK
    if args.action == "count":
        n = br_count(w, bound)
        _emit(args, {"word": render(w), "count": n}, [str(n)])
        return EXIT_OK
    brs = enumerate_br(w, bound)
    rows = [{"element": render(v), **({"rich": is_rich(v)} if args.annotate else {})} for v in brs]
    if args.annotate:
        lines = [f"{r['element']}\t{'rich' if r['rich'] else 'not-rich'}" for r in rows]
        table = [["element", "rich"]] + [[r["element"], _bool(r["rich"])] for r in rows]
    else:
        lines = [r["element"] for r in rows]
        table = [["element"]] + [[r["element"]] for r in rows]
    payload = {
        "word": render(w), "elements": rows, "distinct_count": brs.distinct_count,
        "partitions_explored": brs.partitions_explored,
    }
    _emit(args, payload, lines, table)
    return EXIT_OK


def cmd_classify(args) -> int:
    w = _word(args, args.word)
    v = classify(w)
    payload: dict = {
        "word": render(w),
        "verdict": "AllRich" if v.all_rich else "ExistsNonRich",
        "rule": v.rule.value,
        "matched_form": v.matched_form,
    }
    lines = [payload["verdict"], f"rule: {v.rule.value}"]
    if v.matched_form:
        lines.append(f"form: {v.matched_form}")
    code = EXIT_OK
    if args.check:
        o = oracle_all_rich(w, args.max_block_len)
        payload["oracle"] = o.to_dict()
        payload["agree"] = o.all_rich == v.all_rich
        lines.append(f"oracle: {'AllRich' if o.all_rich else 'ExistsNonRich'} "
                     f"({'agrees' if payload['agree'] else 'DISAGREES'})")
        if o.witness is not None:
            lines.append(f"witness: {render(o.witness)}")
        if not payload["agree"]:
            code = EXIT_MISMATCH
    _emit(args, payload, lines)
    return code


def cmd_verify(args) -> int:
    report = sweep(args.alphabet, args.min_len, args.max_len, args.jobs, args.max_block_len)
    if args.format == "json":
        _write(args, report.to_json())
    elif args.format == "csv":
        _write(args, report.to_csv())
    else:
        lines = [f"alphabet {args.alphabet}, lengths {args.min_len}..{args.max_len}: "
                 f"{report.words_checked} words, {len(report.mismatches)} mismatches"]
        for n, t, c in zip(report.lengths, report.total_words, report.all_rich_counts):
            lines.append(f"  n={n}: {c}/{t} all-rich")
        for m in report.mismatches:
            lines.append(f"  MISMATCH {render(m.word)}: classifier={m.verdict.all_rich} "
                         f"oracle={m.oracle.all_rich}")
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_sequence(args) -> int:
    try:
        counts = count_all_rich_sequence(args.alphabet, args.max_len, args.jobs, args.max_block_len)
    except VerificationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MISMATCH
    totals = [args.alphabet ** n for n in range(1, args.max_len + 1)]
    rows = [[n, t, c] for n, (t, c) in enumerate(zip(totals, counts), start=1)]
    payload = {
        "alphabet_size": args.alphabet,
        "counts": [{"length": n, "total_words": t, "all_rich_count": c} for n, t, c in rows],
    }
    _emit(args, payload, [", ".join(map(str, counts))],
          [["length", "total_words", "all_rich_count"]] + rows)
    return EXIT_OK


def cmd_dump_forms(args) -> int:
    forms = dump_forms()
    _emit(args, {"forms": forms}, [f"{f['form_id']}\t{f['template']}" for f in forms],
          [["form_id", "runs", "template"]] + [[f["form_id"], f["runs"], f["template"]] for f in forms])
    return EXIT_OK


def cmd_laws(args) -> int:
    report = check_identity_laws(args.samples, args.max_len, args.seed)
    d = report.to_dict()
    _emit(args, d, [
        f"reversal law: {report.reversal_words} words, {len(report.reversal_violations)} violations",
        f"concatenation law: {report.concat_pairs} pairs (seed {args.seed}), "
        f"{len(report.concat_violations)} violations",
    ])
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_fixtures(args) -> int:
    report = fixture_suite(include_large=not args.skip_large)
    rows = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in report.results]
    _emit(args, {"fixtures": rows, "ok": report.ok},
          [f"{'PASS' if r.passed else 'FAIL'} {r.name} {r.detail}".rstrip() for r in report.results])
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--max-block-len", type=int, default=None, metavar="N",
                        help=f"length bound for block-reversal enumeration (env {ENV_MAX_BLOCK_LEN})")

    word_opts = argparse.ArgumentParser(add_help=False)
    word_opts.add_argument("--alphabet", type=int, default=None, metavar="K",
                           help="alphabet size (default: letters present)")

    parser = argparse.ArgumentParser(prog="blore", description="Block reversal and rich words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common, word_opts], help=help_)
        p.add_argument("word")
        p.set_defaults(func=func)
        return p

    word_cmd("rle", cmd_rle, "run-length encoding, trace and run sequence")
    word_cmd("pal", cmd_pal, "distinct palindromic factors and P(w)")
    word_cmd("rich", cmd_rich, "richness verdict with a witness on failure")
    word_cmd("power", cmd_power, "fractional power u^(k)").add_argument("k")
    word_cmd("circ", cmd_circ, "circular richness")
    p = word_cmd("classify", cmd_classify, "decide whether every element of BR(w) is rich")
    p.add_argument("--check", action="store_true", help="also run the brute-force oracle")

    p = sub.add_parser("br", parents=[common, word_opts], help="block reversal set")
    p.add_argument("action", choices=("enum", "count", "member"))
    p.add_argument("word")
    p.add_argument("candidate", nargs="?")
    p.add_argument("--annotate", action="store_true", help="mark each element rich / not-rich")
    p.set_defaults(func=cmd_br)

    for name, func, help_ in (
        ("verify", cmd_verify, "exhaustive classifier-versus-oracle sweep"),
        ("sequence", cmd_sequence, "per-length counts of words with all-rich BR"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--alphabet", type=int, default=2, metavar="K")
        if name == "verify":
            p.add_argument("--min-len", type=int, default=1)
        p.add_argument("--max-len", type=int, default=14 if name == "verify" else 12)
        p.add_argument("--jobs", type=int, default=1, metavar="N")
        p.set_defaults(func=func)

    p = sub.add_parser("dump-forms", parents=[common], help="print the closed pattern table")
    p.set_defaults(func=cmd_dump_forms)

    p = sub.add_parser("laws", parents=[common], help="check the reversal and concatenation laws")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-len", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("fixtures", parents=[common], help="run the literature fixture suite")
    p.add_argument("--skip-large", action="store_true", help="skip the 2^18-partition instance")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.max_block_len is None:
            args.max_block_len = _default_max_block_len()
        return args.func(args)
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (WordSyntaxError, InputError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
