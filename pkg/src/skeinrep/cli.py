"""Command-line frontend for bracket evaluation, projector tables, hom
dimensions, Gram matrices, and batch equivalence verification.

Exit codes: 0 success (and all verdicts iso), 1 usage or parse error
(including poles at roots of unity and invalid colors), 2 verification
failure (some pair is not an isomorphism, or a Gram override broke one).
"""

import argparse
import json
import sys

from . import linalg
from .diagrams import WordError, bracket, parse_word
from .scalars import (GENERIC, Mode, PoleError, format_scalar, parse_mode,
                      parse_scalar, specialize)
from .tl_category import jones_wenzl
from .turaev import gram_matrix, hom_basis, object_seq
from .functor import FunctorReport, verify_equivalence


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract here says 1
    def error(self, message):
        raise UsageError(message)


def _parse_seq(text: str) -> tuple:
    """Comma-separated colors; the single color 0 denotes the empty object."""
    text = text.strip()
    if not text:
        raise UsageError("empty object sequence")
    try:
        colors = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"bad object sequence {text!r}") from None
    return colors


def _format_seq(s: tuple) -> str:
    return ",".join(str(n) for n in s) if s else "0"


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _located_word(text: str):
    # parse the whole word, then replay prefixes to name the failing line
    try:
        return parse_word(text)
    except WordError:
        lines = text.splitlines()
        for i in range(1, len(lines) + 1):
            try:
                parse_word("\n".join(lines[:i]))
            except WordError as exc:
                raise WordError(f"line {i}: {exc}") from None
        raise


def _cmd_bracket(args, mode: Mode) -> int:
    with open(args.word_file) as fh:
        text = fh.read()
    if not text.strip():
        value = mode.one()
    else:
        word = _located_word(text)
        value = bracket(word, mode)
    body = format_scalar(value)
    if args.format == "json":
        payload = {"bracket": body, "mode": str(mode)}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        _emit(body + "\n", args.out)
    return 0


def _cmd_jw(args, mode: Mode) -> int:
    proj = jones_wenzl(args.k, mode)
    rows = proj.morphism.to_pairs()
    if args.format == "json":
        payload = {
            "k": args.k,
            "mode": str(mode),
            "rows": [{"matching": arr, "coefficient": format_scalar(c)}
                     for arr, c in rows],
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{' '.join(str(x) for x in arr)} : {format_scalar(c)}"
                 for arr, c in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _report_line(rep: FunctorReport) -> str:
    return (f"{_format_seq(rep.source)} ; {_format_seq(rep.target)} ; "
            f"{rep.mode} ; {rep.dim_diagram_side} ; {rep.dim_rep_side} ; "
            f"{rep.matrix_rank} ; {rep.verdict}")


def _cmd_homdim(args, mode: Mode) -> int:
    rep = verify_equivalence(_parse_seq(args.source), _parse_seq(args.target),
                             mode)
    if args.format == "json":
        _emit(json.dumps(rep.to_json_dict(), sort_keys=True) + "\n", args.out)
    else:
        _emit(f"{rep.dim_diagram_side}, {rep.dim_rep_side}, {rep.verdict}\n",
              args.out)
    return 0 if rep.verdict == "iso" else 2


def _load_gram_override(path: str):
    with open(path) as fh:
        data = json.load(fh)
    mode = parse_mode(data["mode"])
    rows = []
    for row in data["matrix"]:
        parsed = []
        for entry in row:
            x = parse_scalar(entry)
            if mode.is_root:
                x = specialize(x, mode.r)
            parsed.append(x)
        rows.append(parsed)
    rank = linalg.rank([{j: x for j, x in enumerate(row) if not x.is_zero()}
                        for row in rows])
    key = (tuple(data["source"]), tuple(data["target"]), str(mode))
    return key, rank


def _cmd_verify(args, default_mode: Mode) -> int:
    override = None
    if args.gram_override:
        override = _load_gram_override(args.gram_override)
    with open(args.batch_file) as fh:
        lines = fh.read().splitlines()
    reports = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) == 2:
            s_text, t_text = parts
            mode = default_mode
        elif len(parts) == 3:
            s_text, t_text, mode_text = parts
            try:
                mode = parse_mode(mode_text)
            except ValueError as exc:
                raise UsageError(f"{args.batch_file}:{lineno}: {exc}") from None
        else:
            raise UsageError(
                f"{args.batch_file}:{lineno}: expected 's ; t ; mode'")
        try:
            rep = verify_equivalence(_parse_seq(s_text), _parse_seq(t_text),
                                     mode)
        except (UsageError, ValueError, PoleError) as exc:
            raise UsageError(f"{args.batch_file}:{lineno}: {exc}") from None
        if override is not None:
            key, rank = override
            if (rep.source, rep.target, str(rep.mode)) == key:
                rep = FunctorReport(rep.source, rep.target, rank,
                                    rep.dim_rep_side, rep.matrix_rank,
                                    rep.mode)
        reports.append(rep)
    all_iso = all(r.verdict == "iso" for r in reports)
    if args.format == "json":
        payload = {"all_iso": all_iso,
                   "reports": [r.to_json_dict() for r in reports]}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        _emit("".join(_report_line(r) + "\n" for r in reports), args.out)
    return 0 if all_iso else 2


def _cmd_gram(args, mode: Mode) -> int:
    s = object_seq(_parse_seq(args.source), mode)
    t = object_seq(_parse_seq(args.target), mode)
    g = gram_matrix(s, t, mode)
    rows = [[format_scalar(x) for x in row] for row in g]
    if args.format == "json":
        payload = {"source": list(s), "target": list(t), "mode": str(mode),
                   "matrix": rows}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        header = f"{_format_seq(s)} ; {_format_seq(t)} ; {mode}"
        lines = [header] + [" ; ".join(row) for row in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="skeinrep",
                     description="diagram calculus against quantum sl2")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--mode", default="generic",
                       help="generic or root:<r> (r >= 3)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("bracket", help="evaluate a closed diagram word")
    p.add_argument("word_file")
    common(p)

    p = sub.add_parser("jw", help="projector coefficient table")
    p.add_argument("k", type=int)
    common(p)

    p = sub.add_parser("homdim", help="hom dimensions and verdict for a pair")
    p.add_argument("source")
    p.add_argument("target")
    common(p)

    p = sub.add_parser("verify", help="batch equivalence verification")
    p.add_argument("batch_file")
    p.add_argument("--gram-override", default=None,
                   help="JSON Gram matrix replacing the diagram-side rank "
                            "for the matching pair (fault injection)")
    common(p)

    p = sub.add_parser("gram", help="diagram-side Gram matrix of a pair")
    p.add_argument("source")
    p.add_argument("target")
    common(p)
    return parser


_HANDLERS = {
    "bracket": _cmd_bracket,
    "jw": _cmd_jw,
    "homdim": _cmd_homdim,
    "verify": _cmd_verify,
    "gram": _cmd_gram,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        mode = parse_mode(args.mode)
        return _HANDLERS[args.subcommand](args, mode)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (WordError, PoleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
