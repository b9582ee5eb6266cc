"""Command line entry point.

Exit statuses: 0 success, 1 usage, 2 parse or validation failure,
3 negative verdict (nonlinear, not equivalent), 4 exploration budget
exhausted where an exact answer was asked for.
"""
from __future__ import annotations

import argparse
import sys

from . import cdwa as cdwa_mod
from . import derivative as der_mod
from . import oracle
from . import wavs as wavs_mod
from . import wfa as wfa_mod
from .cdwa import Cdwa
from .errors import RealwaError
from .formats import Document, load, serialize
from .linalg import format_rational, rank, rref
from .nerode import DEFAULT_MAX_STATES, nerode
from .wavs import Wavs
from .wfa import Wfa

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_NEGATIVE, EXIT_BUDGET = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _expect(doc: Document, *kinds: str):
    if doc.kind not in kinds:
        raise _Fail(EXIT_INVALID, f"expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc.body


def _emit(doc: Document, out) -> None:
    text = serialize(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    a = _expect(load(args.file), "wfa", "cdwa", "wavs")
    u = a.alphabet.parse(args.word)
    if isinstance(a, Wfa):
        print(f"behavior: {wfa_mod.behavior(a, u)}")
        print(f"generated: {wfa_mod.generated(a, u)}")
    elif isinstance(a, Wavs):
        print(f"behavior: {wavs_mod.behavior(a, u)}")
        print(f"generated: {wavs_mod.generated(a, u)}")
    else:
        print(f"behavior: {cdwa_mod.behavior(a, u)}")
    return EXIT_OK


def _table(title: str, words, alphabet) -> str:
    lines = [f"{'state':>5}  {title}"]
    lines += [f"{i:>5}  {alphabet.format(w)}" for i, w in enumerate(words)]
    return "\n".join(lines) + "\n"


def cmd_nerode(args) -> int:
    a = _expect(load(args.file), "wfa")
    r = nerode(a, args.max_states)
    if not r.complete:
        print(f"status: {r.status} after {r.explored} vectors (budget {args.max_states})", file=sys.stderr)
        return EXIT_BUDGET
    labels = tuple(a.alphabet.format(w) for w in r.words)
    if args.table:
        sys.stdout.write(_table("witness word", r.words, a.alphabet))
    else:
        _emit(Document(r.automaton, labels), args.output)
    print(f"status: {r.status}, {r.explored} states", file=sys.stderr)
    return EXIT_OK


def cmd_linearity(args) -> int:
    a = _expect(load(args.file), "wavs")
    report = wavs_mod.linearity_check(a)
    sys.stdout.write(report.format())
    return EXIT_OK if report.linear else EXIT_NEGATIVE


def cmd_to_wfa(args) -> int:
    a = _expect(load(args.file), "wavs", "cdwa")
    if isinstance(a, Cdwa):
        result = cdwa_mod.to_wfa(a)
    else:
        report = wavs_mod.linearity_check(a)
        if not report.linear:
            sys.stderr.write(report.format())
            return EXIT_NEGATIVE
        result = wavs_mod.to_wfa(a, report)
    _emit(Document(result), args.output)
    return EXIT_OK


def cmd_from_cdwa(args) -> int:
    d = _expect(load(args.file), "cdwa")
    vectors = None
    if args.basis:
        m = _expect(load(args.basis), "matrix")
        vectors = [m.row(i) for i in range(m.nrows)]
    _emit(Document(cdwa_mod.to_wavs(d, vectors)), args.output)
    return EXIT_OK


def cmd_derivative(args) -> int:
    a = _expect(load(args.file), "wfa")
    da = der_mod.derivative_automaton(a, args.max_states)
    if not da.complete:
        print(
            f"status: {da.status} after {len(da.states)} derivatives (budget {args.max_states})",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    if args.table:
        sys.stdout.write(_table("representative", da.representatives, a.alphabet))
    else:
        labels = tuple(a.alphabet.format(w) for w in da.representatives)
        _emit(Document(da.automaton, labels), args.output)
    print(f"status: {da.status}, {len(da.states)} states, forward dimension {da.basis.d}", file=sys.stderr)
    return EXIT_OK


def cmd_prefix_closure(args) -> int:
    a = _expect(load(args.file), "wfa")
    u = a.alphabet.parse(args.word)
    r = nerode(a, args.max_states)
    pc = der_mod.prefix_closure(a, u, r, args.horizon)
    print(pc)
    if args.exact and not pc.exact:
        print("exact value needs a complete Nerode construction", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_equiv(args) -> int:
    a = _expect(load(args.file1), "wfa", "cdwa", "wavs")
    b = _expect(load(args.file2), "wfa", "cdwa", "wavs")
    check = oracle.complete_equiv_bounded if args.complete else oracle.language_equiv_bounded
    cex = check(a, b, args.max_len)
    if cex is None:
        print(f"equal on all words up to length {args.max_len}")
        return EXIT_OK
    print(
        f"counterexample: {a.alphabet.format(cex.word)} "
        f"({cex.which}: {cex.left} vs {cex.right})"
    )
    return EXIT_NEGATIVE


def cmd_rref(args) -> int:
    m = _expect(load(args.file), "matrix")
    r = rref(m)
    cells = [[format_rational(x) for x in row] for row in r.rows]
    w = max(len(c) for row in cells for c in row)
    for row in cells:
        print("  " + " ".join(c.rjust(w) for c in row))
    print(f"rank: {rank(m)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="realwa", description="Exact real-weighted automata toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("eval", help="behavior and generated value of a word")
    s.add_argument("file")
    s.add_argument("word", help="letters run together, or comma separated; @ is the empty word")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("nerode", help="Nerode automaton of a WFA")
    s.add_argument("file")
    s.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    s.add_argument("--table", action="store_true", help="print the witness-word table instead")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_nerode)

    s = sub.add_parser("linearity", help="rank test for a vector-state automaton")
    s.add_argument("file")
    s.set_defaults(func=cmd_linearity)

    s = sub.add_parser("to-wfa", help="convert a linear vector-state automaton or a CDWA to a WFA")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_to_wfa)

    s = sub.add_parser("from-cdwa", help="relabel CDWA states by vectors")
    s.add_argument("file")
    s.add_argument("--basis", help="matrix document whose rows are the state vectors")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_from_cdwa)

    s = sub.add_parser("derivative", help="derivative automaton of the function a WFA computes")
    s.add_argument("file")
    s.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    s.add_argument("--table", action="store_true", help="print the representative-word table instead")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_derivative)

    s = sub.add_parser("prefix-closure", help="sup over v of |f(uv)|")
    s.add_argument("file")
    s.add_argument("word")
    s.add_argument("--horizon", type=int, default=der_mod.DEFAULT_HORIZON)
    s.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    s.add_argument("--exact", action="store_true", help="fail with status 4 instead of printing a lower bound")
    s.set_defaults(func=cmd_prefix_closure)

    s = sub.add_parser("equiv", help="bounded (complete) language equivalence")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--max-len", type=int, default=8)
    s.add_argument("--complete", action="store_true", help="also compare generated functions")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("rref", help="reduced row echelon form and rank of a matrix document")
    s.add_argument("file")
    s.set_defaults(func=cmd_rref)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for opt in ("max_states", "horizon", "max_len"):
        value = getattr(args, opt, None)
        if value is not None and value < (1 if opt == "max_states" else 0):
            parser.error(f"--{opt.replace('_', '-')} out of range: {value}")
    try:
        return args.func(args)
    except _Fail as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (RealwaError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
