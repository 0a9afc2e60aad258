"""``dope`` command-line interface.

Every subcommand writes one canonical JSON document (or NDJSON lines for
``enumerate``) to stdout.  Exit codes: 0 success, 1 the checked property is
false, 2 usage or precondition error, 3 synthesis retries exhausted.
``DOPE_LOG`` (quiet, info, debug) sets stderr verbosity.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional

from . import census, counting, patterns
from .core import DopePattern, PointTuple, Polynomial
from .errors import DopeError, RetriesExhausted
from .evaluate import dope_matrix, max_row_weight
from .linalg import derivative_limit_coeffs, gv_rank_check, rank, binomial_matrix
from .synthesis import synthesize, synthesize_limited

log = logging.getLogger("dope")

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_RETRIES = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class _Inputs:
    """Reads JSON arguments from files or stdin; stdin is consumed once and shared."""

    def __init__(self, stdin):
        self.stdin = stdin
        self._stdin_doc = None

    def load(self, src: str):
        if src is None:
            raise UsageError("missing JSON input")
        try:
            if src == "-":
                if self._stdin_doc is None:
                    self._stdin_doc = json.loads(self.stdin.read())
                return self._stdin_doc
            with open(src) as fh:
                return json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed JSON in {src}: {exc}") from None
        except OSError as exc:
            raise UsageError(f"cannot read {src}: {exc.strerror}") from None

    def matrix(self, src) -> DopePattern:
        doc = self.load(src)
        if isinstance(doc, dict) and "target" in doc and "bits" not in doc:
            doc = doc["target"]
        return _decode(DopePattern.from_json, doc, "matrix")

    def poly(self, src) -> Polynomial:
        doc = self.load(src)
        if isinstance(doc, dict) and "poly" in doc:
            doc = doc["poly"]
        return _decode(Polynomial.from_json, doc, "polynomial")

    def points(self, src) -> PointTuple:
        doc = self.load(src)
        if isinstance(doc, dict) and isinstance(doc.get("points"), dict):
            doc = doc["points"]
        return _decode(PointTuple.from_json, doc, "points")


def _decode(fn, doc, what):
    try:
        return fn(doc)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed {what} JSON: {exc}") from None


def _intlist(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {' '.join(missing)}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dope", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def cmd(name, help, *flags):
        p = sub.add_parser(name, help=help)
        for f in flags:
            FLAGS[f](p)
        return p

    FLAGS = {
        "m": lambda p: p.add_argument("--m", type=int),
        "n": lambda p: p.add_argument("--n", type=int),
        "k": lambda p: p.add_argument("--k", type=int),
        "t": lambda p: p.add_argument("--t", type=int),
        "a": lambda p: p.add_argument("--a", type=int),
        "d": lambda p: p.add_argument("--d", type=int),
        "matrix": lambda p: p.add_argument("--matrix", metavar="FILE|-"),
        "poly": lambda p: p.add_argument("--poly", metavar="FILE|-"),
        "points": lambda p: p.add_argument("--points", metavar="FILE|-"),
        "s1": lambda p: p.add_argument("--s1", type=_intlist, default=[], help="comma-separated column indices"),
        "s2": lambda p: p.add_argument("--s2", type=_intlist, default=[], help="comma-separated column indices"),
    }

    cmd("check-safe", "is the pattern safe (generic)?", "matrix")
    cmd("is-generic", "alias of check-safe", "matrix")
    cmd("enumerate", "stream all safe m x (n+1) patterns as NDJSON", "m", "n", "k")
    cmd("count", "count safe patterns (with k ones if --k is given)", "m", "n", "k")
    p = cmd("bounds", "bound calculators", "m", "n", "a", "t")
    p.add_argument("--kind", default="generic",
                   choices=["generic", "small-m-log", "upper", "grossbound", "sandwich"])
    cmd("compute", "dope matrix of a polynomial at points", "poly", "points")
    cmd("row-weight", "max ones in a single-point dope row over all complex points", "poly")
    p = cmd("synth", "synthesize a certified witness for a safe pattern", "matrix")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=20)
    p.add_argument("--limit", type=int, help="also require every single-point row weight <= LIMIT")
    p.add_argument("--saturate", action="store_true",
                   help="with --limit, pad a non-saturated pattern with (1,0,...,0) rows")
    p = cmd("combine", "merge two rows of a pattern", "n", "s1", "s2")
    p.add_argument("--carry", action="store_true", help="use the carry process")
    p = cmd("cycle", "count t-dominating cyclic shifts", "t")
    p.add_argument("--seq", required=True, help="0/1 string")
    p = cmd("gv-rank", "rank of the binomial matrix [C(g,h)]")
    p.add_argument("--g", type=_intlist, default=[])
    p.add_argument("--h", type=_intlist, default=[])
    cmd("limit-coeffs", "coefficients writing P^(d) as a limit of values", "d", "s1", "s2")
    cmd("census", "count all dope matrices, n <= 2 exactly", "n", "m")
    return parser


def _run(args, inputs: _Inputs, out) -> int:
    c = args.command

    def emit(obj):
        out.write(dumps(obj) + "\n")

    if c in ("check-safe", "is-generic"):
        safe = patterns.is_safe(inputs.matrix(args.matrix))
        emit({"safe": safe})
        return EXIT_OK if safe else EXIT_FALSE

    if c == "enumerate":
        _need(args, "m", "n")
        for pat in patterns.enumerate_safe(args.m, args.n, args.k):
            out.write(dumps(pat.to_json()) + "\n")
        return EXIT_OK

    if c == "count":
        _need(args, "m", "n")
        if args.k is None:
            emit(counting.count_generic_total(args.m, args.n))
        else:
            emit(counting.count_generic_k(args.m, args.n, args.k))
        return EXIT_OK

    if c == "bounds":
        _need(args, "m", "n")
        if args.kind == "generic":
            report = counting.generic_bounds(args.m, args.n)
        elif args.kind == "small-m-log":
            report = counting.small_m_log_bounds(args.m, args.n)
        elif args.kind == "upper":
            report = counting.upper_bound_report(args.m, args.n)
        elif args.kind == "grossbound":
            _need(args, "a", "t")
            report = counting.grossbound_report(args.m, args.n, args.a, args.t)
        else:
            report = census.sandwich_bounds(args.n, args.m)
        emit(report.to_json())
        return EXIT_OK

    if c == "compute":
        emit(dope_matrix(inputs.poly(args.poly), inputs.points(args.points)).to_json())
        return EXIT_OK

    if c == "row-weight":
        emit(max_row_weight(inputs.poly(args.poly)))
        return EXIT_OK

    if c == "synth":
        pattern = inputs.matrix(args.matrix)
        if args.limit is None:
            cert = synthesize(pattern, args.seed, args.retries)
        else:
            cert = synthesize_limited(pattern, args.limit, args.seed, args.retries, args.saturate)
        log.info("certificate found after %d attempt(s)", cert.attempts_used)
        emit(cert.to_json())
        return EXIT_OK

    if c == "combine":
        _need(args, "n")
        if args.carry:
            merged = patterns.combine_rows_carry(args.s1, args.s2, args.n)
        else:
            merged = patterns.combine_rows(args.s1, args.s2, args.n)
        emit({"combined": sorted(merged)})
        return EXIT_OK

    if c == "cycle":
        _need(args, "t")
        seq = patterns.parse_sequence(args.seq)
        b = sum(seq)
        a = len(seq) - b
        emit({
            "count": patterns.count_dominating_shifts(seq, args.t),
            "zeros": a,
            "ones": b,
            "dominating": patterns.is_t_dominating(seq, args.t),
        })
        return EXIT_OK

    if c == "gv-rank":
        ok = gv_rank_check(args.g, args.h)
        r = rank(binomial_matrix(args.g, args.h)) if args.g else 0
        emit({"rank": r, "full_row_rank": ok})
        return EXIT_OK if ok else EXIT_FALSE

    if c == "limit-coeffs":
        _need(args, "d")
        emit(derivative_limit_coeffs(args.d, args.s1, args.s2).to_json())
        return EXIT_OK

    if c == "census":
        _need(args, "n", "m")
        if args.n <= 2:
            emit({"n": args.n, "m": args.m, "count": str(census.census_count(args.n, args.m))})
        else:
            emit({"n": args.n, "m": args.m, "expansion": census.leading_terms(args.n)})
        return EXIT_OK

    raise UsageError("a subcommand is required")


def _configure_logging():
    level = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}.get(
        os.environ.get("DOPE_LOG", "quiet").lower(), logging.ERROR)
    logging.basicConfig(level=level, format="dope: %(message)s", stream=sys.stderr)


def main(argv: Optional[list[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    _configure_logging()
    try:
        args = build_parser().parse_args(argv)
        return _run(args, _Inputs(stdin), stdout)
    except UsageError as exc:
        print(f"dope: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except RetriesExhausted as exc:
        print(f"dope: RetriesExhausted: {exc}", file=stderr)
        return EXIT_RETRIES
    except (DopeError, ValueError) as exc:
        print(f"dope: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
