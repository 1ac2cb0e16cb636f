"""Command-line interface: ``gapseq <subcommand> ...``.

Exit codes: 0 success, 1 malformed input or precondition violation,
2 semantically invalid sequence or failed selftest.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import cache
from .core import ValidationError, first_non_gap, non_gaps, validate
from .enumerator import (
    BRUTE_FORCE_LIMIT,
    ResourceLimitError,
    brute_force_enumerate,
    count_genus,
    default_workers,
    iter_tree,
    make_predicate,
)
from .ladder import ladder_from_gaps, verify_ladder_laws
from .selftest import run_selftest
from .weierstrass import classify, jenkins_forced_gap, point_count_bounds

log = logging.getLogger("gapseq")

EXIT_OK, EXIT_INPUT, EXIT_INVALID = 0, 1, 2
RECORD_FIELDS = ("genus", "gaps", "nonGaps", "weight", "classification", "firstNonGap")
FORMATS = ("jsonl", "csv", "plain")


@dataclass
class CliConfig:
    workers: int = 1
    brute_force_limit: int = BRUTE_FORCE_LIMIT
    output_format: str = "jsonl"
    cache_path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.brute_force_limit < 0:
            raise ValueError("brute_force_limit must be >= 0")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; 2 is reserved for invalid sequences here
    def error(self, message):
        raise UsageError(message)


def sequence_record(seq) -> dict:
    report = classify(seq)
    return {
        "genus": seq.genus,
        "gaps": list(seq.gaps),
        "nonGaps": list(non_gaps(seq).non_gaps),
        "weight": report.weight,
        "classification": report.classification.value,
        "firstNonGap": report.first_non_gap,
    }


class RecordWriter:
    """Single writer for mapping-shaped records in the configured format."""

    def __init__(self, out, fmt: str) -> None:
        self.out = out
        self.fmt = fmt
        self._csv = None

    def write(self, rec: dict) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.writer(self.out, lineterminator="\n")
                self._csv.writerow(rec.keys())
            self._csv.writerow(_flat(v) for v in rec.values())
        else:
            self.out.write(" ".join(f"{k}={_flat(v)}" for k, v in rec.items()) + "\n")


def _flat(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"--gaps must be comma-separated integers, got {text!r}") from None


def _genus(text: str) -> int:
    try:
        g = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if g < 0:
        raise argparse.ArgumentTypeError("genus must be non-negative")
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $GAPSEQ_WORKERS or CPU count)")
    common.add_argument("--brute-force-limit", type=int, default=None)
    common.add_argument("--format", choices=FORMATS, default=None, dest="output_format")
    common.add_argument("--cache", default=None, dest="cache_path",
                        help="CSV count cache (genus,count)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="gapseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common], help="count sequences of a genus")
    p.add_argument("--genus", type=_genus, required=True)
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle")

    p = sub.add_parser("enumerate", parents=[common], help="list sequences of a genus")
    p.add_argument("--genus", type=_genus, required=True)
    p.add_argument("--filter", default=None, metavar="KEY=VAL")

    for name in ("validate", "weight", "ladder"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--gaps", required=True, type=str)
        p.add_argument("--genus", type=_genus, required=True)

    p = sub.add_parser("bounds", parents=[common])
    p.add_argument("--genus", type=_genus, required=True)

    p = sub.add_parser("jenkins", parents=[common])
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)

    p = sub.add_parser("selftest", parents=[common])
    p.add_argument("--max-genus", type=_genus, required=True)
    return parser


def _config(args, base: Optional[CliConfig]) -> CliConfig:
    base = base or CliConfig(workers=default_workers())
    return CliConfig(
        workers=args.workers if args.workers is not None else base.workers,
        brute_force_limit=(args.brute_force_limit if args.brute_force_limit is not None
                           else base.brute_force_limit),
        output_format=args.output_format or base.output_format,
        cache_path=args.cache_path or base.cache_path,
    )


def _checked(genus: int, gaps_text: str):
    return validate(genus, _int_list(gaps_text))


def cmd_count(args, cfg, out) -> int:
    if args.oracle:
        n = brute_force_enumerate(args.genus, cfg.brute_force_limit).count
    else:
        n = cache.lookup(cfg.cache_path, args.genus)
        if n is None:
            n = count_genus(args.genus, cfg.workers)
            if cfg.cache_path:
                cache.store(cfg.cache_path, {args.genus: n})
        else:
            log.info("count for genus %d read from %s", args.genus, cfg.cache_path)
    out.write(f"{n}\n")
    return EXIT_OK


def cmd_enumerate(args, cfg, out) -> int:
    pred = None
    if args.filter:
        key, sep, value = args.filter.partition("=")
        if not sep:
            raise UsageError("--filter expects KEY=VAL")
        if args.genus < 1:
            raise UsageError("--filter needs genus >= 1")
        pred = make_predicate(key.strip(), value.strip())
    writer = RecordWriter(out, cfg.output_format)
    for seq in iter_tree(args.genus, cfg.workers):
        if pred is None or pred(seq):
            writer.write(sequence_record(seq))
    return EXIT_OK


def cmd_validate(args, cfg, out) -> int:
    try:
        _checked(args.genus, args.gaps)
    except ValidationError as e:
        line = f"invalid {e.kind.value}"
        if e.witness:
            line += " witness=" + ",".join(map(str, e.witness))
        out.write(f"{line}: {e}\n")
        return EXIT_INVALID
    out.write("valid\n")
    return EXIT_OK


def cmd_weight(args, cfg, out) -> int:
    seq = _checked(args.genus, args.gaps)
    r = classify(seq)
    RecordWriter(out, cfg.output_format).write({
        "weight": r.weight,
        "isWeierstrass": r.is_weierstrass,
        "classification": r.classification.value,
        "firstNonGap": r.first_non_gap,
        "alsoExceptional": r.also_exceptional,
    })
    return EXIT_OK


def cmd_ladder(args, cfg, out) -> int:
    seq = _checked(args.genus, args.gaps)
    lad = ladder_from_gaps(seq)
    out.write("n  " + " ".join(map(str, range(len(lad.h0)))) + "\n")
    out.write("h0 " + " ".join(map(str, lad.h0)) + "\n")
    out.write("i  " + " ".join(map(str, lad.i)) + "\n")
    ok = True
    for law, res in verify_ladder_laws(lad).items():
        ok &= res.passed
        out.write(f"{law}: {'pass' if res.passed else f'FAIL at {res.index}'}\n")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_bounds(args, cfg, out) -> int:
    b = point_count_bounds(args.genus)
    RecordWriter(out, cfg.output_format).write(
        {"genus": b.genus, "lower": b.lower, "upper": b.upper, "totalWeight": b.total_weight})
    return EXIT_OK


def cmd_jenkins(args, cfg, out) -> int:
    forced = jenkins_forced_gap(args.h, args.k, args.genus)
    out.write("forced-gap\n" if forced else "not-forced\n")
    return EXIT_OK


def cmd_selftest(args, cfg, out) -> int:
    ok = True
    for r in run_selftest(args.max_genus, cfg.brute_force_limit):
        ok &= r.passed
        out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name} {r.detail}\n")
    return EXIT_OK if ok else EXIT_INVALID


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "validate": cmd_validate,
    "weight": cmd_weight,
    "ladder": cmd_ladder,
    "bounds": cmd_bounds,
    "jenkins": cmd_jenkins,
    "selftest": cmd_selftest,
}


def run_command(argv: Sequence[str], config: Optional[CliConfig] = None,
                out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        cfg = _config(args, config)
        if args.verbose:
            logging.basicConfig(level=logging.INFO, stream=err)
        return COMMANDS[args.command](args, cfg, out)
    except ValidationError as e:
        err.write(f"gapseq: invalid sequence: {e}\n")
        return EXIT_INVALID
    except (UsageError, ValueError, ResourceLimitError, cache.CacheFormatError) as e:
        err.write(f"gapseq: {e}\n")
        return EXIT_INPUT


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return run_command(sys.argv[1:] if argv is None else argv)
    except BrokenPipeError:
        # downstream closed early (e.g. `| head`)
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
