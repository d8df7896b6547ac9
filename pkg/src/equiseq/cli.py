"""``equiseq`` command-line interface.

Examples::

    equiseq subcadence count --k 4 --text sample.txt
    equiseq espm locate --pattern aacc --text sample.txt --format json
    printf aaaa | equiseq cadence count --k 2

Exit status: 0 on success, 1 when ``--check`` finds a mismatch, 2 on usage
errors, 3 when the text cannot be read. Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import functools
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import cadence, espm, length3, oracle, subcadence
from .errors import UnsupportedLength
from .text import Text, d_max

COMMANDS = ("subcadence", "cadence", "espm", "espm3", "abelian3")
ALGOS = ("auto", "split", "bitpar", "pairs", "window", "conv", "brute")
CHECK_LIMIT = 4096

# CLI algorithm name -> library strategy, per command
_STRATEGIES = {
    "subcadence": {"auto": "auto", "split": "split", "bitpar": "bitpar", "pairs": "pairs"},
    "cadence": {
        "auto": "auto",
        "split": "filter",
        "window": "windowed",
        "bitpar": "windowed",
        "pairs": "pairs",
    },
    "espm": {"auto": "auto", "split": "split", "bitpar": "bitpar"},
    "espm3": {"auto": "conv", "conv": "conv", "bitpar": "bitpar", "split": "split"},
    "abelian3": {"auto": "conv", "conv": "conv"},
}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equiseq",
        description="Count and locate equidistant subsequence structures in a byte string.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("mode", choices=("count", "locate"))
    parser.add_argument("--k", type=int, help="structure length (subcadence, cadence)")
    parser.add_argument("--pattern", help="pattern bytes (espm, espm3, abelian3)")
    parser.add_argument(
        "--text", default="-", help="input file, or - for standard input (default)"
    )
    parser.add_argument("--algo", choices=ALGOS, default="auto")
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")
    parser.add_argument("--d", type=int, help="only report distance D")
    parser.add_argument(
        "--char", help="only report structures of this character (subcadence, cadence)"
    )
    parser.add_argument(
        "--strip-newlines",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="drop CR/LF bytes from the input (default: on)",
    )
    parser.add_argument(
        "--check",
        action="store_true",
        help=f"also run the brute-force oracle (n <= {CHECK_LIMIT}) and fail on mismatch",
    )
    parser.add_argument("--threads", type=int, default=1, help="worker threads over distances")
    return parser


def _read_text(path: str, strip: bool) -> bytes:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if strip:
        data = data.replace(b"\r", b"").replace(b"\n", b"")
    return data


def _validate(args) -> None:
    cmd = args.command
    if cmd in ("subcadence", "cadence"):
        if args.k is None:
            raise UsageError(f"{cmd} requires --k")
        if args.pattern is not None:
            raise UsageError(f"{cmd} does not take --pattern")
        if args.k < 2:
            raise UsageError("--k must be at least 2")
    else:
        if args.pattern is None:
            raise UsageError(f"{cmd} requires --pattern")
        if args.k is not None:
            raise UsageError(f"{cmd} does not take --k")
        size = len(args.pattern.encode("latin-1", errors="strict"))
        if cmd in ("espm3", "abelian3") and size != 3:
            raise UsageError(f"{cmd} requires a pattern of length 3")
        if size < 2:
            raise UsageError("--pattern must have at least 2 characters")
    if cmd in ("espm3", "abelian3") and args.mode == "locate":
        raise UsageError(f"{cmd} supports count only")
    if args.algo != "brute" and args.algo not in _STRATEGIES[cmd]:
        raise UsageError(f"--algo {args.algo} is not available for {cmd}")
    if args.char is not None:
        if cmd not in ("subcadence", "cadence"):
            raise UsageError("--char applies to subcadence and cadence only")
        if len(args.char.encode("latin-1")) != 1:
            raise UsageError("--char must be a single byte")
    if args.d is not None and args.d < 1:
        raise UsageError("--d must be at least 1")
    if args.d is not None and cmd in ("espm3", "abelian3") and args.algo in ("auto", "conv"):
        raise UsageError("--d cannot be combined with convolution counting")
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")


def _brute(cmd: str, text: Text, k, pattern, char=None) -> list:
    if cmd in ("subcadence", "cadence"):
        fn = oracle.brute_subcadences if cmd == "subcadence" else oracle.brute_cadences
        found = fn(text, k)
        if char is not None:
            found = [o for o in found if text.at(o.i) == char]
        return found
    if cmd in ("espm", "espm3"):
        return oracle.brute_esp(text, pattern)
    return oracle.brute_abelian3(text, pattern)


def _resolved(cmd: str, text: Text, k, pattern, strategy: str) -> str:
    if strategy != "auto":
        return strategy
    if cmd == "subcadence":
        return subcadence.resolved_name(text, k)
    if cmd == "cadence":
        return cadence.resolved_name(text, k)
    return espm.plan(text, pattern)


def _chunks(lo: int, hi: int, parts: int) -> list[range]:
    if lo > hi:
        return [range(lo, hi + 1)]
    step = -(-(hi - lo + 1) // parts)
    return [range(s, min(s + step, hi + 1)) for s in range(lo, hi + 1, step)]


def _run_fast(cmd, mode, text, k, pattern, strategy, d, threads, char=None):
    if cmd in ("espm3", "abelian3") and strategy == "conv":
        fn = length3.count_esp3 if cmd == "espm3" else length3.count_abelian3
        return fn(text, pattern).total
    if cmd == "subcadence":
        fn = subcadence.count_subcadences if mode == "count" else subcadence.locate_subcadences
        fn = functools.partial(fn, char=char)
        key = k
    elif cmd == "cadence":
        fn = cadence.count_cadences if mode == "count" else cadence.locate_cadences
        fn = functools.partial(fn, char=char)
        key = k
    else:
        fn = espm.count_espm if mode == "count" else espm.locate_espm
        key = pattern

    if d is not None or threads == 1:
        return fn(text, key, strategy, d=d)
    size = k if k is not None else len(pattern)
    ranges = _chunks(1, d_max(text.n, size), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda r: fn(text, key, strategy, d=r), ranges))
    if mode == "count":
        return sum(results)
    return [occ for part in results for occ in part]


def run(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        _validate(args)
    except UsageError as exc:
        print(f"equiseq: error: {exc}", file=err)
        return 2
    except UnicodeEncodeError:
        print("equiseq: error: --pattern must consist of single-byte characters", file=err)
        return 2
    try:
        text = Text(_read_text(args.text, args.strip_newlines))
    except OSError as exc:
        print(f"equiseq: error: cannot read text: {exc}", file=err)
        return 3

    cmd, mode = args.command, args.mode
    k = args.k
    pattern = args.pattern.encode("latin-1") if args.pattern is not None else None
    char = args.char.encode("latin-1")[0] if args.char is not None else None
    if args.check and text.n > CHECK_LIMIT:
        print(f"equiseq: error: --check refuses texts longer than {CHECK_LIMIT}", file=err)
        return 2

    try:
        if args.algo == "brute":
            algo = "brute"
            found = _brute(cmd, text, k, pattern, char)
            if args.d is not None:
                found = [o for o in found if o.d == args.d]
            result = len(found) if mode == "count" else found
        else:
            strategy = _STRATEGIES[cmd][args.algo]
            algo = _resolved(cmd, text, k, pattern, strategy)
            result = _run_fast(
                cmd, mode, text, k, pattern, strategy, args.d, args.threads, char
            )
    except UnsupportedLength as exc:
        print(f"equiseq: error: {exc}", file=err)
        return 2

    status = 0
    if args.check:
        expected = _brute(cmd, text, k, pattern, char)
        if args.d is not None:
            expected = [o for o in expected if o.d == args.d]
        expected = len(expected) if mode == "count" else list(expected)
        if expected != result:
            print("equiseq: check failed: result differs from brute-force oracle", file=err)
            status = 1

    params = {"k": k} if k is not None else {"pattern": pattern.decode("latin-1")}
    if args.d is not None:
        params["d"] = args.d
    if args.char is not None:
        params["char"] = args.char
    if mode == "count":
        if args.format == "json":
            doc = {"count": result, "n": text.n, "params": params, "algo": algo}
            out.write(json.dumps(doc) + "\n")
        else:
            out.write(f"{result}\n")
    else:
        if args.format == "json":
            doc = {
                "occurrences": [[o.i, o.d] for o in result],
                "count": len(result),
                "algo": algo,
            }
            out.write(json.dumps(doc) + "\n")
        else:
            out.write("".join(f"{o.i}\t{o.d}\n" for o in result))
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
