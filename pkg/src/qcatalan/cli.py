"""Command-line front end: ``qcatalan compute | verify | bench``.

Exit codes: 0 success, 1 a verified identity failed, 2 bad arguments or
selector, 3 the word-length cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from . import catalan as cat
from . import pbw, verify
from .freealg import FreeElement
from .pretty import format_element
from .shuffle import CACHE as SHUFFLE_CACHE
from .shuffle import SUPER, caching, shuffle_elems
from .words import WordCapError, set_word_cap

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    fmt: str
    braiding: str = "super"
    cap: Optional[int] = None
    out: Optional[str] = None
    target: Optional[str] = None
    degree: Optional[int] = None
    suite: str = "all"
    max_degree: int = 10
    parallel: bool = False
    bench_max: int = 6
    extra: Dict[str, object] = field(default_factory=dict)


def _damiani_family(attr: str) -> Callable[[int], FreeElement]:
    def build(n: int) -> FreeElement:
        return getattr(pbw.damiani_generators(n), attr)[n]

    return build


def _beck(n: int) -> FreeElement:
    return pbw.beck_from_damiani(n, pbw.damiani_generators(n).imag)


TARGETS: Dict[str, Callable[[int], FreeElement]] = {
    "catalan": cat.catalan_element,
    "xcatalan": cat.x_catalan,
    "catalany": cat.catalan_y,
    "xcatalany": cat.x_catalan_y,
    "damiani0": _damiani_family("real0"),
    "damiani1": _damiani_family("real1"),
    "imag": _damiani_family("imag"),
    "beck": _beck,
}
MIN_INDEX = {"imag": 1, "beck": 1}


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "pretty"), default=None,
                        help="output format (default: pretty on a terminal, json otherwise)")
    common.add_argument("--braiding", choices=("admissible", "super"), default="super")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")
    common.add_argument("--cap", type=int, default=None, help="maximum word length (default 24 or $QCATALAN_CAP)")

    p = argparse.ArgumentParser(prog="qcatalan", description="Catalan elements in the q-shuffle superalgebra.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="print an element")
    c.add_argument("target", choices=sorted(TARGETS))
    c.add_argument("index", nargs="?", type=int, default=None)
    c.add_argument("-n", "--degree", type=int, default=None, help="index of the element (alternative to the positional)")

    v = sub.add_parser("verify", parents=[common], help="run identity checks")
    v.add_argument("--suite", default="all", help="comma-separated families, globs or aliases")
    v.add_argument("--max-degree", type=int, default=10, help="largest word length a case may involve")
    v.add_argument("-n", "--degree", type=int, default=None, help="alias for --max-degree")
    v.add_argument("--parallel", action="store_true", help="evaluate cases in worker processes")
    v.add_argument("--list", action="store_true", help="list the selected cases without running them")

    b = sub.add_parser("bench", parents=[common], help="time the Catalan and shuffle kernels, CSV output")
    b.add_argument("--max", type=int, default=6, dest="bench_max", help="largest n to time")
    b.add_argument("-n", "--degree", type=int, default=None, help="alias for --max")
    return p


def _config(args: argparse.Namespace, stream) -> RunConfig:
    fmt = args.format or ("pretty" if getattr(stream, "isatty", lambda: False)() else "json")
    cfg = RunConfig(command=args.command, fmt=fmt, braiding=args.braiding, cap=args.cap, out=args.out)
    if args.cap is not None and args.cap < 0:
        raise UsageError("--cap must be nonnegative")
    if args.command == "compute":
        if args.index is not None and args.degree is not None and args.index != args.degree:
            raise UsageError("give the index either positionally or with -n, not both")
        n = args.index if args.index is not None else args.degree
        if n is None:
            raise UsageError("compute needs an index")
        if n < MIN_INDEX.get(args.target, 0):
            raise UsageError(f"{args.target} needs an index >= {MIN_INDEX.get(args.target, 0)}")
        if args.braiding != "super":
            raise UsageError("Catalan elements and root vectors are defined for the super braiding only")
        cfg.target, cfg.degree = args.target, n
    elif args.command == "verify":
        cfg.suite = args.suite
        cfg.max_degree = args.degree if args.degree is not None else args.max_degree
        cfg.parallel = args.parallel
        cfg.extra["list"] = args.list
        if cfg.max_degree < 0:
            raise UsageError("--max-degree must be nonnegative")
    else:
        cfg.bench_max = args.degree if args.degree is not None else args.bench_max
        if cfg.bench_max < 0:
            raise UsageError("--max must be nonnegative")
    return cfg


# -- commands ---------------------------------------------------------------------

def cmd_compute(cfg: RunConfig, out) -> int:
    e = TARGETS[cfg.target](cfg.degree)
    if cfg.fmt == "json":
        out.write(json.dumps(e.to_json()) + "\n")
    else:
        out.write(format_element(e) + "\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    if cfg.extra.get("list"):
        for case in verify.select_cases(cfg.suite, cfg.max_degree):
            out.write(f"{case.id}\t{case.degree}\t{case.label}\n")
        return EXIT_OK
    start = time.perf_counter()
    reports = verify.run_suite(cfg.suite, cfg.max_degree, cfg.parallel)
    elapsed = time.perf_counter() - start
    if cfg.fmt == "json":
        verify.write_jsonl(reports, out, elapsed)
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.case.id}  [{r.elapsed * 1000:.1f} ms]"
            if r.variants:
                line += "  variants: " + ", ".join(f"{k}={'ok' if v is not None and not v else 'no'}" for k, v in r.variants.items())
            if r.error:
                line += f"  ({r.error})"
            out.write(line + "\n")
        s = verify.summary(reports, elapsed)
        out.write(f"{s['passed']}/{s['total']} passed, {s['failed']} failed in {s['elapsed_ms'] / 1000:.2f} s\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _clear_caches() -> None:
    SHUFFLE_CACHE.clear()
    cat.CACHE.clear()


def _timed(fn):
    t = time.perf_counter()
    val = fn()
    return val, (time.perf_counter() - t) * 1000


def bench_rows(n_max: int) -> List[dict]:
    """Timing rows for ``n = 0..n_max``; each n contributes five rows."""
    rows = []
    for n in range(n_max + 1):
        with caching(False):
            e, ms = _timed(lambda: cat.catalan_element(n, cache=False))
        rows.append({"task": "catalan", "n": n, "terms": len(e), "millis": ms, "cache": "off"})
        _clear_caches()
        e, ms = _timed(lambda: cat.catalan_element(n))
        rows.append({"task": "catalan", "n": n, "terms": len(e), "millis": ms, "cache": "on"})
        e, ms = _timed(lambda: cat.catalan_element(n))
        rows.append({"task": "catalan_warm", "n": n, "terms": len(e), "millis": ms, "cache": "on"})

        a, b = cat.catalan_element(n // 2), cat.catalan_element(n - n // 2)
        with caching(False):
            e, ms = _timed(lambda: shuffle_elems(a, b, SUPER))
        rows.append({"task": f"shuffle C{n // 2}*C{n - n // 2}", "n": n, "terms": len(e), "millis": ms, "cache": "off"})
        _clear_caches()
        e, ms = _timed(lambda: shuffle_elems(a, b, SUPER))
        rows.append({"task": f"shuffle C{n // 2}*C{n - n // 2}", "n": n, "terms": len(e), "millis": ms, "cache": "on"})
    return rows


def cmd_bench(cfg: RunConfig, out) -> int:
    rows = bench_rows(cfg.bench_max)
    w = csv.DictWriter(out, fieldnames=["task", "n", "terms", "millis", "cache"], lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "millis": f"{r['millis']:.3f}"})
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "bench": cmd_bench}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors as exit 2
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    target_stream = sys.stdout
    try:
        cfg = _config(args, target_stream if args.out is None else io.StringIO())
    except UsageError as err:
        print(f"qcatalan: error: {err}", file=sys.stderr)
        return EXIT_USAGE

    old_cap = set_word_cap(cfg.cap) if cfg.cap is not None else None
    buf = io.StringIO()
    try:
        status = COMMANDS[cfg.command](cfg, buf)
    except verify.SelectorError as err:
        print(f"qcatalan: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except WordCapError as err:
        print(f"qcatalan: error: {err} (raise it with --cap or QCATALAN_CAP)", file=sys.stderr)
        return EXIT_CAP
    finally:
        if old_cap is not None:
            set_word_cap(old_cap)

    text = buf.getvalue()
    if cfg.out is None:
        target_stream.write(text)
        target_stream.flush()
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
