"""CLI entry point: knotreader <theory> --pd 'PD[...]'

Exit codes: 0 on success, 1 on invalid input or options, 2 when an internal
consistency check fails (the report carries the witness).
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from app.corpus.corpus import load_corpus
from app.exceptions import KnotReaderError, TheoryConfigError
from app.report.render import FORMATS, render
from app.service.models import TheoryRequest
from app.service.theories import THEORIES, TheoryService
from app.settings import configure_logging, get_settings
from app.spectral.verify import FLAVORS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotreader",
        description="Characteristic-2 Khovanov, secondary and Bar-Natan invariants of PD diagrams",
    )
    parser.add_argument("theory", choices=sorted(THEORIES), help="Invariant to compute")
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--pd", type=str, default=None, help="PD code or corpus entry name")
    source.add_argument("--file", type=Path, default=None, help="File holding a PD code")
    source.add_argument(
        "--corpus", action="store_true", help="Run on every corpus entry and curated pair"
    )
    parser.add_argument("--pd2", type=str, default=None, help="Second diagram for 'check'")
    parser.add_argument("--format", choices=FORMATS, default="table", help="Output format")
    parser.add_argument("--jmin", type=int, default=None, help="Lowest q-degree for 'bn'")
    parser.add_argument("--jmax", type=int, default=None, help="Highest q-degree for 'bn'")
    parser.add_argument("--flavor", choices=FLAVORS, default="filtered", help="Spectral sequence flavor")
    parser.add_argument("--j", type=int, default=None, help="q-degree for the graded flavor")
    parser.add_argument("--rmax", type=int, default=None, help="Last page for 'ss'")
    parser.add_argument("--s", type=int, default=None, help="s parameter for 'thin'")
    parser.add_argument("--reduced", action="store_true", help="Use the reduced complex")
    parser.add_argument("--basepoint", type=int, default=None, help="Arc carrying the basepoint")
    parser.add_argument("--workers", type=int, default=None, help="Threads for BN columns")
    parser.add_argument("--timing", action="store_true", help="Report wall-clock time")
    parser.add_argument(
        "--verbose", "-v", action="store_true", help="Enable DEBUG-level logging to stderr"
    )
    return parser


def _requests(args: argparse.Namespace) -> List[TheoryRequest]:
    options = dict(
        reduced=args.reduced,
        basepoint=args.basepoint,
        jmin=args.jmin,
        jmax=args.jmax,
        flavor=args.flavor,
        j=args.j,
        rmax=args.rmax,
        s=args.s,
        workers=args.workers,
        timing=args.timing,
    )
    if args.corpus:
        corpus = load_corpus()
        knots_only = args.reduced or args.theory in ("reduced", "thin")
        out = [
            TheoryRequest(pd=e.name, **options)
            for e in corpus.entries
            if e.components == 1 or not knots_only
        ]
        if args.theory == "check":
            out += [TheoryRequest(pd=p.left, pd2=p.right, **options) for p in corpus.pairs]
        return out
    if args.file is not None:
        text = args.file.read_text().strip()
    elif args.pd is not None:
        text = args.pd
    else:
        raise TheoryConfigError("Give a diagram with --pd, --file or --corpus")
    return [TheoryRequest(pd=text, pd2=args.pd2, **options)]


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(logging.DEBUG if args.verbose else get_settings().log_level)

    try:
        service = TheoryService(args.theory)
        status = 0
        for request in _requests(args):
            report = service.run(request)
            sys.stdout.write(render(report, args.format))
            if not report.passed:
                status = 2
        return status
    except KnotReaderError as exc:
        logging.error("%s: %s", type(exc).__name__, exc.detail)
        sys.stderr.write(f"Error: {exc.to_dict()}\n")
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(f"Error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
