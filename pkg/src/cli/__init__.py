"""
Command-line surface

    elliptio eval theta --x 2 --p 0
    elliptio check-term --builtin beta
    elliptio verify trafo-bc --n 1 --m 1 --json
    elliptio integrate beta --p 0.1 --q 0.1 --t 0.5,0.6,0.55+0.1i,0.4-0.2i,0.7
"""

import sys
from typing import List, Optional

from cli.commands import run_command
from cli.parser import build_parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse, run and print one command; returns the exit code"""
    args = build_parser().parse_args(argv)
    report = run_command(args)
    timing = not args.no_timing
    if args.json:
        sys.stdout.write(report.to_json(timing=timing).decode() + "\n")
    else:
        sys.stdout.write(report.to_text(timing=timing) + "\n")
    return report.exit_code


__all__ = ["main"]
