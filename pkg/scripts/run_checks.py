#!/usr/bin/env python3
"""Run the full invariant suite at chosen bounds and exit nonzero on failure.

Usage: python scripts/run_checks.py [--max-n N] [--max-m M] [check ...]
"""

import sys

from cmhilb.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", *sys.argv[1:]]))
