#!/usr/bin/env python3
"""Run the bundled reproduction manifest and leave the artifacts in
./reproduction-out (one JSON per check plus a summary)."""

import sys

from segrecalc.cli import main

if __name__ == "__main__":
    args = sys.argv[1:] or ["--section", "all"]
    sys.exit(main(["reproduce-paper", "--out", "reproduction-out", *args]))
