#!/usr/bin/env python3
"""Run the full verification suite from the command line.

Thin wrapper over ``hopfgal verify-all``; any flags are passed through, e.g.

    python scripts/verify_all.py --p 3 --n 2 --format json
"""

import sys

from hopfgal.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-all", *sys.argv[1:]]))
