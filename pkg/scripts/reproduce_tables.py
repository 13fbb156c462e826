#!/usr/bin/env python3
"""Print the reference eigenvalue tables next to freshly computed spectra.

Equivalent to `specbound tables`; exits 2 on any entry off by more than 1e-3.
"""

import sys

from specbound.cli import main

if __name__ == "__main__":
    sys.exit(main(["tables"]))
