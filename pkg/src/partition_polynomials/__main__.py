"""Entry point for ``python -m partition_polynomials``."""

import multiprocessing
import sys

from .cli import main

if __name__ == "__main__":
    # Frozen Windows builds re-run this module in every sweep worker.
    multiprocessing.freeze_support()
    sys.exit(main())
