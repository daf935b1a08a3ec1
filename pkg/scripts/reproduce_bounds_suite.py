"""Run the pinned bounds_suite recipe and write results/bounds_suite.csv."""

import sys

from _common import run

if __name__ == "__main__":
    sys.exit(run("bounds_suite"))
