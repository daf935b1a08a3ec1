"""Run the pinned fig1 recipe and write results/fig1.csv."""

import sys

from _common import run

if __name__ == "__main__":
    sys.exit(run("fig1"))
