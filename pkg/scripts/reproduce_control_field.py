"""Run the pinned control_field recipe and write results/control_field.csv."""

import sys

from _common import run

if __name__ == "__main__":
    sys.exit(run("control_field"))
