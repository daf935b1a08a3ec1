"""Both randomized-sequence panels: error slopes in J (fixed dt) and in dt (fixed J)."""

import sys

from _common import run

if __name__ == "__main__":
    sys.exit(max(run("randomized_leftpanel"), run("randomized_rightpanel")))
