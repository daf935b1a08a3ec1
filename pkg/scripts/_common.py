import sys
from pathlib import Path

from zenolab.experiments import RECIPES

OUT = Path(__file__).resolve().parent.parent / "results"


def run(name: str) -> int:
    OUT.mkdir(exist_ok=True)
    result = RECIPES[name]()
    path = OUT / f"{name}.csv"
    path.write_text(result.csv())
    for check in result.checks:
        print(check.line())
    for line in result.comments:
        print(line)
    print(f"data: {path}")
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(run(sys.argv[1]))
