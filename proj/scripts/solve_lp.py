#!/usr/bin/env python3
"""Solve LP files with HiGHS and print "<file> <objective>" per file.

Exit code 3 when highspy is not installed.
"""

import sys

try:
    import highspy
except ImportError:
    print("highspy not installed", file=sys.stderr)
    sys.exit(3)


def solve(path):
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    if h.readModel(path) != highspy.HighsStatus.kOk:
        raise SystemExit(f"{path}: HiGHS could not read the model")
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        raise SystemExit(f"{path}: not solved to optimality ({h.modelStatusToString(h.getModelStatus())})")
    return h.getInfo().objective_function_value


def main():
    for path in sys.argv[1:]:
        print(f"{path} {solve(path):.12g}")


if __name__ == "__main__":
    main()
