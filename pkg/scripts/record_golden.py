"""Regenerate the seeded instance-generator golden file used by the tests.

Output: one instance per line, ``<kind> <literal>`` with kind in word/infinite/scheme.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from evaluation.oracle import golden_lines

DEFAULT_TARGET = "tests/data/generator_seed1.txt"


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--target", default=DEFAULT_TARGET)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--count", type=int, default=30)
    args = parser.parse_args()

    lines = golden_lines(seed=args.seed, count=args.count)
    dst = Path(args.target)
    dst.parent.mkdir(parents=True, exist_ok=True)
    dst.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"[INFO] Wrote {len(lines)} instances to {dst}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
