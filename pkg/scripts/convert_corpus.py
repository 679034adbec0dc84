"""Convert every assertion under a directory and report conversion rates.

Example:
    python scripts/convert_corpus.py path/to/project/src/test --show-failures
"""

import argparse
import collections
import sys
import time
from pathlib import Path

from assertconvert.cli import RunConfig, discover
from assertconvert.composer import CONVERTED
from assertconvert.pipeline import convert_source


def main():
    ap = argparse.ArgumentParser(description="assertion conversion statistics for a source tree")
    ap.add_argument("root", nargs="+")
    ap.add_argument("--show-failures", action="store_true")
    args = ap.parse_args()

    paths, _ = discover(RunConfig(inputs=args.root), sys.stderr)
    by_condition = collections.Counter()
    converted = collections.Counter()
    failures = []
    t0 = time.perf_counter()
    for path in paths:
        source = path.read_text(encoding="utf-8", errors="replace")
        for r in convert_source(source, filename=path.name):
            key = r.condition.value if r.condition else "?"
            by_condition[key] += 1
            if r.status == CONVERTED:
                converted[key] += 1
            else:
                failures.append((path, r.line, r.diagnostic))
    elapsed = time.perf_counter() - t0

    total = sum(by_condition.values())
    print(f"{len(paths)} files, {total} assertions, {elapsed:.2f}s")
    for key in sorted(by_condition):
        print(f"  assert{key:<12} {converted[key]:>6}/{by_condition[key]:<6}")
    if total:
        print(f"converted: {sum(converted.values()) / total:.1%}")
    if args.show_failures:
        for path, line, diag in failures:
            print(f"{path}:{line}\t{diag}")


if __name__ == "__main__":
    main()
