"""Freeze the coverage-corpus sentences to tests/golden/coverage.json.

Run once after reviewing the printed sentences; the acceptance suite then
checks that every later run reproduces the file byte for byte.
"""

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from corpus import corpus, corpus_source  # noqa: E402

from assertconvert.pipeline import convert_source  # noqa: E402

GOLDEN = ROOT / "tests" / "golden" / "coverage.json"


def snapshot():
    results = convert_source(corpus_source(), filename="AccountServiceTest.java")
    return {cid: r.sentence for (cid, _), r in zip(corpus(), results, strict=True)}


def render(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args()
    text = render(snapshot())
    if args.check:
        same = GOLDEN.exists() and GOLDEN.read_text(encoding="utf-8") == text
        print("golden snapshot matches" if same else "golden snapshot differs")
        return 0 if same else 1
    GOLDEN.write_text(text, encoding="utf-8")
    for line in text.splitlines()[1:-1]:
        print(line.strip())
    return 0


if __name__ == "__main__":
    sys.exit(main())
