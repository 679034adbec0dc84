"""``assertconvert`` command line front-end."""

from __future__ import annotations

import argparse
import fnmatch
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator, TextIO

from .composer import CONVERTED
from .phrases.lexicon import VerbLexicon
from .pipeline import convert_source

DEFAULT_GLOBS = ("*Test.java", "*Tests.java")


@dataclass
class RunConfig:
    inputs: list[str]
    format: str = "text"
    globs: tuple[str, ...] = DEFAULT_GLOBS
    include_unconvertible: bool = False
    lexicon_path: str | None = None

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("at least one input path is required")
        if self.format not in ("text", "jsonl"):
            raise ValueError(f"unknown format {self.format!r}")


@dataclass
class OutputRecord:
    file: str
    line: int
    assertion: str
    condition: str
    english: str
    status: str
    rule_trace: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)

    def to_text(self) -> str:
        if self.status == CONVERTED:
            return f"{self.file}:{self.line}\t{self.english}."
        return f"{self.file}:{self.line}\t[unconvertible] {self.assertion}"


def discover(config: RunConfig, err: TextIO) -> tuple[list[Path], bool]:
    """Files to process in deterministic order, plus whether any input was bad."""
    found: set[Path] = set()
    bad = False
    for raw in config.inputs:
        path = Path(raw)
        if path.is_dir():
            for candidate in path.rglob("*"):
                if candidate.is_file() and any(fnmatch.fnmatchcase(candidate.name, g) for g in config.globs):
                    found.add(candidate)
        elif path.is_file():
            found.add(path)
        else:
            print(f"assertconvert: cannot read {raw}: no such file or directory", file=err)
            bad = True
    return sorted(found, key=lambda p: p.as_posix()), bad


def iter_records(path: Path, source: str, lexicon: VerbLexicon | None) -> Iterator[OutputRecord]:
    for result in convert_source(source, filename=path.name, lexicon=lexicon):
        yield OutputRecord(
            file=path.as_posix(),
            line=result.line,
            assertion=result.raw_text,
            condition=result.condition.value if result.condition else "",
            english=result.sentence,
            status=result.status,
            rule_trace=list(result.rule_trace),
        )


def run(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    lexicon = VerbLexicon.load(config.lexicon_path) if config.lexicon_path else None
    paths, bad = discover(config, err)
    for path in paths:
        try:
            source = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            print(f"assertconvert: cannot read {path.as_posix()}: {exc}", file=err)
            bad = True
            continue
        for record in iter_records(path, source, lexicon):
            if record.status != CONVERTED and not config.include_unconvertible:
                continue
            out.write((record.to_json() if config.format == "jsonl" else record.to_text()) + "\n")
        out.flush()
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assertconvert",
        description="Convert JUnit assert statements in Java test files to English.",
    )
    parser.add_argument("paths", nargs="+", metavar="PATH", help="test files or directories to scan")
    parser.add_argument("--format", choices=("text", "jsonl"), default="text")
    parser.add_argument(
        "--glob",
        action="append",
        metavar="PATTERN",
        help="file name pattern for directory inputs (repeatable; default *Test.java and *Tests.java)",
    )
    parser.add_argument(
        "--include-unconvertible",
        action="store_true",
        help="also emit assertions that could not be converted",
    )
    parser.add_argument("--lexicon", metavar="PATH", help="verb word list, one verb[,past] per line")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        inputs=args.paths,
        format=args.format,
        globs=tuple(args.glob) if args.glob else DEFAULT_GLOBS,
        include_unconvertible=args.include_unconvertible,
        lexicon_path=args.lexicon,
    )
    if config.lexicon_path and not Path(config.lexicon_path).is_file():
        print(f"assertconvert: lexicon not found: {config.lexicon_path}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
