"""Command-line front end: ``neutro eval | repl | classify``.

Exit codes: 0 success, 1 lexical/syntax error (or a bad classify literal),
2 evaluation error or unreadable input file. Diagnostics go to stderr as
``file:line:col: message``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

import click

from .dsl import DiagnosticError, Evaluator, parse_component, parse_source
from .neutroset import NeutroTriple
from .render import render_json, render_table
from .serialization import dumps, triple_to_json
from .taxonomy import classify_triple

EXIT_OK, EXIT_SYNTAX, EXIT_EVAL = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    command: str
    input_path: Optional[Path] = None
    format: str = "table"
    strict_literals: bool = True

    def __post_init__(self) -> None:
        if self.command not in ("eval", "repl", "classify"):
            raise ValueError(f"unknown command {self.command!r}")
        if self.command == "eval" and self.input_path is None:
            raise ValueError("eval requires an input path")
        if self.format not in ("table", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def _report(exc: DiagnosticError, filename: str, err: TextIO, line_offset: int = 0) -> None:
    d = exc.diagnostic
    print(f"{filename}:{d.line + line_offset}:{d.column}: {d.message}", file=err)


def run_eval(config: CliConfig, out: TextIO, err: TextIO) -> int:
    path = config.input_path
    try:
        source = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{path}: cannot read: {exc.strerror if isinstance(exc, OSError) else exc}", file=err)
        return EXIT_EVAL
    try:
        script = parse_source(source)
        results = Evaluator(config.strict_literals).run(script)
    except DiagnosticError as exc:
        _report(exc, str(path), err)
        return EXIT_EVAL if exc.phase == "eval" else EXIT_SYNTAX
    out.write(render_json(results) if config.format == "json" else render_table(results))
    return EXIT_OK


def run_repl(config: CliConfig, inp: TextIO, out: TextIO, err: TextIO) -> int:
    evaluator = Evaluator(config.strict_literals)
    interactive = inp.isatty()
    lineno = 0
    while True:
        if interactive:
            out.write("ns> ")
            out.flush()
        line = inp.readline()
        if not line:
            return EXIT_OK
        lineno += 1
        text = line.strip()
        if text == "exit":
            return EXIT_OK
        if not text or text.startswith("#"):
            continue
        try:
            script = parse_source(text)
            results = [r for r in map(evaluator.execute, script.statements) if r is not None]
        except DiagnosticError as exc:
            _report(exc, "<stdin>", err, line_offset=lineno - 1)
            continue
        if results:
            out.write(render_json(results) if config.format == "json" else render_table(results))
            out.flush()


def run_classify(t: str, i: str, f: str, config: CliConfig, out: TextIO, err: TextIO) -> int:
    try:
        comps = [parse_component(text) for text in (t, i, f)]
        x = NeutroTriple(*comps) if config.strict_literals else NeutroTriple.clamped(*comps)
    except DiagnosticError as exc:
        print(f"classify: {exc.diagnostic.message}", file=err)
        return EXIT_SYNTAX
    except ValueError as exc:
        print(f"classify: {exc}", file=err)
        return EXIT_SYNTAX
    c = classify_triple(x)
    if config.format == "json":
        doc = {"labels": c.sorted_labels, "flags": c.sorted_flags, "triple": triple_to_json(x)}
        out.write(dumps(doc, indent=2) + "\n")
    else:
        out.write(f"{c}\n")
    return EXIT_OK


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True
)
_lenient_option = click.option(
    "--clamp-literals",
    is_flag=True,
    help="Clamp out-of-range literals into [0^-, 1^+] instead of rejecting them.",
)


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Neutrosophic set calculator."""


@main.command("eval")
@click.argument("path", type=click.Path(path_type=Path))
@_format_option
@_lenient_option
def eval_cmd(path: Path, fmt: str, clamp_literals: bool) -> None:
    """Evaluate an .ns script file."""
    config = CliConfig("eval", path, fmt, not clamp_literals)
    sys.exit(run_eval(config, sys.stdout, sys.stderr))


@main.command("repl")
@_format_option
@_lenient_option
def repl_cmd(fmt: str, clamp_literals: bool) -> None:
    """Read statements from stdin, one per line; 'exit' quits."""
    config = CliConfig("repl", None, fmt, not clamp_literals)
    sys.exit(run_repl(config, sys.stdin, sys.stdout, sys.stderr))


@main.command("classify")
@click.argument("t")
@click.argument("i")
@click.argument("f")
@_format_option
@_lenient_option
def classify_cmd(t: str, i: str, f: str, fmt: str, clamp_literals: bool) -> None:
    """Classify one element given its T, I and F component literals."""
    config = CliConfig("classify", None, fmt, not clamp_literals)
    sys.exit(run_classify(t, i, f, config, sys.stdout, sys.stderr))


if __name__ == "__main__":
    main()
