"""Tokenizer for ``.ns`` scripts."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from ..hyperreal import NonStdValue, as_decimal
from .diagnostics import Diagnostic, DiagnosticError

__all__ = ["Token", "KEYWORDS", "tokenize"]

KEYWORDS = frozenset(
    {"universe", "set", "relation", "over", "eval", "check", "classify", "in", "complement"}
)

# longest first so "<=" wins over a stray "<"
_PUNCT = ("<=", "(", ")", "[", "]", "{", "}", ",", ":", "|", ".", "=", "&", "\\")

_NUMBER = re.compile(
    r"""
    (?P<std>-?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
    (?:\^(?P<sign>[+-])(?P<coeff>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?)?
    """,
    re.VERBOSE,
)
_MAX_EXPONENT = 30
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, KEYWORD, NUMBER, PUNCT, NEWLINE, EOF
    text: str
    line: int
    column: int
    value: Optional[NonStdValue] = None

    def __str__(self) -> str:
        if self.kind == "NEWLINE":
            return "end of line"
        if self.kind == "EOF":
            return "end of input"
        return repr(self.text)


def _number_value(m: re.Match) -> NonStdValue:
    std = as_decimal(m.group("std"))
    sign = m.group("sign")
    if sign is None:
        return NonStdValue(std, 0)
    coeff = as_decimal(m.group("coeff")) if m.group("coeff") else as_decimal(1)
    return NonStdValue(std, coeff if sign == "+" else -coeff)


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens.

    Newlines are significant (they end statements) except inside brackets,
    where they are skipped. Raises :class:`DiagnosticError` on the first
    character that cannot start a token.
    """
    tokens: list[Token] = []
    depth = 0
    line, col = 1, 1
    pos, end = 0, len(source)
    while pos < end:
        ch = source[pos]
        if ch == "\n":
            if depth == 0 and tokens and tokens[-1].kind != "NEWLINE":
                tokens.append(Token("NEWLINE", "\n", line, col))
            pos += 1
            line, col = line + 1, 1
            continue
        if ch in " \t\r":
            pos += 1
            col += 1
            continue
        if ch == "#":
            while pos < end and source[pos] != "\n":
                pos += 1
            continue
        m = _NUMBER.match(source, pos)
        if m:
            value = _number_value(m)
            if max(abs(value.std.adjusted()), abs(value.coeff.adjusted())) > _MAX_EXPONENT:
                raise DiagnosticError(
                    Diagnostic(line, col, f"number out of range: {m.group(0)}"), phase="lex"
                )
            tokens.append(Token("NUMBER", m.group(0), line, col, value))
        else:
            m = _NAME.match(source, pos)
            if m:
                kind = "KEYWORD" if m.group(0) in KEYWORDS else "NAME"
                tokens.append(Token(kind, m.group(0), line, col))
            else:
                punct = next((p for p in _PUNCT if source.startswith(p, pos)), None)
                if punct is None:
                    raise DiagnosticError(
                        Diagnostic(line, col, f"unexpected character {ch!r}"), phase="lex"
                    )
                if punct in "([{":
                    depth += 1
                elif punct in ")]}":
                    depth = max(0, depth - 1)
                tokens.append(Token("PUNCT", punct, line, col))
                pos += len(punct)
                col += len(punct)
                continue
        pos = m.end()
        col += len(m.group(0))
    if tokens and tokens[-1].kind != "NEWLINE":
        tokens.append(Token("NEWLINE", "", line, col))
    tokens.append(Token("EOF", "", line, col))
    return tokens
