from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Diagnostic", "DiagnosticError"]


@dataclass(frozen=True)
class Diagnostic:
    """A positioned message; ``line`` and ``column`` are 1-based."""

    line: int
    column: int
    message: str
    severity: str = "error"

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 1:
            raise ValueError("diagnostic positions are 1-based")
        if self.severity not in ("error", "warning"):
            raise ValueError(f"bad severity {self.severity!r}")

    def render(self, filename: str = "<input>") -> str:
        return f"{filename}:{self.line}:{self.column}: {self.message}"


class DiagnosticError(Exception):
    """Raised by the lexer, parser and evaluator.

    ``phase`` is ``"lex"``, ``"parse"`` or ``"eval"``.
    """

    def __init__(self, diagnostic: Diagnostic, phase: str) -> None:
        super().__init__(diagnostic.message)
        self.diagnostic = diagnostic
        self.phase = phase
