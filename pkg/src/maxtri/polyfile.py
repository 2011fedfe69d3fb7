"""Plain-text polygon files: one ``x y`` vertex per line, ``#`` comments.

Formatting is canonical (17 significant digits, LF line ends) so that
parse -> format round-trips byte-identically.
"""

from __future__ import annotations

from typing import List, Tuple


class PolygonParseError(ValueError):
    """Malformed polygon text; carries the offending 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_polygon_text(text: str) -> List[Tuple[float, float]]:
    """Parse vertex lines, skipping blanks and ``#`` comments."""
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PolygonParseError(
                lineno, f"expected two numbers, got {len(parts)} "
                        f"field(s): {raw!r}")
        try:
            x = float(parts[0])
            y = float(parts[1])
        except ValueError:
            raise PolygonParseError(lineno, f"not a number: {raw!r}")
        points.append((x, y))
    return points


def format_polygon(points) -> str:
    """Canonical text form: %.17g coordinates, one vertex per line."""
    lines = []
    for p in points:
        x, y = (p.x, p.y) if hasattr(p, "x") else (p[0], p[1])
        lines.append("%.17g %.17g" % (x, y))
    return "\n".join(lines) + "\n"


def load_polygon_file(path: str) -> List[Tuple[float, float]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polygon_text(fh.read())


def save_polygon_file(path: str, points) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_polygon(points))
