"""Text formats for boards, word lists, graphs, and reports.

Board files: first line is n, then n lines of n whitespace-separated
labels. Word lists: one word per line; math mode writes hyphen-separated
integers (``9-1-2``), letter mode plain lowercase words. Graph files: first
line is the vertex count followed by the vertex labels, then one edge per
line as ``a b``. Reports are line-oriented ``key = value`` pairs under a
versioned header. Every format round-trips exactly.
"""

from __future__ import annotations

from typing import IO, Iterable, Sequence

from .board import Board
from .errors import ParseError
from .graphs import AdjacencyGraph, graph_from_edges
from .puzzles import LETTER_MODE, MATH_MODE, Puzzle

REPORT_HEADER = "# bogglelogic-report 1"


def _label_token(x) -> str:
    return str(x)


def _parse_label(token: str, line: int):
    if token.isdigit():
        return int(token)
    if len(token) == 1 and token.isalpha() and token.islower():
        return token
    raise ParseError(f"bad label {token!r}", line)


def format_board(board: Board) -> str:
    lines = [str(board.n)]
    for row in board.rows():
        lines.append(" ".join(_label_token(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_board(text: str) -> Board:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("missing board size", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"bad board size {lines[0].strip()!r}", 1) from None
    grid = []
    row_lines = [ln for ln in lines[1:] if ln.strip()]
    if len(row_lines) != n:
        raise ParseError(f"expected {n} rows, found {len(row_lines)}", len(lines))
    for i, ln in enumerate(row_lines, start=2):
        tokens = ln.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} labels, found {len(tokens)}", i)
        for t in tokens:
            if t == "?":
                grid.append("?")
            elif t.isdigit():
                grid.append(int(t))
            elif len(t) == 1 and t.isalpha() and t.islower():
                grid.append(t)
            else:
                raise ParseError(f"bad label {t!r}", i)
    return Board(n, tuple(grid))


def format_word(word: tuple, mode: str) -> str:
    if mode == MATH_MODE:
        return "-".join(str(x) for x in word)
    return "".join(word)


def parse_word(token: str, mode: str, line: int | None = None) -> tuple:
    token = token.strip()
    if mode == MATH_MODE:
        parts = token.split("-")
        if len(parts) < 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"bad math word {token!r}", line)
        return tuple(int(p) for p in parts)
    if len(token) < 2 or not (token.isalpha() and token.islower() and token.isascii()):
        raise ParseError(f"bad letter word {token!r}", line)
    return tuple(token)


def sniff_mode(text: str) -> str:
    for ln in text.splitlines():
        ln = ln.strip()
        if ln and not ln.startswith("#"):
            return MATH_MODE if "-" in ln or ln.isdigit() else LETTER_MODE
    return LETTER_MODE


def format_word_list(words: Iterable[tuple], mode: str) -> str:
    return "\n".join(format_word(w, mode) for w in words) + "\n"


def parse_word_list(text: str, mode: str | None = None) -> Puzzle:
    if mode is None:
        mode = sniff_mode(text)
    words = []
    for i, ln in enumerate(text.splitlines(), start=1):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        words.append(parse_word(ln, mode, i))
    return Puzzle(tuple(words), mode)


def format_graph(g: AdjacencyGraph) -> str:
    head = " ".join([str(g.vertex_count)] + [_label_token(v) for v in g.vertices])
    lines = [head]
    for a, b in g.edges:
        lines.append(f"{_label_token(a)} {_label_token(b)}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> AdjacencyGraph:
    lines = [ln for ln in text.splitlines()]
    if not lines or not lines[0].strip():
        raise ParseError("missing vertex header", 1)
    head = lines[0].split()
    try:
        count = int(head[0])
    except ValueError:
        raise ParseError(f"bad vertex count {head[0]!r}", 1) from None
    verts = [_parse_label(t, 1) for t in head[1:]]
    if len(verts) != count:
        raise ParseError(f"expected {count} vertex labels, found {len(verts)}", 1)
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'a b', got {ln!r}", i)
        a, b = (_parse_label(t, i) for t in parts)
        if a not in verts or b not in verts:
            raise ParseError(f"edge {ln!r} uses an unknown vertex", i)
        edges.append((a, b))
    return graph_from_edges(edges, verts)


def format_report(pairs: Sequence[tuple[str, object]]) -> str:
    lines = [REPORT_HEADER]
    for key, value in pairs:
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> list[tuple[str, str]]:
    lines = text.splitlines()
    if not lines or lines[0] != REPORT_HEADER:
        raise ParseError("missing or unknown report header", 1)
    out = []
    for i, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        if "=" not in ln:
            raise ParseError(f"expected 'key = value', got {ln!r}", i)
        key, value = ln.split("=", 1)
        out.append((key.strip(), value.strip()))
    return out


def write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def read_text(path) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()
