"""Command-line interface.

Exit codes: 0 success / unique solution, 2 ambiguous puzzle, 3 no solution
or word not found, 64 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from . import fileio
from .board import Board, find_word_path, standard_board, word_set
from .census import minimal_census
from .errors import BoggleError
from .extremal import guarantee_threshold, max_overlap_exhaustive, overlap_search, STRATEGIES
from .multiset import classify
from .puzzles import (
    AMBIGUOUS,
    LETTER_MODE,
    MATH_MODE,
    NO_SOLUTION,
    UNIQUE,
    Puzzle,
    is_minimal,
    minimize,
    solve,
)
from .reproduce import TARGETS, reproduce
from .stochastic import (
    SamplingConfig,
    exact_two_letter_curve,
    monte_carlo_words_to_unique,
    probability_at,
)

EXIT_OK = 0
EXIT_AMBIGUOUS = 2
EXIT_NO_SOLUTION = 3
EXIT_USAGE = 64

_STATUS_EXIT = {UNIQUE: EXIT_OK, AMBIGUOUS: EXIT_AMBIGUOUS, NO_SOLUTION: EXIT_NO_SOLUTION}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 by default; we want 64
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="bogglelogic", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_puzzle_args(sp):
        sp.add_argument("puzzle", help="word-list file, one word per line")
        sp.add_argument("-n", type=int, default=3, help="board side length")
        sp.add_argument("--mode", choices=(MATH_MODE, LETTER_MODE), default=None,
                        help="word format (default: sniffed from the file)")
        sp.add_argument("--min-len", type=int, default=None,
                        help="minimum word length (default 2, or 3 in letter mode)")
        sp.add_argument("--orbit-cap", type=int, default=64)
        sp.add_argument("--format", choices=("text", "structured"), default="text")
        sp.add_argument("--out", default=None, help="also write the report here")

    sp = sub.add_parser("solve", help="find all boards containing a word list")
    add_puzzle_args(sp)
    sp = sub.add_parser("verify", help="check puzzle uniqueness without printing boards")
    add_puzzle_args(sp)
    sp = sub.add_parser("minimize", help="greedily split words until minimal")
    add_puzzle_args(sp)

    sp = sub.add_parser("census", help="all edge-minimal two-letter puzzles (3x3)")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("max-overlap", help="exhaustive shared-word maximization")
    sp.add_argument("-n", type=int, default=3)
    sp.add_argument("-k", type=int, default=3)
    sp.add_argument("--all-maximizers", action="store_true")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("threshold", help="words needed to guarantee a unique board")
    sp.add_argument("-n", type=int, default=3)
    sp.add_argument("-k", type=int, default=3)

    sp = sub.add_parser("overlap-search", help="heuristic overlap search")
    sp.add_argument("-n", type=int, default=4)
    sp.add_argument("-k", type=int, default=3)
    sp.add_argument("--strategy", choices=STRATEGIES, default="transpositions")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--restarts", type=int, default=8)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("estimate", help="probabilistic words-to-unique estimates")
    sp.add_argument("quantity", choices=("mean", "median", "curve"))
    sp.add_argument("-n", type=int, default=3)
    sp.add_argument("-k", type=int, default=2)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--exact", action="store_true",
                    help="exact two-letter enumeration instead of Monte Carlo")
    sp.add_argument("--at", type=int, default=None,
                    help="estimate P(unique) at this many words instead")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("classify", help="equivalence classes of a board type")
    sp.add_argument("--lambda", dest="lam", required=True,
                    help="comma-separated partition of n^2, e.g. 2,1,1,1,1,1,1,1")
    sp.add_argument("-n", type=int, default=3)
    sp.add_argument("--kmax", type=int, default=9)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("words", help="list a board's words or check one word")
    sp.add_argument("board", help="board file")
    sp.add_argument("--check", default=None, help="word to look up")
    sp.add_argument("--kmin", type=int, default=None)
    sp.add_argument("--kmax", type=int, default=None)
    sp.add_argument("--mode", choices=(MATH_MODE, LETTER_MODE), default=None)

    sp = sub.add_parser("reproduce", help="recompute a published result")
    sp.add_argument("reproduce_target", choices=sorted(TARGETS))
    sp.add_argument("--out", default=None)
    return p


def _emit(lines: list[str], out_path: str | None, structured_pairs=None, fmt: str = "text"):
    if fmt == "structured" and structured_pairs is not None:
        text = fileio.format_report(structured_pairs)
    else:
        text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if out_path:
        fileio.write_text(out_path, text)


def _load_puzzle(args) -> Puzzle:
    text = fileio.read_text(args.puzzle)
    puzzle = fileio.parse_word_list(text, args.mode)
    min_len = args.min_len
    if min_len is None:
        min_len = 3 if puzzle.mode == LETTER_MODE else 2
    for w in puzzle.words:
        if len(w) < min_len:
            raise BoggleError(
                f"word {fileio.format_word(w, puzzle.mode)!r} shorter than {min_len}"
            )
    return puzzle


def _board_lines(board: Board) -> list[str]:
    return str(board).splitlines()


def _cmd_solve(args) -> int:
    puzzle = _load_puzzle(args)
    report = solve(puzzle, args.n, orbit_cap=args.orbit_cap)
    lines = [f"status: {report.status}",
             f"solution orbits: {report.orbit_count}",
             f"embeddings: {report.monomorphism_count}"]
    pairs = [("status", report.status),
             ("orbit_count", report.orbit_count),
             ("monomorphism_count", report.monomorphism_count)]
    for i, b in enumerate(report.solutions):
        lines.append(f"board {i + 1}:")
        lines.extend("  " + row for row in _board_lines(b))
        pairs.append((f"board.{i + 1}", " ".join(str(x) for x in b.grid)))
    if report.truncated:
        lines.append(f"(listing capped at {args.orbit_cap} orbits)")
        pairs.append(("truncated", True))
    _emit(lines, args.out, pairs, args.format)
    return _STATUS_EXIT[report.status]


def _cmd_verify(args) -> int:
    puzzle = _load_puzzle(args)
    report = solve(puzzle, args.n, orbit_cap=1)
    lines = [f"status: {report.status}", f"solution orbits: {report.orbit_count}"]
    pairs = [("status", report.status), ("orbit_count", report.orbit_count)]
    _emit(lines, args.out, pairs, args.format)
    return _STATUS_EXIT[report.status]


def _cmd_minimize(args) -> int:
    puzzle = _load_puzzle(args)
    reduced = minimize(puzzle, args.n)
    words = [fileio.format_word(w, reduced.mode) for w in reduced.words]
    lines = ["minimal puzzle:"] + ["  " + w for w in words]
    lines.append(f"minimal: {is_minimal(reduced, args.n)}")
    pairs = [("words", " ".join(words))]
    _emit(lines, args.out, pairs, args.format)
    return EXIT_OK


def _cmd_census(args) -> int:
    entries = minimal_census()
    lines = []
    for e in entries:
        words = " ".join("-".join(str(x) for x in w) for w in e.representative_words)
        lines.append(f"{e.edge_mask:05x} {e.edge_count} {e.certificate.hex()} {words}")
    counts = {}
    for e in entries:
        counts[e.edge_count] = counts.get(e.edge_count, 0) + 1
    lines.append(f"placement classes: {len(entries)}")
    lines.append(f"isomorphism classes: {len({e.certificate for e in entries})}")
    lines.append("by edge count: " + " ".join(f"{k}:{v}" for k, v in sorted(counts.items())))
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_max_overlap(args) -> int:
    scan = max_overlap_exhaustive(standard_board(args.n), args.k)
    lines = [f"max overlap: {scan.max_common}",
             f"threshold: {scan.threshold}",
             f"maximizer classes: {len(scan.maximizers)}",
             f"classes visited: {scan.classes_visited}"]
    shown = scan.maximizers if args.all_maximizers else scan.maximizers[:1]
    for i, m in enumerate(shown):
        lines.append(f"maximizer {i + 1}:")
        lines.extend("  " + row for row in _board_lines(m.board))
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_threshold(args) -> int:
    t = guarantee_threshold(args.n, args.k)
    kind = "exact" if t.exact else "heuristic lower bound"
    _emit([f"threshold ({kind}): {t.value}"], None)
    return EXIT_OK


def _cmd_overlap_search(args) -> int:
    results = overlap_search(standard_board(args.n), args.k, args.strategy,
                             seed=args.seed, restarts=args.restarts)
    lines = [f"strategy: {args.strategy}", f"candidates: {len(results)}"]
    for r in results[:5]:
        lines.append(f"common {r.common_count}: " + " ".join(str(x) for x in r.board.grid))
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_estimate(args) -> int:
    cfg = SamplingConfig(n=args.n, k=args.k, seed=args.seed, trials=args.trials)
    if args.at is not None:
        est = probability_at(cfg, args.at)
        lines = [f"P(unique | {args.at} words) = {est.probability:.6f} "
                 f"[{est.low:.6f}, {est.high:.6f}] ({'exact' if est.exact else f'{est.trials} trials'})"]
        _emit(lines, args.out)
        return EXIT_OK
    if args.exact:
        if args.k != 2:
            raise BoggleError("--exact is available for k=2 only")
        rep = exact_two_letter_curve(args.n)
    else:
        rep = monte_carlo_words_to_unique(cfg)
    lines = [f"model: {'exact enumeration' if rep.exact else f'{args.trials} trials, seed {args.seed}'}"]
    if args.quantity == "mean":
        lines.append(f"mean words to unique: {rep.mean_estimate:.4f}"
                     + ("" if rep.exact else f" +- {rep.ci_halfwidth:.4f} (95% CI)"))
    elif args.quantity == "median":
        lines.append(f"median words to unique: {rep.median_m}")
    else:
        lines.append("m P(unique|m)")
        for m in sorted(rep.probability_curve):
            lines.append(f"{m} {rep.probability_curve[m]:.6f}")
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_classify(args) -> int:
    lam = tuple(int(x) for x in args.lam.split(","))
    rep = classify(lam, args.n, k_max=args.kmax)
    lines = [
        f"type: {rep.lam}",
        f"boards: {rep.board_count}",
        f"equivalence classes: {rep.class_count}",
        f"symmetry orbits: {rep.orbit_count}",
        f"solvable boards: {rep.solvable_count}",
        f"all solvable: {rep.all_solvable}",
        f"max word length used: {rep.max_k_used}",
    ]
    if rep.class_count <= rep.class_cap:
        for c in rep.classes:
            lines.append(
                f"class rep {' '.join(str(x) for x in c.representative)}"
                f" size {c.size} orbits {c.orbit_count} solvable {c.solvable}"
            )
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_words(args) -> int:
    board = fileio.parse_board(fileio.read_text(args.board))
    letters = any(isinstance(x, str) for x in board.grid)
    mode = args.mode or (LETTER_MODE if letters else MATH_MODE)
    if args.check is not None:
        word = fileio.parse_word(args.check, mode)
        min_len = 3 if mode == LETTER_MODE else 2
        if len(word) < min_len:
            raise BoggleError(f"words must have at least {min_len} letters here")
        path = find_word_path(board, word)
        if path is None:
            _emit([f"not found: {args.check}"], None)
            return EXIT_NO_SOLUTION
        n = board.n
        trace = " -> ".join(f"({c // n},{c % n})" for c in path)
        _emit([f"found: {args.check}", f"path: {trace}"], None)
        return EXIT_OK
    k_min = args.kmin or (3 if mode == LETTER_MODE else 2)
    k_max = args.kmax or min(board.n * board.n, 4)
    words = sorted(word_set(board, k_min, k_max), key=lambda w: (len(w), tuple(str(x) for x in w)))
    _emit([fileio.format_word(w, mode) for w in words], None)
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    rows, ok = reproduce(args.reproduce_target)
    text = fileio.format_report(rows)
    sys.stdout.write(text)
    if args.out:
        fileio.write_text(args.out, text)
    return EXIT_OK if ok else EXIT_AMBIGUOUS


_COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "minimize": _cmd_minimize,
    "census": _cmd_census,
    "max-overlap": _cmd_max_overlap,
    "threshold": _cmd_threshold,
    "overlap-search": _cmd_overlap_search,
    "estimate": _cmd_estimate,
    "classify": _cmd_classify,
    "words": _cmd_words,
    "reproduce": _cmd_reproduce,
}


def run(argv: list[str]) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (BoggleError, OSError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
