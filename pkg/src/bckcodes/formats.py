"""Line-oriented text formats for algebras, posets and codes.

Algebra::

    algebra 3
    0 0 0
    1 0 1
    2 2 0
    map 0 1 2        # optional BCK-function
    A 2              # optional element sets, indices or θ/w2-style labels
    B 1

Poset (relation matrix or covering pairs)::

    poset 3
    labels a b c     # optional
    matrix
    111
    010
    001

    poset 3
    covers
    0 1
    0 2

Code: one 0/1 string per line. In every format blank lines and text after
``#`` are ignored.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .algebra import CayleyTable, MalformedTableError
from .codegen import BCKFunction
from .codes import BlockCode, Codeword
from .poset import NotAPartialOrder, Poset, transitive_closure
from .reconstruction import display_label, parse_label


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


def _header(lines, keyword: str) -> int:
    if not lines:
        raise FormatError(f"empty input, expected '{keyword} n'")
    lineno, tokens = lines[0]
    if tokens[0] != keyword or len(tokens) != 2 or not tokens[1].isdigit():
        raise FormatError(f"expected '{keyword} n', got {' '.join(tokens)!r}", lineno)
    n = int(tokens[1])
    if n < 1:
        raise FormatError(f"{keyword} size must be positive", lineno)
    return n


@dataclass
class AlgebraFile:
    table: CayleyTable
    function: BCKFunction | None = None
    A: tuple[int, ...] | None = None
    B: tuple[int, ...] | None = None


def parse_algebra(text: str) -> AlgebraFile:
    lines = _content_lines(text)
    n = _header(lines, "algebra")
    if len(lines) < n + 1:
        raise FormatError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for lineno, tokens in lines[1 : n + 1]:
        if len(tokens) != n:
            raise FormatError(f"expected {n} entries, got {len(tokens)}", lineno)
        try:
            row = [int(tok) for tok in tokens]
        except ValueError:
            raise FormatError(f"non-integer entry in {' '.join(tokens)!r}", lineno) from None
        bad = [v for v in row if not 0 <= v < n]
        if bad:
            raise FormatError(f"entry {bad[0]} outside 0..{n - 1}", lineno)
        rows.append(row)
    try:
        table = CayleyTable(rows)
    except MalformedTableError as exc:
        raise FormatError(str(exc)) from None

    result = AlgebraFile(table)
    for lineno, tokens in lines[n + 1 :]:
        key, args = tokens[0], tokens[1:]
        if key == "map":
            try:
                values = [int(v) for v in args]
            except ValueError:
                raise FormatError("map values must be integers", lineno) from None
            if any(not 0 <= v < n for v in values):
                raise FormatError(f"map values must lie in 0..{n - 1}", lineno)
            result.function = BCKFunction(values)
        elif key in ("A", "B"):
            try:
                elems = tuple(parse_label(a) for a in args)
            except ValueError as exc:
                raise FormatError(str(exc), lineno) from None
            if any(not 0 <= e < n for e in elems):
                raise FormatError(f"{key} elements must lie in 0..{n - 1}", lineno)
            setattr(result, key, elems)
        else:
            raise FormatError(f"unexpected line {' '.join(tokens)!r}", lineno)
    return result


def dump_algebra(
    t: CayleyTable,
    function: BCKFunction | None = None,
    A: Iterable[int] | None = None,
    B: Iterable[int] | None = None,
    comments: Iterable[str] = (),
) -> str:
    out = [f"# {c}" if c else "#" for c in comments]
    out.append(f"algebra {t.n}")
    out.extend(" ".join(map(str, row)) for row in t.table.tolist())
    if function is not None:
        out.append("map " + " ".join(map(str, function.values)))
    for key, elems in (("A", A), ("B", B)):
        if elems is not None:
            elems = list(elems)
            labels = " ".join(display_label(e) for e in elems)
            out.append(f"{key} " + " ".join(map(str, elems)) + f"  # {labels}")
    return "\n".join(out) + "\n"


def _bit_row(tokens: list[str], n: int, lineno: int) -> list[bool]:
    bits = "".join(tokens)
    if len(bits) != n or set(bits) - {"0", "1"}:
        raise FormatError(f"expected {n} bits, got {' '.join(tokens)!r}", lineno)
    return [ch == "1" for ch in bits]


def parse_poset(text: str) -> Poset:
    lines = _content_lines(text)
    n = _header(lines, "poset")
    rest = lines[1:]
    labels = None
    if rest and rest[0][1][0] == "labels":
        lineno, tokens = rest[0]
        if len(tokens) != n + 1:
            raise FormatError(f"expected {n} labels", lineno)
        labels = tokens[1:]
        rest = rest[1:]
    if not rest or rest[0][1] not in (["matrix"], ["covers"]):
        raise FormatError("expected 'matrix' or 'covers'", rest[0][0] if rest else None)
    mode = rest[0][1][0]
    body = rest[1:]
    if mode == "matrix":
        if len(body) != n:
            raise FormatError(f"expected {n} matrix rows, found {len(body)}")
        rel = [_bit_row(tokens, n, lineno) for lineno, tokens in body]
    else:
        rel = [[False] * n for _ in range(n)]
        for lineno, tokens in body:
            if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
                raise FormatError(f"expected a cover pair 'a b', got {' '.join(tokens)!r}", lineno)
            a, b = int(tokens[0]), int(tokens[1])
            if not (a < n and b < n):
                raise FormatError(f"cover pair ({a}, {b}) outside 0..{n - 1}", lineno)
            rel[a][b] = True
        rel = transitive_closure(rel)
    try:
        return Poset(rel, labels)
    except NotAPartialOrder as exc:
        raise FormatError(str(exc)) from None


def dump_poset(p: Poset, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"poset {p.n}")
    if p.labels != tuple(str(i) for i in range(p.n)):
        out.append("labels " + " ".join(p.labels))
    out.append("matrix")
    out.extend("".join("1" if b else "0" for b in row) for row in p.leq.tolist())
    return "\n".join(out) + "\n"


def parse_code(text: str) -> BlockCode:
    words = []
    for lineno, tokens in _content_lines(text):
        if len(tokens) != 1:
            raise FormatError("one codeword per line expected", lineno)
        try:
            words.append(Codeword(tokens[0]))
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
        if len(words[-1]) != len(words[0]):
            raise FormatError(f"codeword length {len(words[-1])} differs from {len(words[0])}", lineno)
    return BlockCode(words)


def dump_code(c: BlockCode, comments: Iterable[str] = ()) -> str:
    out = [f"# {x}" for x in comments]
    out.extend(str(w) for w in c)
    return "\n".join(out) + "\n" if out else ""
