"""Text formats for sequences, instances, and solutions.

Sequence files: line 1 is "LEN OFFSET", then LEN whitespace-separated
decimal integers (line breaks between values are allowed). Instance
files: line 1 is "n W", then n lines of "profit weight". Parsers report
the offending line number on malformed input.
"""
from __future__ import annotations

from .knapsack import KnapsackInstance
from .seq import IntSeq


class ParseError(ValueError):
    """Malformed input text; `line` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _int_token(tok, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what}: not an integer: {tok!r}", lineno) from None


def parse_sequence(text):
    lines = text.splitlines()
    header = None
    header_no = 0
    for no, raw in enumerate(lines, start=1):
        if raw.strip():
            header, header_no = raw.split(), no
            break
    if header is None:
        raise ParseError("empty sequence file", 1)
    if len(header) != 2:
        raise ParseError('sequence header must be "LEN OFFSET"', header_no)
    length = _int_token(header[0], header_no, "LEN")
    offset = _int_token(header[1], header_no, "OFFSET")
    if length < 1:
        raise ParseError("LEN must be >= 1", header_no)
    values = []
    for no, raw in enumerate(lines[header_no:], start=header_no + 1):
        for tok in raw.split():
            if len(values) == length:
                raise ParseError(f"more than LEN={length} values", no)
            values.append(_int_token(tok, no, "value"))
    if len(values) != length:
        raise ParseError(
            f"expected {length} values, found {len(values)}", len(lines) or 1
        )
    try:
        return IntSeq(values, offset=offset)
    except ValueError as e:
        raise ParseError(str(e)) from None


def format_sequence(seq):
    head = f"{len(seq)} {seq.offset}"
    body = " ".join(str(int(v)) for v in seq.values)
    return f"{head}\n{body}\n"


def parse_instance(text):
    lines = text.splitlines()
    rows = [(no, raw.split()) for no, raw in enumerate(lines, start=1) if raw.strip()]
    if not rows:
        raise ParseError("empty instance file", 1)
    head_no, head = rows[0]
    if len(head) != 2:
        raise ParseError('instance header must be "n W"', head_no)
    n = _int_token(head[0], head_no, "n")
    capacity = _int_token(head[1], head_no, "W")
    if n < 1:
        raise ParseError("n must be >= 1", head_no)
    if len(rows) - 1 != n:
        raise ParseError(
            f"expected {n} item lines, found {len(rows) - 1}", head_no
        )
    items = []
    for no, toks in rows[1:]:
        if len(toks) != 2:
            raise ParseError('item line must be "profit weight"', no)
        p = _int_token(toks[0], no, "profit")
        w = _int_token(toks[1], no, "weight")
        if p < 1 or w < 1:
            raise ParseError("profit and weight must be >= 1", no)
        items.append((p, w))
    try:
        return KnapsackInstance(items, capacity)
    except ValueError as e:
        raise ParseError(str(e)) from None


def format_instance(inst):
    out = [f"{inst.n} {inst.capacity}"]
    out.extend(f"{p} {w}" for p, w in inst.items)
    return "\n".join(out) + "\n"


def format_solution(sol, with_items=False):
    out = f"OPT {sol.value}\n"
    if with_items:
        ids = " ".join(str(t + 1) for t in sorted(sol.chosen))
        out += f"ITEMS {ids}\n"
    return out
