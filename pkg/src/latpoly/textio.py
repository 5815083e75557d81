"""Polytope documents: integer matrices with one vertex per column.

A block is an optional name line followed by the matrix rows, entries
separated by whitespace.  Blocks are separated by blank lines; ``#`` starts
a comment line.  A line starting with ``{`` is read as a JSON record with a
``vertices`` list (the output of ``family`` and ``census``), which lets
commands be piped into each other.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .polytope import Polytope, from_columns, hull

_INT = re.compile(r"^[+-]?\d+$")


class ParseError(ValueError):
    def __init__(self, msg, line, column):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class PolytopeDocument:
    name: str | None
    matrix: tuple

    def format(self) -> str:
        out = []
        if self.name is not None:
            out.append(self.name)
        out.extend(" ".join(str(x) for x in row) for row in self.matrix)
        return "\n".join(out) + "\n"

    def polytope(self) -> Polytope:
        return from_columns(self.matrix)

    @classmethod
    def from_polytope(cls, P: Polytope, name=None) -> "PolytopeDocument":
        return cls(name, tuple(zip(*P.vertices)))


def _tokens(line):
    for m in re.finditer(r"\S+", line):
        yield m.start() + 1, m.group()


def _parse_json(line, lineno):
    try:
        rec = json.loads(line)
        verts = rec["vertices"]
        matrix = tuple(zip(*[tuple(int(x) for x in v) for v in verts]))
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad JSON polytope record ({e})", lineno, 1) from None
    if not matrix:
        raise ParseError("empty vertex list", lineno, 1)
    return PolytopeDocument(rec.get("name"), matrix)


def parse_documents(text: str) -> list:
    docs = []
    name, rows, start = None, [], None

    def flush():
        nonlocal name, rows
        if rows:
            docs.append(PolytopeDocument(name, tuple(rows)))
        elif name is not None:
            raise ParseError("name line without a matrix", start, 1)
        name, rows = None, []

    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s.startswith("#"):
            continue
        if not s:
            flush()
            continue
        if s.startswith("{"):
            flush()
            docs.append(_parse_json(s, lineno))
            continue
        toks = list(_tokens(line))
        if not rows and name is None and len(toks) == 1 and not _INT.match(toks[0][1]):
            name, start = toks[0][1], lineno
            continue
        row = []
        for col, tok in toks:
            if not _INT.match(tok):
                raise ParseError(f"expected an integer, got {tok!r}", lineno, col)
            row.append(int(tok))
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}",
                             lineno, toks[-1][0])
        rows.append(tuple(row))
    flush()
    return docs


def parse_document(text: str) -> PolytopeDocument:
    docs = parse_documents(text)
    if not docs:
        raise ParseError("no polytope found", 1, 1)
    return docs[0]


def polytope_record(P: Polytope, **extra) -> dict:
    rec = dict(extra)
    rec["vertices"] = [list(v) for v in P.vertices]
    return rec


def polytope_from_record(rec) -> Polytope:
    return hull(tuple(v) for v in rec["vertices"])
