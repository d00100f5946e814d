"""Graph expressions for the command line.

Grammar (whitespace is insignificant)::

    expr := ident '(' args ')' | '@' path
    args := expr (',' expr)* | int (',' int)*

Constructors take integers: path(k), cycle(k), complete(k), kbip(a,b),
fan(k), wheel(k).  Operators take expressions: complement(e), union(e1,e2),
intersect(e1,e2), join(e1,e2), ringsum(e1,e2).  ``@file`` loads a graph file.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Union

from .errors import WeakIASIError
from .formats import read_graph
from .graph import (
    Graph,
    complement,
    graph_intersection,
    graph_join,
    graph_union,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_fan,
    make_path,
    make_wheel,
    ring_sum,
)

CONSTRUCTORS: dict[str, tuple[int, Callable[..., Graph]]] = {
    "path": (1, make_path),
    "cycle": (1, make_cycle),
    "complete": (1, make_complete),
    "kbip": (2, make_complete_bipartite),
    "fan": (1, make_fan),
    "wheel": (1, make_wheel),
}
OPERATORS: dict[str, int] = {
    "complement": 1,
    "union": 2,
    "intersect": 2,
    "join": 2,
    "ringsum": 2,
}


class ExprSyntaxError(WeakIASIError, ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple[Union["Call", "FileRef", int], ...]
    column: int


@dataclass(frozen=True)
class FileRef:
    path: str
    column: int


GraphExpr = Union[Call, FileRef]

_PATH_STOP = set(",()") | set(" \t\r\n")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def col(self) -> int:
        return self.i + 1

    def skip_ws(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str) -> None:
        got = self.peek()
        if got != ch:
            raise ExprSyntaxError(f"expected {ch!r}, found {got or 'end of input'!r}", self.col())
        self.i += 1

    def parse(self) -> GraphExpr:
        node = self.expr()
        if self.peek():
            raise ExprSyntaxError(f"unexpected {self.peek()!r} after expression", self.col())
        return node

    def expr(self) -> GraphExpr:
        ch = self.peek()
        start = self.col()
        if ch == "@":
            self.i += 1
            begin = self.i
            while self.i < len(self.text) and self.text[self.i] not in _PATH_STOP:
                self.i += 1
            if self.i == begin:
                raise ExprSyntaxError("empty file name after '@'", start)
            return FileRef(self.text[begin:self.i], start)
        if not ch.isalpha():
            raise ExprSyntaxError(f"expected an expression, found {ch or 'end of input'!r}", start)
        begin = self.i
        while self.i < len(self.text) and self.text[self.i].isalnum():
            self.i += 1
        name = self.text[begin:self.i]
        if name not in CONSTRUCTORS and name not in OPERATORS:
            raise ExprSyntaxError(f"unknown identifier {name!r}", start)
        self.expect("(")
        args = [self.arg()]
        while self.peek() == ",":
            self.i += 1
            args.append(self.arg())
        self.expect(")")
        self.check_args(name, args, start)
        return Call(name, tuple(args), start)

    def arg(self):
        ch = self.peek()
        if ch.isdigit():
            begin = self.i
            while self.i < len(self.text) and self.text[self.i].isdigit():
                self.i += 1
            return int(self.text[begin:self.i])
        return self.expr()

    @staticmethod
    def check_args(name: str, args: list, column: int) -> None:
        if name in CONSTRUCTORS:
            arity = CONSTRUCTORS[name][0]
            if not all(isinstance(a, int) for a in args):
                raise ExprSyntaxError(f"{name} takes integer arguments", column)
        else:
            arity = OPERATORS[name]
            if any(isinstance(a, int) for a in args):
                raise ExprSyntaxError(f"{name} takes graph arguments", column)
        if len(args) != arity:
            raise ExprSyntaxError(f"{name} takes {arity} argument(s), got {len(args)}", column)


def parse_expr(text: str) -> GraphExpr:
    """Parse ``text``; raises :class:`ExprSyntaxError` with a 1-based column."""
    return _Parser(text).parse()


def eval_expr(e: GraphExpr, notes: list[str] | None = None, base: Path | None = None) -> Graph:
    """Evaluate an expression tree.

    ``join`` shifts its right operand past the left operand's largest id; each
    shift is described in ``notes`` when a list is supplied.
    """
    if isinstance(e, FileRef):
        path = Path(e.path) if base is None else base / e.path
        return read_graph(path.read_text())
    if e.name in CONSTRUCTORS:
        return CONSTRUCTORS[e.name][1](*e.args)
    args = [eval_expr(a, notes, base) for a in e.args]
    if e.name == "complement":
        return complement(args[0])
    left, right = args
    if e.name == "union":
        return graph_union(left, right)
    if e.name == "intersect":
        return graph_intersection(left, right)
    if e.name == "ringsum":
        return ring_sum(left, right)
    offset = left.vertices[-1] + 1 if left.vertices else 0
    if notes is not None and right.vertices:
        lo, hi = right.vertices[0], right.vertices[-1]
        notes.append(f"join at column {e.column}: right operand ids {lo}..{hi} -> {lo + offset}..{hi + offset}")
    return graph_join(left, right.shifted(offset))
