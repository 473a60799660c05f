"""Parsers and canonical serializers for the four program dialects.

All dialects share one lexical layer: atoms ``[a-z][A-Za-z0-9_]*``, integers,
``%`` comments to end of line, and clauses terminated by ``.``::

    mca   1 {p, q} :- not 1 {q}.        :- 2 {a, b}.
    ca    1 {a, b} 1 :- {c} 0.
    lp    c :- a, not b.
    dlp   p | q :- not r.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Callable, NamedTuple

from .core import McaClause, McaProgram, McAtom, McLiteral
from .errors import BoundExceedsSet, ParseError
from .interop import (
    CaAtom,
    CaClause,
    CaProgram,
    DisjunctiveClause,
    DisjunctiveProgram,
    NormalClause,
    NormalProgram,
)

DIALECTS = ("mca", "ca", "lp", "dlp")

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>%[^\n]*)|(?P<nl>\n)|(?P<int>[0-9]+)"
    r"|(?P<atom>[a-z][A-Za-z0-9_]*)|(?P<if>:-)|(?P<punct>[{},.|])"
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(line, pos - line_start + 1, f"unexpected character {text[pos]!r}")
        kind = match.lastgroup
        if kind == "nl":
            line, line_start = line + 1, match.end()
        elif kind == "atom" and match.group() == "not":
            tokens.append(Token("not", "not", line, pos - line_start + 1))
        elif kind == "punct":
            tokens.append(Token(match.group(), match.group(), line, pos - line_start + 1))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


_DESCRIBE = {"eof": "end of input", "int": "integer", "atom": "atom", "if": "':-'", "not": "'not'"}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def at(self, *kinds: str) -> bool:
        return self.tok.kind in kinds

    def next(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def fail(self, expected: str, tok: Token | None = None):
        tok = tok or self.tok
        found = _DESCRIBE.get(tok.kind, repr(tok.text))
        raise ParseError(tok.line, tok.column, f"expected {expected}, found {found}", expected)

    def expect(self, kind: str, expected: str | None = None) -> Token:
        if not self.at(kind):
            self.fail(expected or _DESCRIBE.get(kind, repr(kind)))
        return self.next()

    def integer(self) -> int:
        return int(self.expect("int").text)

    def atom(self) -> str:
        return self.expect("atom").text

    def atom_set(self) -> list:
        self.expect("{", "'{'")
        atoms = []
        if not self.at("}"):
            atoms.append(self.atom())
            while self.at(","):
                self.next()
                atoms.append(self.atom())
        self.expect("}", "',' or '}'")
        return atoms

    def sequence(self, item: Callable):
        items = [item()]
        while self.at(","):
            self.next()
            items.append(item())
        return items

    def clauses(self, clause: Callable) -> list:
        out = []
        while not self.at("eof"):
            out.append(clause())
        return out

    def build(self, start: Token, factory: Callable, *args):
        try:
            return factory(*args)
        except BoundExceedsSet as exc:
            raise ParseError(start.line, start.column, str(exc), "bounds within the atom set") from None

    # mca dialect

    def mc_atom(self) -> McAtom:
        start = self.tok
        bound = self.integer() if self.at("int") else self.fail("integer bound")
        return self.build(start, McAtom, bound, frozenset(self.atom_set()))

    def mc_literal(self) -> McLiteral:
        if self.at("not"):
            self.next()
            return McLiteral(self.mc_atom(), negative=True)
        if not self.at("int"):
            self.fail("mc-literal")
        return McLiteral(self.mc_atom())

    def mca_clause(self) -> McaClause:
        head = None
        if self.at("int"):
            head = self.mc_atom()
        elif not self.at("if", "."):
            self.fail("mc-atom, ':-' or '.'")
        body = []
        if self.at("if"):
            self.next()
            body = self.sequence(self.mc_literal)
        self.expect(".", "',' or '.'" if body else "':-' or '.'")
        return McaClause(head, tuple(body))

    # ca dialect

    def ca_atom(self) -> CaAtom:
        start = self.tok
        lower = self.integer() if self.at("int") else None
        if not self.at("{"):
            self.fail("'{'" if lower is not None else "c-atom")
        atoms = self.atom_set()
        upper = self.integer() if self.at("int") else None
        return self.build(start, CaAtom.of, atoms, lower, upper)

    def ca_clause(self) -> CaClause:
        head = self.ca_atom()
        body = []
        if self.at("if"):
            self.next()
            body = self.sequence(self.ca_atom)
        self.expect(".", "',' or '.'" if body else "':-' or '.'")
        return CaClause(head, tuple(body))

    # lp and dlp dialects

    def lp_body(self) -> tuple:
        pos, neg = [], []
        if self.at("if"):
            self.next()

            def lit():
                if self.at("not"):
                    self.next()
                    neg.append(self.atom())
                else:
                    pos.append(self.atom())

            self.sequence(lit)
        return frozenset(pos), frozenset(neg)

    def lp_clause(self) -> NormalClause:
        head = self.atom()
        pos, neg = self.lp_body()
        self.expect(".", "',' or '.'" if pos or neg else "':-' or '.'")
        return NormalClause(head, pos, neg)

    def dlp_clause(self) -> DisjunctiveClause:
        heads = [self.atom()]
        while self.at("|"):
            self.next()
            heads.append(self.atom())
        pos, neg = self.lp_body()
        self.expect(".", "',' or '.'" if pos or neg else "'|', ':-' or '.'")
        return DisjunctiveClause(tuple(heads), pos, neg)


def parse_mca(text: str) -> McaProgram:
    p = _Parser(text)
    return McaProgram(p.clauses(p.mca_clause))


def parse_ca(text: str) -> CaProgram:
    p = _Parser(text)
    return CaProgram(p.clauses(p.ca_clause))


def parse_lp(text: str) -> NormalProgram:
    p = _Parser(text)
    return NormalProgram(p.clauses(p.lp_clause))


def parse_dlp(text: str) -> DisjunctiveProgram:
    p = _Parser(text)
    return DisjunctiveProgram(p.clauses(p.dlp_clause))


PARSERS = {"mca": parse_mca, "ca": parse_ca, "lp": parse_lp, "dlp": parse_dlp}


def serialize(program) -> str:
    """Canonical text for a program of any dialect: one clause per line."""
    return "".join(f"{r}\n" for r in program)


serialize_mca = serialize_ca = serialize_lp = serialize_dlp = serialize


def parse(text: str, dialect: str):
    if dialect not in PARSERS:
        raise ValueError(f"unknown dialect {dialect!r}")
    return PARSERS[dialect](text)


def dialect_of(path: str | Path) -> str | None:
    suffix = Path(path).suffix.lstrip(".")
    return suffix if suffix in PARSERS else None
