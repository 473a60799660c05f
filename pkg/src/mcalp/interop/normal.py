"""Normal logic programs, their classical semantics, and the embedding into mca-programs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Literal

from ..core import (
    Atom,
    McaClause,
    McaProgram,
    McAtom,
    McLiteral,
    check_atom,
    check_limit,
    interp,
    subsets,
)


@dataclass(frozen=True)
class NormalClause:
    head: Atom
    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    def __post_init__(self):
        check_atom(self.head)
        object.__setattr__(self, "pos", interp(self.pos))
        object.__setattr__(self, "neg", interp(self.neg))

    def atoms(self) -> frozenset:
        return frozenset({self.head}) | self.pos | self.neg

    def __str__(self):
        lits = sorted(self.pos) + [f"not {b}" for b in sorted(self.neg)]
        return f"{self.head} :- {', '.join(lits)}." if lits else f"{self.head}."


@dataclass(frozen=True)
class NormalProgram:
    clauses: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)

    def atoms(self) -> frozenset:
        out: set = set()
        for r in self.clauses:
            out |= r.atoms()
        return frozenset(out)

    @property
    def is_horn(self) -> bool:
        return not any(r.neg for r in self.clauses)


def lp_clause_to_mca(r: NormalClause) -> McaClause:
    body = [McLiteral(McAtom(1, {a})) for a in sorted(r.pos)]
    body += [McLiteral(McAtom(1, {b}), negative=True) for b in sorted(r.neg)]
    return McaClause(McAtom(1, {r.head}), tuple(body))


def lp_to_mca(p: NormalProgram) -> McaProgram:
    return McaProgram(lp_clause_to_mca(r) for r in p)


def lp_tp(p: NormalProgram, m: AbstractSet[Atom]) -> frozenset:
    return frozenset(r.head for r in p if r.pos <= m and not (r.neg & m))


def lp_gl_reduct(p: NormalProgram, m: AbstractSet[Atom]) -> NormalProgram:
    return NormalProgram(NormalClause(r.head, r.pos) for r in p if not (r.neg & m))


def lp_least_model(p: NormalProgram) -> frozenset:
    """Least model of the positive part (negative literals are ignored)."""
    m: frozenset = frozenset()
    while True:
        nxt = frozenset(r.head for r in p if r.pos <= m)
        if nxt == m:
            return m
        m = nxt


def lp_sat(m: AbstractSet[Atom], p: Iterable[NormalClause]) -> bool:
    return all(r.head in m for r in p if r.pos <= m and not (r.neg & m))


Semantics = Literal["classical", "supported", "stable"]


def lp_models(p: NormalProgram, kind: Semantics = "stable", limit: int | None = None) -> list[frozenset]:
    universe = p.atoms()
    check_limit(len(universe), limit)
    if kind == "classical":
        test = lambda m: lp_sat(m, p)
    elif kind == "supported":
        test = lambda m: lp_sat(m, p) and lp_tp(p, m) == m
    elif kind == "stable":
        test = lambda m: lp_least_model(lp_gl_reduct(p, m)) == m
    else:
        raise ValueError(f"unknown semantics {kind!r}")
    return [m for m in subsets(universe) if test(m)]
