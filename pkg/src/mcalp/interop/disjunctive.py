"""Disjunctive programs under the possible-model semantics.

Possible models are computed through split programs: every clause keeps a
chosen non-empty subset of its head atoms, each as a separate normal clause,
and the possible models are the stable models of all such splits.  This
oracle is a reconstruction of the original construction for disjunctive
programs and serves only as the independent side of differential tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from ..core import (
    Atom,
    McaClause,
    McaProgram,
    McAtom,
    McLiteral,
    check_atom,
    check_limit,
    interp,
    sort_models,
)
from .normal import NormalClause, NormalProgram, lp_models


@dataclass(frozen=True)
class DisjunctiveClause:
    heads: tuple
    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    def __post_init__(self):
        heads = tuple(check_atom(a) for a in self.heads)
        if not heads:
            raise ValueError("a disjunctive clause needs at least one head atom")
        object.__setattr__(self, "heads", heads)
        object.__setattr__(self, "pos", interp(self.pos))
        object.__setattr__(self, "neg", interp(self.neg))

    def atoms(self) -> frozenset:
        return frozenset(self.heads) | self.pos | self.neg

    def __str__(self):
        head = " | ".join(self.heads)
        lits = sorted(self.pos) + [f"not {b}" for b in sorted(self.neg)]
        return f"{head} :- {', '.join(lits)}." if lits else f"{head}."


@dataclass(frozen=True)
class DisjunctiveProgram:
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


def dlp_clause_to_mca(r: DisjunctiveClause) -> McaClause:
    body = [McLiteral(McAtom(1, {a})) for a in sorted(r.pos)]
    body += [McLiteral(McAtom(1, {b}), negative=True) for b in sorted(r.neg)]
    return McaClause(McAtom(1, r.heads), tuple(body))


def dlp_to_mca(p: DisjunctiveProgram) -> McaProgram:
    return McaProgram(dlp_clause_to_mca(r) for r in p)


def _head_choices(r: DisjunctiveClause) -> list:
    heads = sorted(set(r.heads))
    return [c for n in range(1, len(heads) + 1) for c in combinations(heads, n)]


def split_count(p: DisjunctiveProgram) -> int:
    return prod(2 ** len(set(r.heads)) - 1 for r in p)


def dlp_split_programs(p: DisjunctiveProgram, limit: int = 32768) -> list[NormalProgram]:
    check_limit(split_count(p), limit, "split programs")
    splits = []
    for choice in product(*(_head_choices(r) for r in p)):
        splits.append(
            NormalProgram(
                NormalClause(c, r.pos, r.neg) for r, chosen in zip(p, choice) for c in chosen
            )
        )
    return splits


def dlp_possible_models(
    p: DisjunctiveProgram, limit: int | None = None, split_limit: int = 32768
) -> list[frozenset]:
    found: set = set()
    for split in dlp_split_programs(p, split_limit):
        found.update(lp_models(split, "stable", limit))
    return sort_models(found)
