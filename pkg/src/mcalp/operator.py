"""The nondeterministic one-step provability operator and its deterministic case.

``T^nd_P(M)`` is the family of sets ``M'`` drawn from the heads of the
M-applicable clauses that satisfy every one of those heads.  It is exposed as
a membership test, a canonical member, and a guarded full enumeration.
"""

from __future__ import annotations

from typing import AbstractSet, NamedTuple

from .core import (
    Atom,
    McaProgram,
    check_limit,
    classify,
    sat_body,
    sat_mc_atom,
    subsets,
)
from .errors import NotDeterministic


class ApplicableSet(NamedTuple):
    clauses: tuple
    hset: frozenset


def applicable(p: McaProgram, m: AbstractSet[Atom]) -> ApplicableSet:
    """Headed clauses of ``p`` whose bodies ``m`` satisfies, in program order.

    Constraint clauses never apply; callers deal with them separately.
    """
    clauses = tuple(r for r in p if r.head is not None and sat_body(m, r.body))
    heads: set = set()
    for r in clauses:
        heads |= r.hset
    return ApplicableSet(clauses, frozenset(heads))


def is_one_step_provable(p: McaProgram, m: AbstractSet[Atom], m2: AbstractSet[Atom]) -> bool:
    app = applicable(p, m)
    if not m2 <= app.hset:
        return False
    return all(sat_mc_atom(m2, r.head) for r in app.clauses)


def tnd_canonical(p: McaProgram, m: AbstractSet[Atom]) -> frozenset:
    return applicable(p, m).hset


def tnd_enumerate(p: McaProgram, m: AbstractSet[Atom], limit: int | None = None) -> list[frozenset]:
    app = applicable(p, m)
    check_limit(len(app.hset), limit, "applicable head atoms")
    heads = [r.head for r in app.clauses]
    return [s for s in subsets(app.hset) if all(sat_mc_atom(s, h) for h in heads)]


def td_step(p: McaProgram, m: AbstractSet[Atom]) -> frozenset:
    if not classify(p).is_deterministic:
        raise NotDeterministic("td_step needs every head to be of the form 1{a}")
    return frozenset(a for r in applicable(p, m).clauses for a in r.head.aset)
