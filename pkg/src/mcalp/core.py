"""Monotone cardinality atoms, mca-clauses and mca-programs.

Atoms are plain strings; an interpretation is a ``frozenset`` of atom names.
An mc-atom ``kX`` holds in ``M`` when ``|M & X| >= k``, which makes every
mc-atom monotone in ``M``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, Iterable, Iterator, NamedTuple

from .errors import BoundExceedsSet, InvalidAtom, LimitExceeded

Atom = str
Interpretation = frozenset  # frozenset[Atom]

DEFAULT_LIMIT = 20
KEYWORDS = frozenset({"not"})
_ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


def check_atom(name: str) -> Atom:
    if not isinstance(name, str) or not _ATOM_RE.match(name) or name in KEYWORDS:
        raise InvalidAtom(f"invalid atom name {name!r}")
    return name


def interp(atoms: Iterable[Atom] = ()) -> frozenset:
    return frozenset(check_atom(a) for a in atoms)


def model_key(m: AbstractSet[Atom]) -> tuple:
    """Sort key: cardinality first, then the sorted tuple of names."""
    return (len(m), tuple(sorted(m)))


def sort_models(models: Iterable[AbstractSet[Atom]]) -> list[frozenset]:
    return sorted({frozenset(m) for m in models}, key=model_key)


def format_set(m: Iterable[Atom]) -> str:
    return "{" + ", ".join(sorted(m)) + "}"


def subsets(universe: Iterable[Atom]) -> Iterator[frozenset]:
    """All subsets of ``universe`` in cardinality-then-lexicographic order."""
    atoms = sorted(set(universe))
    for size in range(len(atoms) + 1):
        for combo in combinations(atoms, size):
            yield frozenset(combo)


def check_limit(size: int, limit: int | None, what: str = "atoms") -> None:
    limit = DEFAULT_LIMIT if limit is None else limit
    if size > limit:
        raise LimitExceeded(size, limit, what)


@dataclass(frozen=True)
class McAtom:
    bound: int
    aset: frozenset

    def __post_init__(self):
        object.__setattr__(self, "aset", interp(self.aset))
        if not isinstance(self.bound, int) or self.bound < 0:
            raise BoundExceedsSet(f"bound must be a non-negative integer, got {self.bound!r}")
        if self.bound > len(self.aset):
            raise BoundExceedsSet(
                f"bound {self.bound} exceeds the {len(self.aset)} atoms of {format_set(self.aset)}"
            )

    @property
    def atoms(self) -> tuple:
        return tuple(sorted(self.aset))

    def satisfied_by(self, m: AbstractSet[Atom]) -> bool:
        return len(self.aset & m) >= self.bound

    def __str__(self):
        return f"{self.bound} {format_set(self.aset)}"


def mk_mc_atom(bound: int, atoms: Iterable[Atom]) -> McAtom:
    return McAtom(bound, frozenset(atoms))


@dataclass(frozen=True)
class McLiteral:
    atom: McAtom
    negative: bool = False

    def __str__(self):
        return f"not {self.atom}" if self.negative else str(self.atom)


@dataclass(frozen=True)
class McaClause:
    """``head <- body``; a clause without head is a constraint."""

    head: McAtom | None
    body: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    @property
    def is_horn(self) -> bool:
        return not any(lit.negative for lit in self.body)

    @property
    def is_deterministic(self) -> bool:
        return self.head is not None and self.head.bound == 1 and len(self.head.aset) == 1

    @property
    def hset(self) -> frozenset:
        return frozenset() if self.head is None else self.head.aset

    @property
    def positive(self) -> tuple:
        return tuple(lit.atom for lit in self.body if not lit.negative)

    @property
    def negative(self) -> tuple:
        return tuple(lit.atom for lit in self.body if lit.negative)

    def atoms(self) -> frozenset:
        out = set(self.hset)
        for lit in self.body:
            out |= lit.atom.aset
        return frozenset(out)

    def __str__(self):
        head = "" if self.head is None else str(self.head)
        if not self.body:
            return f"{head}."
        body = ", ".join(map(str, self.body))
        return f"{head} :- {body}." if head else f":- {body}."


@dataclass(frozen=True)
class McaProgram:
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

    def headed(self) -> McaProgram:
        return McaProgram(r for r in self.clauses if not r.is_constraint)

    def constraints(self) -> McaProgram:
        return McaProgram(r for r in self.clauses if r.is_constraint)

    def __str__(self):
        return "\n".join(map(str, self.clauses))


class Classification(NamedTuple):
    is_horn: bool
    is_deterministic: bool
    has_constraints: bool


def sat_mc_atom(m: AbstractSet[Atom], a: McAtom) -> bool:
    return len(a.aset & m) >= a.bound


def sat_mc_literal(m: AbstractSet[Atom], lit: McLiteral) -> bool:
    return sat_mc_atom(m, lit.atom) != lit.negative


def sat_body(m: AbstractSet[Atom], body: Iterable[McLiteral]) -> bool:
    return all(sat_mc_literal(m, lit) for lit in body)


def sat_clause(m: AbstractSet[Atom], r: McaClause) -> bool:
    if not sat_body(m, r.body):
        return True
    return r.head is not None and sat_mc_atom(m, r.head)


def sat_program(m: AbstractSet[Atom], p: McaProgram) -> bool:
    return all(sat_clause(m, r) for r in p)


def hset(p: McaProgram | Iterable[McaClause]) -> frozenset:
    out: set = set()
    for r in p:
        out |= r.hset
    return frozenset(out)


def classify(p: McaProgram) -> Classification:
    headed = [r for r in p if not r.is_constraint]
    return Classification(
        is_horn=all(r.is_horn for r in p),
        is_deterministic=all(r.is_deterministic for r in headed),
        has_constraints=len(headed) != len(p),
    )


def enumerate_models(
    p: McaProgram, universe: Iterable[Atom] | None = None, limit: int | None = None
) -> list[frozenset]:
    """Every subset of ``universe`` (default ``atoms(P)``) that satisfies ``P``.

    Satisfaction only looks at ``M & atoms(P)``, so atoms outside the program
    can be added or removed freely without changing the verdict.
    """
    universe = p.atoms() if universe is None else frozenset(universe)
    check_limit(len(universe), limit, "universe atoms")
    return [m for m in subsets(universe) if sat_program(m, p)]
