"""Programs over cardinality atoms ``kXl`` with their NSS stable semantics.

Also holds the two translations between ca-programs and mca-programs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet

from ..core import (
    Atom,
    McaClause,
    McaProgram,
    McAtom,
    McLiteral,
    check_limit,
    format_set,
    interp,
    subsets,
)
from ..errors import BoundExceedsSet, HasConstraints
from ..horn import least_model_deterministic
from ..stable import supported_models


@dataclass(frozen=True)
class CaAtom:
    lower: int
    upper: int
    aset: frozenset

    def __post_init__(self):
        object.__setattr__(self, "aset", interp(self.aset))
        if not 0 <= self.lower <= self.upper <= len(self.aset):
            raise BoundExceedsSet(
                f"bounds {self.lower}..{self.upper} invalid for {format_set(self.aset)}"
            )

    @classmethod
    def of(cls, atoms, lower: int | None = None, upper: int | None = None) -> CaAtom:
        """Build a c-atom, filling a missing lower bound with 0 and upper with ``|X|``."""
        aset = interp(atoms)
        return cls(0 if lower is None else lower, len(aset) if upper is None else upper, aset)

    def __str__(self):
        text = format_set(self.aset)
        if self.lower != 0:
            text = f"{self.lower} {text}"
        if self.upper != len(self.aset):
            text = f"{text} {self.upper}"
        return text


@dataclass(frozen=True)
class CaClause:
    head: CaAtom
    body: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))

    def atoms(self) -> frozenset:
        out = set(self.head.aset)
        for b in self.body:
            out |= b.aset
        return frozenset(out)

    def __str__(self):
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(map(str, self.body))}."


@dataclass(frozen=True)
class CaProgram:
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


def ca_sat(m: AbstractSet[Atom], a: CaAtom) -> bool:
    return a.lower <= len(m & a.aset) <= a.upper


def ca_sat_clause(m: AbstractSet[Atom], r: CaClause) -> bool:
    return not all(ca_sat(m, b) for b in r.body) or ca_sat(m, r.head)


def ca_sat_program(m: AbstractSet[Atom], p: CaProgram) -> bool:
    return all(ca_sat_clause(m, r) for r in p)


def nss_reduct(p: CaProgram, m: AbstractSet[Atom]) -> McaProgram:
    out = []
    for r in p:
        if not all(ca_sat(m, b) for b in r.body):
            continue
        body = tuple(McLiteral(McAtom(b.lower, b.aset)) for b in r.body)
        for a in sorted(r.head.aset & m):
            out.append(McaClause(McAtom(1, {a}), body))
    return McaProgram(out)


def nss_is_stable(p: CaProgram, m: AbstractSet[Atom]) -> bool:
    m = frozenset(m)
    return ca_sat_program(m, p) and least_model_deterministic(nss_reduct(p, m)) == m


def nss_stable_models(p: CaProgram, limit: int | None = None) -> list[frozenset]:
    universe = p.atoms()
    check_limit(len(universe), limit)
    return [m for m in subsets(universe) if nss_is_stable(p, m)]


def _upper_guards(body) -> list:
    # not((l+1)X) is identically true when l = |X|, so it is left out
    return [
        McLiteral(McAtom(b.upper + 1, b.aset), negative=True)
        for b in body
        if b.upper < len(b.aset)
    ]


def ca_clause_to_mca(r: CaClause) -> list:
    body = [McLiteral(McAtom(b.lower, b.aset)) for b in r.body] + _upper_guards(r.body)
    out = [McaClause(McAtom(r.head.lower, r.head.aset), tuple(body))]
    if r.head.upper < len(r.head.aset):
        guard = McLiteral(McAtom(r.head.upper + 1, r.head.aset))
        out.append(McaClause(None, (guard, *body)))
    return out


def ca_to_mca(p: CaProgram) -> McaProgram:
    return McaProgram(c for r in p for c in ca_clause_to_mca(r))


def mca_clause_to_ca(r: McaClause) -> CaClause | None:
    """The ca-clause for ``r``, or ``None`` when ``r`` can never fire.

    A literal ``not(0Y)`` never holds, so its clause is dropped.  A stand-in
    tautology such as ``kX <- kX`` is not inert under the NSS reduct: once
    ``k`` atoms of ``X`` are derived elsewhere it derives the rest of ``X & M``.
    """
    if r.head is None:
        raise HasConstraints("constraint clauses have no ca-program counterpart")
    if any(a.bound == 0 for a in r.negative):
        return None
    head = CaAtom.of(r.head.aset, r.head.bound)
    body = [CaAtom.of(a.aset, a.bound) for a in r.positive]
    body += [CaAtom.of(a.aset, 0, a.bound - 1) for a in r.negative]
    return CaClause(head, tuple(body))


def mca_to_ca(p: McaProgram) -> CaProgram:
    images = (mca_clause_to_ca(r) for r in p)
    return CaProgram(c for c in images if c is not None)


def ca_supported_models(p: CaProgram, limit: int | None = None) -> list[frozenset]:
    """Supported models of a ca-program, defined through its mca encoding."""
    return supported_models(ca_to_mca(p), limit)
