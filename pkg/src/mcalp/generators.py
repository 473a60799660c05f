"""Seeded random programs for differential and property testing."""

from __future__ import annotations

import random

from .core import McaClause, McaProgram, McAtom, McLiteral
from .interop import (
    CaAtom,
    CaClause,
    CaProgram,
    DisjunctiveClause,
    DisjunctiveProgram,
    NormalClause,
    NormalProgram,
)

POOL = tuple("abcdefghij")


def _pool(n_atoms: int) -> tuple:
    return POOL[:n_atoms]


def _subset(rng: random.Random, atoms, max_size: int, min_size: int = 0) -> frozenset:
    size = rng.randint(min_size, min(max_size, len(atoms)))
    return frozenset(rng.sample(atoms, size))


def random_mc_atom(rng: random.Random, atoms, max_set: int = 3, max_bound: int = 3) -> McAtom:
    aset = _subset(rng, atoms, max_set)
    return McAtom(rng.randint(0, min(max_bound, len(aset))), aset)


def random_mca_program(
    rng: random.Random,
    n_atoms: int = 6,
    max_clauses: int = 8,
    max_bound: int = 3,
    neg_prob: float = 0.4,
    constraint_prob: float = 0.2,
    max_body: int = 3,
    max_set: int = 3,
) -> McaProgram:
    atoms = _pool(n_atoms)
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        if rng.random() < constraint_prob:
            head = None
            n_body = rng.randint(1, max_body)
        else:
            head = random_mc_atom(rng, atoms, max_set, max_bound)
            n_body = rng.randint(0, max_body)
        body = tuple(
            McLiteral(random_mc_atom(rng, atoms, max_set, max_bound), rng.random() < neg_prob)
            for _ in range(n_body)
        )
        clauses.append(McaClause(head, body))
    return McaProgram(clauses)


def random_horn_program(rng: random.Random, **kwargs) -> McaProgram:
    kwargs.update(neg_prob=0.0, constraint_prob=0.0)
    return random_mca_program(rng, **kwargs)


def random_ca_atom(rng: random.Random, atoms, max_set: int = 3, max_bound: int = 3) -> CaAtom:
    aset = _subset(rng, atoms, max_set)
    lower = rng.randint(0, min(max_bound, len(aset)))
    upper = rng.randint(lower, len(aset))
    return CaAtom(lower, upper, aset)


def random_ca_program(
    rng: random.Random, n_atoms: int = 6, max_clauses: int = 8, max_body: int = 3, max_set: int = 3
) -> CaProgram:
    atoms = _pool(n_atoms)
    return CaProgram(
        CaClause(
            random_ca_atom(rng, atoms, max_set),
            tuple(random_ca_atom(rng, atoms, max_set) for _ in range(rng.randint(0, max_body))),
        )
        for _ in range(rng.randint(0, max_clauses))
    )


def _lp_body(rng: random.Random, atoms, max_body: int, neg_prob: float):
    pos, neg = set(), set()
    for _ in range(rng.randint(0, max_body)):
        (neg if rng.random() < neg_prob else pos).add(rng.choice(atoms))
    return frozenset(pos), frozenset(neg)


def random_normal_program(
    rng: random.Random,
    n_atoms: int = 6,
    max_clauses: int = 8,
    max_body: int = 3,
    neg_prob: float = 0.4,
) -> NormalProgram:
    atoms = _pool(n_atoms)
    return NormalProgram(
        NormalClause(rng.choice(atoms), *_lp_body(rng, atoms, max_body, neg_prob))
        for _ in range(rng.randint(0, max_clauses))
    )


def random_dlp_program(
    rng: random.Random,
    n_atoms: int = 5,
    max_clauses: int = 5,
    max_heads: int = 3,
    max_body: int = 3,
    neg_prob: float = 0.4,
) -> DisjunctiveProgram:
    atoms = _pool(n_atoms)
    return DisjunctiveProgram(
        DisjunctiveClause(
            tuple(rng.sample(atoms, rng.randint(1, max_heads))),
            *_lp_body(rng, atoms, max_body, neg_prob),
        )
        for _ in range(rng.randint(0, max_clauses))
    )
