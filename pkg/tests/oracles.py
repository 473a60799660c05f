"""Literal, unoptimized readings of the definitions, used as test oracles."""

from itertools import chain, combinations


def powerset(universe):
    atoms = sorted(universe)
    return [frozenset(c) for c in chain.from_iterable(combinations(atoms, n) for n in range(len(atoms) + 1))]


def holds(m, atom):
    return sum(1 for a in atom.aset if a in m) >= atom.bound


def body_holds(m, clause):
    return all(holds(m, lit.atom) != lit.negative for lit in clause.body)


def is_model(m, program):
    for r in program:
        if body_holds(m, r) and (r.head is None or not holds(m, r.head)):
            return False
    return True


def tnd(program, m, universe):
    """T^nd over an explicit universe: every candidate checked against the definition."""
    app = [r for r in program if r.head is not None and body_holds(m, r)]
    heads = set().union(*(r.head.aset for r in app)) if app else set()
    return {s for s in powerset(universe) if s <= heads and all(holds(s, r.head) for r in app)}


def key(m):
    return (len(m), tuple(sorted(m)))
