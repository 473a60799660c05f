"""Reduct, stable and supported models, and quasi-computations.

Constraint clauses are handled uniformly: a set is a stable (supported) model
of ``P`` when it is one for the headed part of ``P`` and it satisfies every
constraint of ``P``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet

from .core import (
    Atom,
    McaClause,
    McaProgram,
    McLiteral,
    check_limit,
    format_set,
    hset,
    sat_mc_atom,
    sat_program,
    subsets,
)
from .horn import is_derivable
from .operator import is_one_step_provable


def reduct(p: McaProgram, m: AbstractSet[Atom]) -> McaProgram:
    kept = []
    for r in p:
        if any(sat_mc_atom(m, a) for a in r.negative):
            continue
        kept.append(McaClause(r.head, tuple(McLiteral(a) for a in r.positive)))
    return McaProgram(kept)


def is_stable(p: McaProgram, m: AbstractSet[Atom]) -> bool:
    m = frozenset(m)
    if not sat_program(m, p.constraints()):
        return False
    return is_derivable(reduct(p.headed(), m), m)


def is_supported(p: McaProgram, m: AbstractSet[Atom]) -> bool:
    m = frozenset(m)
    return is_one_step_provable(p.headed(), m, m) and sat_program(m, p.constraints())


def _candidates(p: McaProgram, limit: int | None):
    # stable and supported models lie inside hset of the headed part
    heads = hset(p.headed())
    check_limit(len(heads), limit, "head atoms")
    return subsets(heads)


def stable_models(p: McaProgram, limit: int | None = None) -> list[frozenset]:
    return [m for m in _candidates(p, limit) if is_stable(p, m)]


def supported_models(p: McaProgram, limit: int | None = None) -> list[frozenset]:
    return [m for m in _candidates(p, limit) if is_supported(p, m)]


@dataclass(frozen=True)
class QuasiTrace:
    states: tuple
    applied: tuple
    taken: tuple

    @property
    def result(self) -> frozenset:
        return self.states[-1]

    @property
    def forbidden(self) -> frozenset:
        return frozenset(a for r in self.applied for a in r.negative)

    def render(self) -> str:
        return "\n".join(
            f"apply {r} take {format_set(x)} -> {format_set(s)}"
            for r, x, s in zip(self.applied, self.taken, self.states[1:])
        )


def find_quasi_computation(
    p: McaProgram, m: AbstractSet[Atom], limit: int | None = None, check_each_step: bool = False
) -> QuasiTrace | None:
    """Search for a careful computation from the empty set whose result is ``m``.

    Only clauses whose negated mc-atoms are all false in ``m`` may be applied.
    By monotonicity that single test against the target is the same as
    requiring, at every stage, that no negated atom of an applied clause
    holds.  Sequences are finite; the empty sequence has result ``{}``.
    Returns ``None`` when ``m`` is not a model or no such sequence exists.
    """
    m = frozenset(m)
    check_limit(len(p.atoms() | m), limit)
    if not sat_program(m, p):
        return None
    usable = [
        r for r in p.headed() if not any(sat_mc_atom(m, a) for a in r.negative)
    ]
    choices = {
        r: [s for s in subsets(r.hset & m) if sat_mc_atom(s, r.head)] for r in usable
    }

    seen: set = set()
    path: list = []

    def dfs(x: frozenset) -> bool:
        if x == m:
            return True
        seen.add(x)
        for r in usable:
            if not all(sat_mc_atom(x, a) for a in r.positive):
                continue
            for s in choices[r]:
                y = x | s
                if y == x or y in seen:
                    continue
                path.append((r, s, y))
                if dfs(y):
                    return True
                path.pop()
        return False

    if not dfs(frozenset()):
        return None
    trace = QuasiTrace(
        states=(frozenset(),) + tuple(y for _, _, y in path),
        applied=tuple(r for r, _, _ in path),
        taken=tuple(s for _, s, _ in path),
    )
    if check_each_step:
        _verify_quasi(trace)
    return trace


def _verify_quasi(trace: QuasiTrace) -> None:
    negated: list = []
    for i, r in enumerate(trace.applied):
        x, nxt = trace.states[i], trace.states[i + 1]
        assert all(sat_mc_atom(x, a) for a in r.positive), f"step {i}: body fails"
        assert not any(sat_mc_atom(x, a) for a in r.negative), f"step {i}: body fails"
        assert trace.taken[i] <= r.hset and sat_mc_atom(trace.taken[i], r.head)
        assert nxt == x | trace.taken[i]
        negated.extend(r.negative)
        assert not any(sat_mc_atom(nxt, a) for a in negated), f"step {i}: forbidden atom holds"


def quasi_stable_check(
    p: McaProgram, m: AbstractSet[Atom], limit: int | None = None, check_each_step: bool = False
) -> bool:
    return find_quasi_computation(p, m, limit, check_each_step) is not None
