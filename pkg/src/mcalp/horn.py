"""Computations and derivable models of Horn mca-programs.

A computation starts at the empty set and moves monotonically through
``T^nd_P``.  Over a finite universe it becomes constant after finitely many
steps, so a :class:`Trace` keeps only the strictly growing prefix; its last
state is a fixpoint witness (``result`` is a member of ``T^nd_P(result)``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import AbstractSet

from .core import (
    Atom,
    McaProgram,
    check_limit,
    classify,
    format_set,
    hset,
    sat_program,
    sort_models,
    subsets,
)
from .errors import HasConstraints, NotAModel, NotDeterministic, NotHorn
from .operator import applicable, is_one_step_provable, td_step, tnd_enumerate


@dataclass(frozen=True)
class Trace:
    states: tuple
    steps: tuple = ()

    @property
    def result(self) -> frozenset:
        return self.states[-1]

    def render(self) -> str:
        lines = [f"X{i} = {format_set(x)}" for i, x in enumerate(self.states)]
        lines.append(f"result = {format_set(self.result)}")
        return "\n".join(lines)


def require_horn(p: McaProgram) -> None:
    kind = classify(p)
    if not kind.is_horn:
        raise NotHorn("program has negative body literals")
    if kind.has_constraints:
        raise HasConstraints("Horn computations are defined for programs without constraints")


def _iterate(p: McaProgram, bound: AbstractSet[Atom]) -> Trace:
    x: frozenset = frozenset()
    states, steps = [x], []
    while True:
        heads = applicable(p, x).hset
        nxt = heads & bound
        if nxt == x:
            return Trace(tuple(states), tuple(steps))
        # monotone by construction whenever `bound` is a model
        assert x <= nxt, (x, nxt)
        states.append(nxt)
        steps.append(heads)
        x = nxt


def canonical_computation(p: McaProgram, m: AbstractSet[Atom]) -> Trace:
    require_horn(p)
    m = frozenset(m)
    if not sat_program(m, p):
        raise NotAModel(f"{format_set(m)} is not a model of the program")
    return _iterate(p, m)


def greedy_computation(p: McaProgram) -> Trace:
    require_horn(p)
    return _iterate(p, hset(p))


def is_derivable(p: McaProgram, m: AbstractSet[Atom]) -> bool:
    require_horn(p)
    m = frozenset(m)
    return sat_program(m, p) and _iterate(p, m).result == m


def derivable_models(p: McaProgram, limit: int | None = None) -> list[frozenset]:
    # results of computations are supported, hence subsets of hset(P)
    require_horn(p)
    heads = hset(p)
    check_limit(len(heads), limit, "head atoms")
    return [m for m in subsets(heads) if is_derivable(p, m)]


def derivable_models_search(p: McaProgram, limit: int | None = None) -> list[frozenset]:
    """Derivable models found by exploring every computation from the empty set.

    Independent of canonical computations: it walks monotone ``T^nd_P`` steps
    and keeps the states that are members of their own image.
    """
    require_horn(p)
    check_limit(len(hset(p)), limit, "head atoms")
    seen: set = set()
    found: set = set()
    stack = [frozenset()]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        if is_one_step_provable(p, x, x):
            found.add(x)
        stack.extend(y for y in tnd_enumerate(p, x, limit) if x <= y and y not in seen)
    return sort_models(found)


def largest_derivable(p: McaProgram) -> frozenset:
    return greedy_computation(p).result


def least_model_deterministic(p: McaProgram) -> frozenset:
    require_horn(p)
    if not classify(p).is_deterministic:
        raise NotDeterministic("program has a head other than 1{a}")
    x: frozenset = frozenset()
    while True:
        nxt = td_step(p, x)
        if nxt == x:
            return x
        x = nxt


def random_computation(p: McaProgram, seed: int, limit: int | None = None) -> Trace:
    """A computation that picks each next state uniformly among the growing options.

    Stops the first time the chosen successor equals the current state.
    """
    require_horn(p)
    rng = random.Random(seed)
    x: frozenset = frozenset()
    states, steps = [x], []
    while True:
        options = [y for y in tnd_enumerate(p, x, limit) if x <= y]
        nxt = rng.choice(options)
        if nxt == x:
            return Trace(tuple(states), tuple(steps))
        states.append(nxt)
        steps.append(nxt - x)
        x = nxt
