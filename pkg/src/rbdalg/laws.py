"""Randomised checks that diagrams, their quotient, and the structure function obey Boolean algebra.

Three suites are provided:

* :func:`check_diagram_algebra` checks the ten Boolean-algebra axioms on
  diagram terms, comparing both sides with :func:`rbdalg.canonical.equals`;
* :func:`check_reliability_algebra` checks the same axioms on canonical forms
  with meet/join/complement (identical-root equality), plus a numeric shadow
  check comparing the reliabilities of both sides;
* :func:`check_structure_homomorphism` checks that the structure function maps
  series/parallel/complement/constants to min/max/``1 - x``/0/1.

All reports are deterministic given ``(trials, seed, n)``.
"""

from __future__ import annotations

import math
import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np

from rbdalg.canonical import CanonicalForm, NodeStore, canonicalize, complement, join, meet
from rbdalg.diagram import (
    ONE,
    ZERO,
    Complement,
    ComponentId,
    Diagram,
    Elementary,
    GeneratingSet,
    Parallel,
    Series,
    StateAssignment,
    evaluate,
    truth_table,
)
from rbdalg.errors import OutOfRangeError
from rbdalg.parser import render
from rbdalg.reliability import ReliabilityAssignment, shannon, state_probabilities

SHADOW_TOLERANCE = 1e-12
SHADOW_ASSIGNMENTS = 8
MAX_DEPTH = 7
MAX_COMPONENTS = 8


class Algebra(NamedTuple):
    meet: Callable[[Any, Any], Any]
    join: Callable[[Any, Any], Any]
    complement: Callable[[Any], Any]
    one: Any
    zero: Any


DIAGRAMS = Algebra(Series, Parallel, Complement, ONE, ZERO)


def form_algebra(store: NodeStore) -> Algebra:
    return Algebra(meet, join, complement, store.one(), store.zero())


@dataclass(frozen=True)
class Law:
    """An equation ``lhs == rhs`` in ``arity`` variables, stated over any :class:`Algebra`."""

    id: str
    arity: int
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]


LAWS: tuple[Law, ...] = (
    Law("commutativity-meet", 2, lambda a, x, y: a.meet(x, y), lambda a, x, y: a.meet(y, x)),
    Law("commutativity-join", 2, lambda a, x, y: a.join(x, y), lambda a, x, y: a.join(y, x)),
    Law(
        "associativity-meet",
        3,
        lambda a, x, y, z: a.meet(a.meet(x, y), z),
        lambda a, x, y, z: a.meet(x, a.meet(y, z)),
    ),
    Law(
        "associativity-join",
        3,
        lambda a, x, y, z: a.join(a.join(x, y), z),
        lambda a, x, y, z: a.join(x, a.join(y, z)),
    ),
    Law(
        "distributivity-meet-over-join",
        3,
        lambda a, x, y, z: a.meet(x, a.join(y, z)),
        lambda a, x, y, z: a.join(a.meet(x, y), a.meet(x, z)),
    ),
    Law(
        "distributivity-join-over-meet",
        3,
        lambda a, x, y, z: a.join(x, a.meet(y, z)),
        lambda a, x, y, z: a.meet(a.join(x, y), a.join(x, z)),
    ),
    Law("neutral-meet", 1, lambda a, x: a.meet(x, a.one), lambda a, x: x),
    Law("neutral-join", 1, lambda a, x: a.join(x, a.zero), lambda a, x: x),
    Law("complement-join", 1, lambda a, x: a.join(x, a.complement(x)), lambda a, x: a.one),
    Law("complement-meet", 1, lambda a, x: a.meet(x, a.complement(x)), lambda a, x: a.zero),
)


@dataclass(frozen=True)
class Counterexample:
    trial: int
    lhs: Diagram
    rhs: Diagram
    state: str | None = None
    assignment: ReliabilityAssignment | None = None
    detail: str = ""


@dataclass(frozen=True)
class LawReport:
    law: str
    trials: int
    failures: int
    first_counterexample: Counterexample | None = None
    shadow_failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def __str__(self):
        if self.passed:
            return f"{self.law}: PASS (trials={self.trials})"
        cx = self.first_counterexample
        line = f"{self.law}: FAIL trial={cx.trial} lhs={render(cx.lhs)} rhs={render(cx.rhs)}"
        if cx.state is not None:
            line += f" state={cx.state}"
        if cx.assignment is not None:
            line += " assignment=" + ",".join(f"{c}={p!r}" for c, p in sorted(cx.assignment.items()))
        if cx.detail:
            line += f" ({cx.detail})"
        return line


def random_diagram(rng: random.Random, n: int, max_depth: int = MAX_DEPTH) -> Diagram:
    """Random term over ``A1..An``.

    Each node is series/parallel/complement/leaf with probability
    0.3/0.3/0.2/0.2 (always a leaf at ``max_depth``); a leaf is ``1`` or ``0``
    with probability 0.1 each, otherwise a uniformly chosen component.
    """

    def leaf():
        u = rng.random()
        if u < 0.1:
            return ONE
        if u < 0.2:
            return ZERO
        return Elementary(ComponentId(rng.randint(1, n)))

    def grow(depth):
        if depth >= max_depth:
            return leaf()
        u = rng.random()
        if u < 0.3:
            return Series(grow(depth + 1), grow(depth + 1))
        if u < 0.6:
            return Parallel(grow(depth + 1), grow(depth + 1))
        if u < 0.8:
            return Complement(grow(depth + 1))
        return leaf()

    return grow(0)


def random_assignment(rng: random.Random, g: GeneratingSet) -> ReliabilityAssignment:
    return ReliabilityAssignment({c: rng.random() for c in g})


def _check_args(trials, n):
    if trials < 1:
        raise OutOfRangeError(f"trials must be >= 1, got {trials}")
    if not 1 <= n <= MAX_COMPONENTS:
        raise OutOfRangeError(f"n must be in [1, {MAX_COMPONENTS}], got {n}")


def _law_rng(seed: int, law_id: str) -> random.Random:
    # independent, reproducible stream per law so suites can run laws in any order
    return random.Random(f"{seed}/{law_id}")


def witness_state(d1: Diagram, d2: Diagram, g: GeneratingSet) -> str | None:
    """Bits (in ``g`` order) of the first state on which ``d1`` and ``d2`` differ."""
    diff = np.flatnonzero(truth_table(d1, g) != truth_table(d2, g))
    if diff.size == 0:
        return None
    return StateAssignment.from_index(int(diff[0]), g).bits(g)


def check_diagram_algebra(
    trials: int,
    seed: int,
    n: int,
    laws: Sequence[Law] = LAWS,
    max_depth: int = MAX_DEPTH,
) -> list[LawReport]:
    _check_args(trials, n)
    g = GeneratingSet.of(n)
    reports = []
    for law in laws:
        rng = _law_rng(seed, law.id)
        store = NodeStore(g)
        failures, first = 0, None
        for trial in range(1, trials + 1):
            xs = [random_diagram(rng, n, max_depth) for _ in range(law.arity)]
            lhs, rhs = law.lhs(DIAGRAMS, *xs), law.rhs(DIAGRAMS, *xs)
            if canonicalize(lhs, store=store) != canonicalize(rhs, store=store):
                failures += 1
                if first is None:
                    first = Counterexample(trial, lhs, rhs, state=witness_state(lhs, rhs, g))
        reports.append(LawReport(law.id, trials, failures, first))
    return reports


def check_reliability_algebra(
    trials: int,
    seed: int,
    n: int,
    laws: Sequence[Law] = LAWS,
    max_depth: int = MAX_DEPTH,
    assignments: int = SHADOW_ASSIGNMENTS,
    tolerance: float = SHADOW_TOLERANCE,
) -> list[LawReport]:
    """Axioms on canonical forms, with a numeric shadow check per trial.

    The shadow check compares the Shannon reliability of the left-hand form
    against the brute-force reliability of the right-hand diagram under
    ``assignments`` random reliability assignments.
    """
    _check_args(trials, n)
    g = GeneratingSet.of(n)
    reports = []
    for law in laws:
        rng = _law_rng(seed, law.id)
        store = NodeStore(g)
        forms = form_algebra(store)
        failures = shadow_failures = 0
        first = None
        for trial in range(1, trials + 1):
            xs = [random_diagram(rng, n, max_depth) for _ in range(law.arity)]
            cs = [canonicalize(x, store=store) for x in xs]
            lhs_form: CanonicalForm = law.lhs(forms, *cs)
            rhs_form: CanonicalForm = law.rhs(forms, *cs)
            lhs, rhs = law.lhs(DIAGRAMS, *xs), law.rhs(DIAGRAMS, *xs)
            failed = False
            if lhs_form != rhs_form:
                failed = True
                if first is None:
                    first = Counterexample(
                        trial, lhs, rhs, state=witness_state(lhs, rhs, g), detail="roots differ"
                    )
            rhs_table = truth_table(rhs, g).astype(bool)
            for _ in range(assignments):
                p = random_assignment(rng, g)
                r_lhs = shannon(lhs_form, p)
                r_rhs = math.fsum(state_probabilities(p, g)[rhs_table])
                if abs(r_lhs - r_rhs) > tolerance:
                    shadow_failures += 1
                    failed = True
                    if first is None:
                        first = Counterexample(
                            trial, lhs, rhs, assignment=p, detail=f"reliabilities {r_lhs!r} vs {r_rhs!r}"
                        )
                    break
            failures += failed
        reports.append(LawReport(law.id, trials, failures, first, shadow_failures))
    return reports


HOMOMORPHISM = "structure-homomorphism"


def check_structure_homomorphism(trials: int, seed: int, n: int, max_depth: int = MAX_DEPTH) -> LawReport:
    """Check the five structure-function clauses over all ``2**n`` states.

    Trial 0 covers the constant clauses and surjectivity onto ``{0, 1}``;
    each further trial draws a pair of diagrams and checks every state.
    """
    _check_args(trials, n)
    g = GeneratingSet.of(n)
    rng = _law_rng(seed, HOMOMORPHISM)
    failures, first = 0, None
    empty = StateAssignment()
    if not (evaluate(ZERO, empty) == 0 and evaluate(ONE, empty) == 1):
        failures += 1
        first = Counterexample(0, ZERO, ONE, state="", detail="constant clauses or surjectivity")
    states = [StateAssignment.from_index(k, g) for k in range(1 << n)]
    for trial in range(1, trials + 1):
        d1, d2 = random_diagram(rng, n, max_depth), random_diagram(rng, n, max_depth)
        for s in states:
            v1, v2 = evaluate(d1, s), evaluate(d2, s)
            clauses = (
                ("series", Series(d1, d2), min(v1, v2)),
                ("parallel", Parallel(d1, d2), max(v1, v2)),
                ("complement", Complement(d1), 1 - v1),
                ("zero", ZERO, 0),
                ("one", ONE, 1),
            )
            bad = next((c for c in clauses if evaluate(c[1], s) != c[2]), None)
            if bad is not None:
                failures += 1
                if first is None:
                    first = Counterexample(trial, bad[1], d2, state=s.bits(g), detail=f"{bad[0]} clause")
                break
    return LawReport(HOMOMORPHISM, trials, failures, first)


# Equality-preserving rewrites used to generate pairs of equal diagrams.
def _rewrites(t: Diagram, rng: random.Random, n: int) -> list[Diagram]:
    out = [Complement(Complement(t)), Series(t, ONE), Parallel(t, ZERO)]
    c = Elementary(ComponentId(rng.randint(1, n)))
    out.append(Parallel(t, Series(c, Complement(c))))
    out.append(Series(t, Parallel(c, Complement(c))))
    if isinstance(t, (Series, Parallel)):
        op = type(t)
        a, b = t.left, t.right
        out.append(op(b, a))
        if isinstance(a, op):
            out.append(op(a.left, op(a.right, b)))
        if isinstance(b, op):
            out.append(op(op(a, b.left), b.right))
        other = Parallel if op is Series else Series
        if isinstance(b, other):
            out.append(other(op(a, b.left), op(a, b.right)))
        if isinstance(a, other) and isinstance(b, other) and a.left == b.left:
            out.append(other(a.left, op(a.right, b.right)))
        if b == ONE and op is Series or b == ZERO and op is Parallel:
            out.append(a)
    if isinstance(t, Complement):
        inner = t.operand
        if isinstance(inner, Complement):
            out.append(inner.operand)
        if isinstance(inner, Series):
            out.append(Parallel(Complement(inner.left), Complement(inner.right)))
        if isinstance(inner, Parallel):
            out.append(Series(Complement(inner.left), Complement(inner.right)))
    return out


def _subterm_paths(d: Diagram) -> list[tuple[int, ...]]:
    paths = []
    stack = [(d, ())]
    while stack:
        t, path = stack.pop()
        paths.append(path)
        for i, child in enumerate(t.children):
            stack.append((child, path + (i,)))
    return paths


def _replace(d: Diagram, path: tuple[int, ...], new: Diagram) -> Diagram:
    if not path:
        return new
    i, rest = path[0], path[1:]
    if isinstance(d, Complement):
        return Complement(_replace(d.operand, rest, new))
    left, right = d.left, d.right
    if i == 0:
        left = _replace(left, rest, new)
    else:
        right = _replace(right, rest, new)
    return type(d)(left, right)


def random_equal_variant(d: Diagram, rng: random.Random, n: int, steps: int = 4) -> Diagram:
    """A diagram equal to ``d``, obtained by ``steps`` random axiom rewrites at random positions."""
    for _ in range(steps):
        path = rng.choice(_subterm_paths(d))
        t = d
        for i in path:
            t = t.children[i]
        d = _replace(d, path, rng.choice(_rewrites(t, rng, n)))
    return d
