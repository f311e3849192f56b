"""Diagram terms, generating sets, state assignments and the structure function.

A diagram is an immutable term built from elementary components ``A1, A2, ...``,
the constants ``1`` (functioning) and ``0`` (failed), and the three connectives
series (``*``), parallel (``+``) and complement (``~``).  The Python operators
``*``, ``+`` and ``~`` build the corresponding composite terms::

    >>> d = A(1) * (A(2) + ~A(1))
    >>> evaluate(d, {1: 1, 2: 0})
    0

Truth tables use little-endian state order: entry ``k`` of the table assigns
bit ``j`` of ``k`` to the ``j``-th component of the generating set.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import TypeVar

import numpy as np

from rbdalg.errors import CapExceededError, MissingComponentError, NotBuiltUponError

T = TypeVar("T")

TRUTH_TABLE_CAP = 20


@dataclass(frozen=True, order=True, slots=True)
class ComponentId:
    """Identifier of the elementary diagram ``A<index>`` (1-based)."""

    index: int

    def __post_init__(self):
        if isinstance(self.index, bool) or not isinstance(self.index, int):
            raise TypeError(f"component index must be an int, got {self.index!r}")
        if self.index < 1:
            raise ValueError(f"component index must be >= 1, got {self.index}")

    def __str__(self):
        return f"A{self.index}"


def component(key: ComponentId | int) -> ComponentId:
    """Coerce an int or a ComponentId into a ComponentId."""
    if isinstance(key, ComponentId):
        return key
    return ComponentId(key)


class Diagram:
    """Base class of diagram terms.  Instances are immutable."""

    __slots__ = ()

    @property
    def children(self) -> tuple[Diagram, ...]:
        return ()

    def __mul__(self, other: Diagram) -> Series:
        return Series(self, other)

    def __add__(self, other: Diagram) -> Parallel:
        return Parallel(self, other)

    def __invert__(self) -> Complement:
        return Complement(self)

    def __str__(self):
        from rbdalg.parser import render

        return render(self)


@dataclass(frozen=True, slots=True)
class Elementary(Diagram):
    component: ComponentId

    def __post_init__(self):
        if not isinstance(self.component, ComponentId):
            object.__setattr__(self, "component", ComponentId(self.component))


@dataclass(frozen=True, slots=True)
class One(Diagram):
    pass


@dataclass(frozen=True, slots=True)
class Zero(Diagram):
    pass


@dataclass(frozen=True, slots=True)
class Series(Diagram):
    left: Diagram
    right: Diagram

    @property
    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Parallel(Diagram):
    left: Diagram
    right: Diagram

    @property
    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Complement(Diagram):
    operand: Diagram

    @property
    def children(self):
        return (self.operand,)


ONE = One()
ZERO = Zero()


def A(index: int) -> Elementary:
    """Shorthand for the elementary diagram ``A<index>``."""
    return Elementary(ComponentId(index))


def fold(
    d: Diagram,
    elementary: Callable[[ComponentId], T],
    one: Callable[[], T],
    zero: Callable[[], T],
    series: Callable[[T, T], T],
    parallel: Callable[[T, T], T],
    complement: Callable[[T], T],
    memo: dict[int, T] | None = None,
) -> T:
    """Bottom-up structural recursion over ``d`` without using the call stack.

    Subterms shared by object identity are folded once.  A ``memo`` dict
    (keyed by ``id`` of subterms) may be carried across calls; the caller must
    keep those subterms alive.
    """
    done: dict[int, T] = {} if memo is None else memo
    stack = [d]
    while stack:
        node = stack[-1]
        if id(node) in done:
            stack.pop()
            continue
        pending = [c for c in node.children if id(c) not in done]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if isinstance(node, Elementary):
            value = elementary(node.component)
        elif isinstance(node, Series):
            value = series(done[id(node.left)], done[id(node.right)])
        elif isinstance(node, Parallel):
            value = parallel(done[id(node.left)], done[id(node.right)])
        elif isinstance(node, Complement):
            value = complement(done[id(node.operand)])
        elif isinstance(node, One):
            value = one()
        elif isinstance(node, Zero):
            value = zero()
        else:
            raise TypeError(f"not a diagram: {node!r}")
        done[id(node)] = value
    return done[id(d)]


@dataclass(frozen=True, slots=True)
class GeneratingSet:
    """Ordered collection of pairwise distinct components.

    The order is the variable order used by canonical forms and the bit order
    of truth tables.
    """

    components: tuple[ComponentId, ...]

    def __post_init__(self):
        comps = tuple(component(c) for c in self.components)
        if len(set(comps)) != len(comps):
            raise ValueError(f"duplicate components in generating set: {comps}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, n: int) -> GeneratingSet:
        """The generating set ``A1, ..., An``."""
        return cls(tuple(ComponentId(i) for i in range(1, n + 1)))

    @classmethod
    def from_components(cls, comps: Iterable[ComponentId | int]) -> GeneratingSet:
        """Generating set of the given components in ascending index order."""
        return cls(tuple(sorted({component(c) for c in comps})))

    @classmethod
    def for_diagrams(cls, *diagrams: Diagram) -> GeneratingSet:
        comps: set[ComponentId] = set()
        for d in diagrams:
            comps |= components_of(d)
        return cls.from_components(comps)

    def __len__(self):
        return len(self.components)

    def __iter__(self) -> Iterator[ComponentId]:
        return iter(self.components)

    def __contains__(self, item):
        try:
            return component(item) in self.components
        except (TypeError, ValueError):
            return False

    def position(self, c: ComponentId | int) -> int:
        return self.components.index(component(c))


class StateAssignment(Mapping):
    """Total map from components to bits (1 functioning, 0 failed)."""

    __slots__ = ("_states",)

    def __init__(self, states: Mapping[ComponentId | int, int] | None = None):
        parsed = {}
        for key, bit in (states or {}).items():
            if bit not in (0, 1):
                raise ValueError(f"state of {key} must be 0 or 1, got {bit!r}")
            parsed[component(key)] = int(bit)
        self._states = parsed

    @classmethod
    def from_index(cls, k: int, g: GeneratingSet) -> StateAssignment:
        """State ``k`` in little-endian order over ``g``."""
        return cls({c: (k >> j) & 1 for j, c in enumerate(g)})

    def __getitem__(self, key):
        return self._states[component(key)]

    def __iter__(self):
        return iter(self._states)

    def __len__(self):
        return len(self._states)

    def __repr__(self):
        inner = ", ".join(f"{c}: {b}" for c, b in sorted(self._states.items()))
        return f"StateAssignment({{{inner}}})"

    def bits(self, g: GeneratingSet) -> str:
        """The assignment as a bit string in generating-set order."""
        return "".join(str(self[c]) for c in g)


def components_of(d: Diagram) -> frozenset[ComponentId]:
    """The set of components occurring in ``d``."""
    empty: frozenset[ComponentId] = frozenset()
    return fold(
        d,
        elementary=lambda c: frozenset((c,)),
        one=lambda: empty,
        zero=lambda: empty,
        series=frozenset.union,
        parallel=frozenset.union,
        complement=lambda x: x,
    )


def built_upon(d: Diagram, g: GeneratingSet) -> bool:
    """True iff every component of ``d`` belongs to ``g``."""
    return components_of(d) <= set(g.components)


def require_built_upon(d: Diagram, g: GeneratingSet) -> None:
    extra = components_of(d) - set(g.components)
    if extra:
        names = ", ".join(str(c) for c in sorted(extra))
        raise NotBuiltUponError(f"diagram uses components outside the generating set: {names}")


def evaluate(d: Diagram, s: Mapping[ComponentId | int, int]) -> int:
    """Structure function: 1 if ``d`` is functioning under ``s``, else 0.

    States of components not occurring in ``d`` are ignored.
    """
    if not isinstance(s, StateAssignment):
        s = StateAssignment(s)

    def state_of(c: ComponentId) -> int:
        try:
            return s[c]
        except KeyError:
            raise MissingComponentError(f"no state assigned to {c}") from None

    return fold(
        d,
        elementary=state_of,
        one=lambda: 1,
        zero=lambda: 0,
        series=min,
        parallel=max,
        complement=lambda x: 1 - x,
    )


def state_columns(g: GeneratingSet) -> dict[ComponentId, np.ndarray]:
    """Boolean column of every component over all ``2**len(g)`` states."""
    k = np.arange(1 << len(g), dtype=np.int64)
    return {c: ((k >> j) & 1).astype(bool) for j, c in enumerate(g)}


def evaluate_columns(d: Diagram, columns: Mapping[ComponentId, np.ndarray], size: int) -> np.ndarray:
    """Vectorised structure function over a batch of states.

    ``columns`` maps each component to a boolean array of length ``size``.
    """

    def column(c: ComponentId) -> np.ndarray:
        try:
            return columns[c]
        except KeyError:
            raise MissingComponentError(f"no state assigned to {c}") from None

    return fold(
        d,
        elementary=column,
        one=lambda: np.ones(size, dtype=bool),
        zero=lambda: np.zeros(size, dtype=bool),
        series=np.logical_and,
        parallel=np.logical_or,
        complement=np.logical_not,
    )


def truth_table(d: Diagram, g: GeneratingSet | None = None, cap: int = TRUTH_TABLE_CAP) -> np.ndarray:
    """Values of ``d`` on all states of ``g`` as a uint8 vector (little-endian order)."""
    if g is None:
        g = GeneratingSet.for_diagrams(d)
    require_built_upon(d, g)
    if len(g) > cap:
        raise CapExceededError(f"truth table over {len(g)} components exceeds cap {cap}")
    return evaluate_columns(d, state_columns(g), 1 << len(g)).astype(np.uint8)
