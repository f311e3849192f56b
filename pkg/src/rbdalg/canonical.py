"""Canonical forms of diagrams as reduced ordered binary decision diagrams.

Every Boolean function over a generating set has exactly one node in a
:class:`NodeStore`, so two diagrams are equal as Boolean terms iff their
canonical forms have the same root.  Variables are tested in generating-set
order.  The induced operations :func:`meet`, :func:`join` and
:func:`complement` act directly on canonical forms; together with the two
terminals they form the quotient algebra of diagrams.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from rbdalg.diagram import (
    ONE,
    ZERO,
    ComponentId,
    Diagram,
    GeneratingSet,
    Parallel,
    Series,
    StateAssignment,
    Complement,
    Elementary,
    fold,
    require_built_upon,
)
from rbdalg.errors import CapExceededError, MissingComponentError, OutOfRangeError, StoreMismatchError

FALSE, TRUE = 0, 1
NODE_CAPACITY = 1 << 22
REPRESENTATIVE_CAP = 20


class NodeStore:
    """Hash-consed node table for one generating set.

    Nodes are integers.  ``0`` and ``1`` are the terminals; every other node
    ``u`` has a level (position of its component in the generating set) and
    ``low``/``high`` children for the component failed/functioning.  The store
    is single-writer: operations that create nodes must not run concurrently
    on the same store.
    """

    def __init__(self, generating_set: GeneratingSet, capacity: int = NODE_CAPACITY):
        self.generating_set = generating_set
        self.capacity = capacity
        n = len(generating_set)
        # terminals sit below every variable
        self._level = [n, n]
        self._low = [FALSE, TRUE]
        self._high = [FALSE, TRUE]
        self._unique: dict[tuple[int, int, int], int] = {}
        self._apply_memo: dict[tuple[str, int, int], int] = {}
        self._not_memo: dict[int, int] = {}

    def __len__(self):
        return len(self._level)

    def level(self, u: int) -> int:
        return self._level[u]

    def low(self, u: int) -> int:
        return self._low[u]

    def high(self, u: int) -> int:
        return self._high[u]

    def component(self, u: int) -> ComponentId:
        return self.generating_set.components[self._level[u]]

    def is_terminal(self, u: int) -> bool:
        return u < 2

    def mk(self, level: int, low: int, high: int) -> int:
        if low == high:
            return low
        key = (level, low, high)
        u = self._unique.get(key)
        if u is None:
            if len(self._level) >= self.capacity:
                raise CapExceededError(f"node store capacity {self.capacity} exceeded")
            u = len(self._level)
            self._level.append(level)
            self._low.append(low)
            self._high.append(high)
            self._unique[key] = u
        return u

    def variable(self, c: ComponentId | int) -> int:
        return self.mk(self.generating_set.position(c), FALSE, TRUE)

    def apply(self, op: str, u: int, v: int) -> int:
        """``op`` is ``"and"`` or ``"or"``."""
        if op == "and":
            if u == FALSE or v == FALSE:
                return FALSE
            if u == TRUE:
                return v
            if v == TRUE or u == v:
                return u
        else:
            if u == TRUE or v == TRUE:
                return TRUE
            if u == FALSE:
                return v
            if v == FALSE or u == v:
                return u
        if u > v:
            u, v = v, u
        key = (op, u, v)
        r = self._apply_memo.get(key)
        if r is not None:
            return r
        lu, lv = self._level[u], self._level[v]
        top = min(lu, lv)
        u0, u1 = (self._low[u], self._high[u]) if lu == top else (u, u)
        v0, v1 = (self._low[v], self._high[v]) if lv == top else (v, v)
        r = self.mk(top, self.apply(op, u0, v0), self.apply(op, u1, v1))
        self._apply_memo[key] = r
        return r

    def negate(self, u: int) -> int:
        if u < 2:
            return 1 - u
        r = self._not_memo.get(u)
        if r is None:
            r = self.mk(self._level[u], self.negate(self._low[u]), self.negate(self._high[u]))
            self._not_memo[u] = r
            self._not_memo[r] = u
        return r

    def reachable(self, root: int) -> list[int]:
        """Internal nodes reachable from ``root`` in depth-first preorder (low before high)."""
        seen: set[int] = set()
        order = []
        stack = [root]
        while stack:
            u = stack.pop()
            if u < 2 or u in seen:
                continue
            seen.add(u)
            order.append(u)
            stack.append(self._high[u])
            stack.append(self._low[u])
        return order

    def triples(self) -> Iterator[tuple[int, int, int, int]]:
        """``(node, level, low, high)`` for every internal node."""
        for u in range(2, len(self._level)):
            yield u, self._level[u], self._low[u], self._high[u]

    def one(self) -> CanonicalForm:
        return CanonicalForm(self, TRUE)

    def zero(self) -> CanonicalForm:
        return CanonicalForm(self, FALSE)


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """A node of a :class:`NodeStore`; equal forms have the same store and node."""

    store: NodeStore
    root: int

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.store is other.store and self.root == other.root

    def __hash__(self):
        return hash((id(self.store), self.root))

    def __repr__(self):
        return f"CanonicalForm(root={self.root}, nodes={len(self.store.reachable(self.root))})"

    @property
    def is_one(self) -> bool:
        return self.root == TRUE

    @property
    def is_zero(self) -> bool:
        return self.root == FALSE

    def evaluate(self, s: Mapping[ComponentId | int, int]) -> int:
        """Follow the decision path selected by ``s`` to a terminal."""
        if not isinstance(s, StateAssignment):
            s = StateAssignment(s)
        u = self.root
        store = self.store
        while u > 1:
            c = store.component(u)
            try:
                bit = s[c]
            except KeyError:
                raise MissingComponentError(f"no state assigned to {c}") from None
            u = store.high(u) if bit else store.low(u)
        return u

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __invert__(self):
        return complement(self)


def canonicalize(d: Diagram, g: GeneratingSet | None = None, store: NodeStore | None = None) -> CanonicalForm:
    """Canonical form of ``d``.

    With ``store`` given, the form lives in that store and ``g`` defaults to
    its generating set; otherwise a fresh store over ``g`` (default: the
    components of ``d`` in index order) is created.
    """
    if store is None:
        store = NodeStore(g if g is not None else GeneratingSet.for_diagrams(d))
    elif g is not None and g != store.generating_set:
        raise StoreMismatchError("generating set differs from the store's")
    require_built_upon(d, store.generating_set)
    return CanonicalForm(store, _build(store, d))


def _build(store: NodeStore, d: Diagram, memo: dict[int, int] | None = None) -> int:
    return fold(
        d,
        elementary=store.variable,
        one=lambda: TRUE,
        zero=lambda: FALSE,
        series=lambda u, v: store.apply("and", u, v),
        parallel=lambda u, v: store.apply("or", u, v),
        complement=store.negate,
        memo=memo,
    )


def equals(d1: Diagram, d2: Diagram, g: GeneratingSet | None = None) -> bool:
    """Whether ``d1`` and ``d2`` are equal as Boolean terms."""
    store = NodeStore(g if g is not None else GeneratingSet.for_diagrams(d1, d2))
    return canonicalize(d1, store=store) == canonicalize(d2, store=store)


def _same_store(a: CanonicalForm, b: CanonicalForm) -> NodeStore:
    if a.store is not b.store:
        raise StoreMismatchError("canonical forms belong to different node stores")
    return a.store


def meet(c1: CanonicalForm, c2: CanonicalForm) -> CanonicalForm:
    """Series composition of two classes."""
    store = _same_store(c1, c2)
    return CanonicalForm(store, store.apply("and", c1.root, c2.root))


def join(c1: CanonicalForm, c2: CanonicalForm) -> CanonicalForm:
    """Parallel composition of two classes."""
    store = _same_store(c1, c2)
    return CanonicalForm(store, store.apply("or", c1.root, c2.root))


def complement(c: CanonicalForm) -> CanonicalForm:
    return CanonicalForm(c.store, c.store.negate(c.root))


def form_truth_table(c: CanonicalForm) -> list[int]:
    """Truth table of ``c`` over its store's generating set, little-endian."""
    g = c.store.generating_set
    if len(g) > REPRESENTATIVE_CAP:
        raise CapExceededError(f"truth table over {len(g)} components exceeds cap {REPRESENTATIVE_CAP}")
    return [c.evaluate(StateAssignment.from_index(k, g)) for k in range(1 << len(g))]


def dnf(table: list[int] | tuple[int, ...], g: GeneratingSet) -> Diagram:
    """Full disjunctive normal form of a little-endian truth table over ``g``."""
    if len(table) != 1 << len(g):
        raise ValueError(f"truth table of length {len(table)} does not match {len(g)} components")
    if all(table):
        return ONE
    minterms = []
    for k, bit in enumerate(table):
        if not bit:
            continue
        term: Diagram | None = None
        for j, c in enumerate(g):
            literal = Elementary(c) if (k >> j) & 1 else Complement(Elementary(c))
            term = literal if term is None else Series(term, literal)
        minterms.append(term)
    if not minterms:
        return ZERO
    result = minterms[0]
    for m in minterms[1:]:
        result = Parallel(result, m)
    return result


def representative(c: CanonicalForm) -> Diagram:
    """A diagram in the class of ``c`` (full DNF over its true points)."""
    if c.root == TRUE:
        return ONE
    if c.root == FALSE:
        return ZERO
    return dnf(form_truth_table(c), c.store.generating_set)


@dataclass(frozen=True)
class ClassEnumeration:
    n: int
    count: int
    # one little-endian truth table per class, in integer order of the table bits
    tables: tuple[tuple[int, ...], ...] | None = None


def enumerate_classes(n: int, with_tables: bool = False) -> ClassEnumeration:
    """Count the mutually nonequal diagrams over ``A1..An`` constructively.

    Every Boolean function of ``n`` variables gets a DNF representative which
    is canonicalized into one shared store; the count is the number of
    distinct roots obtained, checked against the number of functions.
    """
    low = 1 if with_tables else 0
    if isinstance(n, bool) or not isinstance(n, int) or not low <= n <= 4:
        raise OutOfRangeError(f"n must be in [{low}, 4], got {n!r}")
    g = GeneratingSet.of(n)
    store = NodeStore(g)
    roots: set[int] = set()
    tables = []
    # Representatives are built exactly as dnf() builds them, but share their
    # minterm-prefix subterms so each canonicalization only folds new nodes.
    minterms = [dnf([int(k == m) for k in range(1 << n)], g) for m in range(1 << n)]
    prefixes: dict[tuple[int, ...], Diagram] = {}
    memo: dict[int, int] = {}
    for table in itertools.product((0, 1), repeat=1 << n):
        table = table[::-1]  # enumerate functions in integer order of their table
        points = tuple(k for k, bit in enumerate(table) if bit)
        if len(points) == len(table):
            rep = ONE
        elif not points:
            rep = ZERO
        elif len(points) == 1:
            rep = minterms[points[0]]
        else:
            rep = Parallel(prefixes.get(points[:-1]) or _chain(points[:-1], minterms), minterms[points[-1]])
        prefixes[points] = rep
        # representatives are built upon g by construction
        roots.add(_build(store, rep, memo))
        if with_tables:
            tables.append(table)
    expected = 1 << (1 << n)
    if len(roots) != expected:
        raise AssertionError(f"found {len(roots)} classes for n={n}, expected {expected}")
    # every internal node of the shared store is the root of some representative's form
    internal = {u for u, *_ in store.triples()}
    if not internal <= roots:
        raise AssertionError("store holds a form not reached by any representative")
    return ClassEnumeration(n=n, count=len(roots), tables=tuple(tables) if with_tables else None)


def _chain(points, minterms):
    result = minterms[points[0]]
    for k in points[1:]:
        result = Parallel(result, minterms[k])
    return result


def export_adjacency(c: CanonicalForm) -> str:
    """Text adjacency list of ``c``.

    The first line is ``root <id>``; each further line is
    ``<id> <component index> <low id> <high id>``.  Terminals have ids 0 and 1,
    internal nodes are numbered from 2 in depth-first preorder (low first).
    """
    store = c.store
    order = store.reachable(c.root)
    ids = {FALSE: 0, TRUE: 1}
    for i, u in enumerate(order, start=2):
        ids[u] = i
    lines = [f"root {ids[c.root]}"]
    for u in order:
        lines.append(f"{ids[u]} {store.component(u).index} {ids[store.low(u)]} {ids[store.high(u)]}")
    return "\n".join(lines)
