"""Reliability of diagrams over independent components.

The reliability ``r(D)`` is the probability that ``D`` is functioning when
component ``A_i`` functions independently with probability ``p_i``.  Three
routes compute it:

* :func:`reliability_bruteforce` sums the structure function over all states;
* :func:`reliability_exact` applies Shannon decomposition to the canonical
  form, ``r(u) = p_i * r(high) + (1 - p_i) * r(low)``, memoized per node;
* :func:`reliability_montecarlo` samples component states.

:func:`reliability_polynomial` gives the same quantity symbolically as a
multilinear polynomial with exact rational coefficients.

Repeated occurrences of a component are never treated as independent, so
``r(A1 * A1) == r(A1)``.
"""

from __future__ import annotations

import math
import re
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from rbdalg.canonical import FALSE, TRUE, CanonicalForm, NodeStore, canonicalize
from rbdalg.diagram import (
    TRUTH_TABLE_CAP,
    ComponentId,
    Diagram,
    GeneratingSet,
    component,
    components_of,
    evaluate_columns,
    require_built_upon,
    state_columns,
)
from rbdalg.errors import CapExceededError, MissingProbabilityError

MC_CHUNK = 1 << 16


class ReliabilityAssignment(Mapping):
    """Map from components to functioning probabilities in ``[0, 1]``."""

    __slots__ = ("_probs",)

    def __init__(self, probs: Mapping[ComponentId | int, float] | None = None):
        parsed = {}
        for key, p in (probs or {}).items():
            p = float(p)
            if not 0.0 <= p <= 1.0:  # also rejects nan
                raise ValueError(f"reliability of {key} must be in [0, 1], got {p!r}")
            parsed[component(key)] = p
        self._probs = parsed

    def __getitem__(self, key):
        return self._probs[component(key)]

    def __iter__(self):
        return iter(self._probs)

    def __len__(self):
        return len(self._probs)

    def __repr__(self):
        inner = ", ".join(f"{c}: {p!r}" for c, p in sorted(self._probs.items()))
        return f"ReliabilityAssignment({{{inner}}})"

    @classmethod
    def parse(cls, text: str) -> ReliabilityAssignment:
        """Read ``A<k> = <probability>`` lines; ``#`` starts a comment."""
        probs: dict[ComponentId, float] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            m = re.fullmatch(r"A([0-9]+)\s*=\s*(\S+)", line)
            if m is None:
                raise ValueError(f"line {lineno}: expected 'A<k> = <probability>', got {raw!r}")
            c = ComponentId(int(m.group(1)))
            if c in probs:
                raise ValueError(f"line {lineno}: duplicate entry for {c}")
            try:
                p = float(m.group(2))
            except ValueError:
                raise ValueError(f"line {lineno}: not a number: {m.group(2)!r}") from None
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"line {lineno}: probability {p!r} of {c} outside [0, 1]")
            probs[c] = p
        return cls(probs)

    @classmethod
    def load(cls, path: str | Path) -> ReliabilityAssignment:
        return cls.parse(Path(path).read_text())

    def dumps(self) -> str:
        return "".join(f"{c} = {p!r}\n" for c, p in sorted(self._probs.items()))


def _coerce(p) -> ReliabilityAssignment:
    return p if isinstance(p, ReliabilityAssignment) else ReliabilityAssignment(p)


def _check_probabilities(d: Diagram, p: ReliabilityAssignment) -> None:
    missing = components_of(d) - set(p)
    if missing:
        names = ", ".join(str(c) for c in sorted(missing))
        raise MissingProbabilityError(f"no reliability assigned to {names}")


def _prepare(d, p, g):
    p = _coerce(p)
    if g is None:
        g = GeneratingSet.for_diagrams(d)
    require_built_upon(d, g)
    _check_probabilities(d, p)
    return p, g


def reliability_bruteforce(d: Diagram, p: Mapping, g: GeneratingSet | None = None) -> float:
    """Sum of ``P(state)`` over all states of ``g`` in which ``d`` functions."""
    p, g = _prepare(d, p, g)
    if len(g) > TRUTH_TABLE_CAP:
        raise CapExceededError(f"brute force over {len(g)} components exceeds cap {TRUTH_TABLE_CAP}")
    functioning = evaluate_columns(d, state_columns(g), 1 << len(g))
    return math.fsum(state_probabilities(p, g)[functioning])


def state_probabilities(p: Mapping, g: GeneratingSet) -> np.ndarray:
    """Probability of every state of ``g`` (little-endian order) under independence.

    Components without a probability get 1/2; callers only use this for
    components the diagram in question does not depend on.
    """
    weights = np.ones(1 << len(g))
    for c, col in state_columns(g).items():
        pc = p[c] if c in p else 0.5
        weights *= np.where(col, pc, 1.0 - pc)
    return weights


def shannon(form: CanonicalForm, p: Mapping[ComponentId, float]) -> float:
    """Reliability of a canonical form by Shannon decomposition."""
    store = form.store
    memo = {FALSE: 0.0, TRUE: 1.0}
    stack = [form.root]
    while stack:
        u = stack[-1]
        if u in memo:
            stack.pop()
            continue
        lo, hi = store.low(u), store.high(u)
        if lo in memo and hi in memo:
            stack.pop()
            pi = p[store.component(u)]
            memo[u] = pi * memo[hi] + (1.0 - pi) * memo[lo]
        else:
            stack.extend(x for x in (lo, hi) if x not in memo)
    return memo[form.root]


def reliability_exact(
    d: Diagram,
    p: Mapping,
    g: GeneratingSet | None = None,
    store: NodeStore | None = None,
) -> float:
    """Exact reliability of ``d`` by Shannon decomposition of its canonical form."""
    if store is not None:
        g = store.generating_set
    p, g = _prepare(d, p, g)
    form = canonicalize(d, g, store=store)
    return shannon(form, p)


@dataclass(frozen=True)
class ReliabilityPolynomial:
    """Multilinear polynomial in the component reliabilities ``r_i``.

    ``terms`` maps a monomial (frozenset of components, the empty set for the
    constant term) to a nonzero rational coefficient.
    """

    terms: Mapping[frozenset[ComponentId], Fraction]

    def __post_init__(self):
        object.__setattr__(self, "terms", {m: Fraction(c) for m, c in self.terms.items() if c != 0})

    def __eq__(self, other):
        if not isinstance(other, ReliabilityPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @classmethod
    def constant(cls, c) -> ReliabilityPolynomial:
        return cls({frozenset(): Fraction(c)})

    def monomials(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """``(indices, coefficient)`` pairs ordered by degree, then by indices."""
        items = [(tuple(sorted(c.index for c in m)), coef) for m, coef in self.terms.items()]
        return sorted(items, key=lambda item: (len(item[0]), item[0]))

    def evaluate(self, p: Mapping) -> float:
        """Value at ``p``, computed exactly and rounded once."""
        p = _coerce(p)
        total = Fraction(0)
        for m, coef in self.terms.items():
            term = coef
            for c in m:
                try:
                    term *= Fraction(p[c])
                except KeyError:
                    raise MissingProbabilityError(f"no reliability assigned to {c}") from None
            total += term
        return float(total)

    def __str__(self):
        items = self.monomials()
        if not items:
            return "0"
        parts = []
        for i, (indices, coef) in enumerate(items):
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            factors = [f"r{k}" for k in indices]
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if i == 0:
                parts.append(f"-{body}" if sign == "-" else body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def reliability_polynomial(d: Diagram, g: GeneratingSet | None = None) -> ReliabilityPolynomial:
    """Reliability term of ``d`` as an expanded multilinear polynomial.

    Built from the canonical form, so equal diagrams give identical polynomials.
    """
    form = canonicalize(d, g)
    store = form.store
    # poly(u) = poly(low) + r_i * (poly(high) - poly(low)); r_i never occurs below u
    memo: dict[int, dict[frozenset, Fraction]] = {FALSE: {}, TRUE: {frozenset(): Fraction(1)}}
    for u in sorted(store.reachable(form.root), key=store.level, reverse=True):
        lo, hi = memo[store.low(u)], memo[store.high(u)]
        c = store.component(u)
        poly = dict(lo)
        for m in set(hi) | set(lo):
            delta = hi.get(m, 0) - lo.get(m, 0)
            if delta:
                key = m | {c}
                poly[key] = poly.get(key, 0) + delta
        memo[u] = {m: coef for m, coef in poly.items() if coef}
    return ReliabilityPolynomial(memo[form.root])


@dataclass(frozen=True)
class MonteCarloReport:
    estimate: float
    standard_error: float
    samples: int
    seed: int

    def __str__(self):
        return (
            f"estimate={self.estimate!r} standard_error={self.standard_error!r} "
            f"samples={self.samples} seed={self.seed}"
        )


def reliability_montecarlo(
    d: Diagram,
    p: Mapping,
    samples: int,
    seed: int,
    g: GeneratingSet | None = None,
) -> MonteCarloReport:
    """Estimate ``r(d)`` from ``samples`` independent state vectors.

    Uses numpy's PCG64 generator.  The sample stream is cut into chunks of
    ``MC_CHUNK`` draws; chunk ``k`` uses ``SeedSequence(seed).spawn(...)[k]``,
    so reports are reproducible and chunks may be evaluated in any order.
    Within a chunk, a ``(chunk_size, len(g))`` matrix of uniforms is drawn
    and component ``j`` of ``g`` functions where column ``j`` is below ``p_j``.
    """
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 1:
        raise ValueError(f"samples must be a positive integer, got {samples!r}")
    if not 0 <= seed < 1 << 64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    p, g = _prepare(d, p, g)
    comps = [c for c in g if c in p]
    probs = np.array([p[c] for c in comps])
    n_chunks = -(-samples // MC_CHUNK)
    streams = np.random.SeedSequence(seed).spawn(n_chunks)
    hits = 0
    for k, stream in enumerate(streams):
        size = min(MC_CHUNK, samples - k * MC_CHUNK)
        rng = np.random.Generator(np.random.PCG64(stream))
        states = rng.random((size, len(comps))) < probs
        columns = {c: states[:, j] for j, c in enumerate(comps)}
        hits += int(np.count_nonzero(evaluate_columns(d, columns, size)))
    estimate = hits / samples
    se = math.sqrt(estimate * (1.0 - estimate) / samples)
    return MonteCarloReport(estimate=estimate, standard_error=se, samples=samples, seed=seed)

