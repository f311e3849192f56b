"""Independent reference computations used by the tests.

These deliberately avoid numpy and canonical forms: states are enumerated
with itertools and evaluated with the scalar structure function.
"""

import itertools
from fractions import Fraction

from rbdalg.diagram import evaluate


def enumerate_reliability(d, probs, comps):
    """Sum over all states of ``comps`` of P(state) * Phi(d, state), in exact rationals."""
    total = Fraction(0)
    for bits in itertools.product((0, 1), repeat=len(comps)):
        state = dict(zip(comps, bits))
        if evaluate(d, state):
            weight = Fraction(1)
            for c, b in state.items():
                p = Fraction(probs[c])
                weight *= p if b else 1 - p
            total += weight
    return total


def enumerate_table(d, comps):
    """Little-endian truth table by explicit enumeration."""
    out = []
    for k in range(1 << len(comps)):
        out.append(evaluate(d, {c: (k >> j) & 1 for j, c in enumerate(comps)}))
    return out
