# Building diagrams and reading their state.
#
# A bridge-like system: a pump A1 feeds two valves A2 and A3 in parallel,
# and a controller A4 must work for the whole thing to function.

from rbdalg import A, GeneratingSet, evaluate, parse, render, truth_table

system = A(1) * (A(2) + A(3)) * A(4)
print("diagram:", render(system))

# The same diagram from text; parsing keeps the term structure exactly.
assert parse(render(system)) == system

# Evaluate under one state: valve A2 failed, everything else working.
state = {1: 1, 2: 0, 3: 1, 4: 1}
print("functioning with A2 failed:", evaluate(system, state))

# The whole structure function as a truth table.  Entry k sets A1 from bit 0
# of k, A2 from bit 1, and so on.
g = GeneratingSet.of(4)
table = truth_table(system, g)
print("truth table:", "".join(map(str, table)))
print("working states:", int(table.sum()), "of", len(table))
