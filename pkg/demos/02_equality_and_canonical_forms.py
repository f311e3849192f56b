# Deciding whether two diagrams are the same system.
#
# Equality is equality as Boolean terms.  Each diagram is reduced to a
# canonical decision diagram; equal diagrams land on the same node.

from rbdalg import GeneratingSet, NodeStore, canonicalize, enumerate_classes, equals, export_adjacency, parse

pairs = [
    ("A1*(A2+A3)", "A1*A2 + A1*A3"),  # distributivity
    ("~(A1*A2)", "~A1 + ~A2"),  # De Morgan
    ("A1 + A1*A2", "A1"),  # absorption
    ("A1*A2", "A1+A2"),
]
for left, right in pairs:
    print(f"{left:>14}  vs  {right:<14} ->", "equal" if equals(parse(left), parse(right)) else "different")

# Canonical forms share one node store; identical roots mean equal diagrams.
store = NodeStore(GeneratingSet.of(3))
f = canonicalize(parse("A1*A2 + A3"), store=store)
g = canonicalize(parse("(A3 + A1) * (A3 + A2)"), store=store)
print("same root:", f == g)
print(export_adjacency(f))

# Over n components there are exactly 2^(2^n) distinct systems.
for n in range(1, 5):
    print(f"n={n}: {enumerate_classes(n).count} classes")
