# Reliability of a system with shared components.
#
# The pump A1 appears in both branches, so the branches are not independent
# and the textbook product formulas overcount.  Shannon decomposition of the
# canonical form handles the sharing exactly.

from rbdalg import (
    parse,
    reliability_bruteforce,
    reliability_exact,
    reliability_montecarlo,
    reliability_polynomial,
)

system = parse("(A1*A2) + (A1*A3)")
p = {1: 0.9, 2: 0.8, 3: 0.5}

naive = 1 - (1 - 0.9 * 0.8) * (1 - 0.9 * 0.5)  # treats A1 as two components
print("naive parallel-of-series:", naive)
print("exact (Shannon):         ", reliability_exact(system, p))
print("exact (all states):      ", reliability_bruteforce(system, p))

report = reliability_montecarlo(system, p, samples=200_000, seed=2024)
print(f"Monte Carlo:               {report.estimate:.4f} +/- {report.standard_error:.4f}")

# The reliability as a polynomial in the component reliabilities r1, r2, r3.
print("polynomial:", reliability_polynomial(system))
