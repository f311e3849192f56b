# Checking the Boolean-algebra laws by random testing.
#
# Three suites: the laws on diagram terms, the same laws on canonical forms
# (with a numeric check on reliabilities), and the structure function being
# a homomorphism onto {0, 1}.

from rbdalg import Law, check_diagram_algebra, check_reliability_algebra, check_structure_homomorphism


def run_suites(trials=200, seed=1, n=4):
    print("diagrams")
    for report in check_diagram_algebra(trials, seed, n):
        print("  ", report)
    print("reliability terms")
    for report in check_reliability_algebra(trials, seed, n):
        print("  ", report)
    print("structure function")
    print("  ", check_structure_homomorphism(trials, seed, n))


def show_a_broken_law():
    # series and parallel swapped: the checker reports a counterexample
    wrong = Law("series-is-parallel", 2, lambda a, x, y: a.meet(x, y), lambda a, x, y: a.join(x, y))
    (report,) = check_diagram_algebra(50, 0, 2, laws=[wrong], max_depth=2)
    print(report)


if __name__ == "__main__":
    run_suites()
    show_a_broken_law()
