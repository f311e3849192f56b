"""Algebra of binary reliability block diagrams.

Diagrams are built from components ``A1, A2, ...`` with series, parallel and
complement.  The package evaluates their structure function, decides their
equality as Boolean terms through canonical decision diagrams, computes their
reliability over independent components, and checks the Boolean-algebra laws
of diagrams and of their reliability terms.
"""

from rbdalg.canonical import (
    CanonicalForm,
    ClassEnumeration,
    NodeStore,
    canonicalize,
    complement,
    enumerate_classes,
    equals,
    export_adjacency,
    join,
    meet,
    representative,
)
from rbdalg.diagram import (
    ONE,
    ZERO,
    A,
    Complement,
    ComponentId,
    Diagram,
    Elementary,
    GeneratingSet,
    One,
    Parallel,
    Series,
    StateAssignment,
    Zero,
    built_upon,
    components_of,
    evaluate,
    truth_table,
)
from rbdalg.errors import (
    CapExceededError,
    DiagramError,
    MissingComponentError,
    MissingProbabilityError,
    NotBuiltUponError,
    OutOfRangeError,
    StoreMismatchError,
)
from rbdalg.laws import (
    LAWS,
    Law,
    LawReport,
    check_diagram_algebra,
    check_reliability_algebra,
    check_structure_homomorphism,
)
from rbdalg.parser import ErrorKind, ParseError, parse, render
from rbdalg.reliability import (
    MonteCarloReport,
    ReliabilityAssignment,
    ReliabilityPolynomial,
    reliability_bruteforce,
    reliability_exact,
    reliability_montecarlo,
    reliability_polynomial,
)

__version__ = "0.1.0"
