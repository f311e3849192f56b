"""Exit criteria of the package, one test per criterion.

Each test prints (and adds to the terminal summary) one PASS/FAIL line.
Tolerances and budgets are fixed here and never tuned.
"""

import contextlib
import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from rbdalg.canonical import NodeStore, canonicalize, enumerate_classes, equals
from rbdalg.cli import main
from rbdalg.diagram import Diagram, GeneratingSet, components_of
from rbdalg.laws import (
    Law,
    check_diagram_algebra,
    check_reliability_algebra,
    check_structure_homomorphism,
    random_diagram,
    random_equal_variant,
)
from rbdalg.parser import ParseError, parse, render
from rbdalg.reliability import (
    ReliabilityAssignment,
    reliability_bruteforce,
    reliability_exact,
    reliability_montecarlo,
)

TOL = 1e-12


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"criterion {number} ({title}): FAIL - {type(exc).__name__}: {exc}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        raise
    line = f"criterion {number} ({title}): PASS [{time.perf_counter() - start:.1f}s]"
    print(line)
    ACCEPTANCE_LINES.append(line)


def test_1_class_count(capsys):
    with criterion(1, "2^(2^n) classes for n = 1..4"):
        for n, expected in [(1, 4), (2, 16), (3, 256)]:
            assert main(["enum", str(n)]) == 0
            assert capsys.readouterr().out.strip() == str(expected)
        start = time.perf_counter()
        result = enumerate_classes(4, with_tables=True)
        elapsed = time.perf_counter() - start
        assert result.count == 65536
        # each class representative canonicalizes to its own root
        assert len(set(result.tables)) == 65536
        assert elapsed < 10.0, f"n = 4 took {elapsed:.1f}s"


def test_2_diagram_algebra():
    with criterion(2, "diagram algebra is Boolean, mutation caught"):
        start = time.perf_counter()
        for seed in (0, 20260101):
            reports = check_diagram_algebra(trials=1000, seed=seed, n=4)
            assert len(reports) == 10
            assert all(r.failures == 0 for r in reports), [str(r) for r in reports if not r.passed]
        elapsed = (time.perf_counter() - start) / 2
        assert elapsed < 30.0, f"suite took {elapsed:.1f}s"
        corrupted = Law("corrupted-series", 2, lambda a, x, y: a.meet(x, y), lambda a, x, y: a.join(y, x))
        (report,) = check_diagram_algebra(trials=1000, seed=0, n=4, laws=[corrupted])
        assert report.failures >= 1 and report.first_counterexample is not None


def test_3_reliability_algebra():
    with criterion(3, "reliability algebra is Boolean, numeric shadow within 1e-12"):
        reports = check_reliability_algebra(trials=500, seed=3, n=4, tolerance=TOL)
        assert len(reports) == 10
        assert all(r.failures == 0 and r.shadow_failures == 0 for r in reports), [str(r) for r in reports]


def test_4_structure_homomorphism():
    with criterion(4, "structure function is a homomorphism onto {0,1}"):
        report = check_structure_homomorphism(trials=1000, seed=4, n=4)
        assert report.failures == 0, str(report)


def _random_assignment(rng, g):
    probs = {}
    for c in g:
        u = rng.random()
        probs[c] = 0.0 if u < 0.05 else 1.0 if u < 0.1 else rng.random()
    return ReliabilityAssignment(probs)


def test_5_oracle_equivalence():
    with criterion(5, "Shannon vs brute force on 10,000 pairs"):
        rng = random.Random(5)
        start = time.perf_counter()
        worst = 0.0
        for _ in range(10_000):
            n = rng.randint(1, 10)
            g = GeneratingSet.of(n)
            d = random_diagram(rng, n)
            p = _random_assignment(rng, g)
            worst = max(worst, abs(reliability_exact(d, p, g) - reliability_bruteforce(d, p, g)))
        elapsed = time.perf_counter() - start
        assert worst <= TOL, f"max deviation {worst!r}"
        assert elapsed < 120.0, f"took {elapsed:.1f}s"


def test_6_quotient_well_defined():
    with criterion(6, "equal diagrams have equal reliability"):
        rng = random.Random(6)
        g = GeneratingSet.of(4)
        for _ in range(1000):
            d1 = random_diagram(rng, 4, max_depth=5)
            d2 = random_equal_variant(d1, rng, 4, steps=5)
            assert equals(d1, d2, g)
            store = NodeStore(g)
            for _ in range(8):
                p = _random_assignment(rng, g)
                r1 = reliability_exact(d1, p, store=store)
                r2 = reliability_exact(d2, p, g)  # separate store: no shared node ids
                assert abs(r1 - r2) <= TOL, (render(d1), render(d2), dict(p))


def test_7_repeated_components(tmp_path, capsys):
    with criterion(7, "repeated components"):
        path = tmp_path / "probs.txt"
        path.write_text("A1 = 0.9\n")
        assert main(["rel", "A1*A1", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "0.9"
        path.write_text("A1 = 0.9\nA2 = 0.8\nA3 = 0.5\n")
        assert main(["rel", "(A1*A2)+(A1*A3)", str(path)]) == 0
        printed = float(capsys.readouterr().out.strip())
        d = parse("(A1*A2)+(A1*A3)")
        brute = reliability_bruteforce(d, {1: 0.9, 2: 0.8, 3: 0.5}, GeneratingSet.of(3))
        assert abs(printed - brute) <= TOL
        assert abs(printed - 0.81) <= TOL


_FUZZ_ALPHABET = b"A0123456789()~*+&| \t\n"


def test_8_parser_round_trip_and_fuzz():
    with criterion(8, "parser round trip and fuzzing"):
        rng = random.Random(8)
        for _ in range(10_000):
            d = random_diagram(rng, rng.randint(1, 12))
            assert parse(render(d)) == d
        for i in range(100_000):
            size = rng.randint(0, 24)
            if i % 2:
                data = bytes(rng.randrange(256) for _ in range(size))
            else:
                data = bytes(rng.choice(_FUZZ_ALPHABET) for _ in range(size))
            try:
                result = parse(data)
            except ParseError:
                continue
            assert isinstance(result, Diagram)


def test_9_monte_carlo_calibration():
    with criterion(9, "Monte Carlo coverage at 4 standard errors"):
        d = parse("(A1*A2)+(A1*A3)")
        p = {1: 0.9, 2: 0.8, 3: 0.5}
        exact = reliability_exact(d, p)
        assert exact == pytest.approx(0.81, abs=TOL)
        covered = 0
        for seed in range(100):
            report = reliability_montecarlo(d, p, samples=10_000, seed=seed)
            covered += abs(report.estimate - exact) <= 4 * report.standard_error
        assert covered >= 99, f"only {covered} of 100 intervals cover {exact}"
