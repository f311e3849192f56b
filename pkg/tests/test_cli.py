import pytest

from rbdalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.fixture
def probs(tmp_path):
    def write(text):
        path = tmp_path / "probs.txt"
        path.write_text(text)
        return str(path)

    return write


@pytest.mark.parametrize(
    "expr, state, expected",
    [("A1 * A2", "11", "1"), ("A1 + A2", "00", "0"), ("~A1", "1", "0"), ("1", "", "1"), ("A2 * ~A5", "10", "1")],
)
def test_eval(capsys, expr, state, expected):
    assert run(capsys, "eval", expr, state)[:2] == (0, expected)


@pytest.mark.parametrize("state", ["1", "111", "1x"])
def test_eval_bad_state(capsys, state):
    code, out, err = run(capsys, "eval", "A1 * A2", state)
    assert code == 2 and out == "" and "error" in err


def test_eval_parse_error(capsys):
    code, out, err = run(capsys, "eval", "A1 * * A2", "11")
    assert code == 2 and out == "" and "unexpected-token" in err


@pytest.mark.parametrize("expr, expected", [("A1 * A2", "0001"), ("1", "1"), ("A1 + ~A1", "11")])
def test_table(capsys, expr, expected):
    assert run(capsys, "table", expr)[:2] == (0, expected)


def test_table_cap(capsys):
    expr = " + ".join(f"A{k}" for k in range(1, 12))
    assert run(capsys, "table", expr)[0] == 3


def test_equal(capsys):
    assert run(capsys, "equal", "A1*(A2+A3)", "A1*A2 + A1*A3")[:2] == (0, "EQUAL")
    assert run(capsys, "equal", "A1", "~~A1")[:2] == (0, "EQUAL")
    assert run(capsys, "equal", "A1", "A2")[:2] == (1, "NOT EQUAL state=10")


def test_canon(capsys):
    assert run(capsys, "canon", "A1*A2 + A3")[:2] == (0, "root 2\n2 1 3 4\n3 3 0 1\n4 2 3 1")


def test_rel(capsys, probs):
    path = probs("A1 = 0.9\nA2 = 0.8\nA3 = 0.5\n")
    assert run(capsys, "rel", "A1*A2", path)[:2] == (0, "0.72")
    assert run(capsys, "rel", "A1*A1", path)[:2] == (0, "0.9")
    assert run(capsys, "rel", "--method", "brute", "(A1*A2)+(A1*A3)", path)[:2] == (0, "0.81")
    assert run(capsys, "rel", "A1+A2", path)[:2] == (0, "0.98")


def test_rel_monte_carlo(capsys, probs):
    path = probs("A1 = 0.5\n")
    code, out, _ = run(capsys, "rel", "--method", "mc", "--samples", "100000", "--seed", "7", "A1", path)
    assert code == 0
    fields = dict(item.split("=") for item in out.split())
    assert abs(float(fields["estimate"]) - 0.5) <= 5 * float(fields["standard_error"])
    assert fields["samples"] == "100000" and fields["seed"] == "7"
    again = run(capsys, "simulate", "--samples", "100000", "--seed", "7", "A1", path)
    assert again[:2] == (0, out)


def test_rel_errors(capsys, probs):
    assert run(capsys, "rel", "A1*A2", probs("A1 = 0.9\n"))[0] == 2
    assert run(capsys, "rel", "A1", probs("A1 = 0.9\nA1 = 0.5\n"))[0] == 2
    assert run(capsys, "rel", "A1", "/nonexistent/probs.txt")[0] == 2


@pytest.mark.parametrize(
    "expr, expected", [("A1*A2", "r1*r2"), ("A1+A2", "r1 + r2 - r1*r2"), ("~A1", "1 - r1")]
)
def test_poly(capsys, expr, expected):
    assert run(capsys, "poly", expr)[:2] == (0, expected)


@pytest.mark.parametrize("n, expected", [(1, "4"), (2, "16"), (3, "256")])
def test_enum(capsys, n, expected):
    assert run(capsys, "enum", str(n))[:2] == (0, expected)


def test_enum_out_of_range(capsys):
    assert run(capsys, "enum", "7")[0] == 2


def test_laws(capsys):
    code, out, _ = run(capsys, "laws", "diagrams", "--trials", "50", "--seed", "1", "--components", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10 and all(": PASS (trials=50)" in line for line in lines)
    assert run(capsys, "laws", "phi", "--trials", "50")[:2] == (0, "structure-homomorphism: PASS (trials=50)")
    code, out, _ = run(capsys, "laws", "reliability", "--trials", "20")
    assert code == 0 and len(out.splitlines()) == 10


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["laws", "phi", "--trials", "0"])
    assert info.value.code == 2
