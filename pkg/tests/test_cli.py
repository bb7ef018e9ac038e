import io
import json

from arithsite.cli import main


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_eval():
    assert run("eval", "<2,3> /\\ <5>") == (0, "<10,15>\n", "")
    assert run("eval", "neg", "<2>")[1] == "<>\n"
    assert run("eval", "gcd(<12,18>)")[1] == "6\n"


def test_eval_json():
    code, out, _ = run("eval", "--json", "<2,3> /\\ <5>")
    assert code == 0
    assert json.loads(out) == {"sort": "sieve", "value": [10, 15], "canonical-text": "<10,15>"}


def test_errors_exit_two():
    code, out, err = run("eval", "<2> /\\")
    assert code == 2 and out == "" and "parse error at byte 6" in err
    assert run("eval", "<2> /\\ Xs<2>")[0] == 2
    assert run("bogus")[0] == 2
    assert run("check", "nosuch")[0] == 2
    assert run("check", "oracle", "--mutate", "nosuch")[0] == 2


def test_resource_limit_exits_three():
    formula = " & ".join(f"Xs<{p}>" for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73))
    code, _, err = run("eval", f"empty?({formula})")
    assert code == 3 and "ResourceLimit" in err


def test_keyword_subcommands():
    assert run("stalk", "i", "sn(2^inf)")[1] == "Z_(2)\n"
    assert run("stalk", "j", "sn(all^inf / 5^0)")[1] == "Z_(5)\n"
    assert run("sections", "j", "<12,18>")[1] == "Z[1/2,1/3]\n"
    assert run("hyperdistance", "(2, 0)", "(1, 1/2)")[1] == "2\n"
    assert run("bigcell", "neighbors", "2", "--bound", "10")[1] == "[1, 4, 6, 10]\n"
    assert run("divisors", "sn(2^inf)", "--bound", "10")[1] == "trunc(10: 1, 2, 4, 8)\n"
    assert run("divisors", "sn(2^inf)", "--bound", "100", "--check-point")[1] == "true\n"


def test_repl_batch():
    code, out, err = run("repl", stdin="let a = <2,3>\n# comment\na /\\ <5>\n\nneg a\n")
    assert code == 0 and out.splitlines() == ["<2,3>", "<10,15>", "<>"]
    code, out, err = run("repl", stdin="<2>\n<2\n<3>\n")
    assert code == 2 and out.splitlines() == ["<2>", "<3>"] and "parse error" in err


def test_repl_file(tmp_path):
    f = tmp_path / "batch.txt"
    f.write_text("gcd(<12,18>)\n<2> -> <6>\n")
    assert run("repl", str(f))[1] == "6\n<3>\n"


def test_check_suites():
    code, out, _ = run("check", "heyting", "--cases", "50", "--seed", "42")
    assert code == 0 and "total: 12 laws, 0 violations" in out
    code, out, _ = run("check", "heyting", "--cases", "0")
    assert code == 0 and "0 cases" in out
    code, out, _ = run("check", "skew-frame", "--cases", "20", "--json")
    record = json.loads(out)
    assert code == 0 and record["suite"] == "skew-frame" and record["violations"] == 0


def test_check_is_byte_identical():
    a = run("check", "topologies", "--cases", "30", "--seed", "5")
    b = run("check", "topologies", "--cases", "30", "--seed", "5")
    assert a == b


def test_mutation_is_caught():
    code, out, _ = run("check", "oracle", "--cases", "20", "--mutate", "meet-gcd")
    assert code == 1 and "[FAIL] meet-membership" in out
    assert run("check", "oracle", "--cases", "20")[0] == 0


def test_check_families():
    code, out, _ = run("check", "gp", "--primes", "2,3", "--cases", "200", "--seed", "42")
    assert code == 0 and "0 counterexamples" in out
    code, out, _ = run("check", "table", "--members", "<1>,<2>", "--json")
    assert code == 1
    assert {"S": "<2>", "R": "<4>"} in json.loads(out)["transitivity_counterexamples"]
    assert run("check", "table", "--members", "<1>")[0] == 0
    code, _, err = run("check", "table", "--members", "<1>,<2>", "--closed-upward")
    assert code == 2 and "upward closed" in err
