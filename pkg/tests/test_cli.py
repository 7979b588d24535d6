import json
import subprocess
import sys


from rtmaps.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, RelationRecord, iter_relations, main
from rtmaps.words import MzvIndex, Poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "3")
    lines = out.split()
    assert code == EXIT_OK
    assert lines[-1] == "4" and len(lines) == 5
    assert run(capsys, "enumerate", "0")[1].split() == ["I", "1"]


def test_enumerate_rejects_negative(capsys):
    code, _, err = run(capsys, "enumerate", "-1")
    assert code == EXIT_USAGE and err


def test_apply(capsys):
    assert run(capsys, "apply", "[]", "xy")[1].strip() == "-xxy + xyy"
    assert run(capsys, "apply", "I", "xy")[1].strip() == "xy"
    assert run(capsys, "apply", "[]", "1")[1].strip() == "0"
    code, out, _ = run(capsys, "apply", "[[]]", "xy", "--json")
    assert code == EXIT_OK
    assert Poly.from_json(json.loads(out)) == Poly.parse("-xxxy - xxyy - xyxy + 2 xyyy")


def test_parse_errors_exit_two(capsys):
    code, _, err = run(capsys, "apply", "[[]", "xy")
    assert code == EXIT_USAGE and "position" in err
    assert run(capsys, "apply", "[]", "xz")[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys, "relations", "--max-weight", "1")[0] == EXIT_USAGE


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == EXIT_OK


def test_coproduct_and_antipode_json(capsys):
    code, out, _ = run(capsys, "coproduct", "[[]]")
    assert code == EXIT_OK
    assert sorted(map(tuple, json.loads(out))) == sorted(
        [("1/1", "[[]]", "I"), ("1/1", "[]", "[]"), ("1/1", "I", "[[]]")]
    )
    code, out, _ = run(capsys, "antipode", "[[]]")
    assert sorted(map(tuple, json.loads(out))) == [("-1/1", "[[]]"), ("1/1", "[]*[]")]


def test_relations_record(capsys):
    code, out, _ = run(capsys, "relations", "--max-degree", "1", "--max-weight", "2", "--verify", "both")
    assert code == EXIT_OK
    (line,) = out.splitlines()
    rec = RelationRecord.from_json(line)
    assert rec.forest == "[]" and rec.source_word == "xy" and rec.source_index == "2"
    assert rec.exact_verified is True and rec.ok
    assert float(rec.numeric_residual) < 1e-25
    assert rec.relation() == [(-1, MzvIndex((3,))), (1, MzvIndex((2, 1)))]
    assert RelationRecord.from_json(rec.to_json()) == rec


def test_relations_without_verification(capsys):
    code, out, _ = run(capsys, "relations", "--max-degree", "2", "--max-weight", "3", "--verify", "none")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == EXIT_OK and len(records) == 3 * 3
    assert all("exact_verified" not in r and "numeric_residual" not in r for r in records)


def test_relations_deterministic_across_jobs():
    args = (2, 4, "exact", 40, 160, 1e-25)
    serial = [r.to_json() for r in iter_relations(*args, jobs=1)]
    parallel = [r.to_json() for r in iter_relations(*args, jobs=2)]
    assert serial == parallel and len(serial) == 3 * (1 + 2 + 4)


def test_relations_failure_exit_code(capsys, monkeypatch):
    from rtmaps import cli

    # a single word of the right weight is never in the space
    monkeypatch.setattr(cli, "apply", lambda f, w: Poly.word("x" * (len(w) + f.degree - 1) + "y"))
    code, out, err = run(capsys, "relations", "--max-weight", "3", "--verify", "exact")
    assert code == EXIT_FAILED
    assert "verification failed" in err


def test_global_flags_either_position(capsys):
    a = run(capsys, "--digits", "45", "relations", "--verify", "numeric")[1]
    b = run(capsys, "relations", "--verify", "numeric", "--digits", "45")[1]
    assert a == b


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "1,4")
    assert code == EXIT_OK
    assert out.count("PASS") == 2 and "2/2 criteria passed" in out


def test_console_module():
    proc = subprocess.run([sys.executable, "-m", "rtmaps", "apply", "[]", "y"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "-xy"
