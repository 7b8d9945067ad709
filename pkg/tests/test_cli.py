import io
import json
import subprocess
import sys

import pytest

from polytutte.cli import main, parse_instance
from polytutte.errors import NotSubmodular, ParseError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.json"
    path.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    return str(path)


class TestParse:
    def test_inline_table(self):
        assert parse_instance('{"n":2,"ranks":[0,1,1,1]}').resolved.values == (0, 1, 1, 1)

    def test_constructor(self):
        assert parse_instance("uniform:1,2").resolved == parse_instance('{"n":2,"ranks":[0,1,1,1]}').resolved

    def test_coverage_constructor(self):
        spec = parse_instance("coverage:7,3,4,2,2")
        assert spec.resolved.n == 3 and spec.source == "coverage:7,3,4,2,2"

    def test_not_submodular(self):
        with pytest.raises(NotSubmodular) as exc:
            parse_instance('{"n":2,"ranks":[0,1,1,3]}')
        assert (exc.value.I, exc.value.J) == (0b01, 0b10)

    def test_graph_file(self, k3_file):
        assert parse_instance(k3_file).resolved.values == (0, 1, 1, 2, 1, 2, 2, 2)

    @pytest.mark.parametrize("text, field", [
        ('{"n":2}', "ranks"),
        ('{"n":"2","ranks":[0,1,1,1]}', "n"),
        ('{"n":2,"ranks":[0,1,"a",1]}', "ranks"),
        ('{"vertices":2}', "edges"),
        ('{"vertices":2,"edges":[[0]]}', "edges"),
        ("uniform:1", "uniform"),
        ("uniform:a,b", "uniform"),
    ])
    def test_field_errors(self, text, field):
        with pytest.raises(ParseError) as exc:
            parse_instance(text)
        assert exc.value.field == field

    def test_bad_json_line(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{\n"n": 2,\n"ranks": [0, 1,, 1]\n}')
        with pytest.raises(ParseError) as exc:
            parse_instance(str(path))
        assert exc.value.line == 3

    def test_missing_file(self):
        with pytest.raises(ParseError):
            parse_instance("/no/such/file.json")


class TestCommands:
    def test_tutte(self):
        assert run("tutte", "-i", "uniform:1,2") == (0, "x^2 + 2*x*y + y^2 - x - y\n", "")

    def test_tutte_json(self):
        code, out, _ = run("tutte", "-i", "uniform:1,2", "--json")
        assert code == 0
        terms = {(t["x"], t["y"]): t["c"] for t in json.loads(out)["terms"]}
        assert terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1, (1, 0): -1, (0, 1): -1}

    def test_bases(self):
        assert run("bases", "-i", '{"n":2,"ranks":[0,2,1,2]}')[1] == "(1,1)\n(2,0)\n"

    def test_activities(self):
        code, out, _ = run("activities", "-i", "uniform:1,2")
        assert code == 0
        assert out.splitlines() == [
            "(0,1) Int={1} Ext={1,2} oi=0 oe=1 ie=1",
            "(1,0) Int={1,2} Ext={1} oi=1 oe=0 ie=1",
        ]

    def test_classical_oracle(self, k3_file):
        assert run("classical", "-i", k3_file, "--oracle") == (0, "x^2 + x + y\nx^2 + x + y\nAGREE\n", "")

    def test_classical_rejects_polymatroid(self):
        code, _, err = run("classical", "-i", '{"n":2,"ranks":[0,2,1,2]}')
        assert code == 2 and "NotAMatroidRank" in err

    def test_series(self):
        assert run("series", "-i", "uniform:1,2", "--degree", "1")[1] == "2 + 3*u + 3*v\n"
        obj = json.loads(run("series", "-i", "uniform:1,2", "--degree", "1", "--json")[1])
        assert obj["degree"] == 1 and len(obj["terms"]) == 3

    def test_verify_sn(self):
        assert run("verify", "-i", "uniform:1,2", "--checks", "sn", "--all-perms") == (0, "sn: PASS\n", "")

    def test_verify_all(self):
        code, out, _ = run("verify", "-i", "coverage:3,3,4,2,2")
        lines = out.splitlines()
        assert [ln.split(":")[0] for ln in lines] == ["sn", "fibers", "lemmas", "series", "correspondence"]
        assert all(ln.endswith("PASS") or "SKIP" in ln for ln in lines)
        assert code == 0

    def test_verify_skips_correspondence_for_polymatroid(self):
        code, out, _ = run("verify", "-i", '{"n":2,"ranks":[0,2,1,2]}', "--checks", "correspondence")
        assert code == 0 and out == "correspondence: SKIP (not a matroid rank function)\n"

    def test_unknown_check(self):
        code, _, err = run("verify", "-i", "uniform:1,2", "--checks", "nope")
        assert code == 2 and "unknown check" in err

    def test_invalid_instance_exit(self):
        code, out, err = run("tutte", "-i", '{"n":2,"ranks":[0,1,1,3]}')
        assert code == 2 and out == "" and "NotSubmodular" in err

    def test_negative_degree(self):
        assert run("series", "-i", "uniform:1,2", "--degree", "-1")[0] == 2

    def test_usage_error(self):
        assert run("frobnicate")[0] == 2

    def test_deterministic(self):
        first = run("activities", "-i", "coverage:5,4,5,3,2")
        assert all(run("activities", "-i", "coverage:5,4,5,3,2") == first for _ in range(3))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polytutte", "tutte", "-i", "uniform:1,2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "x^2 + 2*x*y + y^2 - x - y\n"
