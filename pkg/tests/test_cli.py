import io
import json

import jsonschema
import pytest
from click.testing import CliRunner

from neutrosophic.cli import CliConfig, main, run_repl
from neutrosophic.serialization import RESULTS_SCHEMA, TRIPLE_SCHEMA, loads


@pytest.fixture
def runner():
    return CliRunner()


def write(tmp_path, text, name="script.ns"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


class TestEval:
    def test_general_examples_table(self, runner, data_dir):
        res = runner.invoke(main, ["eval", str(data_dir / "general_examples.ns")])
        assert res.exit_code == 0
        expected = (data_dir / "general_examples.table.txt").read_text(encoding="utf-8")
        assert res.stdout == expected

    def test_three_classification_lines(self, runner, tmp_path):
        path = write(
            tmp_path,
            "universe U = {x, y, z}\n"
            "set A over U { x: (0.5, 0.2, 0.3) }\n"
            "set B over U { y: ([0.20,0.30], [0.40,0.45]|[0.50,0.51], {0.20,0.24,0.28}) }\n"
            "set C over U { z: (0.1, 0.3, 0.4) }\n"
            "classify A.x\nclassify B.y\nclassify C.z\n",
        )
        res = runner.invoke(main, ["eval", path])
        assert res.exit_code == 0
        lines = res.stdout.splitlines()
        assert len(lines) == 3
        assert "ifs_consistent" in lines[0]
        assert "paraconsistent" in lines[1]
        assert "intuitionistic_incomplete" in lines[2]

    def test_syntax_error(self, runner, tmp_path):
        path = write(tmp_path, "universe U = {x}\nset A over U { x: (0.5, 0.2) }\n")
        res = runner.invoke(main, ["eval", path])
        assert res.exit_code == 1
        assert res.stdout == ""
        assert res.stderr.strip().splitlines() == [f"{path}:2:28: expected ',', found ')'"]

    def test_lex_error(self, runner, tmp_path):
        path = write(tmp_path, "eval A $\n")
        res = runner.invoke(main, ["eval", path])
        assert res.exit_code == 1
        assert res.stderr.startswith(f"{path}:1:8: ")

    def test_eval_error(self, runner, tmp_path):
        path = write(tmp_path, "universe U = {x}\neval Q\n")
        res = runner.invoke(main, ["eval", path])
        assert res.exit_code == 2
        assert res.stderr.startswith(f"{path}:2:6: ")

    def test_missing_file(self, runner, tmp_path):
        res = runner.invoke(main, ["eval", str(tmp_path / "nope.ns")])
        assert res.exit_code == 2
        assert "nope.ns" in res.stderr

    def test_json_is_schema_valid(self, runner, data_dir):
        res = runner.invoke(main, ["eval", str(data_dir / "general_examples.ns"), "--format", "json"])
        assert res.exit_code == 0
        doc = loads(res.stdout)
        jsonschema.validate(doc, RESULTS_SCHEMA)
        assert [d["kind"] for d in doc][:4] == ["classify", "classify", "classify", "set"]
        # plain json parses it too
        assert json.loads(res.stdout) is not None

    def test_clamp_literals(self, runner, tmp_path):
        path = write(tmp_path, "universe U = {x}\nset A over U { x: (1.2, 0, 0) }\neval A\n")
        assert runner.invoke(main, ["eval", path]).exit_code == 2
        res = runner.invoke(main, ["eval", path, "--clamp-literals"])
        assert res.exit_code == 0
        assert "1^+" in res.stdout


class TestRepl:
    def test_session(self, runner):
        res = runner.invoke(
            main,
            ["repl"],
            input="universe U = {x}\nset A over U {x:(0.5,0.2,0.3)}\nclassify A.x\nexit\n",
        )
        assert res.exit_code == 0
        assert "ifs_consistent" in res.stdout

    def test_error_continues(self, runner):
        res = runner.invoke(main, ["repl"], input="eval Q\nuniverse U = {x}\ncheck Q <= Q\nexit\n")
        assert res.exit_code == 0
        errs = res.stderr.splitlines()
        assert errs[0].startswith("<stdin>:1:6: ")
        assert errs[1].startswith("<stdin>:3:")

    def test_eof_quits(self, runner):
        assert runner.invoke(main, ["repl"], input="").exit_code == 0

    def test_redeclaration_is_an_error(self):
        out, err = io.StringIO(), io.StringIO()
        inp = io.StringIO("universe U = {x}\nuniverse U = {y}\nexit\n")
        assert run_repl(CliConfig("repl"), inp, out, err) == 0
        assert err.getvalue().startswith("<stdin>:2:")


class TestClassify:
    def test_table(self, runner):
        res = runner.invoke(main, ["classify", "0.5", "0.2", "0.3"])
        assert res.exit_code == 0
        assert res.stdout == "ifs_consistent, faillibilist\n"

    def test_intervals(self, runner):
        res = runner.invoke(
            main, ["classify", "[0.20,0.30]", "[0.40,0.45]|[0.50,0.51]", "{0.20,0.24,0.28}"]
        )
        assert res.exit_code == 0
        assert res.stdout.startswith("paraconsistent")

    def test_flags(self, runner):
        res = runner.invoke(main, ["classify", "1^+", "0", "0"])
        assert res.stdout.strip().endswith("[overincluded]")

    def test_json(self, runner):
        res = runner.invoke(main, ["classify", "1", "0", "1", "--format", "json"])
        assert res.exit_code == 0
        doc = loads(res.stdout)
        assert doc["labels"] == ["paraconsistent", "dialetheist", "paradoxist"]
        assert doc["flags"] == []
        jsonschema.validate(doc["triple"], TRIPLE_SCHEMA)

    @pytest.mark.parametrize("args", [["0.5", "oops", "0.3"], ["1.5", "0", "0"], ["[0.3,0.2]", "0", "0"]])
    def test_bad_literal(self, runner, args):
        res = runner.invoke(main, ["classify", *args])
        assert res.exit_code == 1
        assert res.stderr.startswith("classify: ")


def test_config_validation():
    with pytest.raises(ValueError):
        CliConfig("eval")
    with pytest.raises(ValueError):
        CliConfig("repl", format="xml")
