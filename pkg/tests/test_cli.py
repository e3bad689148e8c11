"""
Tests for the command line interface
"""
import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli.main import EXIT_FAILED, EXIT_USAGE, cli
from src.cli.serialize import serialize, to_document
from src.exactsym import VirtualCharacter, e
from src.hlaurent import StableCharTable


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def table_path(tmp_path):
    def write(entries):
        path = tmp_path / "table.json"
        table = StableCharTable({key: VirtualCharacter.trivial(key[1]) for key in entries})
        path.write_bytes(serialize(table))
        return str(path)
    return write


class TestOperadCommands:
    def test_lie_in_weight_three(self, runner):
        result = runner.invoke(cli, ["char", "lie", "--max-weight", "3", "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout) == to_document(e(3, 3))

    def test_group_options_work_before_the_command(self, runner):
        result = runner.invoke(cli, ["--max-weight", "3", "--format", "json", "char", "lie"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["max_weight"] == 3

    def test_output_is_deterministic(self, runner):
        args = ["cobar", "--named", "com", "--max-weight", "5", "--format", "json"]
        first = runner.invoke(cli, args)
        second = runner.invoke(cli, args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout

    def test_table_format(self, runner):
        result = runner.invoke(cli, ["char", "com", "--max-weight", "3", "--format", "table"])
        assert result.exit_code == 0
        assert "p[2,1]" in result.stdout

    def test_cobar_needs_exactly_one_source(self, runner):
        result = runner.invoke(cli, ["cobar"])
        assert result.exit_code == EXIT_USAGE

    def test_invalid_document_exits_with_usage_code(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"max_weight": 4, "terms": [{"partition": [1, 3], "num": "1"}]}))
        result = runner.invoke(cli, ["legendre", str(path)])
        assert result.exit_code == EXIT_USAGE
        assert "terms/0/partition" in result.stderr

    def test_invalid_configuration(self, runner):
        result = runner.invoke(cli, ["--max-weight", "-1", "char", "com"])
        assert result.exit_code == EXIT_USAGE

    def test_environment_override(self, runner):
        result = runner.invoke(cli, ["char", "com", "--format", "json"], env={"OPCHAR_MAX_WEIGHT": "4"})
        assert result.exit_code == 0
        assert json.loads(result.stdout)["max_weight"] == 4


class TestModularCommands:
    def test_free_modular_on_genus_one_leg(self, runner, table_path):
        path = table_path([(1, 1)])
        result = runner.invoke(cli, ["free-modular", path, "--max-weight", "2", "--format", "json"])
        assert result.exit_code == 0
        terms = json.loads(result.stdout)["terms"]
        assert [(t["hexp_x2"], t["p"], t["num"]) for t in terms] == [(0, [1], "1"), (2, [], "1")]

    def test_homotopy_check(self, runner, table_path):
        path = table_path([(0, 3), (1, 1)])
        result = runner.invoke(cli, ["homotopy", path, "--max-weight", "2"])
        assert result.exit_code == 0

    def test_unstable_table_rejected(self, runner, tmp_path):
        path = tmp_path / "unstable.json"
        path.write_text(json.dumps({"entries": [
            {"g": 0, "n": 2, "character": {"n": 2, "values": [{"cycle_type": [1, 1], "num": "1"}]}}]}))
        result = runner.invoke(cli, ["cch", str(path)])
        assert result.exit_code == EXIT_USAGE


class TestGraphCommands:
    def test_enumerate_genus_one_leg(self, runner):
        result = runner.invoke(cli, ["graphs", "enumerate", "--genus", "1", "--legs", "1",
                                     "--format", "json"])
        assert result.exit_code == 0
        classes = json.loads(result.stdout)["classes"]
        assert len(classes) == 2
        assert sorted(c["aut_order"] for c in classes) == [1, 2]

    def test_unstable_type(self, runner):
        result = runner.invoke(cli, ["graphs", "enumerate", "--genus", "0", "--legs", "2"])
        assert result.exit_code == EXIT_USAGE

    def test_wick_counts_trees(self, runner):
        result = runner.invoke(cli, ["graphs", "wick", "--genus", "0", "--legs", "4", "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["num"] == "4"

    def test_wick_weight_syntax(self, runner):
        result = runner.invoke(cli, ["graphs", "wick", "--genus", "0", "--legs", "3", "--weight", "0-3"])
        assert result.exit_code == EXIT_USAGE

    def test_show_rejects_disconnected_graph(self, runner, tmp_path):
        path = tmp_path / "graph.json"
        path.write_text(json.dumps({"flags": 6, "involution": [0, 1, 2, 3, 4, 5],
                                    "vertex_of": [0, 0, 0, 1, 1, 1], "genus": [0, 0]}))
        result = runner.invoke(cli, ["graphs", "show", str(path)])
        assert result.exit_code == EXIT_USAGE
        assert "disconnected" in result.stderr


class TestModuliCommands:
    def test_euler_classes(self, runner):
        result = runner.invoke(cli, ["moduli", "euler", "--order", "2", "--format", "json"])
        assert result.exit_code == 0
        values = json.loads(result.stdout)
        assert values["-1"] == {"num": "2", "den": "1"}

    def test_stirling(self, runner):
        result = runner.invoke(cli, ["integral", "stirling", "--order", "3"])
        assert result.exit_code == 0

    def test_schema(self, runner):
        result = runner.invoke(cli, ["schema", "table"])
        assert result.exit_code == 0
        assert "entries" in json.loads(result.stdout)["properties"]


def test_failed_exit_code_is_distinct():
    assert EXIT_FAILED != EXIT_USAGE


class TestExampleDocuments:
    EXAMPLES = Path(__file__).resolve().parents[1] / "configs"

    def test_homotopy_on_mixed_table(self, runner):
        result = runner.invoke(cli, ["homotopy", str(self.EXAMPLES / "tables" / "mixed.json"),
                                     "--max-weight", "3"])
        assert result.exit_code == 0

    def test_cch_of_trivalent_table(self, runner):
        result = runner.invoke(cli, ["cch", str(self.EXAMPLES / "tables" / "trivalent.json"),
                                     "--max-weight", "3", "--format", "json"])
        assert result.exit_code == 0
        terms = json.loads(result.stdout)["terms"]
        assert {t["hexp_x2"] for t in terms} == {-2}
        assert len(terms) == 3

    def test_show_tadpole(self, runner):
        result = runner.invoke(cli, ["graphs", "show", str(self.EXAMPLES / "graphs" / "tadpole.json"),
                                     "--format", "json"])
        assert result.exit_code == 0
        assert "|Aut| = 2" in result.stderr

    def test_legendre_of_h2_plus_h3(self, runner):
        result = runner.invoke(cli, ["legendre", str(self.EXAMPLES / "h2_plus_h3.json"), "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["max_weight"] == 5
