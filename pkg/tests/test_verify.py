"""
Tests for the verification suites and configuration loading
"""
import json
from fractions import Fraction

import pytest

from src.cli.verify import SUITES, CheckResult, VerificationReport, _compare, run_verification
from src.core.config import MAX_WEIGHT_ENV, WorkbenchConfig, load_config


@pytest.fixture
def small_config():
    return WorkbenchConfig(max_weight=4, random_samples=2, wick_bound=3, psi_order=3, stirling_order=3)


class TestReport:
    def test_compare_dumps_first_differences(self):
        result = _compare("demo", "maps", {(1,): Fraction(1), (2,): Fraction(3)}, {(1,): Fraction(1)})
        assert not result.passed
        assert result.counterexample == [{"term": "(2,)", "left": "3", "right": "0"}]

    def test_report_document(self):
        report = VerificationReport([CheckResult("a", "one", True), CheckResult("a", "two", False)])
        data = report.to_dict()
        assert (data["passed"], data["total"], data["failed"]) == (False, 2, 1)
        assert report.rows()[1] == ["a", "two", "FAIL"]


class TestSuites:
    def test_legendre_suite(self, small_config):
        report = run_verification(small_config, ["legendre"])
        assert report.passed
        assert len(report.checks) == 3 + 4 * small_config.random_samples

    def test_free_modular_suite(self, small_config):
        assert run_verification(small_config, ["free-modular"]).passed

    def test_psi_and_wick_suites(self, small_config):
        assert run_verification(small_config, ["psi", "wick"]).passed

    def test_runs_are_reproducible(self, small_config):
        first = run_verification(small_config, ["legendre"]).to_dict()
        second = run_verification(small_config, ["legendre"]).to_dict()
        assert first == second

    def test_unknown_suite(self, small_config):
        with pytest.raises(ValueError):
            run_verification(small_config, ["nonsense"])

    @pytest.mark.slow
    def test_all_suites(self, small_config):
        report = run_verification(small_config, list(SUITES))
        assert report.passed, report.failures


class TestConfig:
    def test_defaults_file(self, monkeypatch):
        monkeypatch.delenv(MAX_WEIGHT_ENV, raising=False)
        config = load_config()
        assert config.max_weight == 8
        assert config.hexp_min_x2 == -8

    def test_environment_overrides_file(self, monkeypatch):
        monkeypatch.setenv(MAX_WEIGHT_ENV, "5")
        assert load_config().max_weight == 5

    def test_bad_environment_value(self, monkeypatch):
        monkeypatch.setenv(MAX_WEIGHT_ENV, "five")
        with pytest.raises(ValueError):
            load_config()

    def test_explicit_file(self, tmp_path, monkeypatch):
        monkeypatch.delenv(MAX_WEIGHT_ENV, raising=False)
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"max_weight": 3, "log_level": "debug"}))
        config = load_config(path)
        assert (config.max_weight, config.log_level) == (3, "DEBUG")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "absent.json")

    @pytest.mark.parametrize("override", [{"hbar_min": 0.25}, {"hbar_min": 9}, {"output_format": "xml"}])
    def test_invalid_values(self, override):
        with pytest.raises(ValueError):
            WorkbenchConfig(**override)
