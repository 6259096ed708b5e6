"""Tests for run configuration, presets and environment overrides."""

from fractions import Fraction

import pytest

from partition_polynomials.config import (
    Command,
    ConfigPresets,
    OutputFormat,
    RootFamily,
    RunConfig,
    Suite,
    SweepSizes,
    apply_environment_overrides,
)


class TestSweepSizes:
    def test_defaults(self):
        sizes = SweepSizes()
        assert sizes.bo_nmax == 50
        assert sizes.sigma_mmax == 100_000

    @pytest.mark.parametrize(
        "field, value", [("bo_nmax", 9), ("growth_amax", 33), ("cft_kmax", 3), ("pa1_amax", 0)]
    )
    def test_minimums(self, field, value):
        with pytest.raises(ValueError):
            SweepSizes(**{field: value})

    def test_rejects_non_integers(self):
        with pytest.raises(ValueError):
            SweepSizes(bo_nmax=20.0)

    def test_required_max_n(self):
        sizes = SweepSizes()
        assert sizes.required_max_n(Suite.SUMMAND) == 66
        assert sizes.required_max_n(Suite.MONOTONE) == 101
        assert sizes.required_max_n(Suite.ALL) == 101
        assert sizes.required_max_n(Suite.PA1) == 101


class TestSuite:
    def test_all_excludes_observation(self):
        expanded = Suite.ALL.expand()
        assert Suite.PA1 not in expanded
        assert Suite.ALL not in expanded
        assert len(expanded) == 8

    def test_single(self):
        assert Suite.BO.expand() == [Suite.BO]


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig(command="poly", parameters={"n": 5})
        assert config.command is Command.POLY
        assert config.output_format is OutputFormat.TEXT
        assert config.precision == 12
        assert config.required_max_n() == 5

    def test_missing_parameter(self):
        with pytest.raises(ValueError, match="needs parameter"):
            RunConfig(command="eval", parameters={"n": 3})

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"precision": -1},
            {"jobs": 0},
            {"max_n": -2},
            {"max_n": 3},
            {"output_format": "xml"},
        ],
    )
    def test_invalid_values(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(command="poly", parameters={"n": 5}, **kwargs)

    def test_negative_index(self):
        with pytest.raises(ValueError):
            RunConfig(command="poly", parameters={"n": -1})

    def test_roots_family(self):
        config = RunConfig(command="roots", parameters={"family": "bo", "a": 3, "b": 4})
        assert config.parameters["family"] is RootFamily.BO
        assert config.required_max_n() == 7
        with pytest.raises(ValueError, match="--a --b"):
            RunConfig(command="roots", parameters={"family": "bo"})
        with pytest.raises(ValueError):
            RunConfig(command="roots", parameters={"family": "sine", "n": 2})

    def test_rationals_parsed_up_front(self):
        config = RunConfig(command="eval", parameters={"n": 3, "x": "5/2"})
        assert config.parameters["x"] == Fraction(5, 2)
        roots = RunConfig(command="roots", parameters={"family": "delta", "n": 2})
        assert roots.parameters["eps"] == Fraction(1, 10**12)
        explicit = RunConfig(command="roots", parameters={"family": "delta", "n": 2, "eps": "1e-3"})
        assert explicit.parameters["eps"] == Fraction(1, 1000)

    @pytest.mark.parametrize(
        "command, parameters",
        [
            ("eval", {"n": 3, "x": "1/0"}),
            ("eval", {"n": 3, "x": "half"}),
            ("roots", {"family": "delta", "n": 2, "eps": "0"}),
            ("roots", {"family": "prop7", "n": 2, "eps": "-1e-6"}),
        ],
    )
    def test_invalid_rationals(self, command, parameters):
        with pytest.raises(ValueError):
            RunConfig(command=command, parameters=parameters)

    def test_inferred_sizes(self):
        table1 = RunConfig(command="table1", parameters={"amax": 10, "bmax": 10})
        assert table1.required_max_n() == 20
        assert RunConfig(command="figure1", parameters={"nmax": 30}).required_max_n() == 31
        assert RunConfig(command="figure2", parameters={"amax": 100}).required_max_n() == 101
        assert RunConfig(command="bounds", parameters={"m": 4}).required_max_n() == 0

    def test_verify_uses_sizes(self):
        config = RunConfig(
            command="verify", parameters={"suite": "bo"}, sizes=ConfigPresets.quick()
        )
        assert config.parameters["suite"] is Suite.BO
        assert config.required_max_n() == 20

    def test_explicit_max_n(self):
        config = RunConfig(command="poly", parameters={"n": 5}, max_n=40)
        assert config.required_max_n() == 40


class TestConfigPresets:
    def test_list(self):
        assert ConfigPresets.list() == ["desk", "quick", "extended"]

    @pytest.mark.parametrize("name", ["desk", "quick", "extended"])
    def test_get(self, name):
        assert isinstance(ConfigPresets.get(name), SweepSizes)

    def test_unknown(self):
        with pytest.raises(ValueError, match="Unknown preset"):
            ConfigPresets.get("huge")

    def test_custom(self):
        sizes = ConfigPresets.custom("quick", bo_nmax=30)
        assert sizes.bo_nmax == 30
        assert sizes.cft_nmax == ConfigPresets.quick().cft_nmax

    def test_custom_rejects_unknown_and_small(self):
        with pytest.raises(ValueError, match="Unknown sweep size"):
            ConfigPresets.custom("desk", bogus=3)
        with pytest.raises(ValueError):
            ConfigPresets.custom("desk", bo_nmax=2)


class TestEnvironment:
    def test_no_variables(self, monkeypatch):
        for name in ("PARTPOLY_MAX_N", "PARTPOLY_JOBS", "PARTPOLY_PRECISION"):
            monkeypatch.delenv(name, raising=False)
        config = RunConfig(command="poly", parameters={"n": 5})
        assert apply_environment_overrides(config) is config

    def test_overrides(self, monkeypatch):
        monkeypatch.setenv("PARTPOLY_MAX_N", "60")
        monkeypatch.setenv("PARTPOLY_JOBS", "3")
        monkeypatch.setenv("PARTPOLY_PRECISION", " 20 ")
        config = RunConfig(command="poly", parameters={"n": 5})
        updated = apply_environment_overrides(config)
        assert (updated.max_n, updated.jobs, updated.precision) == (60, 3, 20)
        assert config.max_n is None

    def test_invalid_value(self, monkeypatch):
        monkeypatch.setenv("PARTPOLY_JOBS", "many")
        with pytest.raises(ValueError, match="PARTPOLY_JOBS"):
            apply_environment_overrides(RunConfig(command="poly", parameters={"n": 5}))

    def test_out_of_range_value(self, monkeypatch):
        monkeypatch.setenv("PARTPOLY_JOBS", "0")
        with pytest.raises(ValueError):
            apply_environment_overrides(RunConfig(command="poly", parameters={"n": 5}))
