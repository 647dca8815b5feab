import math

import pytest
import yaml

from spatial_anc.config.loader import (
    deep_merge,
    dump_resolved_config,
    load_resolved_config,
    parse_config,
    parse_override,
)
from spatial_anc.config.plan import DEFAULT_LAMBDA_GRID
from spatial_anc.config.run import RunConfig
from spatial_anc.core.errors import ConfigError


def test_empty_config_with_paper_preset(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    config = parse_config(path, preset="paper")
    scene = config.scene.build()
    assert scene.num_sources == 12
    assert scene.num_mics == 24
    assert config.scene.sound_speed == 340.0
    assert config.scene.air_density == 1.3
    assert config.algorithm.mu0 == 0.9
    assert config.algorithm.beta == 1e-8
    assert config.algorithm.eta == 1e-5
    assert config.algorithm.cond_threshold == 1e2
    assert config.plan.n_iters == 50000


def test_defaults_are_desk_scale():
    config = parse_config()
    assert config.plan.n_iters == 10000
    assert config.plan.sweep_frequencies() == [100.0 * i for i in range(1, 11)]
    assert parse_config(paper_scale=True).plan.freq_step == 10.0


def test_mu0_out_of_range_is_rejected(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("algorithm:\n  mu0: 2.5\n")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(path)
    assert "algorithm.mu0" in str(excinfo.value)


def test_unknown_key_is_named(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("plan:\n  stepsize: 0.1\n")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(path)
    assert "plan.stepsize" in str(excinfo.value)
    assert excinfo.value.problems[0].startswith("plan.stepsize")


def test_unknown_section_is_rejected():
    with pytest.raises(ConfigError):
        parse_config(overrides=["solver.tol=1"])


def test_overrides_and_flags_take_precedence(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("plan:\n  n_iters: 100\n  seed: 3\n")
    config = parse_config(path, overrides=["plan.n_iters=200", "algorithm.alpha=0.9"], iterations=300)
    assert config.plan.n_iters == 300
    assert config.plan.seed == 3
    assert config.algorithm.alpha == 0.9


def test_infinite_snr_is_accepted():
    assert math.isinf(parse_config(overrides=["plan.snr_db=.inf"]).plan.snr_db)
    with pytest.raises(ConfigError):
        parse_config(overrides=["plan.snr_db=-3"])


def test_alpha_must_be_open_unit_interval():
    with pytest.raises(ConfigError):
        parse_config(overrides=["algorithm.alpha=1.0"])


def test_parse_override_builds_nested_dict():
    assert parse_override("plan.lambda_grid=[0, 0.5]") == {"plan": {"lambda_grid": [0, 0.5]}}
    with pytest.raises(ConfigError):
        parse_override("n_iters")


def test_malformed_yaml_is_a_config_error(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("plan: [unclosed\n")
    with pytest.raises(ConfigError):
        parse_config(path)


def test_missing_file_is_a_config_error(tmp_path):
    with pytest.raises(ConfigError):
        parse_config(tmp_path / "nope.yaml")


def test_resolved_config_round_trips(tmp_path):
    config = parse_config(preset="paper", overrides=["plan.snr_db=.inf", "plan.algorithms=[nlms, const]"])
    path = dump_resolved_config(config, tmp_path)
    assert path.name == "resolved-config.yaml"
    assert load_resolved_config(path) == config
    assert set(yaml.safe_load(path.read_text())) == {"scene", "plan", "algorithm", "output"}


def test_deep_merge_overrides_lists():
    merged = deep_merge({"a": {"b": [1, 2], "c": 1}}, {"a": {"b": [3]}})
    assert merged == {"a": {"b": [3], "c": 1}}


def test_default_run_config():
    assert RunConfig.default() == parse_config()


def test_paper_scale_yields_to_explicit_settings(tmp_path):
    config = parse_config(overrides=["plan.n_iters=123"], paper_scale=True)
    assert config.plan.n_iters == 123
    assert config.plan.freq_step == 10.0
    path = tmp_path / "run.yaml"
    path.write_text("plan:\n  freq_step: 50.0\n")
    assert parse_config(path, paper_scale=True).plan.freq_step == 50.0
    assert parse_config(paper_scale=True).plan.n_iters == 50000


def test_paper_preset_carries_default_lambda_grid():
    assert parse_config(preset="paper").plan.lambda_grid == DEFAULT_LAMBDA_GRID
    assert max(DEFAULT_LAMBDA_GRID) >= 1000.0
