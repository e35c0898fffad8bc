"""
Settings resolution and command models
"""

import pytest
from pydantic import ValidationError

from jordanian.core.config import CommandConfig, VerificationSettings, load_settings
from jordanian.core.exceptions import ConfigException


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """No JORDANIAN_* variables from the developer machine"""
    monkeypatch.chdir(tmp_path)
    for name in VerificationSettings.model_fields:
        monkeypatch.delenv('JORDANIAN_' + name.upper(), raising=False)


def test_defaults():
    settings = load_settings()
    assert settings.max_sector_dim == 4096
    assert settings.rank_guard_points == 3
    assert settings.workers == 1
    assert settings.nilpotency_bound is None
    assert settings.hecke_witness == {'h': '1', 's': '1', 'lambda': '1', 'mu': '2'}


def test_yaml_file(tmp_path):
    path = tmp_path / 'settings.yaml'
    path.write_text("max_sector_dim: 512\ncentrality_witness: {h: 2, s: 1, lambda: 0, mu: 3}\n")
    settings = load_settings(path)
    assert settings.max_sector_dim == 512
    assert settings.centrality_witness == {'h': '2', 's': '1', 'lambda': '0', 'mu': '3'}


def test_environment_overrides_file(tmp_path, monkeypatch):
    path = tmp_path / 'settings.yaml'
    path.write_text("max_sector_dim: 512\n")
    monkeypatch.setenv('JORDANIAN_MAX_SECTOR_DIM', '64')
    monkeypatch.setenv('JORDANIAN_RANK_GUARD_POINTS', '5')
    settings = load_settings(path)
    assert settings.max_sector_dim == 64
    assert settings.rank_guard_points == 5


def test_explicit_overrides_win(monkeypatch):
    monkeypatch.setenv('JORDANIAN_MAX_SECTOR_DIM', '64')
    settings = load_settings(overrides={'max_sector_dim': 32, 'workers': None})
    assert settings.max_sector_dim == 32
    assert settings.workers == 1


@pytest.mark.parametrize('overrides', [
    {'max_sector_dim': 0},
    {'workers': 0},
    {'rank_guard_points': -1},
    {'nilpotency_bound': 0},
    {'pivot': 'random'},
    {'hecke_witness': {'h': '1', 's': '1', 'lambda': '1'}},
])
def test_invalid_settings(overrides):
    with pytest.raises(ConfigException):
        load_settings(overrides=overrides)


def test_settings_file_must_be_a_mapping(tmp_path):
    path = tmp_path / 'settings.yaml'
    path.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigException):
        load_settings(path)
    with pytest.raises(ConfigException):
        load_settings(tmp_path / 'missing.yaml')


def test_command_targets():
    assert CommandConfig(command='emit', target='braid').format == 'plain'
    assert CommandConfig(command='verify', target='all').target == 'all'
    with pytest.raises(ValidationError):
        CommandConfig(command='emit', target='all')
    with pytest.raises(ValidationError):
        CommandConfig(command='verify', target='r-matrix')
    with pytest.raises(ValidationError):
        CommandConfig(command='emit', target='braid', format='html')
