"""Tests for CLI configuration module."""

import json
from pathlib import Path

import pytest

from cli.config import Config
from cli.main import main
from cli.models import RunOptions
from common.constants import DEFAULT_N_BOUND, DEFAULT_SEARCH_BUDGET
from common.exceptions import PreconditionError


def test_config_missing_file_uses_defaults(tmp_path):
    """Test that a missing config file gives defaults and is never created."""
    config_path = tmp_path / '.factorcodes' / 'config.json'
    config = Config(config_path)

    assert not config_path.exists()
    assert config.get_n_bound() == DEFAULT_N_BOUND
    assert config.get_budget() == DEFAULT_SEARCH_BUDGET
    assert config.get_seed() == 0
    assert config.get_format() == 'json'


def test_config_loads_existing_file(temp_config_dir):
    """Test loading existing config file."""
    config_path = temp_config_dir / 'config.json'
    with open(config_path, 'w') as f:
        json.dump({'seed': 7, 'format': 'text'}, f)

    config = Config(config_path)

    assert config.get_seed() == 7
    assert config.get_format() == 'text'
    assert config.get_budget() == DEFAULT_SEARCH_BUDGET


@pytest.mark.parametrize('content', ['{invalid json', '[1, 2]'])
def test_config_corrupted_file(temp_config_dir, content):
    """Test that a corrupted config is backed up and defaults are used."""
    config_path = temp_config_dir / 'config.json'
    config_path.write_text(content)

    config = Config(config_path)

    assert config.get_seed() == 0
    backup_path = temp_config_dir / 'config.json.bak'
    assert backup_path.exists()
    assert backup_path.read_text() == content


def test_config_environment_overrides(monkeypatch, temp_config):
    """Test FACTORCODES_* variables as defaults."""
    monkeypatch.setenv('FACTORCODES_BUDGET', '50')
    monkeypatch.setenv('FACTORCODES_SEED', 'not-a-number')

    config = Config(temp_config.config_path)

    assert config.get_budget() == 50
    assert config.get_seed() == 0


def test_config_file_beats_environment(monkeypatch, temp_config_dir):
    """Test that values from the file take precedence over environment defaults."""
    monkeypatch.setenv('FACTORCODES_SEED', '4')
    config_path = temp_config_dir / 'config.json'
    config_path.write_text(json.dumps({'seed': 9}))

    assert Config(config_path).get_seed() == 9


def test_commands_never_write_the_config(capsys, temp_config_dir):
    """Test that running a command with an absent config file leaves it absent."""
    config_path = temp_config_dir / 'config.json'

    exit_code = main(['factorize', '4', '--config', str(config_path)])

    assert exit_code == 0
    assert not config_path.exists()
    assert list(temp_config_dir.iterdir()) == []
    capsys.readouterr()


def test_resolve_path(monkeypatch, tmp_path):
    """Test --config, then $FACTORCODES_CONFIG, then the home directory."""
    monkeypatch.setenv('HOME', str(tmp_path))
    assert Config.resolve_path() == tmp_path / '.factorcodes' / 'config.json'

    monkeypatch.setenv('FACTORCODES_CONFIG', str(tmp_path / 'env.json'))
    assert Config.resolve_path() == tmp_path / 'env.json'
    assert Config.resolve_path('explicit.json') == Path('explicit.json')


def test_resolve_merges_options(temp_config):
    """Test that command-line options override configuration values."""
    temp_config.data['seed'] = 5
    run = temp_config.resolve('check', ('code.txt',), RunOptions(budget=100, output_format='text'))

    assert run.seed == 5
    assert run.budget == 100
    assert run.output_format == 'text'
    assert run.to_json()['inputs'] == ['code.txt']


@pytest.mark.parametrize('options', [
    RunOptions(n_bound=0),
    RunOptions(budget=0),
    RunOptions(seed=-1),
])
def test_resolve_rejects_invalid_values(temp_config, options):
    """Test that non-positive bounds and negative seeds are preconditions."""
    with pytest.raises(PreconditionError):
        temp_config.resolve('factorize', (), options)


def test_resolve_rejects_unknown_format(temp_config):
    """Test an unknown format coming from the config file."""
    temp_config.data['format'] = 'xml'

    with pytest.raises(PreconditionError):
        temp_config.resolve('factorize', (), RunOptions())
