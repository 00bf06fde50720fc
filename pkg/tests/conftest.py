"""Shared pytest fixtures for all tests."""

import pytest

from cli.config import Config
from codes.io import write_code
from codes.models import FiniteCode
from cyclic.models import FactorizationPair


@pytest.fixture
def temp_config_dir(tmp_path):
    """
    Create temporary config directory.

    Args:
        tmp_path: pytest tmp_path fixture

    Returns:
        Path to temporary .factorcodes directory
    """
    config_dir = tmp_path / '.factorcodes'
    config_dir.mkdir()
    return config_dir


@pytest.fixture
def temp_config(temp_config_dir):
    """
    Create temporary config instance.

    Args:
        temp_config_dir: Temporary config directory fixture

    Returns:
        Config instance with temp config file
    """
    return Config(temp_config_dir / 'config.json')


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep FACTORCODES_* variables of the calling shell out of the tests."""
    for name in (
        'FACTORCODES_CONFIG',
        'FACTORCODES_N_BOUND',
        'FACTORCODES_BUDGET',
        'FACTORCODES_SEED',
        'FACTORCODES_FORMAT',
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def alphabet_code():
    """The code A = {a, b}."""
    return FiniteCode.of(['a', 'b'])


@pytest.fixture
def prefix_code():
    """The maximal prefix code {aa, ab, b}; the letter a has order 2."""
    return FiniteCode.of(['aa', 'ab', 'b'])


@pytest.fixture
def uniform_code():
    """All words of length 2 over {a, b}."""
    return FiniteCode.of(['aa', 'ab', 'ba', 'bb'])


@pytest.fixture
def krasner_code():
    """(1 + a)(A - 1)(1 + a^2 + a^4) + 1: seven words, a has order 6."""
    return FiniteCode.of(['aaaaaa', 'b', 'baa', 'baaaa', 'ab', 'abaa', 'abaaaa'])


@pytest.fixture
def ambiguous_words():
    """{a, ab, ba}: aba = a·ba = ab·a."""
    return FiniteCode.of(['a', 'ab', 'ba'])


@pytest.fixture
def krasner_six():
    """The Krasner pair ({0, 1}, {0, 2, 4}) of Z_6."""
    return FactorizationPair.of({0, 1}, {0, 2, 4}, 6, kind='krasner')


@pytest.fixture
def code_file(tmp_path):
    """
    Write a code to a text file.

    Returns:
        Function taking a FiniteCode and an optional file name, returning the path
    """
    def _write(code, name='code.txt'):
        path = tmp_path / name
        write_code(code, path)
        return path

    return _write
