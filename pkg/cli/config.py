"""Configuration management for the factorcodes CLI."""

import json
import os
import shutil
from pathlib import Path
from typing import Any, Optional

from cli.constants import CONFIG_DIR, CONFIG_ENV, CONFIG_FILENAME, FORMATS
from cli.models import RunConfig, RunOptions
from common.constants import DEFAULT_N_BOUND, DEFAULT_SEARCH_BUDGET, DEFAULT_SEED
from common.exceptions import PreconditionError
from common.logging_config import get_logger

logger = get_logger(__name__)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer")
        return default


class Config:
    """Manages CLI configuration stored in a JSON file."""

    @staticmethod
    def default_config() -> dict[str, Any]:
        """Defaults, overridable by FACTORCODES_* environment variables."""
        return {
            "n_bound": _env_int("FACTORCODES_N_BOUND", DEFAULT_N_BOUND),
            "budget": _env_int("FACTORCODES_BUDGET", DEFAULT_SEARCH_BUDGET),
            "seed": _env_int("FACTORCODES_SEED", DEFAULT_SEED),
            "format": os.environ.get("FACTORCODES_FORMAT", "json"),
        }

    @staticmethod
    def resolve_path(config_path: Optional[str] = None) -> Path:
        """--config PATH, then $FACTORCODES_CONFIG, then ~/.factorcodes/config.json."""
        if config_path:
            return Path(config_path)
        env_path = os.environ.get(CONFIG_ENV)
        if env_path:
            return Path(env_path)
        return Path.home() / CONFIG_DIR / CONFIG_FILENAME

    def __init__(self, config_path: Path):
        """
        Initialize configuration manager.

        Args:
            config_path: Path to config JSON file (typically ~/.factorcodes/config.json)
        """
        self.config_path = config_path
        self.data = self._load()

    def _load(self) -> dict[str, Any]:
        """
        Load configuration from file. A missing file means defaults and is never created.

        Returns:
            Configuration dictionary
        """
        logger.debug(f"Loading configuration from {self.config_path}")
        config = self.default_config()
        if not self.config_path.exists():
            return config
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise ValueError("top-level JSON value is not an object")
        except (json.JSONDecodeError, ValueError, OSError) as e:
            logger.error(f"Failed to load configuration: {e}")
            backup_path = self.config_path.with_suffix('.json.bak')
            try:
                shutil.copy(self.config_path, backup_path)
                logger.info(f"Corrupted config backed up to {backup_path}")
            except OSError:
                logger.warning(f"Could not back up {self.config_path}")
            return config
        config.update(data)
        logger.info(f"Configuration loaded from {self.config_path}")
        return config

    def get_n_bound(self) -> int:
        return int(self.data.get('n_bound', DEFAULT_N_BOUND))

    def get_budget(self) -> int:
        return int(self.data.get('budget', DEFAULT_SEARCH_BUDGET))

    def get_seed(self) -> int:
        return int(self.data.get('seed', DEFAULT_SEED))

    def get_format(self) -> str:
        return str(self.data.get('format', 'json'))

    def resolve(self, command: str, inputs: tuple[str, ...], options: RunOptions) -> RunConfig:
        """
        Merge command-line options over this configuration.

        Raises:
            PreconditionError: If a budget or bound is not positive, the seed is negative
                or the format is unknown
        """
        run = RunConfig(
            command=command,
            inputs=inputs,
            n_bound=options.n_bound if options.n_bound is not None else self.get_n_bound(),
            budget=options.budget if options.budget is not None else self.get_budget(),
            seed=options.seed if options.seed is not None else self.get_seed(),
            output_format=options.output_format or self.get_format(),
            out_path=options.out_path,
        )
        if run.n_bound < 1 or run.budget < 1:
            raise PreconditionError(f"n-bound and budget must be positive, got {run.n_bound} and {run.budget}")
        if run.seed < 0:
            raise PreconditionError(f"seed must be a natural number, got {run.seed}")
        if run.output_format not in FORMATS:
            raise PreconditionError(f"unknown output format {run.output_format!r}")
        return run
