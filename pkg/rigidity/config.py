"""
Configuration management for the rigidity tool.

Defaults are merged with the global configuration file, then with the
project file .rigidity/config.json in the working directory, then with
command-line flags.
"""

import os
import sys
import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

logger = logging.getLogger(__name__)


class RigidityConfig:
    """
    Configuration manager for rigidity settings.

    Sources, later ones winning:
    1. DEFAULT_CONFIG
    2. Global user configuration
    3. Project configuration in the working directory
    4. Command-line arguments
    """

    DEFAULT_CONFIG = {
        "oracle": {
            "seed": 0,                    # seed of the first placement
            "trials": 3,                  # placements sampled per rank check
            "field": "rational",          # rational or prime
        },
        "straightening": {
            "term_cap": 1_000_000,        # ExpressionBlowup beyond this many terms
        },
        "balanced": {
            "mode": "probabilistic",      # probabilistic or certified
            "trials": 5,                  # random matrices per determinant
        },
        "search": {
            "max_subsets": 100_000,
            "max_orientations": 100_000,
            "max_path_systems": 1_000_000,
        },
        "decision": {
            "mode": "kernel",             # kernel or search
            "dimension": None,            # used when neither --dim nor the file gives one
            "verify": False,              # cross-check theorem verdicts with the oracle
        },
        "stress": {
            "resample_attempts": 10,
        },
    }

    def __init__(self, args=None, load_files: bool = True):
        """
        Initialize configuration from default settings.

        Args:
            args: Command-line arguments (optional)
            load_files: Whether to merge the global and project files
        """
        self.config = self._deep_copy(self.DEFAULT_CONFIG)
        if load_files:
            self._load_global_config()
            self.load_project_config(os.getcwd())
        if args:
            self.apply_args(args)

    def _deep_copy(self, obj: Any) -> Any:
        if isinstance(obj, dict):
            return {k: self._deep_copy(v) for k, v in obj.items()}
        elif isinstance(obj, list):
            return [self._deep_copy(v) for v in obj]
        return obj

    def _get_global_config_path(self) -> Path:
        """
        Get the path to the global configuration file.

        Returns:
            %APPDATA%\\rigidity\\config.json on Windows,
            $XDG_CONFIG_HOME/rigidity/config.json elsewhere
        """
        if sys.platform == 'win32':
            app_data = os.environ.get('APPDATA', os.path.expanduser('~'))
            return Path(app_data) / 'rigidity' / 'config.json'
        config_dir = os.environ.get('XDG_CONFIG_HOME', os.path.expanduser('~/.config'))
        return Path(config_dir) / 'rigidity' / 'config.json'

    def _get_project_config_path(self, directory: Union[str, Path]) -> Path:
        return Path(directory) / '.rigidity' / 'config.json'

    def _load_global_config(self) -> None:
        self._load_config_file(self._get_global_config_path(), "global")

    def load_project_config(self, directory: Union[str, Path]) -> None:
        """
        Load a project-specific configuration if available.

        Args:
            directory: The project directory
        """
        self._load_config_file(self._get_project_config_path(directory), "project")

    def _load_config_file(self, config_path: Path, config_type: str) -> None:
        if config_path.exists():
            try:
                with open(config_path, 'r', encoding='utf-8') as f:
                    file_config = json.load(f)
                self._merge_config(file_config)
                logger.debug(f"Loaded {config_type} configuration from {config_path}")
            except json.JSONDecodeError:
                logger.warning(f"Invalid JSON in {config_type} configuration: {config_path}")
            except OSError as e:
                logger.warning(f"Error reading {config_type} configuration: {e}")

    def _merge_config(self, other_config: Dict[str, Any]) -> None:
        def _merge_dicts(target, source):
            for key, value in source.items():
                if key in target and isinstance(target[key], dict) and isinstance(value, dict):
                    _merge_dicts(target[key], value)
                else:
                    target[key] = value

        _merge_dicts(self.config, other_config)

    def apply_args(self, args) -> None:
        """
        Apply command-line arguments, overriding other settings.

        Only flags that were actually given (not None) override.

        Args:
            args: Parsed command-line arguments
        """
        overrides = {
            'seed': 'oracle.seed',
            'trials': 'oracle.trials',
            'field': 'oracle.field',
            'term_cap': 'straightening.term_cap',
            'balance_trials': 'balanced.trials',
            'path_cap': 'search.max_path_systems',
            'mode': 'decision.mode',
            'attempts': 'stress.resample_attempts',
        }
        for attr, key in overrides.items():
            value = getattr(args, attr, None)
            if value is None:
                continue
            self.set(key, value)

        budget = getattr(args, 'budget', None)
        if budget is not None:
            self.set('search.max_subsets', budget)
            self.set('search.max_orientations', budget)

        if getattr(args, 'certified', False):
            self.set('balanced.mode', 'certified')
        if getattr(args, 'verify', False):
            self.set('decision.verify', True)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value by dotted key, e.g. "oracle.trials".
        """
        value = self.config
        for part in key.split('.'):
            if isinstance(value, dict) and part in value:
                value = value[part]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value by dotted key."""
        parts = key.split('.')
        target = self.config
        for part in parts[:-1]:
            if part not in target:
                target[part] = {}
            target = target[part]
        target[parts[-1]] = value

    def save_global_config(self) -> bool:
        """
        Save the current configuration as global config.

        Returns:
            True if successful, False otherwise
        """
        return self._save_config_file(self._get_global_config_path())

    def save_project_config(self, directory: Union[str, Path]) -> bool:
        return self._save_config_file(self._get_project_config_path(directory))

    def _save_config_file(self, config_path: Path) -> bool:
        try:
            config_path.parent.mkdir(parents=True, exist_ok=True)
            with open(config_path, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=2)
            logger.debug(f"Configuration saved to {config_path}")
            return True
        except OSError as e:
            logger.error(f"Failed to save configuration: {e}")
            return False

    def reset_to_defaults(self) -> None:
        self.config = self._deep_copy(self.DEFAULT_CONFIG)

    def reset_section(self, section: str) -> bool:
        """
        Reset one section to its default values.

        Returns:
            True if successful, False if section not found
        """
        if section in self.DEFAULT_CONFIG:
            self.config[section] = self._deep_copy(self.DEFAULT_CONFIG[section])
            return True
        return False

    def to_dict(self) -> Dict[str, Any]:
        return self._deep_copy(self.config)


_global_config = None


def get_config(args=None) -> RigidityConfig:
    """
    Get or create the global configuration instance.

    Args:
        args: Command-line arguments (optional)
    """
    global _global_config
    if _global_config is None:
        _global_config = RigidityConfig(args)
    elif args is not None:
        _global_config.apply_args(args)
    return _global_config


def reset_config() -> None:
    """Drop the global instance so the next get_config() reloads."""
    global _global_config
    _global_config = None
