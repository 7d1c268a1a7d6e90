"""
Configuration management utilities
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

HERE = Path(__file__).resolve().parent
PROJECT_ROOT = HERE.parent.parent


class Config:
    """Load and manage configuration"""

    def __init__(self, config_path: str = "config.yaml"):
        """
        Initialize configuration

        Args:
            config_path: Path to configuration file
        """
        self.config_path = Path(config_path)
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file"""
        if not self.config_path.exists():
            # Try the example config, first in the working directory then beside the package
            for example_path in (Path("config.example.yaml"), PROJECT_ROOT / "config.example.yaml"):
                if example_path.exists():
                    logger.warning("%s not found. Using %s", self.config_path, example_path)
                    self.config_path = example_path
                    break
            else:
                raise FileNotFoundError(f"Configuration file not found: {self.config_path}")

        with open(self.config_path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}

    def get(self, key_path: str, default: Any = None) -> Any:
        """
        Get configuration value using dot notation

        Args:
            key_path: Dot-separated path to config value (e.g., 'engine.proper_noun_class')
            default: Default value if key not found

        Returns:
            Configuration value

        Example:
            >>> config = Config()
            >>> high_water = config.get('engine.spanning_stack.high_water', 15)
        """
        keys = key_path.split(".")
        value = self.config

        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default

        return value

    def resolve_path(self, key_path: str, default: Optional[str] = None) -> Optional[Path]:
        """
        Get a filesystem path from the config.

        Relative paths are taken relative to the directory holding the config file.
        """
        raw = self.get(key_path, default)
        if raw is None:
            return None
        path = Path(raw)
        if not path.is_absolute():
            path = self.config_path.resolve().parent / path
        return path

    def engine_settings(self) -> "EngineSettings":
        """Validated engine settings built from the 'engine' and 'reasoning' sections"""
        raw = dict(self.get("engine", {}) or {})
        stack = raw.pop("spanning_stack", {}) or {}
        reasoning = self.get("reasoning", {}) or {}
        return EngineSettings(
            stack_low_water=stack.get("low_water", 10),
            stack_high_water=stack.get("high_water", 15),
            person_class=reasoning.get("person_class", "PersonObjectFrameClass"),
            **raw,
        )

    def __getitem__(self, key: str) -> Any:
        """Allow dict-like access"""
        return self.config[key]

    def __repr__(self) -> str:
        return f"Config(config_path='{self.config_path}')"


class EngineSettings(BaseModel):
    """Knobs consumed by the semantic engine"""

    stack_low_water: int = Field(default=10, ge=1)
    stack_high_water: int = Field(default=15, ge=1)
    proper_noun_class: str = "PersonObjectFrameClass"
    fallback_noun_class: Optional[str] = None
    default_structural_parent: str = "EverydayObjectStructuralParentClass"
    person_class: str = "PersonObjectFrameClass"
    text_source: str = "SubmittedFromWebClient"


# Singleton instance
_config_instance: Optional[Config] = None


def get_config() -> Config:
    """Get configuration singleton instance"""
    global _config_instance  # pylint: disable=global-statement
    if _config_instance is None:
        _config_instance = Config()
    return _config_instance
