"""
Logging setup driven by the 'logging' config section
"""

import logging
from typing import List, Optional

from src.utils.config import Config

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def setup_logging(config: Optional[Config] = None, level: Optional[str] = None) -> None:
    """
    Configure root logging once.

    Args:
        config: Configuration holding logging.level / logging.file / logging.console_output
        level: Overrides the configured level when given
    """
    configured = config.get("logging.level", "INFO") if config else "INFO"
    handlers: List[logging.Handler] = []
    if config is None or config.get("logging.console_output", True):
        handlers.append(logging.StreamHandler())
    log_file = config.get("logging.file") if config else None
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, (level or configured).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers or None,
        force=True,
    )
