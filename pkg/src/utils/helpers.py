"""
Shared helpers: logger factory and small numeric utilities.
"""

import logging

import numpy as np

_FORMAT = "[%(asctime)s] %(levelname)s in %(module)s: %(message)s"


def get_logger(name: str, level: int = logging.INFO) -> logging.Logger:
    """
    Return a module logger with the project's stream handler attached once.

    Args:
        name (str): Usually ``__name__`` of the calling module.
        level (int): Initial level for a freshly configured logger.

    Returns:
        logging.Logger: The configured logger.
    """
    logger = logging.getLogger(name)
    if not any(getattr(h, "_visorlab", False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler._visorlab = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
        logger.setLevel(level)
        logger.propagate = False
    return logger


def set_log_level(level: int) -> None:
    """Apply ``level`` to every logger created through :func:`get_logger`."""
    for logger in logging.Logger.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and any(
            getattr(h, "_visorlab", False) for h in logger.handlers
        ):
            logger.setLevel(level)


def antisymmetrize(values: np.ndarray) -> np.ndarray:
    """
    Force an ascending grid to be exactly symmetric about zero.

    ``v[i] == -v[n-1-i]`` holds bit-for-bit afterwards, so odd grids contain 0.0.
    """
    values = np.asarray(values, dtype=float)
    return 0.5 * (values - values[::-1])


def max_abs(values) -> float:
    """Largest absolute entry, 0.0 for an empty input."""
    arr = np.abs(np.asarray(values, dtype=float))
    return float(arr.max()) if arr.size else 0.0
