"""
Common path configuration shared across commands.
"""

import os
from pathlib import Path
from typing import Optional, Union

from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parents[2]
DEFAULT_OUT_DIR = Path("outputs")
OUT_DIR_ENV = "VISORLAB_OUT_DIR"


def resolve_out_dir(
    flag: Optional[Union[str, Path]] = None, configured: Optional[Union[str, Path]] = None
) -> Path:
    """
    Output directory: the --out flag, then the config file, then VISORLAB_OUT_DIR
    (a .env file is honoured), then ``outputs/`` under the working directory.
    """
    if flag:
        return Path(flag)
    if configured:
        return Path(configured)
    load_dotenv(Path.cwd() / ".env")
    env_value = os.getenv(OUT_DIR_ENV)
    return Path(env_value) if env_value else DEFAULT_OUT_DIR
