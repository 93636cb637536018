import os
from pathlib import Path
from typing import Optional


def path_or_default(default: str, env_var: str) -> Path:
    """Return the path from the environment variable or the default."""
    return Path(os.environ.get(env_var, default))


CACHE_DIR = path_or_default(str(Path.home() / ".cache" / "torus_homfly"), "TORUS_HOMFLY_CACHE_DIR")
CHARACTER_CACHE_NAME = "character_tables.json"


def persistence_requested() -> bool:
    """Library users opt into the on-disk character cache through the environment."""
    return os.environ.get("TORUS_HOMFLY_PERSIST", "0") not in ("", "0", "false", "False")


def character_cache_file(cache_dir: Optional[Path] = None) -> Path:
    return (cache_dir if cache_dir is not None else CACHE_DIR) / CHARACTER_CACHE_NAME
