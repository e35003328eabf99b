"""Environment configuration loader for n6-algebra."""

import os
from pathlib import Path
from typing import Any, Optional


def load_env_file(env_file: Optional[Path] = None) -> None:
    """Load environment variables from .env file.

    Args:
        env_file: Path to .env file. If None, looks for .env in project root.
    """
    if env_file is None:
        project_root = Path(__file__).parent.parent.parent
        env_file = project_root / ".env"

    if not env_file.exists():
        return

    with open(env_file, encoding="utf-8") as f:
        for line in f:
            line = line.strip()

            # Skip empty lines and comments
            if not line or line.startswith("#"):
                continue

            if "=" in line:
                key, value = line.split("=", 1)
                key = key.strip()
                value = value.strip()

                if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
                    value = value[1:-1]

                # Variables already in the environment win
                if key not in os.environ:
                    os.environ[key] = value


def _int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


def _float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be a number, got {raw!r}") from e


def _choice(name: str, default: str, allowed: tuple[str, ...]) -> str:
    value = os.getenv(name, default).lower()
    if value not in allowed:
        raise ValueError(f"{name} must be one of {', '.join(allowed)}, got {value!r}")
    return value


def get_config() -> dict[str, Any]:
    """Get configuration values from environment variables.

    Returns:
        Dictionary of configuration values with defaults.
    """
    load_env_file()

    return {
        "mode": _choice("N6_MODE", "exhaustive", ("exhaustive", "sampled")),
        "backend": _choice("N6_BACKEND", "exact", ("exact", "float")),
        "seed": _int("N6_SEED", 20240607),
        "tolerance": _float("N6_TOLERANCE", 1e-9),
        "budget": _int("N6_BUDGET", 1_000_000),
        "samples": _int("N6_SAMPLES", 200),
        "degree": _int("N6_DEGREE", 4),
        "output_dir": os.getenv("N6_OUTPUT_DIR", "reports"),
        "log_level": os.getenv("N6_LOG_LEVEL", "WARNING").upper(),
        "use_colors": os.getenv("N6_USE_COLORS", "true").lower() == "true",
    }
