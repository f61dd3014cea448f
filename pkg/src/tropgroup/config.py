"""Configuration loading and defaults."""

import logging
import os
from dataclasses import dataclass, field, fields
from pathlib import Path

import yaml

from .errors import ParseError

logger = logging.getLogger(__name__)

TROPGROUP_HOME = Path(os.environ.get("TROPGROUP_HOME", Path.home() / ".tropgroup"))


@dataclass
class TropConfig:
    """Run configuration. CLI flags override document options, which override this."""

    home: Path = field(default_factory=lambda: TROPGROUP_HOME)

    # Closure stops with CapExceeded once it has more elements than this.
    # n! <= 5040 for n <= 7, so periodic groups at desk scale stay well below.
    closure_cap: int = 10_000

    # Finite order of a diagonal image is only searched up to this exponent
    # for ASSUMED samples.
    torsion_exponent_cap: int = 64

    # Treat input lists as samples of a group instead of verifying the axioms.
    assume_group: bool = False

    # Human-readable trace on stderr
    verbose: bool = False

    # JSON indentation of the report
    indent: int = 2

    @property
    def config_path(self) -> Path:
        return self.home / "config.yaml"


_TYPES = {"closure_cap": int, "torsion_exponent_cap": int, "assume_group": bool, "verbose": bool, "indent": int}


def load_config(path: Path | None = None) -> TropConfig:
    """Read YAML overrides from ``path`` (default: ``~/.tropgroup/config.yaml``).

    A missing file yields the defaults.
    """
    config = TropConfig()
    path = path or config.config_path
    if not path.exists():
        return config

    try:
        data = yaml.safe_load(path.read_text()) or {}
    except (yaml.YAMLError, OSError) as e:
        raise ParseError(f"cannot read config {path}: {e}", witnesses={"path": str(path)})
    if not isinstance(data, dict):
        raise ParseError(f"config {path} must be a mapping", witnesses={"path": str(path)})

    known = {f.name for f in fields(TropConfig)} - {"home"}
    for key, value in data.items():
        if key not in known:
            logger.warning("ignoring unknown config key %r in %s", key, path)
            continue
        expected = _TYPES[key]
        # bool is an int subclass; keep the two apart.
        if not isinstance(value, expected) or (expected is int and isinstance(value, bool)):
            raise ParseError(
                f"config key {key!r} must be {expected.__name__}, got {type(value).__name__}",
                witnesses={"key": key},
            )
        if expected is int and value < 1 and key != "indent":
            raise ParseError(f"config key {key!r} must be positive", witnesses={"key": key, "value": value})
        setattr(config, key, value)
    return config
