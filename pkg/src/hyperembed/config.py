"""Run-time limits and switches shared by the library and the CLI."""

from __future__ import annotations

import contextlib
import json
import os
from dataclasses import asdict, dataclass, fields, replace

__all__ = ["Config", "current", "using", "load_config", "CONFIG_ENV"]

#: Environment variable naming a JSON file with default settings.
CONFIG_ENV = "HYPEREMBED_CONFIG"


@dataclass(frozen=True)
class Config:
    lattice_cap: int = 512
    modularity_cap: int = 200
    sweep_order_cap: int = 100
    pad_partitions: bool = False
    d_property: str = "full"
    representatives_only: bool = False
    workers: int = 1
    output: str = "text"

    def __post_init__(self):
        for name in ("lattice_cap", "modularity_cap", "sweep_order_cap", "workers"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.d_property not in ("full", "EC"):
            raise ValueError(f"d_property must be 'full' or 'EC', not {self.d_property!r}")
        if self.output not in ("json", "text"):
            raise ValueError(f"output must be 'json' or 'text', not {self.output!r}")

    def updated(self, **changes) -> "Config":
        known = {f.name for f in fields(self)}
        unknown = set(changes) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return asdict(self)


def load_config(path: str | None = None) -> Config:
    """Defaults, overridden by the JSON file at ``path`` or ``$HYPEREMBED_CONFIG``."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return Config()
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return Config().updated(**data)


_current = Config()


def current() -> Config:
    return _current


@contextlib.contextmanager
def using(config: Config):
    global _current
    previous, _current = _current, config
    try:
        yield config
    finally:
        _current = previous
