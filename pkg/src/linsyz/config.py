"""Size caps for the exponential routines.

Defaults can be overridden through environment variables so that the CLI and
the library agree without threading flags everywhere.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

MAX_VARIABLES = 64


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class Caps:
    oracle_n: int = 16
    faces: int = 1 << 16
    scarf_m: int = 20
    shelling_m: int = 12

    @classmethod
    def from_env(cls) -> "Caps":
        return cls(
            oracle_n=_env_int("LINSYZ_CAP_N", cls.oracle_n),
            faces=_env_int("LINSYZ_CAP_FACES", cls.faces),
            scarf_m=_env_int("LINSYZ_CAP_M", cls.scarf_m),
            shelling_m=_env_int("LINSYZ_CAP_SHELL", cls.shelling_m),
        )


def default_caps() -> Caps:
    return Caps.from_env()
