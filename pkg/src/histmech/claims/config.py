"""Run configuration from a flat ``key = value`` file.

Recognized keys::

    constants.<name>            physical constant override (see PhysicalConstants)
    tolerance.<claim-id>.abs    verdict tolerance override
    tolerance.<claim-id>.rel
    planet.<Name>.radius_au     planetary table override
    planet.<Name>.period_days
    material.<name>             density in kg/m^3 for the wreath test
    format                      md | json
    output                      report path ("-" for stdout)
    parallel                    worker threads, >= 1

Blank lines and text after ``#`` are ignored.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from ..celestial import PLANETS
from ..constants import DEFAULT_CONSTANTS, PhysicalConstants
from ..errors import ConfigError, HistmechError
from ..hydrostatics import MATERIALS
from ..kernels import Tolerance

CONFIG_ENV = "HISTMECH_CONFIG"
FORMATS = ("md", "json")


@dataclass(frozen=True)
class RunConfig:
    constants: PhysicalConstants = DEFAULT_CONSTANTS
    tolerances: dict[str, Tolerance] = field(default_factory=dict)
    planets: dict[str, tuple[float, float]] = field(default_factory=lambda: dict(PLANETS))
    materials: dict[str, float] = field(default_factory=lambda: dict(MATERIALS))
    format: str = "md"
    output: str | None = None
    parallel: int = 1

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if not (isinstance(self.parallel, int) and self.parallel >= 1):
            raise ConfigError("parallel must be an integer >= 1")


def _parse_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {raw!r}") from None


def parse_config(text: str, known_claims: set[str] | None = None, *, origin: str = "<config>") -> RunConfig:
    constants: dict[str, float] = {}
    tol_parts: dict[str, dict[str, float]] = {}
    planets = dict(PLANETS)
    materials = dict(MATERIALS)
    kwargs: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{origin}:{lineno}: expected 'key = value'")
        key, raw = (s.strip() for s in line.split("=", 1))
        parts = key.split(".")
        where = f"{origin}:{lineno}: {key}"
        if parts[0] == "constants" and len(parts) == 2:
            if parts[1] not in PhysicalConstants.keys():
                raise ConfigError(f"{where}: unknown constant {parts[1]!r}")
            constants[parts[1]] = _parse_float(where, raw)
        elif parts[0] == "tolerance" and len(parts) == 3 and parts[2] in ("abs", "rel"):
            if known_claims is not None and parts[1] not in known_claims:
                raise ConfigError(f"{where}: unknown claim {parts[1]!r}")
            tol_parts.setdefault(parts[1], {})[parts[2]] = _parse_float(where, raw)
        elif parts[0] == "planet" and len(parts) == 3 and parts[2] in ("radius_au", "period_days"):
            a, p = planets.get(parts[1], (None, None))
            value = _parse_float(where, raw)
            planets[parts[1]] = (value, p) if parts[2] == "radius_au" else (a, value)
        elif parts[0] == "material" and len(parts) == 2:
            materials[parts[1]] = _parse_float(where, raw)
        elif key == "format":
            kwargs["format"] = raw
        elif key == "output":
            kwargs["output"] = raw
        elif key == "parallel":
            try:
                kwargs["parallel"] = int(raw)
            except ValueError:
                raise ConfigError(f"{where}: expected an integer") from None
        else:
            raise ConfigError(f"{where}: unknown key")
    for name, (a, p) in planets.items():
        if a is None or p is None:
            raise ConfigError(f"{origin}: planet {name!r} needs both radius_au and period_days")
    try:
        consts = DEFAULT_CONSTANTS.with_overrides(constants)
        tolerances = {cid: Tolerance(v.get("abs", 0.0), v.get("rel", 0.0)) for cid, v in tol_parts.items()}
    except ConfigError:
        raise
    except (HistmechError, ValueError) as exc:
        raise ConfigError(f"{origin}: {exc}") from None
    return RunConfig(consts, tolerances, planets, materials, **kwargs)


def load_config(path: str | os.PathLike | None = None, known_claims: set[str] | None = None) -> RunConfig:
    """Read a config file; ``path`` falls back to $HISTMECH_CONFIG, then defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV) or None
    if path is None:
        return RunConfig()
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {str(p)!r}: {exc.strerror}") from None
    return parse_config(text, known_claims, origin=str(p))


__all__ = ["CONFIG_ENV", "FORMATS", "RunConfig", "parse_config", "load_config"]
