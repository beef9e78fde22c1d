# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the sweep configuration and its JSON parser."""

from dataclasses import asdict, dataclass, field, fields, replace
from enum import Enum, unique
from importlib import resources
from itertools import product
import json
from pathlib import Path

from beartype.typing import Optional, Tuple, Union
import numpy as np
import semver

from rotorchain.errors import ConfigurationError
from rotorchain.infotheory.measures import Partition
from rotorchain.lindblad.baths import BathConfig
from rotorchain.misc.options import AnnealConfig, SolverOptions
from rotorchain.model.params import CCMParams, Variant

CONFIG_SCHEMA_VERSION = semver.Version(1, 0, 0)
"""Newest configuration schema understood by this release."""

PRESETS_PACKAGE = "rotorchain.cli"
PRESETS_DIRECTORY = "presets"
PRESET_ALIASES = {
    "fig2": "ness-currents-f",
    "fig2cd": "ness-currents-phi",
    "fig3": "ness-currents-sizes",
    "fig4": "ness-information-f",
    "fig5": "ness-susceptibility-f",
    "figA1": "ground-binder-f",
    "figA2": "ground-information-f",
    "figA3": "ground-currents-f",
}
"""Short aliases accepted in place of the preset names."""


@unique
class SweepAxis(Enum):
    """Provides an enum holding the parameters a sweep can run along."""

    F = "f"
    PHI = "phi"
    BETA_E = "beta_e"
    BETA_O = "beta_o"
    DELTA_T = "delta_t"


@unique
class PhasePattern(Enum):
    """Provides an enum holding the supported chiral-phase patterns."""

    STAGGERED = "staggered"
    HOMOGENEOUS = "homogeneous"


@dataclass(frozen=True)
class PointParams:
    """Full parameter record of one grid point.

    When ``delta_t`` is set, the odd-rotor temperature is ``1 / beta_e + delta_t``
    and ``beta_o`` is ignored.
    """

    M: int
    N_s: int
    f: float
    phi: float
    pattern: PhasePattern
    variant: Variant
    beta_e: float
    beta_o: float
    g: float
    delta_t: Optional[float] = None

    def model(self) -> CCMParams:
        """Return the chain parameters of the point."""
        if self.pattern is PhasePattern.STAGGERED:
            build = CCMParams.staggered
        else:
            build = CCMParams.homogeneous
        return build(self.M, self.f, self.phi, self.variant, self.N_s)

    @property
    def effective_beta_o(self) -> float:
        """Odd-rotor inverse temperature, after applying ``delta_t``."""
        if self.delta_t is None:
            return self.beta_o
        return 1.0 / (1.0 / self.beta_e + self.delta_t)

    def baths(self) -> BathConfig:
        """Return the staggered baths of the point."""
        return BathConfig.staggered(self.M, self.beta_e, self.effective_beta_o, self.g)

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the PointParams class."""
        return {
            "M": self.M,
            "N_s": self.N_s,
            "variant": self.variant.value,
            "phases": self.pattern.value,
            "f": self.f,
            "phi": self.phi,
            "beta_e": self.beta_e,
            "beta_o": self.effective_beta_o,
            "g": self.g,
            "delta_t": self.delta_t,
        }


@dataclass(frozen=True)
class SweepSpec:
    """One swept axis over a fixed parameter record.

    Parameters
    ----------
    axis : SweepAxis
        Swept parameter.
    values : tuple
        Grid values, non-empty.
    fixed : PointParams
        Values of every other parameter.
    """

    axis: SweepAxis
    values: tuple
    fixed: PointParams

    def __post_init__(self):
        """Validate the grid against the physical range of its axis."""
        if len(self.values) == 0:
            raise ConfigurationError("The sweep has no values.")
        for value in self.values:
            _check_axis_value(self.axis, value)

    def points(self) -> list:
        """Return the parameter record of every grid value, in order."""
        return [replace(self.fixed, **{self.axis.value: float(v)}) for v in self.values]


def _check_axis_value(axis: SweepAxis, value: float):
    if not np.isfinite(value):
        raise ConfigurationError(f"Sweep value {value} of '{axis.value}' is not finite.")
    if axis is SweepAxis.F and not 0.0 <= value <= 1.0:
        raise ConfigurationError(f"The control parameter must lie in [0, 1], got {value}.")
    if axis in (SweepAxis.BETA_E, SweepAxis.BETA_O) and value <= 0:
        raise ConfigurationError(f"Inverse temperatures must be positive, got {value}.")


@dataclass(frozen=True)
class MeasureOptions:
    """Optional observables computed at every grid point.

    Parameters
    ----------
    information : bool, default: False
        Entropy, mutual information, coherence and negativity.
    discord : bool, default: False
        Global discord, through simulated annealing.
    susceptibility : bool, default: False
        Current and mutual-information susceptibilities (NESS sweeps).
    susceptibility_step : float, default: 1e-3
        Temperature step of the susceptibilities.
    partition : tuple, default: None
        Rotors of subsystem ``A``. First half of the chain when ``None``.
    """

    information: bool = False
    discord: bool = False
    susceptibility: bool = False
    susceptibility_step: float = 1e-3
    partition: Optional[tuple] = None

    def partition_for(self, M: int) -> Partition:
        """Return the bipartition used for a chain of ``M`` rotors."""
        if self.partition is None:
            return Partition.half_chain(M)
        return Partition.from_subset(self.partition, M)


@dataclass(frozen=True)
class SweepConfig:
    """Validated content of a sweep configuration file.

    Parameters
    ----------
    name : str
        Run name, used in logs and output metadata.
    sweep : SweepSpec
        Swept axis and fixed parameters.
    sizes : tuple
        Chain lengths. The sweep is repeated for each.
    patterns : tuple
        Chiral-phase patterns. The sweep is repeated for each.
    measures : MeasureOptions
        Optional observables.
    anneal : AnnealConfig
        Settings of the global-discord annealing.
    solver : SolverOptions
        Steady-state and eigensolver settings.
    eigenpairs : int
        Number of eigenpairs computed by ground-state sweeps.
    discord_state : str
        State analysed by the ``discord`` command, ``"ness"`` or ``"ground"``.
    schema : str
        Schema version of the source document.
    """

    name: str
    sweep: SweepSpec
    sizes: tuple
    patterns: tuple
    measures: MeasureOptions = field(default_factory=MeasureOptions)
    anneal: AnnealConfig = field(default_factory=AnnealConfig)
    solver: SolverOptions = field(default_factory=SolverOptions)
    eigenpairs: int = 2
    discord_state: str = "ness"
    schema: str = str(CONFIG_SCHEMA_VERSION)

    def points(self) -> list:
        """Return every grid point, ordered by pattern, then size, then sweep value."""
        return [
            point
            for pattern, M in product(self.patterns, self.sizes)
            for point in replace(
                self.sweep, fixed=replace(self.sweep.fixed, M=M, pattern=pattern)
            ).points()
        ]

    def with_seed(self, seed: int) -> "SweepConfig":
        """Return a copy whose annealing uses ``seed``."""
        return replace(self, anneal=replace(self.anneal, seed=seed))

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the SweepConfig class."""
        fixed = self.sweep.fixed.to_dict()
        return {
            "schema": self.schema,
            "name": self.name,
            "model": {k: fixed[k] for k in ("M", "N_s", "f", "phi", "phases", "variant")},
            "baths": {
                "beta_e": fixed["beta_e"],
                "beta_o": self.sweep.fixed.beta_o,
                "g": fixed["g"],
                "delta_t": fixed["delta_t"],
            },
            "sweep": {"axis": self.sweep.axis.value, "values": list(self.sweep.values)},
            "sizes": list(self.sizes),
            "patterns": [p.value for p in self.patterns],
            "measures": {
                **asdict(self.measures),
                "partition": None
                if self.measures.partition is None
                else list(self.measures.partition),
            },
            "anneal": self.anneal.to_dict(),
            "solver": self.solver.to_dict(),
            "ground": {"k": self.eigenpairs},
            "discord": {"state": self.discord_state},
        }


def _section(document: dict, key: str) -> dict:
    section = document.get(key, {})
    if not isinstance(section, dict):
        raise ConfigurationError(f"Section '{key}' must be an object.")
    return section


def _options(cls, section: dict, key: str):
    """Build an option dataclass from a section, rejecting unknown keys."""
    known = {f.name for f in fields(cls)}
    unknown = set(section) - known
    if unknown:
        raise ConfigurationError(f"Unknown keys in '{key}': {sorted(unknown)}.")
    try:
        return cls(**section)
    except (TypeError, ValueError) as error:
        raise ConfigurationError(f"Invalid '{key}' section: {error}") from error


def _enum(cls, value, key: str):
    try:
        return cls(value)
    except ValueError:
        allowed = [member.value for member in cls]
        raise ConfigurationError(f"'{key}' must be one of {allowed}, got '{value}'.") from None


def _check_schema(value) -> str:
    if value is None:
        raise ConfigurationError("The configuration has no 'schema' field.")
    try:
        version = semver.Version.parse(str(value))
    except ValueError as error:
        raise ConfigurationError(f"Invalid schema version '{value}'.") from error
    # A compare of 1 means the document is newer than this release.
    if version.major != CONFIG_SCHEMA_VERSION.major or version.compare(CONFIG_SCHEMA_VERSION) == 1:
        raise ConfigurationError(
            f"Schema {version} is not compatible with version {CONFIG_SCHEMA_VERSION}."
        )
    return str(version)


def _sweep_values(section: dict) -> tuple:
    if "values" in section:
        values = section["values"]
        if not isinstance(values, list):
            raise ConfigurationError("'sweep.values' must be a list.")
        return tuple(float(v) for v in values)
    try:
        start, stop, count = section["start"], section["stop"], int(section["count"])
    except KeyError as error:
        raise ConfigurationError(
            "'sweep' needs either 'values' or 'start', 'stop' and 'count'."
        ) from error
    if count < 1:
        raise ConfigurationError(f"'sweep.count' must be positive, got {count}.")
    return tuple(float(v) for v in np.linspace(float(start), float(stop), count))


def parse_config(document: dict) -> SweepConfig:
    """Validate a configuration document and build the :class:`SweepConfig`.

    Raises
    ------
    ConfigurationError
        If the document is missing fields, has unknown keys, holds unphysical
        values or declares an incompatible schema.
    """
    if not isinstance(document, dict):
        raise ConfigurationError("The configuration must be a JSON object.")
    schema = _check_schema(document.get("schema"))
    model, baths = _section(document, "model"), _section(document, "baths")
    sweep, ground = _section(document, "sweep"), _section(document, "ground")

    try:
        fixed = PointParams(
            M=int(model["M"]),
            N_s=int(model.get("N_s", 3)),
            f=float(model.get("f", 0.5)),
            phi=float(model.get("phi", 0.0)),
            pattern=_enum(PhasePattern, model.get("phases", "staggered"), "model.phases"),
            variant=_enum(Variant, model.get("variant", "standard"), "model.variant"),
            beta_e=float(baths.get("beta_e", 1.0)),
            beta_o=float(baths.get("beta_o", baths.get("beta_e", 1.0))),
            g=float(baths.get("g", 0.2)),
            delta_t=None if baths.get("delta_t") is None else float(baths["delta_t"]),
        )
    except KeyError as error:
        raise ConfigurationError(f"Missing required field 'model.{error.args[0]}'.") from error
    except (TypeError, ValueError) as error:
        raise ConfigurationError(f"Invalid model or bath value: {error}") from error

    if fixed.M < 2 or fixed.N_s < 2:
        raise ConfigurationError("Chains need at least two rotors with two states each.")
    if fixed.g <= 0 or fixed.beta_e <= 0 or fixed.beta_o <= 0:
        raise ConfigurationError("Rates and inverse temperatures must be positive.")
    _check_axis_value(SweepAxis.F, fixed.f)

    axis = _enum(SweepAxis, sweep.get("axis"), "sweep.axis")
    if axis is SweepAxis.DELTA_T and fixed.delta_t is None:
        fixed = replace(fixed, delta_t=0.0)
    spec = SweepSpec(axis=axis, values=_sweep_values(sweep), fixed=fixed)

    sizes = tuple(int(M) for M in document.get("sizes", [fixed.M]))
    if not sizes or min(sizes) < 2:
        raise ConfigurationError("'sizes' must list chain lengths of at least two rotors.")
    patterns = tuple(
        _enum(PhasePattern, p, "patterns") for p in document.get("patterns", [fixed.pattern.value])
    )
    if not patterns:
        raise ConfigurationError("'patterns' must not be empty.")

    measures = _options(MeasureOptions, _section(document, "measures"), "measures")
    if measures.partition is not None:
        measures = replace(measures, partition=tuple(int(s) for s in measures.partition))
        for M in sizes:
            try:
                measures.partition_for(M)
            except ValueError as error:
                raise ConfigurationError(f"Invalid partition for M={M}: {error}") from error

    discord_state = _section(document, "discord").get("state", "ness")
    if discord_state not in ("ness", "ground"):
        raise ConfigurationError(
            f"'discord.state' must be 'ness' or 'ground', not '{discord_state}'."
        )

    return SweepConfig(
        name=str(document.get("name", "sweep")),
        sweep=spec,
        sizes=sizes,
        patterns=patterns,
        measures=measures,
        anneal=_options(AnnealConfig, _section(document, "anneal"), "anneal"),
        solver=_options(SolverOptions, _section(document, "solver"), "solver"),
        eigenpairs=int(ground.get("k", 2)),
        discord_state=discord_state,
        schema=schema,
    )


def load_config(path: Union[str, Path]) -> SweepConfig:
    """Read and validate a JSON configuration file.

    Raises
    ------
    ConfigurationError
        If the file cannot be read or parsed, or fails validation.
    """
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as error:
        raise ConfigurationError(f"Cannot read configuration '{path}': {error}") from error
    except json.JSONDecodeError as error:
        raise ConfigurationError(f"Configuration '{path}' is not valid JSON: {error}") from error
    return parse_config(document)


def list_presets() -> Tuple[str, ...]:
    """Return the names of the shipped presets."""
    directory = resources.files(PRESETS_PACKAGE) / PRESETS_DIRECTORY
    return tuple(
        sorted(
            entry.name[: -len(".json")]
            for entry in directory.iterdir()
            if entry.name.endswith(".json")
        )
    )


def load_preset(name: str) -> SweepConfig:
    """Load a shipped preset by name or by one of its ``PRESET_ALIASES``.

    Raises
    ------
    ConfigurationError
        If no preset has this name.
    """
    name = PRESET_ALIASES.get(name, name)
    if name not in list_presets():
        available = ", ".join(list_presets())
        raise ConfigurationError(f"Unknown preset '{name}'. Available: {available}.")
    resource = resources.files(PRESETS_PACKAGE) / PRESETS_DIRECTORY / f"{name}.json"
    return parse_config(json.loads(resource.read_text(encoding="utf-8")))
