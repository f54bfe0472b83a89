"""Base classes for the command framework behind the CLI."""

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import InvalidInput
from ..weights import ModelCouplings, parse_number


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class RunConfig(BaseModel):
    """
    Validated parameters of one CLI invocation.

    Built from an optional TOML file, then overridden by explicit flags.
    Numbers given as strings like "1/2" stay exact for the rational engines.
    """
    model_config = ConfigDict(extra="forbid")

    command: str

    # Model
    n_c: int = Field(1, ge=1)
    n_b: int = Field(0, ge=0)
    n_f: int = Field(0, ge=0)
    alpha_b: str = "0"
    alpha_f: str = "0"
    beta: float | None = Field(None, gt=0)

    # Representations and engines
    signature: list[str] = Field(default_factory=list)
    engine: str = "det"
    diagnostics: str | None = None

    # Continuum and lattice surfaces
    kind: str = "quadratic"
    mu: float | None = Field(None, gt=0)
    mu_minus: float | None = Field(None, gt=0)
    r: float = Field(0.0, ge=0)
    genus: int = Field(0, ge=0)
    max_abs: int | None = Field(None, gt=0)
    plaquettes: list[int] = Field(default_factory=lambda: [4, 16, 64])
    tolerance: float | None = Field(None, gt=0)

    # Complexes
    complex: str | None = None
    contour: str | None = None
    build: str | None = None
    extents: list[int] = Field(default_factory=list)
    periodic: bool = False
    sides: int | None = Field(None, gt=0)
    name: str | None = None

    # Dual, Monte Carlo and Fock
    alpha: float | None = Field(None, ge=0, lt=1)
    nmax: int | None = Field(None, gt=0)
    grid: int | None = Field(None, gt=0)
    steps: int = Field(1000, gt=1)
    epsilon: float = Field(0.5, gt=0)
    chains: int = Field(1, gt=0)
    therm: int | None = Field(None, ge=0)
    cutoff: int | None = Field(None, ge=0)
    degree: int | None = Field(None, ge=0)
    samples: int = Field(1, gt=0)

    # Run control
    seed: int = 0
    threads: int | None = Field(None, gt=0)
    out: str | None = None
    format: OutputFormat | None = None

    @field_validator("alpha_b", "alpha_f", mode="before")
    @classmethod
    def _number_text(cls, value: Any) -> str:
        return str(value)

    @field_validator("alpha_b")
    @classmethod
    def _alpha_b_range(cls, value: str) -> str:
        if not abs(parse_number(value)) < 1:
            raise ValueError(f"|alpha_b| must be < 1, got {value}")
        return value

    @field_validator("signature", mode="before")
    @classmethod
    def _signature_list(cls, value: Any) -> list[str]:
        if isinstance(value, str):
            return [value]
        return [str(v) if not isinstance(v, (list, tuple)) else ",".join(map(str, v)) for v in value]

    @model_validator(mode="after")
    def _wilson_has_no_species(self) -> "RunConfig":
        if self.beta is not None and (self.n_b or self.n_f):
            raise ValueError("--beta (Wilson mode) cannot be combined with --nb/--nf")
        return self

    @classmethod
    def from_sources(cls, command: str, toml_path: str | None, overrides: dict) -> "RunConfig":
        """Merge a TOML file with explicit overrides (None means not given)."""
        data: dict = {}
        if toml_path:
            path = Path(toml_path)
            if not path.exists():
                raise InvalidInput(f"config file not found: {toml_path}", module="cli")
            with open(path, "rb") as f:
                try:
                    data = tomllib.load(f)
                except tomllib.TOMLDecodeError as e:
                    raise InvalidInput(f"cannot parse {toml_path}: {e}", module="cli") from e
        data.update({k: v for k, v in overrides.items() if v is not None})
        data["command"] = command
        return cls(**data)

    def couplings(self) -> ModelCouplings:
        if self.beta is not None:
            return ModelCouplings.wilson(self.n_c, self.beta)
        return ModelCouplings(
            n_c=self.n_c,
            n_b=self.n_b,
            n_f=self.n_f,
            alpha_b=self.alpha_b,
            alpha_f=self.alpha_f,
        )


@dataclass
class CommandResult:
    """Standardized output: a JSON payload and/or tabular rows for CSV."""
    command: str
    payload: dict = field(default_factory=dict)
    rows: list[dict] = field(default_factory=list)
    default_format: OutputFormat = OutputFormat.JSON


class BaseCommand(ABC):
    """
    Abstract base class for CLI subcommands.

    To add a command: subclass, set ``id`` and ``description``, declare
    flags in ``add_arguments`` and decorate with @command.
    """

    id: str = ""
    description: str = ""

    def add_arguments(self, parser) -> None:
        """Declare subcommand flags (dest names must match RunConfig fields)."""

    @abstractmethod
    def run(self, config: RunConfig) -> CommandResult:
        """Run exactly one computation."""
