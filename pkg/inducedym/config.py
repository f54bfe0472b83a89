"""Configuration management for inducedym."""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Get the project root directory (where this config.py lives, go up one level)
PROJECT_ROOT = Path(__file__).parent.parent

# Named precision tiers for the mpmath engines (decimal digits)
PRECISION_TIERS = {
    "standard": 30,
    "high": 50,
    "extreme": 100,
}


def _precision_from_env(raw: str) -> int:
    """Resolve INDUCEDYM_PRECISION as a tier name or a digit count."""
    raw = raw.strip().lower()
    if raw in PRECISION_TIERS:
        return PRECISION_TIERS[raw]
    try:
        return int(raw)
    except ValueError:
        return PRECISION_TIERS["high"]


class Config:
    """Application configuration."""

    # Data - use absolute paths relative to project root
    DATA_DIR: Path = Path(os.getenv("INDUCEDYM_DATA_DIR", str(PROJECT_ROOT / "data")))
    COMPLEX_DIR: Path = DATA_DIR / "complexes"

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FILE: str | None = os.getenv("LOG_FILE")

    # Numerics
    PRECISION: int = _precision_from_env(os.getenv("INDUCEDYM_PRECISION", "high"))
    THREADS: int = int(os.getenv("INDUCEDYM_THREADS", "1"))
    SERIES_TOLERANCE: float = 1e-16  # Relative tail threshold for Fourier series
    SERIES_MAX_TERMS: int = 1_000_000
    DEGENERACY_THRESHOLD: float = 1e-6  # Switch alternant ratio -> weight sum below this
    GT_PATTERN_CAP: int = int(os.getenv("INDUCEDYM_GT_CAP", "250000"))

    # Residue oracle budget
    RESIDUE_MAX_NC: int = 4
    RESIDUE_MAX_ORDER: int = 12
    RESIDUE_MAX_SPECIES: int = 6

    # Truncation / quadrature gates
    TAIL_TOLERANCE: float = 1e-8
    QUADRATURE_TOLERANCE: float = 1e-10
    MOMENT_NODES: int = 200

    # Abelian dual
    ORACLE_MAX_FREE_LINKS: int = 6
    ORACLE_TOLERANCE: float = 1e-6  # Grid-halving aliasing gate
    ORACLE_MAX_TENSOR: int = 2 ** 26  # Entries per plaquette tensor
    DUAL_MAX_CHAINS: int = 2_000_000

    # Monte Carlo
    MC_REUNITARIZE_EVERY: int = 1000  # Link updates between re-orthonormalizations
    MC_TUNE_INTERVAL: int = 50        # Sweeps between step-size adjustments
    MC_ACCEPTANCE_WINDOW: tuple[float, float] = (0.4, 0.6)
    MC_WINDOW_FACTOR: float = 5.0     # Automatic windowing constant for tau_int

    # Fock space checks
    HILBERT_MAX_NC: int = 2
    HILBERT_MAX_DEGREE: int = 40
    HILBERT_RESIDUAL: float = 1e-6

    @classmethod
    def ensure_data_dir(cls) -> None:
        """Create data directories if they don't exist."""
        cls.COMPLEX_DIR.mkdir(parents=True, exist_ok=True)

    @classmethod
    def validate(cls) -> list[str]:
        """Validate configuration. Returns list of errors."""
        errors = []
        if cls.PRECISION < 16:
            errors.append(f"INDUCEDYM_PRECISION={cls.PRECISION} is below double precision")
        if cls.THREADS < 1:
            errors.append("INDUCEDYM_THREADS must be at least 1")
        low, high = cls.MC_ACCEPTANCE_WINDOW
        if not 0 < low < high < 1:
            errors.append("MC_ACCEPTANCE_WINDOW must satisfy 0 < low < high < 1")
        return errors
