"""Model couplings for the induced plaquette weight."""

from dataclasses import dataclass, replace
from fractions import Fraction

from ..errors import InvalidInput

Number = int | float | Fraction


def parse_number(value) -> Number:
    """Accept ints, floats, Fractions, and strings such as '1/2' or '0.25'.

    Strings containing '/' become exact Fractions, so downstream exact
    engines can keep rational arithmetic.
    """
    if isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                return Fraction(text)
            if any(c in text for c in ".eE"):
                return float(text)
            return int(text)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInput(f"cannot parse number '{value}'", module="weights") from e
    try:
        return float(value)
    except (TypeError, ValueError) as e:
        raise InvalidInput(f"cannot parse number {value!r}", module="weights") from e


def is_exact(value: Number) -> bool:
    return isinstance(value, (int, Fraction))


@dataclass(frozen=True)
class ModelCouplings:
    """
    Couplings of the one-plaquette weight

        |Det(1 - alpha_f U)|^{2 N_f} |Det(1 - alpha_b U)|^{-2 N_b}

    or, when beta is set, of the Wilson weight exp((beta / N_c) Re Tr U).
    """
    n_c: int
    n_b: int = 0
    n_f: int = 0
    alpha_b: Number = 0
    alpha_f: Number = 0
    beta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha_b", parse_number(self.alpha_b))
        object.__setattr__(self, "alpha_f", parse_number(self.alpha_f))
        if self.n_c < 1:
            raise InvalidInput(f"N_c must be at least 1, got {self.n_c}", module="weights")
        if self.n_b < 0 or self.n_f < 0:
            raise InvalidInput("species counts must be non-negative", module="weights")
        if not abs(self.alpha_b) < 1:
            raise InvalidInput(
                f"|alpha_b| must be < 1 for convergence, got {self.alpha_b}", module="weights"
            )
        if self.beta is not None and (self.n_b or self.n_f):
            raise InvalidInput("Wilson couplings cannot carry induced species", module="weights")

    @classmethod
    def wilson(cls, n_c: int, beta: float) -> "ModelCouplings":
        return cls(n_c=n_c, beta=float(beta))

    @classmethod
    def from_masses(
        cls,
        n_c: int,
        n_b: int,
        n_f: int,
        m_b: float | None,
        m_f: float | None,
        perimeter: int = 4,
    ) -> "ModelCouplings":
        """Couplings from hopping masses: alpha = m^{-L_p} for plaquette perimeter L_p."""
        alpha_b = 0.0 if m_b is None else float(m_b) ** (-perimeter)
        alpha_f = 0.0 if m_f is None else float(m_f) ** (-perimeter)
        return cls(n_c=n_c, n_b=n_b, n_f=n_f, alpha_b=alpha_b, alpha_f=alpha_f)

    @property
    def is_wilson(self) -> bool:
        return self.beta is not None

    @property
    def is_exact(self) -> bool:
        return is_exact(self.alpha_b) and is_exact(self.alpha_f) and not self.is_wilson

    def with_alpha_b(self, alpha_b: Number) -> "ModelCouplings":
        return replace(self, alpha_b=alpha_b)

    def key(self) -> tuple:
        """Hashable identity used for memoization."""
        return (self.n_b, self.n_f, str(self.alpha_b), str(self.alpha_f), self.beta)

    def to_dict(self) -> dict:
        return {
            "n_c": self.n_c,
            "n_b": self.n_b,
            "n_f": self.n_f,
            "alpha_b": str(self.alpha_b),
            "alpha_f": str(self.alpha_f),
            "beta": self.beta,
        }


def wilson_equivalent_beta(couplings: ModelCouplings) -> float:
    """Wilson beta matching the induced weight to first order in alpha.

    Expanding the logarithms gives beta / N_c = 2 (N_b alpha_b - N_f alpha_f).
    """
    if couplings.is_wilson:
        return float(couplings.beta)
    per_color = 2 * (couplings.n_b * float(couplings.alpha_b) - couplings.n_f * float(couplings.alpha_f))
    return couplings.n_c * per_color
