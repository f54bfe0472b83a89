"""Signatures of U(N_c) irreducible representations and their scalar invariants."""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidInput


@dataclass(frozen=True, order=True)
class IrrepSignature:
    """Nonincreasing integer tuple labeling a U(N_c) irrep (negative entries allowed)."""
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidInput("signature must have at least one entry", module="repn")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInput(f"signature {parts} is not nonincreasing", module="repn")

    @classmethod
    def trivial(cls, n_c: int) -> "IrrepSignature":
        return cls((0,) * n_c)

    @classmethod
    def fundamental(cls, n_c: int) -> "IrrepSignature":
        return cls((1,) + (0,) * (n_c - 1))

    @property
    def n_c(self) -> int:
        return len(self.parts)

    @property
    def rho(self) -> tuple[int, ...]:
        """Half-sum shift (N_c-1, ..., 1, 0)."""
        return tuple(range(self.n_c - 1, -1, -1))

    @property
    def shifted(self) -> tuple[int, ...]:
        """lambda + rho, strictly decreasing."""
        return tuple(p + r for p, r in zip(self.parts, self.rho))

    def conjugate(self) -> "IrrepSignature":
        """Signature of the dual representation, (-l_N, ..., -l_1)."""
        return IrrepSignature(tuple(-p for p in reversed(self.parts)))

    def shift(self, k: int) -> "IrrepSignature":
        """Tensor with the k-th power of the determinant."""
        return IrrepSignature(tuple(p + k for p in self.parts))

    def is_trivial(self) -> bool:
        return all(p == 0 for p in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def parse_signature(text: str) -> IrrepSignature:
    """Parse '1,0,-1' or '(1,0,-1)' into a signature."""
    cleaned = text.strip().strip("()[]")
    try:
        return IrrepSignature(tuple(int(x) for x in cleaned.split(",") if x.strip()))
    except ValueError as e:
        raise InvalidInput(f"cannot parse signature '{text}'", module="repn") from e


def _vandermonde(values: tuple[int, ...]) -> int:
    prod = 1
    for i, j in itertools.combinations(range(len(values)), 2):
        prod *= values[i] - values[j]
    return prod


def weyl_dimension(sig: IrrepSignature) -> int:
    """Weyl dimension Delta(lambda + rho) / Delta(rho), exact."""
    value = Fraction(_vandermonde(sig.shifted), _vandermonde(sig.rho))
    if value.denominator != 1:
        raise InvalidInput(f"non-integral dimension for {sig}", module="repn")
    return int(value)


def charge(sig: IrrepSignature) -> int:
    """U(1) charge q = sum of the entries."""
    return sum(sig.parts)


def casimir2(sig: IrrepSignature) -> int:
    """Quadratic Casimir sum_j l_j (l_j + N_c + 1 - 2j), j counted from 1."""
    n = sig.n_c
    return sum(l * (l + n + 1 - 2 * j) for j, l in enumerate(sig.parts, start=1))


def enumerate_signatures(n_c: int, max_abs: int) -> list[IrrepSignature]:
    """All signatures with every |lambda_i| <= max_abs, in decreasing lexicographic order."""
    if n_c < 1:
        raise InvalidInput("N_c must be at least 1", module="repn")
    values = range(max_abs, -max_abs - 1, -1)
    return [
        IrrepSignature(parts)
        for parts in itertools.combinations_with_replacement(values, n_c)
    ]


def signature_shell(n_c: int, radius: int) -> list[IrrepSignature]:
    """Signatures whose largest |lambda_i| equals radius exactly."""
    return [
        sig for sig in enumerate_signatures(n_c, radius)
        if max(abs(p) for p in sig.parts) == radius
    ]
