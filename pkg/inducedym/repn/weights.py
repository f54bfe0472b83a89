"""Weight systems of U(N_c) irreps via Gelfand-Tsetlin patterns."""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from ..cache import representation_cache
from ..config import Config
from ..errors import BudgetExceeded
from ..logging import get_logger
from .signature import IrrepSignature, charge, weyl_dimension

logger = get_logger(__name__)

Weight = tuple[int, ...]


@dataclass(frozen=True)
class WeightTable:
    """Weights of an irrep with their multiplicities."""
    signature: IrrepSignature
    multiplicities: dict[Weight, int]

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities.values())

    def weights(self) -> list[Weight]:
        return sorted(self.multiplicities, reverse=True)

    def multiplicity(self, weight: Weight) -> int:
        return self.multiplicities.get(tuple(weight), 0)

    def items(self):
        return sorted(self.multiplicities.items(), reverse=True)

    def negated(self) -> "WeightTable":
        """Weight table of the dual irrep (the character at U^-1)."""
        return WeightTable(
            signature=self.signature.conjugate(),
            multiplicities={tuple(-x for x in w): m for w, m in self.multiplicities.items()},
        )

    def weight_sum(self) -> Weight:
        """sum of multiplicity * weight, componentwise."""
        n = self.signature.n_c
        return tuple(
            sum(m * w[k] for w, m in self.multiplicities.items()) for k in range(n)
        )


def _interlacing_rows(row: tuple[int, ...]):
    """All rows of length len(row) - 1 interlacing the given row."""
    if len(row) == 1:
        yield ()
        return

    def extend(prefix: tuple[int, ...], i: int):
        if i == len(row) - 1:
            yield prefix
            return
        for value in range(row[i + 1], row[i] + 1):
            yield from extend(prefix + (value,), i + 1)

    yield from extend((), 0)


def _gt_weights(top: tuple[int, ...]) -> Counter:
    """Count GT patterns by weight, where w_k = |row_k| - |row_{k-1}|."""
    counts: Counter = Counter()

    def descend(row: tuple[int, ...], suffix: tuple[int, ...]):
        # suffix holds weight entries w_{len(row)+1}, ..., w_N
        if len(row) == 1:
            counts[(row[0],) + suffix] += 1
            return
        total = sum(row)
        for below in _interlacing_rows(row):
            descend(below, (total - sum(below),) + suffix)

    descend(top, ())
    return counts


def weight_multiplicities(sig: IrrepSignature) -> WeightTable:
    """
    Complete weight system of an irrep by Gelfand-Tsetlin enumeration.

    The signature is shifted by -lambda_N to nonnegative entries, patterns
    are enumerated, and every weight is shifted back by lambda_N in each
    coordinate. Results are cached per signature.

    Raises:
        BudgetExceeded: if the dimension exceeds Config.GT_PATTERN_CAP
    """
    key = ("weights", sig.parts)
    cached = representation_cache.get(key)
    if cached is not None:
        return cached

    dim = weyl_dimension(sig)
    if dim > Config.GT_PATTERN_CAP:
        raise BudgetExceeded(
            f"signature {sig} has dimension {dim}, above the pattern cap {Config.GT_PATTERN_CAP}",
            module="repn",
        )

    offset = sig.parts[-1]
    top = tuple(p - offset for p in sig.parts)
    counts = _gt_weights(top)
    table = WeightTable(
        signature=sig,
        multiplicities={tuple(x + offset for x in w): m for w, m in counts.items()},
    )
    logger.debug("GT weights for %s: %d patterns, %d distinct weights", sig, dim, len(table.multiplicities))
    representation_cache.set(key, table)
    return table


def casimir1(sig: IrrepSignature) -> Fraction:
    """Dimension-averaged L1 norm of the weight system, exact."""
    table = weight_multiplicities(sig)
    total = sum(m * sum(abs(x) for x in w) for w, m in table.multiplicities.items())
    return Fraction(total, table.dimension)


def expected_weight_sum(sig: IrrepSignature) -> tuple[Fraction, ...]:
    """(d q / N_c) in every coordinate, the Weyl-symmetric centre of mass of the weights."""
    value = Fraction(weyl_dimension(sig) * charge(sig), sig.n_c)
    return (value,) * sig.n_c
