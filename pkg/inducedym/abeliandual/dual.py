"""Closed 2-chain sums of the U(1) induced model with N_b = 1.

Expanding each plaquette factor

    |1 - alpha e^{i theta}|^{-2} = (1 - alpha^2)^{-1} sum_n alpha^{|n|} e^{i n theta}

and integrating the link angles constrains the plaquette integers n to
closed chains (dn = 0), or to dn = -C when e^{i theta(C)} is inserted.
"""

import math
from dataclasses import dataclass, field

from ..cellcomplex import (
    CellComplex,
    Contour,
    IntegerChain,
    boundary,
    bounding_chain,
    kernel_basis_2chains,
)
from ..cellcomplex.integer_linalg import rational_left_inverse_bound
from ..config import Config
from ..errors import BudgetExceeded, InvalidInput, TruncationError
from ..logging import get_logger, warn_near_limit

logger = get_logger(__name__)

AUTO_NMAX_START = 4
AUTO_NMAX_CAP = 64


@dataclass
class DualWeightConfig:
    """
    Per-plaquette couplings alpha_p in [0, 1) and the L1 cutoff of the chain sum.

    ``n_max`` of None grows the cutoff in steps of 2 until the tail bound
    is below tolerance.
    """
    alphas: list[float]
    n_max: int | None = None
    tolerance: float | None = None

    def __post_init__(self):
        self.alphas = [float(a) for a in self.alphas]
        if any(not 0 <= a < 1 for a in self.alphas):
            raise InvalidInput("dual couplings must satisfy 0 <= alpha_p < 1", module="abeliandual")
        if self.n_max is not None and self.n_max < 0:
            raise InvalidInput("n_max must be non-negative", module="abeliandual")

    @classmethod
    def uniform(cls, complex_: CellComplex, alpha: float, n_max: int | None = None, tolerance: float | None = None):
        return cls([alpha] * complex_.n_plaquettes, n_max=n_max, tolerance=tolerance)

    @property
    def tail_tolerance(self) -> float:
        return Config.TAIL_TOLERANCE if self.tolerance is None else self.tolerance

    @property
    def log_weights(self) -> list[float]:
        """ln(1/alpha_p), infinite where alpha_p = 0."""
        return [math.inf if a == 0 else -math.log(a) for a in self.alphas]

    def norm(self, n: list[int]) -> float:
        """||n||_alpha = sum_p ln(1/alpha_p) |n_p|."""
        return sum(w * abs(k) for w, k in zip(self.log_weights, n) if k)

    def weight(self, n: list[int]) -> float:
        """prod_p alpha_p^{|n_p|} = exp(-||n||_alpha)."""
        out = 1.0
        for a, k in zip(self.alphas, n):
            if k:
                out *= a ** abs(k)
        return out

    def prefactor(self) -> float:
        out = 1.0
        for a in self.alphas:
            out /= 1.0 - a * a
        return out


@dataclass
class DualResult:
    value: float
    tail_bound: float
    chain_count: int
    n_max: int
    rank: int
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "value": self.value,
            "tail_bound": self.tail_bound,
            "chain_count": self.chain_count,
            "n_max": self.n_max,
            "kernel_rank": self.rank,
        }
        out.update(self.metadata)
        return out


# ── Enumeration ───────────────────────────────────────────────────────


@dataclass
class _ChainSum:
    total: float
    count: int
    tail: float


class _ClosedChainEnumerator:
    """
    Integer points n = offset + sum_i c_i b_i with ||n||_1 <= n_max.

    The basis rows are in row-echelon form, so once c_1..c_k are fixed the
    entries of n before the pivot of row k+1 are final; their L1 norm
    prunes the search.
    """

    def __init__(self, complex_: CellComplex, basis: list[IntegerChain], offset: list[int]):
        self.n_p = complex_.n_plaquettes
        self.rows = [b.to_vector(self.n_p) for b in basis]
        self.offset = offset
        self.pivots = [next(j for j, v in enumerate(row) if v) for row in self.rows]
        self.inverse_bound = rational_left_inverse_bound(self.rows) if self.rows else 0.0
        self.offset_norm = sum(abs(v) for v in offset)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def coordinate_bound(self, n_max: int) -> int:
        return int(math.floor(self.inverse_bound * (n_max + self.offset_norm) + 1e-9))

    def enumerate(self, config: DualWeightConfig, n_max: int) -> _ChainSum:
        bound = self.coordinate_bound(n_max)
        total = 0.0
        count = 0
        r = self.rank
        segments = [
            (self.pivots[k], self.pivots[k + 1] if k + 1 < r else self.n_p) for k in range(r)
        ]
        head = self.pivots[0] if r else self.n_p
        head_norm = sum(abs(v) for v in self.offset[:head])
        if head_norm > n_max:
            return _ChainSum(0.0, 0, self.tail_bound(config, n_max))

        def visit(k: int, current: list[int], partial: int) -> None:
            nonlocal total, count
            if k == r:
                count += 1
                if count > Config.DUAL_MAX_CHAINS:
                    raise BudgetExceeded(
                        f"more than {Config.DUAL_MAX_CHAINS} chains within ||n||_1 <= {n_max}",
                        module="abeliandual",
                    )
                total += config.weight(current)
                return
            row = self.rows[k]
            lo, hi = segments[k]
            for c in range(-bound, bound + 1):
                candidate = [x + c * v for x, v in zip(current, row)] if c else current
                seg = sum(abs(candidate[j]) for j in range(lo, hi))
                if partial + seg <= n_max:
                    visit(k + 1, candidate, partial + seg)

        visit(0, list(self.offset), head_norm)
        return _ChainSum(total, count, self.tail_bound(config, n_max))

    def tail_bound(self, config: DualWeightConfig, n_max: int) -> float:
        """
        Bound on the chains with ||n||_1 > n_max.

        Chains with coordinate sup-norm t number (2t+1)^r - (2t-1)^r and
        satisfy ||n||_1 >= t / beta - ||S||_1, where beta bounds the left
        inverse of the basis; each contributes at most alpha_max^{||n||_1}.
        """
        a = max(config.alphas, default=0.0)
        if a == 0.0:
            return 0.0
        r = self.rank
        if r == 0:
            # only the offset chain itself
            return a ** self.offset_norm if self.offset_norm > n_max else 0.0
        beta = self.inverse_bound
        tail = 0.0
        t = 0
        while True:
            count = 1 if t == 0 else (2 * t + 1) ** r - (2 * t - 1) ** r
            exponent = max(n_max + 1, t / beta - self.offset_norm)
            term = count * a ** exponent
            tail += term
            if t / beta - self.offset_norm > n_max + 1 and term < 1e-3 * Config.TAIL_TOLERANCE * tail:
                break
            if t > 10 ** 6:
                break
            t += 1
        return tail


def _sum_with_cutoff(
    enumerator: _ClosedChainEnumerator,
    config: DualWeightConfig,
    label: str,
) -> tuple[_ChainSum, int]:
    if config.n_max is not None:
        result = enumerator.enumerate(config, config.n_max)
        return result, config.n_max
    n_max = AUTO_NMAX_START
    while True:
        result = enumerator.enumerate(config, n_max)
        scale = max(abs(result.total), 1e-300)
        if result.tail <= config.tail_tolerance * scale or n_max >= AUTO_NMAX_CAP:
            break
        n_max += 2
    logger.debug("%s: n_max=%d chains=%d tail=%.3g", label, n_max, result.count, result.tail)
    limit = config.tail_tolerance * max(abs(result.total), 1e-300)
    if result.tail > limit:
        raise TruncationError(
            f"{label}: tail bound {result.tail:.3g} still above tolerance at n_max={n_max}",
            module="abeliandual",
        )
    warn_near_limit(logger, f"{label}: tail bound", result.tail, limit)
    return result, n_max


def _check_config(complex_: CellComplex, config: DualWeightConfig) -> None:
    if len(config.alphas) != complex_.n_plaquettes:
        raise InvalidInput("need one alpha per plaquette", module="abeliandual")


def dual_partition(complex_: CellComplex, config: DualWeightConfig) -> DualResult:
    """
    Z = prod_p (1 - alpha_p^2)^{-1} sum_{dn = 0, ||n||_1 <= N_max} prod_p alpha_p^{|n_p|}.

    Raises:
        BudgetExceeded: if the enumeration visits too many chains
        TruncationError: if an automatic cutoff cannot reach tolerance
    """
    _check_config(complex_, config)
    if complex_.n_plaquettes == 0:
        return DualResult(value=1.0, tail_bound=0.0, chain_count=1, n_max=0, rank=0)
    basis = kernel_basis_2chains(complex_)
    enumerator = _ClosedChainEnumerator(complex_, basis, [0] * complex_.n_plaquettes)
    result, n_max = _sum_with_cutoff(enumerator, config, f"dual Z on {complex_.name or 'complex'}")
    pre = config.prefactor()
    logger.debug("dual Z: rank=%d chains=%d n_max=%d", enumerator.rank, result.count, n_max)
    return DualResult(
        value=pre * result.total,
        tail_bound=pre * result.tail,
        chain_count=result.count,
        n_max=n_max,
        rank=enumerator.rank,
    )


def dual_wilson(complex_: CellComplex, contour: Contour, config: DualWeightConfig) -> DualResult:
    """
    W(C) = sum_{dn = -C} e^{-||n||_alpha} / sum_{dn = 0} e^{-||n||_alpha}.

    The numerator runs over n = -S + (closed chains) for a particular
    bounding chain S. The reported tail bounds the ratio.

    Raises:
        InvalidInput: if the contour is not closed
        HomologyObstruction: if no integer 2-chain bounds the contour
    """
    _check_config(complex_, config)
    if not contour.steps:
        return DualResult(value=1.0, tail_bound=0.0, chain_count=0, n_max=0, rank=0)
    if boundary(complex_, contour.as_chain()).coeffs:
        raise InvalidInput("contour has a nonzero boundary", module="abeliandual")
    basis = kernel_basis_2chains(complex_)
    surface = bounding_chain(complex_, contour, basis)
    offset = [-v for v in surface.to_vector(complex_.n_plaquettes)]

    den_enum = _ClosedChainEnumerator(complex_, basis, [0] * complex_.n_plaquettes)
    num_enum = _ClosedChainEnumerator(complex_, basis, offset)
    if config.n_max is not None:
        n_max = config.n_max
    else:
        n_max = AUTO_NMAX_START
    while True:
        den = den_enum.enumerate(config, n_max)
        num = num_enum.enumerate(config, n_max)
        value = num.total / den.total
        tail = (num.tail + abs(value) * den.tail) / den.total
        if config.n_max is not None:
            break
        if tail <= config.tail_tolerance * max(abs(value), 1e-300) or n_max >= AUTO_NMAX_CAP:
            break
        n_max += 2
    logger.debug(
        "dual W(C): |S|_1=%d numerator chains=%d n_max=%d tail=%.3g",
        num_enum.offset_norm, num.count, n_max, tail,
    )
    return DualResult(
        value=value,
        tail_bound=tail,
        chain_count=num.count + den.count,
        n_max=n_max,
        rank=den_enum.rank,
        metadata={"surface_l1": num_enum.offset_norm},
    )
