"""Gauge-fixing trees, closed 2-chains and bounding chains."""

from collections import deque

from ..errors import DisconnectedComplex, HomologyObstruction, InvalidInput
from ..logging import get_logger
from .complex import CellComplex, Contour, IntegerChain
from .integer_linalg import ColumnHermiteForm, column_hermite, row_echelon_basis, solve_integer

logger = get_logger(__name__)


def spanning_tree(complex_: CellComplex) -> set[int]:
    """
    Deterministic breadth-first spanning tree of the 1-skeleton.

    The search starts at site 0 and scans each site's incident links in
    increasing link index.

    Returns:
        Set of |sites| - 1 link indices

    Raises:
        DisconnectedComplex: if some site is unreachable
    """
    incident: list[list[int]] = [[] for _ in range(complex_.n_sites)]
    for l, (a, b) in enumerate(complex_.links):
        incident[a].append(l)
        if b != a:
            incident[b].append(l)

    seen = [False] * complex_.n_sites
    tree: set[int] = set()
    queue = deque([0]) if complex_.n_sites else deque()
    if complex_.n_sites:
        seen[0] = True
    while queue:
        site = queue.popleft()
        for l in sorted(incident[site]):
            a, b = complex_.links[l]
            other = b if a == site else a
            if not seen[other]:
                seen[other] = True
                tree.add(l)
                queue.append(other)

    if not all(seen):
        missing = seen.count(False)
        raise DisconnectedComplex(
            f"1-skeleton is disconnected: {missing} sites unreachable from site 0",
            module="cellcomplex",
        )
    return tree


def _boundary2_rows(complex_: CellComplex) -> list[list[int]]:
    """Dense rows (links x plaquettes) of the plaquette boundary matrix."""
    rows = [[0] * complex_.n_plaquettes for _ in range(complex_.n_links)]
    for p, col in enumerate(complex_.boundary_columns(2)):
        for l, v in col.items():
            rows[l][p] = v
    return rows


def boundary2_hermite(complex_: CellComplex) -> ColumnHermiteForm:
    """Column Hermite form of the plaquette boundary matrix."""
    return column_hermite(_boundary2_rows(complex_), n_cols=complex_.n_plaquettes)


def boundary_rank(complex_: CellComplex, k: int) -> int:
    """Rank over the rationals of the boundary matrix on k-chains."""
    if k == 2:
        return boundary2_hermite(complex_).rank
    cols = complex_.boundary_columns(k)
    rows = [[0] * len(cols) for _ in range(complex_.cell_count(k - 1))]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    return column_hermite(rows, n_cols=len(cols)).rank


def kernel_basis_2chains(complex_: CellComplex) -> list[IntegerChain]:
    """
    Integer basis of the closed 2-chains (ker of the plaquette boundary).

    The basis is returned in row-echelon Hermite form: each chain's first
    nonzero plaquette coefficient is positive and lies strictly after the
    previous chain's, so later chains vanish on earlier pivot plaquettes.
    """
    if complex_.n_plaquettes == 0:
        raise InvalidInput("complex has no plaquettes", module="cellcomplex")
    form = boundary2_hermite(complex_)
    basis = row_echelon_basis(form.kernel_columns())
    logger.debug(
        "ker d2 on %s: rank(d2)=%d, nullity=%d",
        complex_.name or "complex", form.rank, len(basis),
    )
    return [IntegerChain.from_vector(2, vec) for vec in basis]


def bounding_chain(
    complex_: CellComplex,
    contour: Contour,
    kernel: list[IntegerChain] | None = None,
) -> IntegerChain:
    """
    Find a small integer 2-chain S with boundary equal to the contour.

    An integer solution comes from the Hermite factorization; it is then
    reduced greedily in L1 norm by adding or subtracting kernel vectors.

    Raises:
        HomologyObstruction: if the contour is not an integer boundary
    """
    target = contour.as_chain().to_vector(complex_.n_links)
    if not any(target):
        return IntegerChain(2, {})
    if complex_.n_plaquettes == 0:
        raise HomologyObstruction("complex has no plaquettes to bound the contour", module="cellcomplex")

    form = boundary2_hermite(complex_)
    solution = solve_integer(form, target)
    if solution is None:
        raise HomologyObstruction(
            "contour is not the boundary of any integer 2-chain (nontrivial homology class)",
            module="cellcomplex",
        )

    if kernel is None:
        kernel = kernel_basis_2chains(complex_)
    vectors = [k.to_vector(complex_.n_plaquettes) for k in kernel]
    current = solution
    norm = sum(abs(v) for v in current)
    improved = True
    while improved:
        improved = False
        for vec in vectors:
            for sign in (1, -1):
                candidate = [c + sign * v for c, v in zip(current, vec)]
                cand_norm = sum(abs(v) for v in candidate)
                if cand_norm < norm:
                    current, norm, improved = candidate, cand_norm, True
    return IntegerChain.from_vector(2, current)
