"""Oriented cell complexes, integer chains and contours.

A complex stores sites (0-cells) by index, links (1-cells) as ordered
(start, end) site pairs, and plaquettes (2-cells) as closed walks of signed
links. Only one orientation per cell is stored; the reverse orientation is
expressed by a sign of -1 wherever a cell is referenced.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..errors import DegreeMismatch, InvalidInput

# (link index, +1 or -1)
SignedLink = tuple[int, int]


@dataclass
class IntegerChain:
    """Sparse integer-coefficient formal sum of k-cells."""
    degree: int
    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {int(k): int(v) for k, v in self.coeffs.items() if v != 0}

    @classmethod
    def from_vector(cls, degree: int, vector) -> "IntegerChain":
        return cls(degree, {i: int(v) for i, v in enumerate(vector) if v != 0})

    @classmethod
    def cell(cls, degree: int, index: int, coefficient: int = 1) -> "IntegerChain":
        return cls(degree, {index: coefficient})

    def to_vector(self, size: int) -> list[int]:
        vec = [0] * size
        for i, v in self.coeffs.items():
            if i >= size:
                raise InvalidInput(
                    f"chain refers to {self.degree}-cell {i} but the complex has {size}",
                    module="cellcomplex",
                )
            vec[i] = v
        return vec

    def is_zero(self) -> bool:
        return not self.coeffs

    def l1_norm(self) -> int:
        return sum(abs(v) for v in self.coeffs.values())

    def _check_degree(self, other: "IntegerChain") -> None:
        if other.degree != self.degree:
            raise DegreeMismatch(
                f"cannot combine a {self.degree}-chain with a {other.degree}-chain",
                module="cellcomplex",
            )

    def __add__(self, other: "IntegerChain") -> "IntegerChain":
        self._check_degree(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return IntegerChain(self.degree, out)

    def __neg__(self) -> "IntegerChain":
        return IntegerChain(self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "IntegerChain") -> "IntegerChain":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "IntegerChain":
        return IntegerChain(self.degree, {k: scalar * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerChain):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs


@dataclass
class CellComplex:
    """Oriented 2-dimensional cell complex (sites, links, plaquettes).

    Attributes:
        n_sites: Number of 0-cells.
        links: (start, end) site indices of each 1-cell.
        plaquettes: Each 2-cell's boundary as an ordered closed walk of
            signed links.
        areas: Optional per-plaquette dimensionless areas.
        name: Free-form label carried into output files.
    """
    n_sites: int
    links: list[tuple[int, int]]
    plaquettes: list[tuple[SignedLink, ...]]
    areas: list[float] | None = None
    name: str = ""

    def __post_init__(self):
        self.links = [(int(a), int(b)) for a, b in self.links]
        self.plaquettes = [tuple((int(l), int(s)) for l, s in walk) for walk in self.plaquettes]
        self._validate()

    # ── Validation ────────────────────────────────────────────────

    def _validate(self) -> None:
        for l, (a, b) in enumerate(self.links):
            if not (0 <= a < self.n_sites and 0 <= b < self.n_sites):
                raise InvalidInput(f"link {l} references a missing site", module="cellcomplex")
        for p, walk in enumerate(self.plaquettes):
            if not walk:
                raise InvalidInput(f"plaquette {p} has an empty boundary", module="cellcomplex")
            for l, s in walk:
                if not 0 <= l < len(self.links):
                    raise InvalidInput(f"plaquette {p} references missing link {l}", module="cellcomplex")
                if s not in (1, -1):
                    raise InvalidInput(f"plaquette {p} has orientation {s}", module="cellcomplex")
            sites = self.walk_sites(walk)
            if sites[0] != sites[-1]:
                raise InvalidInput(f"plaquette {p} boundary walk is not closed", module="cellcomplex")
        if self.areas is not None and len(self.areas) != len(self.plaquettes):
            raise InvalidInput("areas must list one value per plaquette", module="cellcomplex")

    # ── Geometry ──────────────────────────────────────────────────

    @property
    def n_links(self) -> int:
        return len(self.links)

    @property
    def n_plaquettes(self) -> int:
        return len(self.plaquettes)

    def cell_count(self, k: int) -> int:
        return (self.n_sites, self.n_links, self.n_plaquettes)[k]

    def euler_characteristic(self) -> int:
        return self.n_sites - self.n_links + self.n_plaquettes

    def oriented_endpoints(self, step: SignedLink) -> tuple[int, int]:
        """Start and end site of a link traversed with the given sign."""
        l, s = step
        a, b = self.links[l]
        return (a, b) if s > 0 else (b, a)

    def walk_sites(self, walk) -> list[int]:
        """Site sequence n_1, ..., n_L, n_1 visited by a walk of signed links.

        Raises InvalidInput if consecutive links do not connect.
        """
        start, end = self.oriented_endpoints(walk[0])
        sites = [start, end]
        for step in walk[1:]:
            a, b = self.oriented_endpoints(step)
            if a != sites[-1]:
                raise InvalidInput(
                    f"walk is disconnected at link {step[0]}", module="cellcomplex"
                )
            sites.append(b)
        return sites

    def plaquette_sites(self, p: int) -> list[int]:
        """Ordered site sequence n_1, ..., n_{L_p} of plaquette p's boundary."""
        return self.walk_sites(self.plaquettes[p])[:-1]

    def perimeter(self, p: int) -> int:
        return len(self.plaquettes[p])

    @cached_property
    def link_plaquettes(self) -> list[list[int]]:
        """For each link, the plaquettes whose boundary walk uses it."""
        touching: list[list[int]] = [[] for _ in self.links]
        for p, walk in enumerate(self.plaquettes):
            for l in sorted({l for l, _ in walk}):
                touching[l].append(p)
        return touching

    # ── Boundary matrices ─────────────────────────────────────────

    def boundary_columns(self, k: int) -> list[dict[int, int]]:
        """Sparse columns of the boundary matrix for k-cells."""
        if k == 1:
            cols = []
            for a, b in self.links:
                col: dict[int, int] = {}
                col[b] = col.get(b, 0) + 1
                col[a] = col.get(a, 0) - 1
                cols.append({i: v for i, v in col.items() if v})
            return cols
        if k == 2:
            cols = []
            for walk in self.plaquettes:
                col = {}
                for l, s in walk:
                    col[l] = col.get(l, 0) + s
                cols.append({i: v for i, v in col.items() if v})
            return cols
        raise DegreeMismatch(f"no boundary operator on {k}-chains", module="cellcomplex")

    def boundary_matrix(self, k: int) -> np.ndarray:
        """Dense boundary matrix with exact Python-int entries (dtype=object)."""
        rows = self.cell_count(k - 1)
        cols = self.boundary_columns(k)
        mat = np.zeros((rows, len(cols)), dtype=object)
        for j, col in enumerate(cols):
            for i, v in col.items():
                mat[i, j] = v
        return mat


@dataclass(frozen=True)
class Contour:
    """Closed oriented walk of signed links l_1, ..., l_L."""
    steps: tuple[SignedLink, ...]

    @classmethod
    def from_steps(cls, complex_: CellComplex, steps) -> "Contour":
        """Build a contour and check it is connected and closed on the complex."""
        parsed = []
        for step in steps:
            try:
                l, s = (int(x) for x in step)
            except (TypeError, ValueError) as e:
                raise InvalidInput(
                    f"contour step {step!r} is not a [link, sign] pair", module="cellcomplex"
                ) from e
            if not 0 <= l < complex_.n_links:
                raise InvalidInput(f"contour uses unknown link {l}", module="cellcomplex")
            if s not in (1, -1):
                raise InvalidInput(f"contour sign must be +1 or -1, got {s}", module="cellcomplex")
            parsed.append((l, s))
        steps = tuple(parsed)
        if steps:
            sites = complex_.walk_sites(steps)
            if sites[0] != sites[-1]:
                raise InvalidInput("contour is not closed", module="cellcomplex")
        return cls(steps)

    @classmethod
    def plaquette_boundary(cls, complex_: CellComplex, p: int) -> "Contour":
        return cls(tuple(complex_.plaquettes[p]))

    def reversed(self) -> "Contour":
        return Contour(tuple((l, -s) for l, s in reversed(self.steps)))

    def as_chain(self) -> IntegerChain:
        coeffs: dict[int, int] = {}
        for l, s in self.steps:
            coeffs[l] = coeffs.get(l, 0) + s
        return IntegerChain(1, coeffs)

    def __len__(self) -> int:
        return len(self.steps)


def boundary(complex_: CellComplex, chain: IntegerChain) -> IntegerChain:
    """Apply the boundary operator to a k-chain (k = 1, 2)."""
    if chain.degree not in (1, 2):
        raise DegreeMismatch(
            f"boundary needs a 1- or 2-chain, got degree {chain.degree}", module="cellcomplex"
        )
    cols = complex_.boundary_columns(chain.degree)
    out: dict[int, int] = {}
    for j, c in chain.coeffs.items():
        if j >= len(cols):
            raise InvalidInput(f"chain refers to missing cell {j}", module="cellcomplex")
        for i, v in cols[j].items():
            out[i] = out.get(i, 0) + c * v
    return IntegerChain(chain.degree - 1, out)


def coboundary(complex_: CellComplex, cochain: IntegerChain) -> IntegerChain:
    """Apply the transpose of the boundary operator to a k-cochain (k = 0, 1)."""
    if cochain.degree not in (0, 1):
        raise DegreeMismatch(
            f"coboundary needs a 0- or 1-cochain, got degree {cochain.degree}", module="cellcomplex"
        )
    cols = complex_.boundary_columns(cochain.degree + 1)
    out: dict[int, int] = {}
    for j, col in enumerate(cols):
        total = sum(cochain.coeffs.get(i, 0) * v for i, v in col.items())
        if total:
            out[j] = total
    return IntegerChain(cochain.degree + 1, out)
