"""Gauge field storage on a cell complex."""

from dataclasses import dataclass

import numpy as np

from ..cellcomplex import CellComplex, Contour
from ..errors import InvalidInput
from .haar import haar_samples


@dataclass
class LinkConfiguration:
    """
    One unitary matrix per stored link orientation.

    ``matrices[l]`` is U(l) for link l traversed from its start site to its
    end site; the reverse orientation reads U(l)^-1 = U(l)^dagger and is
    never stored.
    """
    complex: CellComplex
    n_c: int
    matrices: np.ndarray

    def __post_init__(self):
        expected = (self.complex.n_links, self.n_c, self.n_c)
        if self.matrices.shape != expected:
            raise InvalidInput(
                f"expected link matrices of shape {expected}, got {self.matrices.shape}",
                module="montecarlo",
            )
        self.matrices = np.ascontiguousarray(self.matrices, dtype=complex)

    @classmethod
    def cold(cls, complex_: CellComplex, n_c: int) -> "LinkConfiguration":
        eye = np.broadcast_to(np.eye(n_c, dtype=complex), (complex_.n_links, n_c, n_c))
        return cls(complex_, n_c, eye.copy())

    @classmethod
    def hot(cls, complex_: CellComplex, n_c: int, rng: np.random.Generator) -> "LinkConfiguration":
        return cls(complex_, n_c, haar_samples(n_c, rng, complex_.n_links))

    def copy(self) -> "LinkConfiguration":
        return LinkConfiguration(self.complex, self.n_c, self.matrices.copy())

    # ── Holonomies ────────────────────────────────────────────────

    def link(self, step: tuple[int, int]) -> np.ndarray:
        l, s = step
        u = self.matrices[l]
        return u if s > 0 else u.conj().T

    def holonomy(self, steps) -> np.ndarray:
        """Ordered product U(l_L) ... U(l_1) along a walk of signed links."""
        result = np.eye(self.n_c, dtype=complex)
        for step in steps:
            result = self.link(step) @ result
        return result

    def plaquette_holonomy(self, p: int) -> np.ndarray:
        return self.holonomy(self.complex.plaquettes[p])

    def contour_holonomy(self, contour: Contour) -> np.ndarray:
        return self.holonomy(contour.steps)

    def plaquette_traces(self) -> np.ndarray:
        """Tr U(dp) for every plaquette."""
        return np.array(
            [np.trace(self.plaquette_holonomy(p)) for p in range(self.complex.n_plaquettes)]
        )

    # ── Gauge transformations and unitarity ───────────────────────

    def gauge_transform(self, g: np.ndarray) -> "LinkConfiguration":
        """U(l) -> g(end) U(l) g(start)^-1 for site matrices g of shape (sites, n_c, n_c)."""
        if g.shape != (self.complex.n_sites, self.n_c, self.n_c):
            raise InvalidInput("need one gauge matrix per site", module="montecarlo")
        starts = np.array([a for a, _ in self.complex.links], dtype=int)
        ends = np.array([b for _, b in self.complex.links], dtype=int)
        g_inv = np.conj(np.swapaxes(g, -1, -2))
        return LinkConfiguration(
            self.complex, self.n_c, g[ends] @ self.matrices @ g_inv[starts]
        )

    def unitarity_defect(self) -> float:
        """max_l || U(l)^dagger U(l) - 1 ||_2."""
        if self.complex.n_links == 0:
            return 0.0
        gram = np.conj(np.swapaxes(self.matrices, -1, -2)) @ self.matrices
        return float(np.max(np.linalg.norm(gram - np.eye(self.n_c), ord=2, axis=(-2, -1))))

    def reunitarize(self) -> None:
        """Replace every link by the nearest unitary matrix (polar factor via SVD)."""
        w, _, vh = np.linalg.svd(self.matrices)
        self.matrices = w @ vh
