"""Random streams and Haar-distributed unitary matrices."""

import numpy as np
from scipy.linalg import qr

from ..errors import InvalidInput


def spawn_streams(seed: int, count: int) -> list[np.random.Generator]:
    """Independent counter-based (Philox) streams spawned from one seed."""
    if count < 1:
        raise InvalidInput("need at least one random stream", module="montecarlo")
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_sample(n_c: int, rng: np.random.Generator) -> np.ndarray:
    """
    One Haar-random element of U(n_c).

    QR of a complex Gaussian matrix, with the columns of Q rephased so that
    the diagonal of R is positive; without the phase fix the distribution
    is not Haar.
    """
    if n_c < 1:
        raise InvalidInput("N_c must be at least 1", module="montecarlo")
    z = _complex_gaussian(rng, (n_c, n_c))
    q, r = qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def haar_samples(n_c: int, rng: np.random.Generator, count: int) -> np.ndarray:
    """A stack of ``count`` Haar-random matrices, shape (count, n_c, n_c)."""
    if n_c < 1:
        raise InvalidInput("N_c must be at least 1", module="montecarlo")
    z = _complex_gaussian(rng, (count, n_c, n_c))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[:, None, :]


def random_hermitian(n_c: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian Hermitian matrix (GUE normalization)."""
    g = _complex_gaussian(rng, (n_c, n_c))
    return 0.5 * (g + g.conj().T)


def unitary_exponential(h: np.ndarray, epsilon: float) -> np.ndarray:
    """exp(i epsilon H) for Hermitian H, through its eigendecomposition."""
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * epsilon * w)) @ v.conj().T
