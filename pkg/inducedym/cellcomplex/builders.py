"""Builders for standard complexes."""

import itertools

import numpy as np

from ..errors import InvalidInput
from ..logging import get_logger
from .complex import CellComplex

logger = get_logger(__name__)


def build_hypercubic(
    extents: tuple[int, ...],
    periodic: tuple[bool, ...] | bool = False,
    name: str | None = None,
) -> CellComplex:
    """
    Build a d-dimensional hypercubic complex.

    Extents count cells per direction: an open direction of extent n has
    n + 1 sites, a periodic one has n. Sites are numbered in C order of
    their coordinates; links are numbered site-major, direction-minor.
    The plaquette based at n in plane mu < nu has the walk
    n -> n+mu -> n+mu+nu -> n+nu -> n.

    Args:
        extents: Positive cell counts per direction
        periodic: One flag per direction (or a single flag for all)

    Returns:
        The CellComplex
    """
    extents = tuple(int(e) for e in extents)
    d = len(extents)
    if d < 1:
        raise InvalidInput("hypercubic complex needs at least one direction", module="cellcomplex")
    if isinstance(periodic, bool):
        periodic = (periodic,) * d
    periodic = tuple(bool(p) for p in periodic)
    if len(periodic) != d:
        raise InvalidInput("periodic flags must match the number of extents", module="cellcomplex")
    if any(e < 1 for e in extents):
        raise InvalidInput(f"extents must be positive, got {extents}", module="cellcomplex")

    shape = tuple(e if p else e + 1 for e, p in zip(extents, periodic))
    n_sites = int(np.prod(shape))

    def shift(coord: tuple[int, ...], mu: int) -> tuple[int, ...] | None:
        moved = list(coord)
        moved[mu] += 1
        if moved[mu] >= shape[mu]:
            if not periodic[mu]:
                return None
            moved[mu] = 0
        return tuple(moved)

    def index(coord: tuple[int, ...]) -> int:
        return int(np.ravel_multi_index(coord, shape))

    links: list[tuple[int, int]] = []
    link_index: dict[tuple[int, int], int] = {}
    coords = list(itertools.product(*(range(s) for s in shape)))
    for coord in coords:
        for mu in range(d):
            nxt = shift(coord, mu)
            if nxt is None:
                continue
            link_index[(index(coord), mu)] = len(links)
            links.append((index(coord), index(nxt)))

    plaquettes = []
    for coord in coords:
        for mu, nu in itertools.combinations(range(d), 2):
            n_mu = shift(coord, mu)
            n_nu = shift(coord, nu)
            if n_mu is None or n_nu is None:
                continue
            if shift(n_mu, nu) is None:
                continue
            n = index(coord)
            plaquettes.append((
                (link_index[(n, mu)], 1),
                (link_index[(index(n_mu), nu)], 1),
                (link_index[(index(n_nu), mu)], -1),
                (link_index[(n, nu)], -1),
            ))

    label = name or "hypercubic_" + "x".join(map(str, extents)) + (
        "_periodic" if all(periodic) else "_open" if not any(periodic) else "_mixed"
    )
    logger.debug(
        "Built %s: %d sites, %d links, %d plaquettes",
        label, n_sites, len(links), len(plaquettes),
    )
    return CellComplex(n_sites=n_sites, links=links, plaquettes=plaquettes, name=label)


def build_polygon(n_sides: int, name: str | None = None) -> CellComplex:
    """A single plaquette bounded by an n-gon (n = 1 gives one link looping on one site)."""
    if n_sides < 1:
        raise InvalidInput("a polygon needs at least one side", module="cellcomplex")
    links = [(i, (i + 1) % n_sides) for i in range(n_sides)]
    walk = tuple((i, 1) for i in range(n_sides))
    return CellComplex(
        n_sites=n_sides,
        links=links,
        plaquettes=[walk],
        name=name or f"polygon_{n_sides}",
    )


def build_closed_surface(genus: int, name: str | None = None) -> CellComplex:
    """Minimal one-site, one-plaquette complex of an orientable genus-g surface.

    The plaquette boundary is the product of commutators a_1 b_1 a_1^-1 b_1^-1 ...
    """
    if genus < 0:
        raise InvalidInput("genus must be non-negative", module="cellcomplex")
    if genus == 0:
        # Sphere as two disks glued along a single loop.
        return CellComplex(
            n_sites=1,
            links=[(0, 0)],
            plaquettes=[((0, 1),), ((0, -1),)],
            name=name or "sphere",
        )
    links = [(0, 0)] * (2 * genus)
    walk = []
    for g in range(genus):
        a, b = 2 * g, 2 * g + 1
        walk.extend([(a, 1), (b, 1), (a, -1), (b, -1)])
    return CellComplex(
        n_sites=1,
        links=links,
        plaquettes=[tuple(walk)],
        name=name or f"surface_genus_{genus}",
    )
