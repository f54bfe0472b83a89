import json

import numpy as np
import pytest

from inducedym.cellcomplex import (
    CellComplex,
    Contour,
    IntegerChain,
    boundary,
    boundary_rank,
    bounding_chain,
    build_closed_surface,
    build_hypercubic,
    build_polygon,
    coboundary,
    kernel_basis_2chains,
    load_complex,
    parse_contour,
    save_complex,
    spanning_tree,
)
from inducedym.cellcomplex.integer_linalg import column_hermite, rational_left_inverse_bound
from inducedym.errors import DegreeMismatch, DisconnectedComplex, HomologyObstruction, InvalidInput


# ── Builders ──────────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "extents, periodic, cells, euler",
    [
        ((1, 1), False, (4, 4, 1), 1),
        ((2, 2), True, (4, 8, 4), 0),
        ((1, 1), True, (1, 2, 1), 0),
        ((3, 3), False, (16, 24, 9), 1),
        ((1, 1, 1), False, (8, 12, 6), 2),
    ],
)
def test_hypercubic_cell_counts(extents, periodic, cells, euler):
    cx = build_hypercubic(extents, periodic)
    assert (cx.n_sites, cx.n_links, cx.n_plaquettes) == cells
    assert cx.euler_characteristic() == euler


def test_hypercubic_rejects_empty_extent():
    with pytest.raises(InvalidInput):
        build_hypercubic((0, 2))


def test_periodic_flags_must_match_extents():
    with pytest.raises(InvalidInput):
        build_hypercubic((2, 2), (True,))


def test_plaquette_walk_is_ordered():
    cx = build_hypercubic((1, 1))
    assert cx.plaquettes[0] == ((0, 1), (3, 1), (2, -1), (1, -1))
    assert cx.plaquette_sites(0) == [0, 2, 3, 1]


def test_closed_surfaces_have_one_closed_chain():
    for genus in (0, 1, 2):
        cx = build_closed_surface(genus)
        assert cx.euler_characteristic() == 2 - 2 * genus
        assert len(kernel_basis_2chains(cx)) == 1


def test_polygon_single_plaquette():
    cx = build_polygon(5)
    assert cx.n_plaquettes == 1
    assert cx.perimeter(0) == 5
    assert kernel_basis_2chains(cx) == []


def test_unclosed_walk_is_rejected():
    with pytest.raises(InvalidInput):
        CellComplex(n_sites=3, links=[(0, 1), (1, 2)], plaquettes=[((0, 1), (1, 1))])


def test_bad_orientation_is_rejected():
    with pytest.raises(InvalidInput):
        CellComplex(n_sites=1, links=[(0, 0)], plaquettes=[((0, 2),)])


# ── Chains and boundaries ─────────────────────────────────────────────


@pytest.mark.parametrize("extents, periodic", [((2, 2), True), ((1, 1, 1), False), ((2, 3), False)])
def test_boundary_of_boundary_vanishes(extents, periodic):
    cx = build_hypercubic(extents, periodic)
    for p in range(cx.n_plaquettes):
        assert boundary(cx, boundary(cx, IntegerChain.cell(2, p))).is_zero()
    d1 = cx.boundary_matrix(1)
    d2 = cx.boundary_matrix(2)
    assert not np.any(d1 @ d2)


def test_coboundary_is_transpose(rng):
    cx = build_hypercubic((2, 2), True)
    f = IntegerChain.from_vector(0, rng.integers(-3, 4, cx.n_sites))
    c = IntegerChain.from_vector(1, rng.integers(-3, 4, cx.n_links))
    lhs = sum(v * c.coeffs.get(l, 0) for l, v in coboundary(cx, f).coeffs.items())
    rhs = sum(v * f.coeffs.get(s, 0) for s, v in boundary(cx, c).coeffs.items())
    assert lhs == rhs


def test_chain_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        IntegerChain.cell(1, 0) + IntegerChain.cell(2, 0)
    with pytest.raises(DegreeMismatch):
        boundary(build_polygon(3), IntegerChain.cell(0, 0))


def test_chain_arithmetic():
    a = IntegerChain(2, {0: 1, 1: -2})
    b = IntegerChain(2, {1: 2, 3: 1})
    assert a + b == IntegerChain(2, {0: 1, 3: 1})
    assert (3 * a).l1_norm() == 9
    assert (a - a).is_zero()


# ── Topology ──────────────────────────────────────────────────────────


def test_torus_ranks(torus2x2):
    assert boundary_rank(torus2x2, 2) == 3
    kernel = kernel_basis_2chains(torus2x2)
    assert len(kernel) == 1
    assert kernel[0].to_vector(4) == [1, 1, 1, 1]


def test_kernel_basis_is_echelon():
    cx = build_hypercubic((2, 2, 1), True)
    kernel = kernel_basis_2chains(cx)
    pivots = [next(j for j, v in enumerate(k.to_vector(cx.n_plaquettes)) if v) for k in kernel]
    assert pivots == sorted(set(pivots))
    for k in kernel:
        assert boundary(cx, k).is_zero()
        assert k.to_vector(cx.n_plaquettes)[min(k.coeffs)] > 0


def test_spanning_tree(torus2x2):
    tree = spanning_tree(torus2x2)
    assert len(tree) == torus2x2.n_sites - 1
    assert spanning_tree(torus2x2) == tree


def test_spanning_tree_disconnected():
    cx = CellComplex(n_sites=2, links=[], plaquettes=[])
    with pytest.raises(DisconnectedComplex):
        spanning_tree(cx)


def test_bounding_chain_of_plaquette(plaquette):
    contour = Contour.plaquette_boundary(plaquette, 0)
    s = bounding_chain(plaquette, contour)
    assert s == IntegerChain(2, {0: 1})
    assert boundary(plaquette, s) == contour.as_chain()


def test_bounding_chain_is_reduced():
    cx = build_hypercubic((2, 2), True)
    contour = Contour.plaquette_boundary(cx, 2)
    s = bounding_chain(cx, contour)
    assert s.l1_norm() == 1
    assert boundary(cx, s) == contour.as_chain()


def test_noncontractible_loop_has_no_bounding_chain(torus2x2):
    # Link 0 runs 0 -> 2 and link 4 runs 2 -> 0 along the first direction
    loop = Contour.from_steps(torus2x2, [(0, 1), (4, 1)])
    with pytest.raises(HomologyObstruction):
        bounding_chain(torus2x2, loop)


def test_empty_contour_bounds_nothing(torus2x2):
    assert bounding_chain(torus2x2, Contour(())).is_zero()


def test_hermite_rank_and_kernel():
    form = column_hermite([[1, 1, 0], [0, 1, 1]], n_cols=3)
    assert form.rank == 2
    (kernel,) = form.kernel_columns()
    assert kernel in ([1, -1, 1], [-1, 1, -1])


def test_left_inverse_bound_for_unit_basis():
    assert rational_left_inverse_bound([[1, 0, 0], [0, 1, 0]]) == pytest.approx(1.0)


# ── Description files and contours ────────────────────────────────────


def test_save_and_load(tmp_path):
    cx = build_hypercubic((2, 1), False, name="pair")
    path = save_complex(cx, tmp_path / "pair.json")
    loaded = load_complex(path)
    assert loaded.name == "pair"
    assert loaded.links == cx.links
    assert loaded.plaquettes == cx.plaquettes


def test_bundled_files_match_builders():
    plaq = load_complex("plaquette.json")
    torus = load_complex("torus2x2.json")
    assert plaq.plaquettes == build_hypercubic((1, 1)).plaquettes
    built = build_hypercubic((2, 2), True)
    assert torus.links == built.links
    assert torus.plaquettes == built.plaquettes


def test_unsupported_format(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format": "other/9", "sites": 1, "links": [], "plaquettes": []}))
    with pytest.raises(InvalidInput):
        load_complex(path)


def test_missing_file(tmp_path):
    with pytest.raises(InvalidInput):
        load_complex("no_such_complex.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{\"sites\": 4, \"links\": [")
    with pytest.raises(InvalidInput) as exc:
        load_complex(broken)
    assert exc.value.module == "cellcomplex"
    listing = tmp_path / "listing.json"
    listing.write_text("[1, 2, 3]")
    with pytest.raises(InvalidInput):
        load_complex(listing)


def test_parse_contour_forms(plaquette, tmp_path):
    by_plaquette = parse_contour("plaquette:0", plaquette)
    by_steps = parse_contour("steps:0:1,3:1,2:-1,1:-1", plaquette)
    assert by_plaquette == by_steps
    path = tmp_path / "loop.json"
    path.write_text(json.dumps({"steps": [[1, 1], [2, 1], [3, -1], [0, -1]]}))
    assert parse_contour(str(path), plaquette) == by_steps.reversed()


@pytest.mark.parametrize(
    "spec", ["plaquette:x", "plaquette:7", "steps:0:1,3:1", "steps:a:b", "steps:0:1,3", "steps:9:1", "steps:0:2"]
)
def test_parse_contour_rejects(plaquette, spec):
    with pytest.raises(InvalidInput):
        parse_contour(spec, plaquette)


@pytest.mark.parametrize(
    "content",
    ["{\"steps\": [[0, 1], [3]]}", "{\"steps\": [0, 1]}", "{\"steps\": 5}", "not json", "[[0, 1]]"],
)
def test_contour_file_rejects(plaquette, tmp_path, content):
    path = tmp_path / "loop.json"
    path.write_text(content)
    with pytest.raises(InvalidInput) as exc:
        parse_contour(str(path), plaquette)
    assert exc.value.module == "cellcomplex"
