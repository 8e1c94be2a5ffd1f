import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clcc import (
    barycentric_subdivision_2d,
    close_downward,
    empty_squares,
    flag_complex_from_graph,
    full_subcomplex,
    gen_cross_polytope,
    gen_cycle,
    is_5_large,
    is_flag,
    is_obes,
    link_simplex,
    pairwise_5_large,
    simplicial_join,
)
from clcc.canon import canonical_json
from clcc.errors import ComplexError
from clcc.simplicial import (
    EMPTY_SIMPLEX,
    ColoredComplex,
    CoordSimplex,
    SimplicialComplex,
)

from corpus import random_two_complex, rng


def cell_counts(K) -> dict:
    return {d: len(K.cells(d)) for d in range(K.top_dim + 1)}


# -- oracles ----------------------------------------------------------------


def octahedron_faces():
    """Faces of the octahedron on vertices {1+,1-,2+,2-,3+,3-}: the
    subsets containing no antipodal pair."""
    verts = [f"a{i}{s}" for i in (1, 2, 3) for s in "+-"]
    faces = []
    for k in (1, 2, 3):
        for sub in combinations(verts, k):
            if all(not (a[:-1] == b[:-1]) for a, b in combinations(sub, 2)):
                faces.append(frozenset(sub))
    return faces


def naive_chordless_squares(K):
    """Quadruple scan, independent of the common-neighbour method."""
    adj = K.adjacency
    verts = sorted(adj)
    found = set()
    for quad in combinations(verts, 4):
        for mid in combinations(quad[1:], 2):
            a = quad[0]
            c = next(v for v in quad[1:] if v not in mid)
            b, d = mid
            cycle_edges = [(a, b), (b, c), (c, d), (d, a)]
            if all(y in adj[x] for x, y in cycle_edges):
                if c not in adj[a] and d not in adj[b]:
                    found.add(frozenset(quad))
    return found


def all_cliques(K):
    adj = K.adjacency
    verts = sorted(adj)
    cliques = [frozenset([v]) for v in verts]
    for k in range(2, len(verts) + 1):
        layer = [
            frozenset(sub)
            for sub in combinations(verts, k)
            if all(b in adj[a] for a, b in combinations(sub, 2))
        ]
        if not layer:
            break
        cliques.extend(layer)
    return cliques


# -- close_downward -----------------------------------------------------------


def test_closure_of_cycle(c4):
    assert cell_counts(c4) == {0: 4, 1: 4}
    assert EMPTY_SIMPLEX in c4.simplices


def test_closure_sphere_zero():
    s0 = close_downward(1, [("a+", 1), ("a-", 1)], [["a+"], ["a-"]])
    assert cell_counts(s0) == {0: 2}


def test_closure_octahedron_matches_brute_force(o3):
    assert cell_counts(o3) == {0: 6, 1: 12, 2: 8}
    expected = {f for f in octahedron_faces()}
    got = {s.vertex_ids for s in o3.simplices if s.dim >= 0}
    assert got == expected


def test_closure_is_idempotent(o3):
    again = ColoredComplex.build(
        o3.n, o3.vertices, [sorted(s.vertex_ids) for s in o3.simplices if s.dim >= 0]
    )
    assert again == o3


def test_closure_errors():
    with pytest.raises(ComplexError):
        close_downward(2, [("x", 1), ("y", 1)], [["x", "y"]])  # duplicate color
    with pytest.raises(ComplexError):
        close_downward(2, [("x", 1)], [["x", "z"]])  # unknown id
    with pytest.raises(ComplexError):
        close_downward(2, [("x", 3)], [["x"]])  # color out of range


# -- is_flag --------------------------------------------------------------------


def test_flag_c4(c4):
    assert is_flag(c4) == (True, None)


def test_flag_empty_triangle():
    K = close_downward(
        3,
        [("v1", 1), ("v2", 2), ("v3", 3)],
        [["v1", "v2"], ["v2", "v3"], ["v1", "v3"]],
    )
    ok, witness = is_flag(K)
    assert not ok
    assert tuple(sorted(witness)) == ("v1", "v2", "v3")


def test_flag_octahedron_matches_clique_oracle(o3):
    ok, _ = is_flag(o3)
    assert ok
    for clique in all_cliques(o3):
        assert o3.simplex_with_vertices(clique) is not None


# -- link_simplex ------------------------------------------------------------------


def test_link_of_cycle_vertex(c6):
    v = c6.simplex_with_vertices(["v0"])
    link = link_simplex(c6, v)
    assert cell_counts(link) == {0: 2}
    assert {c6.color_of(u) for u, in (s.vertex_ids for s in link.cells(0))} == {2}


def test_link_in_octahedron(o3):
    v = o3.simplex_with_vertices(["a1+"])
    link = link_simplex(o3, v)
    assert cell_counts(link) == {0: 4, 1: 4}
    assert {link.color_of(u) for u in link.vertex_ids} == {2, 3}


def test_link_of_empty_simplex_is_identity(o3):
    assert link_simplex(o3, EMPTY_SIMPLEX) == o3


def test_link_requires_membership(c4):
    with pytest.raises(ComplexError):
        link_simplex(c4, CoordSimplex.of({1: "nope"}))


# -- full_subcomplex -----------------------------------------------------------------


def test_full_subcomplex_everything(c6):
    assert full_subcomplex(c6, c6.vertex_ids) == c6


def test_full_subcomplex_edge(c6):
    sub = full_subcomplex(c6, ["v0", "v1"])
    assert cell_counts(sub) == {0: 2, 1: 1}


def test_full_subcomplex_of_octahedron_is_square(o3):
    sub = full_subcomplex(o3, [v for v in o3.vertex_ids if o3.color_of(v) in (1, 2)])
    assert cell_counts(sub) == {0: 4, 1: 4}
    assert empty_squares(sub)  # the bicolor square survives


def test_full_subcomplex_unknown_id(c4):
    with pytest.raises(ComplexError):
        full_subcomplex(c4, ["ghost"])


# -- simplicial_join --------------------------------------------------------------------


def s0(prefix):
    return close_downward(1, [(f"{prefix}+", 1), (f"{prefix}-", 1)], [[f"{prefix}+"], [f"{prefix}-"]])


def test_join_of_two_spheres_is_square():
    J = simplicial_join(s0("a"), s0("b"))
    assert {d: len(J.cells(d)) for d in (0, 1)} == {0: 4, 1: 4}
    assert all(J.degree(v) == 2 for v in J.vertex_ids)


def test_join_with_empty_complex_is_identity(c6):
    empty = SimplicialComplex.from_maximal([], [])
    J = simplicial_join(c6, empty)
    assert J == c6.uncolored()


def test_join_sphere_with_square_is_octahedron(o3):
    J = simplicial_join(s0("x"), gen_cycle(2))
    assert {d: len(J.cells(d)) for d in (0, 1, 2)} == {0: 6, 1: 12, 2: 8}
    # octahedron signature: each vertex is non-adjacent to exactly one other
    for v in J.vertex_ids:
        assert len(J.vertex_ids) - 1 - J.degree(v) == 1


def test_join_tags_on_collision():
    J = simplicial_join(s0("a"), s0("a"))
    assert set(J.vertex_ids) == {("A", "a+"), ("A", "a-"), ("B", "a+"), ("B", "a-")}


# -- empty squares -------------------------------------------------------------------------


def test_empty_squares_c4(c4):
    squares = empty_squares(c4)
    assert len(squares) == 1
    assert squares[0].cycle == ("v0", "v1", "v2", "v3")
    assert squares[0].color_set == {1, 2}


def test_square_with_chord_is_not_empty():
    K = close_downward(
        3,
        [("v0", 1), ("v1", 2), ("v2", 3), ("v3", 2)],
        [["v0", "v1"], ["v1", "v2"], ["v2", "v3"], ["v3", "v0"], ["v0", "v2"]],
    )
    assert empty_squares(K) == []


def test_empty_squares_octahedron_matches_naive_scan(o3):
    squares = empty_squares(o3)
    assert len(squares) == 3
    assert {sq.color_set for sq in squares} == {
        frozenset({1, 2}),
        frozenset({1, 3}),
        frozenset({2, 3}),
    }
    assert {frozenset(sq.cycle) for sq in squares} == naive_chordless_squares(o3)


def test_empty_squares_color_filter(o3):
    only12 = empty_squares(o3, (1, 2))
    assert len(only12) == 1 and only12[0].color_set == {1, 2}


def test_square_witness_invariants(o3):
    adj = o3.adjacency
    for sq in empty_squares(o3):
        v, up, w, um = sq.cycle
        assert up in adj[v] and w in adj[up] and um in adj[w] and v in adj[um]
        assert w not in adj[v] and um not in adj[up]


# -- 5-large / obes / pairwise ----------------------------------------------------------------


def test_five_large(c4, c6):
    assert is_5_large(c6) == (True, None)
    ok, witness = is_5_large(c4)
    assert not ok and witness is not None


def test_five_large_barycentric_triangle(one_triangle):
    sub = barycentric_subdivision_2d(one_triangle, {"V": 1, "E": 2, "F": 3})
    assert is_5_large(sub)[0]
    assert naive_chordless_squares(sub) == set()


def test_obes_c4(c4):
    assert is_obes(c4) == (True, None)


def test_obes_barycentric(tetra_boundary):
    sub = barycentric_subdivision_2d(tetra_boundary, {"V": 1, "E": 2, "F": 3})
    ok, _ = is_obes(sub)
    assert ok


def test_obes_tricolor_square_fails():
    K = close_downward(
        3,
        [("v0", 1), ("v1", 2), ("v2", 1), ("v3", 3)],
        [["v0", "v1"], ["v1", "v2"], ["v2", "v3"], ["v3", "v0"]],
    )
    ok, witness = is_obes(K)
    assert not ok
    assert witness.color_set == {1, 2, 3}


def test_pairwise_five_large(c4, c6, o2):
    assert pairwise_5_large(c4, c6) == (True, None)
    ok, witness = pairwise_5_large(c4, gen_cycle(2, prefix="w"))
    assert not ok
    assert witness[0] == (1, 2)
    c8 = gen_cycle(4, prefix="z")
    assert pairwise_5_large(o2, c8)[0]


# -- barycentric subdivision -------------------------------------------------------------------


def test_barycentric_triangle_counts(one_triangle):
    sub = barycentric_subdivision_2d(one_triangle, {"V": 1, "E": 2, "F": 3})
    assert cell_counts(sub) == {0: 7, 1: 12, 2: 6}
    assert is_flag(sub)[0]


def test_barycentric_edge_is_path():
    K = SimplicialComplex.from_maximal(["p", "q"], [["p", "q"]])
    sub = barycentric_subdivision_2d(K, {"V": 1, "E": 2, "F": 3})
    assert cell_counts(sub) == {0: 3, 1: 2}
    degs = sorted(len(sub.adjacency[v]) for v in sub.vertex_ids)
    assert degs == [1, 1, 2]


def test_barycentric_tetra_boundary_counts(tetra_boundary):
    sub = barycentric_subdivision_2d(tetra_boundary, {"V": 3, "E": 1, "F": 2})
    assert cell_counts(sub) == {0: 14, 1: 36, 2: 24}


def test_barycentric_rejects_bad_input(tetra_boundary):
    solid = SimplicialComplex.from_maximal(["p", "q", "r", "s"], [["p", "q", "r", "s"]])
    with pytest.raises(ComplexError):
        barycentric_subdivision_2d(solid, {"V": 1, "E": 2, "F": 3})
    with pytest.raises(ComplexError):
        barycentric_subdivision_2d(tetra_boundary, {"V": 1, "E": 1, "F": 3})


# -- property tests -----------------------------------------------------------------------------


@st.composite
def flag_complexes(draw):
    n = draw(st.integers(1, 3))
    nv = draw(st.integers(1, 10))
    colors = [draw(st.integers(1, n)) for _ in range(nv)]
    vertices = [(f"v{i}", colors[i]) for i in range(nv)]
    edges = []
    for (a, ca), (b, cb) in combinations(vertices, 2):
        if ca != cb and draw(st.booleans()):
            edges.append((a, b))
    return flag_complex_from_graph(n, vertices, edges)


@given(flag_complexes())
@settings(max_examples=60, deadline=None)
def test_link_of_flag_complex_is_flag(K):
    assert is_flag(K)[0]
    for s in sorted(K.simplices, key=lambda s: s.entries)[:12]:
        link = link_simplex(K, s)
        assert is_flag(link)[0]


@given(flag_complexes())
@settings(max_examples=60, deadline=None)
def test_flag_link_equals_full_subcomplex_on_common_neighbours(K):
    adj = K.adjacency
    for s in sorted(K.simplices, key=lambda s: s.entries)[:12]:
        if s.dim < 0:
            continue
        nbrs = set(K.vertex_ids)
        for v in s.vertex_ids:
            nbrs &= adj[v]
        assert link_simplex(K, s) == full_subcomplex(K, nbrs)


@given(flag_complexes())
@settings(max_examples=40, deadline=None)
def test_empty_squares_invariant_under_relabeling(K):
    rename = {v: f"w{idx}" for idx, v in enumerate(reversed(K.vertex_ids))}
    moved = K.relabeled(rename)
    expected = {frozenset(rename[u] for u in sq.cycle) for sq in empty_squares(K)}
    got = {frozenset(sq.cycle) for sq in empty_squares(moved)}
    assert got == expected


def test_barycentric_subdivision_is_obes_on_random_complexes():
    r = rng(101)
    for _ in range(25):
        K = random_two_complex(r)
        sub = barycentric_subdivision_2d(K, {"V": 1, "E": 2, "F": 3})
        ok, witness = is_obes(sub)
        assert ok, f"non-bicolor empty square {witness} in subdivision of {K}"


def test_edge_color_subcomplexes_of_subdivision_are_5_large():
    # the 5-largeness step that certify_barycentric relies on
    r = rng(102)
    for _ in range(25):
        K = random_two_complex(r)
        sub = barycentric_subdivision_2d(K, {"V": 1, "E": 2, "F": 3})
        for pair in ((1, 2), (2, 3)):
            assert not empty_squares(sub, pair)


def test_closure_preserves_flag_verdict():
    r = rng(103)
    for _ in range(20):
        K = random_two_complex(r, max_triangles=4)
        colored = barycentric_subdivision_2d(K, {"V": 1, "E": 2, "F": 3})
        rebuilt = ColoredComplex.from_json_dict(colored.to_json_dict())
        assert is_flag(rebuilt) == is_flag(colored)
        assert rebuilt == colored


# -- json ----------------------------------------------------------------------------------------


def test_colored_complex_json_roundtrip(o3):
    doc = o3.to_json_dict()
    text = canonical_json(doc)
    back = ColoredComplex.from_json_dict(json.loads(text))
    assert back == o3
    assert canonical_json(back.to_json_dict()) == text
