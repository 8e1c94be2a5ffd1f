"""Coupled-link cube complexes.

A pair of n-colored simplicial complexes (gamma_a, gamma_b) determines a
cube complex whose d-cubes are the pairs (a, b) of coordinate simplices
whose colors jointly cover {1..n} and overlap in exactly d colors.
Vertices are the complementary pairs, and the link of a cube (a, b) is
the join of the links of a and b in their respective complexes.

CubeComplex is also the generic container used for hand-built complexes
(trees, grids) and for the output of the halfspace/ultrafilter
construction; those carry no pair origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional

from clcc.canon import csorted
from clcc.errors import ComplexError, DomainError, PairError
from clcc.simplicial import (
    EMPTY_SIMPLEX,
    ColoredComplex,
    ColoredMap,
    CoordSimplex,
    SimplicialComplex,
    is_flag,
    simplicial_join,
)

AUGMENTATION = "<augmentation>"

CubeId = object  # (CoordSimplex, CoordSimplex) for pair-built complexes


class CubeComplex:
    """Finite cube complex with explicit facet relation.

    Every d-cube has exactly 2d facets; cubes are determined by their
    vertex sets (gluings with repeated faces are rejected at ingestion).
    """

    def __init__(
        self,
        cubes_by_dim: Mapping[int, tuple],
        facets_map: Mapping[CubeId, tuple],
        vertex_sets: Mapping[CubeId, frozenset],
        n: Optional[int] = None,
        defining_pair: Optional[tuple[ColoredComplex, ColoredComplex]] = None,
        has_pair_origin: bool = False,
    ):
        self._cubes_by_dim = {d: tuple(csorted(cs)) for d, cs in cubes_by_dim.items() if cs}
        self._facets = dict(facets_map)
        self._vsets = dict(vertex_sets)
        self.n = n
        self.defining_pair = defining_pair
        self.has_pair_origin = has_pair_origin
        self._dim_of = {c: d for d, cs in self._cubes_by_dim.items() for c in cs}

    # -- construction --------------------------------------------------

    @staticmethod
    def from_cells(cells: Mapping[int, Iterable[frozenset]]) -> "CubeComplex":
        """Generic complex from vertex sets per dimension.

        Dimension-0 cells are identified by the vertex id itself; higher
        cells by their vertex set.  Facets are inferred by vertex-set
        inclusion and must number exactly 2d.
        """
        by_dim: dict[int, list] = {}
        vsets: dict = {}
        seen: set = set()
        for d in sorted(cells):
            ids = []
            for cell in cells[d]:
                cell = frozenset(cell)
                if len(cell) != 2**d:
                    raise ComplexError(f"{d}-cube needs {2**d} vertices, got {len(cell)}")
                cid = next(iter(cell)) if d == 0 else cell
                if cid in seen:
                    raise ComplexError(f"duplicate cube {cid}")
                seen.add(cid)
                ids.append(cid)
                vsets[cid] = cell
            by_dim[d] = ids
        for d in by_dim:
            if d == 0:
                continue
            for cid in by_dim[d]:
                missing = vsets[cid] - set(by_dim.get(0, ()))
                if missing:
                    raise ComplexError(f"cube {cid} uses undeclared vertices {csorted(missing)}")
        facets: dict = {}
        for d in by_dim:
            if d == 0:
                for cid in by_dim[d]:
                    facets[cid] = ()
                continue
            lower = by_dim.get(d - 1, [])
            for cid in by_dim[d]:
                fs = [f for f in lower if vsets[f] <= vsets[cid]]
                if len(fs) != 2 * d:
                    raise ComplexError(
                        f"{d}-cube {set(vsets[cid])} has {len(fs)} facets, expected {2 * d}"
                    )
                facets[cid] = tuple(csorted(fs))
        return CubeComplex(by_dim, facets, vsets)

    # -- queries ---------------------------------------------------------

    @property
    def top_dim(self) -> int:
        return max(self._cubes_by_dim, default=-1)

    def cells(self, d: int) -> tuple:
        return self._cubes_by_dim.get(d, ())

    def dim_of(self, cube: CubeId) -> int:
        return self._dim_of[cube]

    def __contains__(self, cube: CubeId) -> bool:
        return cube in self._dim_of

    def vertices_of(self, cube: CubeId) -> frozenset:
        return self._vsets[cube]

    def facets(self, cube: CubeId) -> tuple:
        return self._facets[cube]

    @property
    def augmentation_cell(self):
        return AUGMENTATION

    def boundary_of(self, cube: CubeId) -> tuple:
        d = self._dim_of[cube]
        if d == 0:
            return (AUGMENTATION,)
        return self._facets[cube]

    @cached_property
    def cofaces_map(self) -> dict:
        out: dict = {c: [] for c in self._dim_of}
        for c, fs in self._facets.items():
            for f in fs:
                out[f].append(c)
        return {c: tuple(csorted(v)) for c, v in out.items()}

    def cofaces_closure(self, cube: CubeId) -> set:
        """All cubes having `cube` as an iterated face, including itself."""
        seen = {cube}
        stack = [cube]
        while stack:
            for up in self.cofaces_map[stack.pop()]:
                if up not in seen:
                    seen.add(up)
                    stack.append(up)
        return seen

    @cached_property
    def is_pure(self) -> bool:
        top = self.top_dim
        return all(
            any(self._dim_of[c] == top for c in self.cofaces_closure(cube))
            for d, cubes in self._cubes_by_dim.items()
            for cube in cubes
        )

    @cached_property
    def _vertex_adjacency(self) -> dict:
        adj: dict = {v: set() for v in self.cells(0)}
        for e in self.cells(1):
            a, b = self._vsets[e]
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def vertex_degree(self, v) -> int:
        deg = 0
        for e in self.cells(1):
            if v in self._vsets[e]:
                deg += 1
        return deg

    def is_connected(self) -> bool:
        verts = self.cells(0)
        if not verts:
            return False
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for u in self._vertex_adjacency[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(verts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(cs) for d, cs in self._cubes_by_dim.items())

    # -- links -----------------------------------------------------------

    def edge_orientation(self, edge: CubeId) -> tuple:
        """Orientation convention for pair-built edges: from the endpoint
        with more A-coordinates to the one with fewer.  Metadata only; no
        invariant consumes it."""
        if not self.has_pair_origin:
            raise DomainError("edge orientation needs a pair-built complex")
        a, b = edge
        (i,) = a.colors & b.colors
        return ((a, b.minus(i)), (a.minus(i), b))

    def link_data(self, cube: CubeId):
        """Adjacency-derived link: one (m)-simplex per (k+m+1)-cube above
        `cube`; vertices are the (k+1)-cubes.  Returns the link and the
        coface -> link-cell map used by localization."""
        if cube not in self._dim_of:
            raise DomainError(f"cube {cube!r} not in complex")
        k = self._dim_of[cube]
        closure = self.cofaces_closure(cube)
        one_up = [c for c in closure if self._dim_of[c] == k + 1]
        below: dict = {d: self.cofaces_closure(d) for d in one_up}
        cell_map: dict = {}
        cells = {frozenset()}
        for c in closure:
            simplex = frozenset(d for d in one_up if c in below[d])
            cell_map[c] = simplex
            cells.add(simplex)
        link = SimplicialComplex(tuple(csorted(one_up)), frozenset(cells))
        return link, cell_map

    def link_complex(self, cube: CubeId) -> SimplicialComplex:
        return self.link_data(cube)[0]

    # -- io ----------------------------------------------------------------

    def to_json_dict(self) -> dict:
        if not self.has_pair_origin:
            raise DomainError("only pair-built complexes have a JSON form")
        cubes = []
        for d in sorted(self._cubes_by_dim):
            for a, b in self._cubes_by_dim[d]:
                cubes.append(
                    {
                        "a": {str(c): v for c, v in a.entries},
                        "b": {str(c): v for c, v in b.entries},
                        "dim": d,
                    }
                )
        return {"n": self.n, "cubes": cubes}

    @staticmethod
    def from_json_dict(doc: dict) -> "CubeComplex":
        try:
            n = doc["n"]
            raw = [
                (
                    CoordSimplex.of({int(c): v for c, v in item["a"].items()}),
                    CoordSimplex.of({int(c): v for c, v in item["b"].items()}),
                )
                for item in doc["cubes"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise ComplexError(f"malformed cube complex document: {exc}") from exc
        return _assemble_pair_cubes(n, raw, defining_pair=None)


# ----------------------------------------------------------------------
# construction from a colored pair
# ----------------------------------------------------------------------


def complementary(a: CoordSimplex, b: CoordSimplex, n: int) -> bool:
    """The colors of a and b partition {1..n}."""
    return not (a.colors & b.colors) and (a.colors | b.colors) == frozenset(range(1, n + 1))


def _cube_vertices(a: CoordSimplex, b: CoordSimplex) -> frozenset:
    overlap = sorted(a.colors & b.colors)
    verts = []
    for r in range(len(overlap) + 1):
        for keep_a in combinations(overlap, r):
            drop_a = frozenset(overlap) - frozenset(keep_a)
            va = CoordSimplex(tuple(e for e in a.entries if e[0] not in drop_a))
            vb = CoordSimplex(tuple(e for e in b.entries if e[0] not in frozenset(keep_a)))
            verts.append((va, vb))
    return frozenset(verts)


def _assemble_pair_cubes(n, pairs, defining_pair):
    by_dim: dict[int, list] = {}
    facets: dict = {}
    vsets: dict = {}
    pair_set = set(pairs)
    for a, b in pair_set:
        d = len(a.colors & b.colors)
        cid = (a, b)
        by_dim.setdefault(d, []).append(cid)
        vsets[cid] = _cube_vertices(a, b)
        fs = []
        for i in sorted(a.colors & b.colors):
            fs.append((a.minus(i), b))
            fs.append((a, b.minus(i)))
        facets[cid] = tuple(csorted(fs))
        for f in fs:
            if f not in pair_set:
                raise ComplexError(f"facet {f} missing; cube family not downward consistent")
    return CubeComplex(
        by_dim, facets, vsets, n=n, defining_pair=defining_pair, has_pair_origin=True
    )


def build_clcc(gamma_a: ColoredComplex, gamma_b: ColoredComplex) -> CubeComplex:
    """All pairs (a, b) whose colors cover {1..n}; the overlap size is the
    cube dimension and faces shrink either side on an overlap color."""
    if gamma_a.n != gamma_b.n:
        raise PairError(f"color counts differ: {gamma_a.n} vs {gamma_b.n}")
    n = gamma_a.n
    all_colors = frozenset(range(1, n + 1))
    pairs = []
    for a in gamma_a.simplices:
        need = all_colors - a.colors
        for bcoords, bs in gamma_b.by_colorset.items():
            if need <= bcoords:
                pairs.extend((a, b) for b in bs)
    return _assemble_pair_cubes(n, pairs, defining_pair=(gamma_a, gamma_b))


def link_of_cube(X: CubeComplex, cube) -> SimplicialComplex:
    """Join of the links of the two coordinate simplices."""
    if X.defining_pair is None:
        raise DomainError("link_of_cube needs the defining pair; build the complex from one")
    if cube not in X:
        raise DomainError(f"cube {cube!r} not in complex")
    a, b = cube
    gamma_a, gamma_b = X.defining_pair
    return simplicial_join(gamma_a.link(a), gamma_b.link(b))


def tagged_link_of_cube(X: CubeComplex, cube) -> SimplicialComplex:
    """Join-formula link with vertices force-tagged ("A", v) / ("B", w);
    matches the cube ids of the adjacency link via
    ("A", v) <-> (a + v, b)."""
    a, b = cube
    gamma_a, gamma_b = X.defining_pair
    la = gamma_a.link(a).uncolored().relabeled(
        {v: ("A", v) for v in gamma_a.link(a).vertex_ids}
    )
    lb = gamma_b.link(b).uncolored().relabeled(
        {w: ("B", w) for w in gamma_b.link(b).vertex_ids}
    )
    fam = frozenset(s | t for s in la.simplices for t in lb.simplices)
    return SimplicialComplex(la.vertex_ids + lb.vertex_ids, fam)


# ----------------------------------------------------------------------
# pairing predicates
# ----------------------------------------------------------------------


def _has_exact_coords(K: ColoredComplex, colors: frozenset[int]) -> bool:
    return colors in K.by_colorset


def smartly_paired(
    gamma_a: ColoredComplex, gamma_b: ColoredComplex
) -> tuple[bool, Optional[tuple[str, CoordSimplex]]]:
    """Every maximal simplex on each side has a complementary simplex on
    the other.  The empty simplex complements a full-cover simplex and is
    always available."""
    if gamma_a.n != gamma_b.n:
        raise PairError(f"color counts differ: {gamma_a.n} vs {gamma_b.n}")
    all_colors = frozenset(range(1, gamma_a.n + 1))
    for side, K, other in (("A", gamma_a, gamma_b), ("B", gamma_b, gamma_a)):
        for m in K.maximal_simplices:
            if not _has_exact_coords(other, all_colors - m.colors):
                return False, (side, m)
    return True, None


def doubly_smartly_paired(gamma_a: ColoredComplex, gamma_b: ColoredComplex) -> bool:
    """Smartly paired, and every codimension-1 face of a maximal simplex
    admits a complementary simplex as well."""
    ok, _ = smartly_paired(gamma_a, gamma_b)
    if not ok:
        return False
    all_colors = frozenset(range(1, gamma_a.n + 1))
    for K, other in ((gamma_a, gamma_b), (gamma_b, gamma_a)):
        for m in K.maximal_simplices:
            for f in m.facets():
                if not _has_exact_coords(other, all_colors - f.colors):
                    return False
    return True


def _empty_complex(n: int) -> ColoredComplex:
    return ColoredComplex(n, {}, frozenset({EMPTY_SIMPLEX}))


def prune_to_smart_pair(
    gamma_a: ColoredComplex, gamma_b: ColoredComplex
) -> tuple[ColoredComplex, ColoredComplex]:
    """Recursively remove maximal simplices with no complementary partner.

    Junk simplices contribute no cube, so the complex of the pruned pair
    equals the complex of the input pair.  A pair with no complementary
    simplices at all collapses to two empty complexes (which are not
    smartly paired for n >= 1; every other fixed point is).
    """
    if gamma_a.n != gamma_b.n:
        raise PairError(f"color counts differ: {gamma_a.n} vs {gamma_b.n}")
    n = gamma_a.n
    all_colors = frozenset(range(1, n + 1))
    fam_a, fam_b = set(gamma_a.simplices), set(gamma_b.simplices)
    cur_a, cur_b = gamma_a, gamma_b
    while True:
        junk_a = [
            m for m in cur_a.maximal_simplices
            if m.dim >= 0 and not _has_exact_coords(cur_b, all_colors - m.colors)
        ]
        junk_b = [
            m for m in cur_b.maximal_simplices
            if m.dim >= 0 and not _has_exact_coords(cur_a, all_colors - m.colors)
        ]
        if not junk_a and not junk_b:
            break
        fam_a -= set(junk_a)
        fam_b -= set(junk_b)
        cur_a = cur_a._replace_simplices(frozenset(fam_a))
        cur_b = cur_b._replace_simplices(frozenset(fam_b))
    ok, witness = smartly_paired(cur_a, cur_b)
    if not ok:
        # only the empty simplex is left on a side and it has no partner:
        # no complementary pairs exist anywhere
        return _empty_complex(n), _empty_complex(n)
    return cur_a, cur_b


# ----------------------------------------------------------------------
# global invariants
# ----------------------------------------------------------------------


def dimension(X: CubeComplex) -> tuple[int, bool]:
    """(dimension, is_pure); the empty complex has dimension -1."""
    return X.top_dim, X.is_pure


def euler_characteristic(X: CubeComplex) -> int:
    return X.euler_characteristic()


@dataclass(frozen=True)
class ConnGraph:
    """Connectivity witness graph on the vertices with maximal A-part."""

    nodes: tuple
    edges: frozenset

    def is_connected(self) -> bool:
        if not self.nodes:
            return False
        adj: dict = {v: set() for v in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {self.nodes[0]}
        stack = [self.nodes[0]]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.nodes)


def conn_graph(gamma_a: ColoredComplex, gamma_b: ColoredComplex) -> ConnGraph:
    """Nodes are pairs (maximal a, complementary b); two nodes are joined
    when some simplex of gamma_b is complementary to the intersection of
    their A-parts and contains both B-parts (the intersection may be
    empty provided the witness covers every color)."""
    if gamma_a.n != gamma_b.n:
        raise PairError(f"color counts differ: {gamma_a.n} vs {gamma_b.n}")
    all_colors = frozenset(range(1, gamma_a.n + 1))
    nodes = []
    for m in gamma_a.maximal_simplices:
        for b in gamma_b.by_colorset.get(all_colors - m.colors, ()):
            nodes.append((m, b))
    edges = set()
    for (a1, b1), (a2, b2) in combinations(nodes, 2):
        common = CoordSimplex(tuple(sorted(set(a1.entries) & set(a2.entries))))
        union = b1.compatible_union(b2)
        if union is None:
            continue
        for cand in gamma_b.by_colorset.get(all_colors - common.colors, ()):
            if union <= cand:
                edges.add(((a1, b1), (a2, b2)))
                break
    return ConnGraph(tuple(csorted(nodes)), frozenset(edges))


def is_connected(gamma_a: ColoredComplex, gamma_b: ColoredComplex, engine: str = "bfs") -> bool:
    """Two engines: breadth-first search of the built complex, or the
    maximal-A-part criterion graph (which requires a smartly paired
    input).  The empty complex counts as disconnected."""
    if engine == "bfs":
        return build_clcc(gamma_a, gamma_b).is_connected()
    if engine == "criterion":
        ok, witness = smartly_paired(gamma_a, gamma_b)
        if not ok:
            raise DomainError(f"criterion engine needs a smartly paired input ({witness})")
        return conn_graph(gamma_a, gamma_b).is_connected()
    raise ValueError(f"unknown engine {engine!r}")


def is_npc(gamma_a: ColoredComplex, gamma_b: ColoredComplex):
    """Non-positive curvature of the pair complex.

    Flag inputs settle it immediately; otherwise every vertex link of the
    built complex is checked for flagness directly (exact, since the
    complex is non-positively curved iff all vertex links are flag).
    Returns (verdict, method, witness)."""
    flag_a, _ = is_flag(gamma_a)
    flag_b, _ = is_flag(gamma_b)
    if flag_a and flag_b:
        return True, "flag-inputs", None
    X = build_clcc(gamma_a, gamma_b)
    for v in X.cells(0):
        link = X.link_complex(v)
        ok, clique = is_flag(link)
        if not ok:
            return False, "direct-links", (v, clique)
    return True, "direct-links", None


def classify_vertex_links(X: CubeComplex) -> dict:
    """Tag each vertex link: circle, 2-sphere, other, or unknown (dim >= 3).

    circle   = connected 1-complex, every vertex of degree 2;
    2-sphere = connected closed simplicial surface (each edge in exactly
               two triangles, vertex links circles) with chi = 2.
    """
    out = {}
    for v in X.cells(0):
        link = X.link_complex(v)
        out[v] = _classify_link(link)
    return out


def _is_circle(L: SimplicialComplex) -> bool:
    return (
        L.top_dim == 1
        and bool(L.vertex_ids)
        and all(L.degree(v) == 2 for v in L.vertex_ids)
        and L.is_connected()
    )


def _classify_link(L: SimplicialComplex) -> str:
    d = L.top_dim
    if d >= 3:
        return "unknown"
    if _is_circle(L):
        return "circle"
    if d == 2 and L.is_connected():
        edge_ok = all(
            sum(1 for t in L.cells(2) if e <= t) == 2 for e in L.cells(1)
        )
        if (
            edge_ok
            and all(_is_circle(L.link(frozenset([v]))) for v in L.vertex_ids)
            and L.euler_characteristic() == 2
        ):
            return "2-sphere"
    return "other"


# ----------------------------------------------------------------------
# induced cubical maps
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CubicalMap:
    """Cubical map between pair-built complexes, induced by a pair of
    color-preserving simplicial maps."""

    source: CubeComplex
    target: CubeComplex
    f_a: ColoredMap
    f_b: ColoredMap

    def apply(self, cube):
        a, b = cube
        return (self.f_a.apply(a), self.f_b.apply(b))

    @cached_property
    def vertex_map(self) -> dict:
        return {v: self.apply(v) for v in self.source.cells(0)}

    @cached_property
    def is_injective(self) -> bool:
        images = [self.apply(c) for d in range(self.source.top_dim + 1) for c in self.source.cells(d)]
        return len(set(images)) == len(images)

    @cached_property
    def is_surjective(self) -> bool:
        image = {self.apply(c) for d in range(self.source.top_dim + 1) for c in self.source.cells(d)}
        total = {c for d in range(self.target.top_dim + 1) for c in self.target.cells(d)}
        return image == total

    def compose(self, inner: "CubicalMap") -> "CubicalMap":
        return induced_map(self.f_a.compose(inner.f_a), self.f_b.compose(inner.f_b))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CubicalMap)
            and self.source._dim_of.keys() == other.source._dim_of.keys()
            and self.target._dim_of.keys() == other.target._dim_of.keys()
            and all(self.apply(c) == other.apply(c) for c in self.source._dim_of)
        )


def induced_map(f_a: ColoredMap, f_b: ColoredMap) -> CubicalMap:
    """Functorial map on pair complexes: (a, b) -> (f_a(a), f_b(b)).

    When both maps are inclusions of full subcomplexes the induced map is
    a local isometry; the link condition (injective link maps with full
    image) is verified here in that case."""
    X = build_clcc(f_a.source, f_b.source)
    Y = build_clcc(f_a.target, f_b.target)
    phi = CubicalMap(X, Y, f_a, f_b)
    for d in range(X.top_dim + 1):
        for c in X.cells(d):
            if phi.apply(c) not in Y:
                raise ComplexError(f"image of cube {c} missing from target")
    if f_a.is_full_inclusion and f_b.is_full_inclusion:
        _check_link_condition(phi)
    return phi


def _check_link_condition(phi: CubicalMap) -> None:
    # full-subcomplex inclusions must induce injective link maps whose
    # image spans a full subcomplex of the target link
    for v in phi.source.cells(0):
        src = tagged_link_of_cube(phi.source, v)
        dst = tagged_link_of_cube(phi.target, phi.apply(v))

        def push(vertex):
            side, u = vertex
            return (side, phi.f_a(u) if side == "A" else phi.f_b(u))

        image_vertices = [push(u) for u in src.vertex_ids]
        if len(set(image_vertices)) != len(image_vertices):
            raise ComplexError(f"link map at {v} is not injective")
        mapped = frozenset(frozenset(push(u) for u in s) for s in src.simplices)
        keep = set(image_vertices)
        full = frozenset(s for s in dst.simplices if s <= keep)
        if mapped != full:
            raise ComplexError(f"link image at {v} is not a full subcomplex")
