"""Ready-made colored pairs: surfaces, cross-polytopes, group complexes.

Vertex ids are deterministic; pair generators prefix the two sides "a"
and "b" so joins and exports stay collision-free.
"""

from __future__ import annotations

from typing import Mapping, Optional

from clcc.errors import DomainError
from clcc.simplicial import (
    ColoredComplex,
    SimplicialComplex,
    barycentric_subdivision_2d,
    is_flag,
)


def gen_cycle(k: int, colors: tuple[int, int] = (1, 2), prefix: str = "v",
              n: Optional[int] = None) -> ColoredComplex:
    """Cycle of length 2k with alternating colors; flag, and 5-large
    exactly when k >= 3."""
    if k < 2:
        raise DomainError(f"cycle parameter k must be >= 2, got {k}")
    i, j = colors
    n = n if n is not None else max(colors)
    ids = [f"{prefix}{t}" for t in range(2 * k)]
    vertices = [(vid, i if t % 2 == 0 else j) for t, vid in enumerate(ids)]
    edges = [[ids[t], ids[(t + 1) % (2 * k)]] for t in range(2 * k)]
    return ColoredComplex.build(n, vertices, edges)


def gen_cross_polytope(n: int, prefix: str = "a") -> ColoredComplex:
    """Join of n two-point sets: color i carries {prefix_i+, prefix_i-}
    and the maximal simplices are the 2^n sign choices."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    vertices = [(f"{prefix}{i}{s}", i) for i in range(1, n + 1) for s in "+-"]
    maximal = []
    for mask in range(2**n):
        maximal.append([f"{prefix}{i}{'+' if mask >> (i - 1) & 1 else '-'}" for i in range(1, n + 1)])
    return ColoredComplex.build(n, vertices, maximal)


def gen_surface_pair(k_a: int, k_b: int) -> tuple[ColoredComplex, ColoredComplex]:
    """Two alternating cycles; the pair complex is a closed surface."""
    return gen_cycle(k_a, prefix="a"), gen_cycle(k_b, prefix="b")


def _require_one_vertex_per_color(gamma: ColoredComplex) -> dict[int, str]:
    by_color: dict[int, str] = {}
    for vid, c in gamma.vertices:
        if c in by_color:
            raise DomainError(f"color {c} has more than one vertex")
        by_color[c] = vid
    return by_color


def gen_salvetti_pair(gamma: ColoredComplex) -> tuple[ColoredComplex, ColoredComplex]:
    """Pair whose complex carries the right-angled Artin group of gamma.

    gamma is a flag complex with at most one vertex per color (vertex of
    color i = generator i).  Side A gets, for each simplex of gamma, the
    full-coordinate simplex with + on the simplex's colors and - on the
    rest; side B is the full cross-polytope."""
    ok, clique = is_flag(gamma)
    if not ok:
        raise DomainError(f"input must be flag; clique {clique} does not span")
    _require_one_vertex_per_color(gamma)
    n = gamma.n
    vertices = [(f"a{i}{s}", i) for i in range(1, n + 1) for s in "+-"]
    maximal = []
    for s in gamma.simplices:
        cols = s.colors
        maximal.append([f"a{i}{'+' if i in cols else '-'}" for i in range(1, n + 1)])
    gamma_hat = ColoredComplex.build(n, vertices, maximal)
    return gamma_hat, gen_cross_polytope(n, prefix="b")


def gen_racg_pair(gamma: ColoredComplex) -> tuple[ColoredComplex, ColoredComplex]:
    """Pair whose complex is the subdivided commutator complex of the
    right-angled Coxeter group of gamma.

    Vertices of gamma are recolored one color each (sorted order); side A
    is the full cross-polytope on those colors."""
    ok, clique = is_flag(gamma)
    if not ok:
        raise DomainError(f"input must be flag; clique {clique} does not span")
    ids = sorted(gamma.vertex_ids)
    n = len(ids)
    if n < 1:
        raise DomainError("need at least one vertex")
    recolor = {vid: i + 1 for i, vid in enumerate(ids)}
    vertices = [(vid, recolor[vid]) for vid in ids]
    maximal = [sorted(s.vertex_ids) for s in gamma.maximal_simplices if s.dim >= 0]
    gamma_b = ColoredComplex.build(n, vertices, maximal)
    return gen_cross_polytope(n, prefix="a"), gamma_b


def gen_barycentric_pair(
    gamma: SimplicialComplex,
    lam: SimplicialComplex,
    colors_gamma: Mapping[str, int],
    colors_lam: Mapping[str, int],
) -> tuple[ColoredComplex, ColoredComplex]:
    """Subdivide two 2-complexes; edge barycentres must land on
    different colors so the pair is certifiable."""
    if colors_gamma.get("E") == colors_lam.get("E"):
        raise DomainError("edge-barycentre colors must differ between the two factors")
    return (
        barycentric_subdivision_2d(gamma, colors_gamma),
        barycentric_subdivision_2d(lam, colors_lam),
    )


def flag_complex_from_graph(
    n: int, vertices, edges
) -> ColoredComplex:
    """Clique (flag) completion of a colored graph: simplices are exactly
    the cliques, so the result is flag by construction."""
    colors = dict(vertices)
    adj: dict[str, set[str]] = {v: set() for v in colors}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    cliques = [[v] for v in sorted(colors)]
    level = [(v,) for v in sorted(colors)]
    while level:
        nxt = []
        for clique in level:
            for u in sorted(adj[clique[-1]]):
                if u > clique[-1] and all(u in adj[w] for w in clique):
                    bigger = clique + (u,)
                    nxt.append(bigger)
                    cliques.append(list(bigger))
        level = nxt
    return ColoredComplex.build(n, list(colors.items()), cliques)
