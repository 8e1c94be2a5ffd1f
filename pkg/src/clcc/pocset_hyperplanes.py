"""Hyperplanes, halfspace pocsets, and the ultrafilter cube complex.

A hyperplane is an equivalence class of parallel edges (the transitive
closure of opposite-edge pairs across squares).  For complexes whose
hyperplanes are all two-sided, the halfspaces form a pocset under
inclusion, and the ultrafilter construction rebuilds the complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Optional

from clcc.canon import canon_key, csorted
from clcc.errors import DomainError, NotTwoSidedError, PocsetError
from clcc.clcc_core import CubeComplex


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@dataclass(frozen=True)
class Hyperplane:
    hid: str
    edges: tuple
    direction: Optional[int] = None


def _opposition_pairs(X: CubeComplex, square):
    """The two pairs of vertex-disjoint edges of a square."""
    edges = X.facets(square)
    pairs = []
    for e, f in combinations(edges, 2):
        if not (X.vertices_of(e) & X.vertices_of(f)):
            pairs.append((e, f))
    if len(pairs) != 2:
        raise DomainError(f"square {square!r} does not have two opposite edge pairs")
    return pairs


def hyperplanes(X: CubeComplex) -> list[Hyperplane]:
    """Edge classes under square opposition, deterministically numbered."""
    uf = _UnionFind(X.cells(1))
    for sq in X.cells(2):
        for e, f in _opposition_pairs(X, sq):
            uf.union(e, f)
    classes: dict = {}
    for e in X.cells(1):
        classes.setdefault(uf.find(e), []).append(e)
    ordered = sorted((csorted(v) for v in classes.values()), key=lambda c: canon_key(c[0]))
    return [Hyperplane(f"h{i}", tuple(c)) for i, c in enumerate(ordered)]


def directions(X: CubeComplex) -> tuple[dict[str, int], bool]:
    """Coordinate color of each hyperplane of a pair-built complex.

    Each edge (a, b) changes exactly the one color where a and b overlap;
    the flag is False if some class mixes coordinates (never for complexes
    built from a pair)."""
    if not X.has_pair_origin:
        raise DomainError("directions need a pair-built complex")
    out: dict[str, int] = {}
    valid = True
    for hp in hyperplanes(X):
        colors = set()
        for a, b in hp.edges:
            (color,) = a.colors & b.colors
            colors.add(color)
        out[hp.hid] = min(colors)
        if len(colors) != 1:
            valid = False
    return out, valid


@dataclass(frozen=True)
class CrossingGraph:
    nodes: tuple[str, ...]
    edges: frozenset  # frozensets {h, k}, h != k
    self_crossing: frozenset

    def neighbors(self, h: str) -> frozenset:
        return frozenset(next(iter(e - {h})) for e in self.edges if h in e)


def crossing_graph(X: CubeComplex) -> CrossingGraph:
    """Two hyperplanes cross when a common square uses both."""
    hps = hyperplanes(X)
    owner = {e: hp.hid for hp in hps for e in hp.edges}
    edges = set()
    selfx = set()
    for sq in X.cells(2):
        (e1, _), (f1, _) = _opposition_pairs(X, sq)
        h, k = owner[e1], owner[f1]
        if h == k:
            selfx.add(h)
        else:
            edges.add(frozenset({h, k}))
    return CrossingGraph(tuple(hp.hid for hp in hps), frozenset(edges), frozenset(selfx))


# ----------------------------------------------------------------------
# pocsets
# ----------------------------------------------------------------------


def star(element: tuple[str, str]) -> tuple[str, str]:
    pid, side = element
    return (pid, "-" if side == "+" else "+")


@dataclass(frozen=True)
class Pocset:
    """Finite poset with a free order-reversing involution.

    `less` is the full strict order as (x, y) pairs, transitively closed.
    `sides` optionally carries the halfspace vertex sets when the pocset
    came from a cube complex."""

    elements: tuple
    less: frozenset
    sides: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        elems = set(self.elements)
        for e in self.elements:
            if star(e) not in elems:
                raise PocsetError(f"element {e} lacks its conjugate")
        for x, y in self.less:
            if x not in elems or y not in elems:
                raise PocsetError(f"relation {x} < {y} uses unknown elements")
            if x == y:
                raise PocsetError(f"irreflexivity violated at {x}")
            if y == star(x):
                raise PocsetError(f"{x} comparable with its conjugate")
            if (star(y), star(x)) not in self.less:
                raise PocsetError(f"involution does not reverse {x} < {y}")
            if (y, x) in self.less:
                raise PocsetError(f"antisymmetry violated on {x}, {y}")
        for x, y in self.less:
            for z, w in self.less:
                if y == z and (x, w) not in self.less:
                    raise PocsetError(f"order not transitive: {x} < {y} < {w}")

    @property
    def pair_ids(self) -> tuple[str, ...]:
        return tuple(sorted({pid for pid, _ in self.elements}))

    def lt(self, x, y) -> bool:
        return (x, y) in self.less

    @cached_property
    def above(self) -> dict:
        out: dict = {e: [] for e in self.elements}
        for x, y in self.less:
            out[x].append(y)
        return {e: tuple(csorted(v)) for e, v in out.items()}

    @staticmethod
    def from_relations(pair_ids, relations) -> "Pocset":
        """Close the given x < y relations under involution and
        transitivity, then validate the axioms."""
        elements = tuple(sorted((pid, s) for pid in pair_ids for s in ("+", "-")))
        rel = set()
        for x, y in relations:
            rel.add((x, y))
            rel.add((star(y), star(x)))
        changed = True
        while changed:
            changed = False
            for x, y in list(rel):
                for z, w in list(rel):
                    if y == z and (x, w) not in rel:
                        rel.add((x, w))
                        changed = True
        return Pocset(elements, frozenset(rel))

    def to_json_dict(self) -> dict:
        return {
            "pairs": [{"id": pid} for pid in self.pair_ids],
            "less": sorted([f"{x[0]}{x[1]}", f"{y[0]}{y[1]}"] for x, y in self.less),
        }

    @staticmethod
    def from_json_dict(doc: dict) -> "Pocset":
        def parse(token: str):
            if not token or token[-1] not in "+-":
                raise PocsetError(f"element token {token!r} must end with + or -")
            return (token[:-1], token[-1])

        try:
            pair_ids = [p["id"] for p in doc["pairs"]]
            relations = [(parse(a), parse(b)) for a, b in doc["less"]]
        except (KeyError, TypeError) as exc:
            raise PocsetError(f"malformed pocset document: {exc}") from exc
        return Pocset.from_relations(pair_ids, relations)


def halfspace_pocset(X: CubeComplex) -> Pocset:
    """Halfspaces ordered by inclusion of their vertex sets.

    Requires every hyperplane to be two-sided: removing its edges must
    split the 1-skeleton into exactly two components.  Quotients with
    one-sided classes (a torus, say) are rejected."""
    verts = X.cells(0)
    endpoint = {e: tuple(csorted(X.vertices_of(e))) for e in X.cells(1)}
    sides: dict = {}
    for hp in hyperplanes(X):
        cut = set(hp.edges)
        adj: dict = {v: set() for v in verts}
        for e in X.cells(1):
            if e in cut:
                continue
            a, b = endpoint[e]
            adj[a].add(b)
            adj[b].add(a)
        comps = []
        seen: set = set()
        for v in verts:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for u in adj[stack.pop()]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append(comp)
        if len(comps) != 2:
            raise NotTwoSidedError(
                f"hyperplane {hp.hid} separates the complex into {len(comps)} parts, not 2"
            )
        lo, hi = sorted(comps, key=lambda c: canon_key(csorted(c)[0]))
        sides[(hp.hid, "-")] = frozenset(lo)
        sides[(hp.hid, "+")] = frozenset(hi)
    elements = tuple(sorted(sides))
    less = frozenset(
        (x, y) for x in elements for y in elements if x != y and sides[x] < sides[y]
    )
    return Pocset(elements, less, sides=sides)


# ----------------------------------------------------------------------
# ultrafilter construction
# ----------------------------------------------------------------------


def ultrafilters(S: Pocset) -> list[frozenset]:
    """All complete consistent choices, by backtracking with forced-side
    propagation (finiteness makes the descending chain condition free)."""
    pair_ids = S.pair_ids
    results: list[frozenset] = []

    def extend(i: int, chosen: dict, forced: dict):
        if i == len(pair_ids):
            results.append(frozenset(chosen.items()))
            return
        pid = pair_ids[i]
        options = [forced[pid]] if pid in forced else ["-", "+"]
        for side in options:
            e = (pid, side)
            new_forced = dict(forced)
            ok = True
            for fid, fside in S.above[e]:
                if fid in chosen:
                    if chosen[fid] != fside:
                        ok = False
                        break
                elif new_forced.setdefault(fid, fside) != fside:
                    ok = False
                    break
            if ok:
                chosen[pid] = side
                extend(i + 1, chosen, new_forced)
                del chosen[pid]

    extend(0, {}, {})
    return sorted(results, key=canon_key)


def sageev(S: Pocset) -> CubeComplex:
    """Cube complex on the ultrafilters: edges between choices differing
    in one conjugate pair, higher cubes filled whenever their 1-skeleton
    is present (checked on all vertex subsets)."""
    verts = ultrafilters(S)
    vset = set(verts)

    def flip(u: frozenset, pid: str) -> frozenset:
        side = dict(u)[pid]
        return (u - {(pid, side)}) | {(pid, "+" if side == "-" else "-")}

    cells: dict[int, list] = {0: [frozenset({u}) for u in verts]}
    level = [(frozenset({u}), frozenset()) for u in verts]
    d = 0
    while level:
        nxt = {}
        for cube, toggled in level:
            for pid in S.pair_ids:
                if pid in toggled:
                    continue
                flipped = frozenset(flip(u, pid) for u in cube)
                if all(u in vset for u in flipped):
                    grown = cube | flipped
                    nxt.setdefault(grown, toggled | {pid})
        if not nxt:
            break
        d += 1
        cells[d] = list(nxt)
        level = list(nxt.items())
    return CubeComplex.from_cells(cells)


def roller_duality_check(X: CubeComplex):
    """Rebuild X from its halfspace pocset and compare.

    The natural map sends a vertex to the set of halfspaces containing
    it; success means that map is a cube-complex isomorphism.  Returns
    (verdict, vertex bijection or None)."""
    P = halfspace_pocset(X)
    Y = sageev(P)
    sides = P.sides or {}
    by_h: dict = {}
    for (hid, side), vs in sides.items():
        by_h.setdefault(hid, []).append(((hid, side), vs))

    def embed(v) -> frozenset:
        out = []
        for hid, options in by_h.items():
            hits = [e for e, vs in options if v in vs]
            if len(hits) != 1:
                raise DomainError(f"vertex {v!r} not on exactly one side of {hid}")
            out.append(hits[0])
        return frozenset(out)

    mapping = {v: embed(v) for v in X.cells(0)}
    y_verts = set(Y.cells(0))
    if len(set(mapping.values())) != len(mapping) or set(mapping.values()) != y_verts:
        return False, None
    for d in range(1, max(X.top_dim, Y.top_dim) + 1):
        xs = X.cells(d)
        ys = set(Y.cells(d))
        if len(xs) != len(ys):
            return False, None
        for c in xs:
            image = frozenset(mapping[v] for v in X.vertices_of(c))
            if image not in ys:
                return False, None
    return True, mapping
