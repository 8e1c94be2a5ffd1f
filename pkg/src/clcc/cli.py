"""Command-line interface.

All subcommands read JSON (`-` = stdin), write canonical JSON payloads to
stdout, and are pipeline-composable.  Exit codes: 0 success, 1 domain
error (with a structured error payload), 2 usage error.  A one-line run
report goes to stderr; `--report` upgrades it to JSON with input digests
and timings.
"""

from __future__ import annotations

import json
import sys
import time

import click

from clcc import generators, homology_z2 as hz2
from clcc.canon import canonical_json, digest
from clcc.clcc_core import (
    CubeComplex,
    build_clcc,
    classify_vertex_links,
    conn_graph,
    dimension,
    euler_characteristic,
    is_connected,
    is_npc,
    link_of_cube,
    smartly_paired,
)
from clcc.errors import ComplexError, DomainError
from clcc.hyperbolicity import certify
from clcc.pocset_hyperplanes import (
    Pocset,
    crossing_graph,
    directions,
    hyperplanes,
    roller_duality_check,
    sageev,
)
from clcc.simplicial import (
    ColoredComplex,
    CoordSimplex,
    SimplicialComplex,
    is_5_large,
    is_flag,
    is_obes,
    pairwise_5_large,
)

PRESET_2COMPLEXES = {
    "tetrahedron": lambda: SimplicialComplex.from_maximal(
        ["p", "q", "r", "s"], [["p", "q", "r"], ["p", "q", "s"], ["p", "r", "s"], ["q", "r", "s"]]
    ),
    "triangle": lambda: SimplicialComplex.from_maximal(["p", "q", "r"], [["p", "q", "r"]]),
}


def _read_doc(src: str) -> dict:
    try:
        if src == "-":
            return json.load(sys.stdin)
        with open(src, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ComplexError(f"malformed JSON in {src}: {exc}") from exc
    except OSError as exc:
        raise ComplexError(f"cannot read {src}: {exc}") from exc


def _load_pair(doc: dict) -> tuple[ColoredComplex, ColoredComplex]:
    if "gamma_a" not in doc or "gamma_b" not in doc:
        raise ComplexError("expected a pair document with gamma_a and gamma_b")
    return (
        ColoredComplex.from_json_dict(doc["gamma_a"]),
        ColoredComplex.from_json_dict(doc["gamma_b"]),
    )


def _pair_doc(ga: ColoredComplex, gb: ColoredComplex) -> dict:
    return {"gamma_a": ga.to_json_dict(), "gamma_b": gb.to_json_dict()}


def _emit(ctx_cmd: str, payload, out: str | None, t0: float, inputs: dict, report: bool):
    text = canonical_json(payload)
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    ms = round((time.perf_counter() - t0) * 1000, 3)
    if report:
        click.echo(
            canonical_json(
                {"command": ctx_cmd, "inputs": inputs, "result_digest": digest(payload), "timings": {"total_ms": ms}}
            ),
            err=True,
        )
    else:
        click.echo(f"clcc {ctx_cmd}: ok ({ms} ms)", err=True)


def _fail_domain(cmd: str, exc: Exception):
    payload = {"error": {"command": cmd, "type": type(exc).__name__, "message": str(exc)}}
    click.echo(canonical_json(payload))
    click.echo(f"clcc {cmd}: error: {exc}", err=True)
    sys.exit(1)


def _guard(cmd):
    """Run a command body, mapping DomainError to exit code 1."""

    def wrap(fn):
        def inner(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except DomainError as exc:
                _fail_domain(cmd, exc)

        inner.__name__ = fn.__name__
        return inner

    return wrap


@click.group()
def main():
    """Coupled-link cube complexes: build, measure, certify."""


# -- generate ------------------------------------------------------------


@main.command()
@click.argument("family", type=click.Choice(
    ["surface", "salvetti", "racg", "barycentric", "cycle", "crosspolytope"]))
@click.option("--ka", type=int, default=2, help="half-length of the first cycle (surface)")
@click.option("--kb", type=int, default=2, help="half-length of the second cycle (surface)")
@click.option("--k", type=int, default=2, help="half-length (cycle)")
@click.option("--colors", default="1,2", help="two colors for cycle, e.g. 1,2")
@click.option("--n", "nn", type=int, default=2, help="color count (crosspolytope)")
@click.option("--gamma", default=None, help="complex JSON path, '-', or a preset name")
@click.option("--lam", default=None, help="second complex (barycentric)")
@click.option("--colors-a", default="1,2,3", help="V,E,F colors of the first factor")
@click.option("--colors-b", default="2,1,3", help="V,E,F colors of the second factor")
@click.option("--out", default=None, help="output path (default stdout)")
@click.option("--report", is_flag=True, help="JSON run report on stderr")
def generate(family, ka, kb, k, colors, nn, gamma, lam, colors_a, colors_b, out, report):
    """Emit a ready-made complex or pair."""
    t0 = time.perf_counter()

    @_guard("generate")
    def run():
        inputs = {}
        if family == "surface":
            a, b = generators.gen_surface_pair(ka, kb)
            payload = _pair_doc(a, b)
        elif family == "cycle":
            ci, cj = (int(x) for x in colors.split(","))
            payload = generators.gen_cycle(k, (ci, cj), n=max(ci, cj)).to_json_dict()
        elif family == "crosspolytope":
            payload = generators.gen_cross_polytope(nn).to_json_dict()
        elif family in ("salvetti", "racg"):
            if gamma is None:
                raise ComplexError(f"{family} needs --gamma")
            doc = _read_doc(gamma)
            inputs["gamma"] = digest(doc)
            g = ColoredComplex.from_json_dict(doc)
            make = generators.gen_salvetti_pair if family == "salvetti" else generators.gen_racg_pair
            payload = _pair_doc(*make(g))
        else:  # barycentric
            if gamma is None or lam is None:
                raise ComplexError("barycentric needs --gamma and --lam")

            def load2(src):
                if src in PRESET_2COMPLEXES:
                    return PRESET_2COMPLEXES[src]()
                return SimplicialComplex.from_json_dict(_read_doc(src))

            cmap_a = dict(zip(("V", "E", "F"), (int(x) for x in colors_a.split(","))))
            cmap_b = dict(zip(("V", "E", "F"), (int(x) for x in colors_b.split(","))))
            pair = generators.gen_barycentric_pair(load2(gamma), load2(lam), cmap_a, cmap_b)
            payload = _pair_doc(*pair)
        _emit("generate", payload, out, t0, inputs, report)

    run()


# -- build ---------------------------------------------------------------


@main.command()
@click.argument("input_src", default="-", required=False)
@click.option("--pair", "pair_opt", default=None, help="pair JSON path (alias for the argument)")
@click.option("--out", default=None)
@click.option("--report", is_flag=True)
def build(input_src, pair_opt, out, report):
    """Build the cube complex of a pair."""
    t0 = time.perf_counter()

    @_guard("build")
    def run():
        doc = _read_doc(pair_opt or input_src)
        ga, gb = _load_pair(doc)
        X = build_clcc(ga, gb)
        _emit("build", X.to_json_dict(), out, t0, {"pair": digest(doc)}, report)

    run()


# -- check ---------------------------------------------------------------


@main.command()
@click.argument("args", nargs=-1)
@click.option("--flag", "f_flag", is_flag=True, help="same as the flag property")
@click.option("--5large", "f_5large", is_flag=True)
@click.option("--obes", "f_obes", is_flag=True)
@click.option("--pairwise", "f_pairwise", is_flag=True)
@click.option("--smart", "f_smart", is_flag=True)
@click.option("--npc", "f_npc", is_flag=True)
@click.option("--report", is_flag=True)
def check(args, f_flag, f_5large, f_obes, f_pairwise, f_smart, f_npc, report):
    """Check a property of a complex (flag/5large/obes) or a pair
    (pairwise/smart/npc); exits 1 with a witness when it fails.

    Usage: clcc check [PROPERTY] [INPUT] or clcc check --PROPERTY [INPUT].
    """
    t0 = time.perf_counter()
    names = ("flag", "5large", "obes", "pairwise", "smart", "npc")
    flags = dict(zip(names, (f_flag, f_5large, f_obes, f_pairwise, f_smart, f_npc)))
    positional = list(args)
    chosen = [name for name, on in flags.items() if on]
    if positional and positional[0] in names:
        chosen.append(positional.pop(0))
    if len(set(chosen)) != 1 or len(positional) > 1:
        raise click.UsageError("choose exactly one property and at most one input")
    prop = chosen[0]
    input_src = positional[0] if positional else "-"

    @_guard("check")
    def run():
        doc = _read_doc(input_src)
        witness = None
        if prop in ("flag", "5large", "obes"):
            K = ColoredComplex.from_json_dict(doc)
            if prop == "flag":
                holds, w = is_flag(K)
                witness = list(w) if w else None
            elif prop == "5large":
                holds, w = is_5_large(K)
                witness = w.to_json_dict() if w else None
            else:
                holds, w = is_obes(K)
                witness = w.to_json_dict() if w else None
        else:
            ga, gb = _load_pair(doc)
            if prop == "pairwise":
                holds, w = pairwise_5_large(ga, gb)
                if w:
                    pair, wa, wb = w
                    witness = {"colors": list(pair), "a": wa.to_json_dict(), "b": wb.to_json_dict()}
            elif prop == "smart":
                holds, w = smartly_paired(ga, gb)
                if w:
                    side, simplex = w
                    witness = {"side": side, "simplex": sorted(simplex.vertex_ids)}
            else:
                holds, method, w = is_npc(ga, gb)
                witness = {"method": method}
                if w:
                    v, clique = w
                    witness["vertex"] = hz2._cell_json(v)
                    witness["clique"] = [str(x) for x in clique]
        payload = {"property": prop, "holds": holds, "witness": witness}
        if not holds:
            click.echo(canonical_json(payload))
            click.echo(f"clcc check: {prop} fails", err=True)
            sys.exit(1)
        _emit("check", payload, None, t0, {"input": digest(doc)}, report)

    run()


# -- link ------------------------------------------------------------------


@main.command()
@click.argument("input_src", default="-", required=False)
@click.option("--a", "a_spec", default="{}", help='A-side simplex, e.g. {"1": "a0"}')
@click.option("--b", "b_spec", default="{}", help="B-side simplex")
@click.option("--out", default=None)
@click.option("--report", is_flag=True)
def link(input_src, a_spec, b_spec, out, report):
    """Link of a cube of the pair complex (join of the two simplex links)."""
    t0 = time.perf_counter()

    @_guard("link")
    def run():
        doc = _read_doc(input_src)
        ga, gb = _load_pair(doc)
        X = build_clcc(ga, gb)
        a = CoordSimplex.of({int(c): v for c, v in json.loads(a_spec).items()})
        b = CoordSimplex.of({int(c): v for c, v in json.loads(b_spec).items()})
        L = link_of_cube(X, (a, b))
        pretty = L.relabeled(
            {v: (f"{v[0]}:{v[1]}" if isinstance(v, tuple) else v) for v in L.vertex_ids}
        )
        _emit("link", pretty.to_json_dict(), out, t0, {"pair": digest(doc)}, report)

    run()


# -- connect -----------------------------------------------------------------


@main.command()
@click.argument("input_src", default="-", required=False)
@click.option("--report", is_flag=True)
def connect(input_src, report):
    """Connectedness by BFS and, when smartly paired, by the criterion graph."""
    t0 = time.perf_counter()

    @_guard("connect")
    def run():
        doc = _read_doc(input_src)
        ga, gb = _load_pair(doc)
        bfs = is_connected(ga, gb, engine="bfs")
        smart, _ = smartly_paired(ga, gb)
        crit = is_connected(ga, gb, engine="criterion") if smart else None
        nodes = len(conn_graph(ga, gb).nodes) if smart else None
        payload = {"connected": bfs, "engines": {"bfs": bfs, "criterion": crit},
                   "criterion_nodes": nodes}
        _emit("connect", payload, None, t0, {"pair": digest(doc)}, report)

    run()


# -- invariants ---------------------------------------------------------------


@main.command()
@click.argument("what", type=click.Choice(["chi", "dim", "links"]))
@click.argument("input_src", default="-", required=False)
@click.option("--report", is_flag=True)
def invariants(what, input_src, report):
    """Euler characteristic, dimension/purity, or vertex-link tags of a
    built complex."""
    t0 = time.perf_counter()

    @_guard("invariants")
    def run():
        doc = _read_doc(input_src)
        X = CubeComplex.from_json_dict(doc)
        if what == "chi":
            payload = {"chi": euler_characteristic(X)}
        elif what == "dim":
            d, pure = dimension(X)
            payload = {"dim": d, "pure": pure}
        else:
            tags = classify_vertex_links(X)
            counts: dict[str, int] = {}
            for tag in tags.values():
                counts[tag] = counts.get(tag, 0) + 1
            payload = {
                "counts": counts,
                "links": [
                    {"vertex": hz2._cell_json(v), "tag": tag}
                    for v, tag in sorted(tags.items(), key=lambda kv: canonical_json(hz2._cell_json(kv[0])))
                ],
            }
        _emit("invariants", payload, None, t0, {"complex": digest(doc)}, report)

    run()


# -- homology -------------------------------------------------------------------


@main.command()
@click.argument("input_src", default="-", required=False)
@click.option("--reduced", is_flag=True, help="highlight the reduced vector")
@click.option("--report", is_flag=True)
def homology(input_src, reduced, report):
    """Betti numbers over Z/2 (both reduced and unreduced are reported)."""
    t0 = time.perf_counter()

    @_guard("homology")
    def run():
        doc = _read_doc(input_src)
        X = CubeComplex.from_json_dict(doc)
        red = hz2.betti(X, reduced=True)
        unred = hz2.betti(X, reduced=False)
        payload = {
            "betti": list((red if reduced else unred).ranks),
            "reduced": list(red.ranks),
            "unreduced": list(unred.ranks),
            "chi": X.euler_characteristic(),
        }
        _emit("homology", payload, None, t0, {"complex": digest(doc)}, report)

    run()


# -- cycle -----------------------------------------------------------------------


@main.command()
@click.argument("input_src", default="-", required=False)
@click.option("--omega-a", default=None, help="chain JSON over gamma_a (default: top cells)")
@click.option("--omega-b", default=None, help="chain JSON over gamma_b (default: top cells)")
@click.option("--out", default=None)
@click.option("--report", is_flag=True)
def cycle(input_src, omega_a, omega_b, out, report):
    """Chain on the pair complex generated by two smartly paired chains."""
    t0 = time.perf_counter()

    @_guard("cycle")
    def run():
        doc = _read_doc(input_src)
        ga, gb = _load_pair(doc)

        def load_chain(src, host):
            if src is None:
                return hz2.top_chain(host)
            cdoc = _read_doc(src)
            cells = []
            for vids in cdoc["cells"]:
                s = host.simplex_with_vertices(vids)
                if s is None:
                    raise ComplexError(f"no simplex with vertices {vids}")
                cells.append(s)
            return hz2.chain(host, cdoc["dim"], cells)

        wa = load_chain(omega_a, ga)
        wb = load_chain(omega_b, gb)
        X = build_clcc(ga, gb)
        out_chain = hz2.clcc_cycle(wa, wb, ambient=X)
        payload = out_chain.to_json_dict()
        payload["is_cycle"] = hz2.is_cycle(out_chain)
        payload["inputs_are_cycles"] = [hz2.is_cycle(wa), hz2.is_cycle(wb)]
        _emit("cycle", payload, out, t0, {"pair": digest(doc)}, report)

    run()


# -- hyperplanes --------------------------------------------------------------------


@main.command(name="hyperplanes")
@click.argument("input_src", default="-", required=False)
@click.option("--report", is_flag=True)
def hyperplanes_cmd(input_src, report):
    """Hyperplane classes, directions and the crossing graph."""
    t0 = time.perf_counter()

    @_guard("hyperplanes")
    def run():
        doc = _read_doc(input_src)
        X = CubeComplex.from_json_dict(doc)
        hps = hyperplanes(X)
        dirs, valid = directions(X)
        cg = crossing_graph(X)
        payload = {
            "classes": [
                {"id": h.hid, "edges": len(h.edges), "direction": dirs[h.hid]} for h in hps
            ],
            "directions_valid": valid,
            "crossing": sorted(sorted(e) for e in cg.edges),
            "self_crossing": sorted(cg.self_crossing),
        }
        _emit("hyperplanes", payload, None, t0, {"complex": digest(doc)}, report)

    run()


# -- sageev ---------------------------------------------------------------------------


@main.command(name="sageev")
@click.argument("input_src", default="-", required=False)
@click.option("--report", is_flag=True)
def sageev_cmd(input_src, report):
    """Cube complex of a pocset's ultrafilters."""
    t0 = time.perf_counter()

    @_guard("sageev")
    def run():
        doc = _read_doc(input_src)
        S = Pocset.from_json_dict(doc)
        Y = sageev(S)
        payload = {
            "cells": {str(d): len(Y.cells(d)) for d in range(Y.top_dim + 1)},
            "vertices": sorted(
                ["".join(e) for e in sorted(u)] for u in Y.cells(0)
            ),
        }
        _emit("sageev", payload, None, t0, {"pocset": digest(doc)}, report)

    run()


# -- duality -----------------------------------------------------------------------------


@main.command()
@click.argument("input_src", default="-", required=False)
@click.option("--report", is_flag=True)
def duality(input_src, report):
    """Halfspace pocset round-trip: rebuild the complex from its
    halfspaces and verify the isomorphism."""
    t0 = time.perf_counter()

    @_guard("duality")
    def run():
        doc = _read_doc(input_src)
        X = CubeComplex.from_json_dict(doc)
        ok, mapping = roller_duality_check(X)
        payload = {"roller_dual": ok, "vertices": len(mapping) if mapping else 0}
        _emit("duality", payload, None, t0, {"complex": digest(doc)}, report)

    run()


# -- certify -----------------------------------------------------------------------------


@main.command(name="certify")
@click.argument("input_src", default="-", required=False)
@click.option("--report", is_flag=True)
def certify_cmd(input_src, report):
    """Hyperbolicity certificate for a pair."""
    t0 = time.perf_counter()

    @_guard("certify")
    def run():
        doc = _read_doc(input_src)
        ga, gb = _load_pair(doc)
        cert = certify(ga, gb)
        _emit("certify", cert.to_json_dict(), None, t0, {"pair": digest(doc)}, report)

    run()


# -- export ------------------------------------------------------------------------------


@main.command()
@click.argument("input_src", default="-", required=False)
@click.option("--out", default=None)
@click.option("--report", is_flag=True)
def export(input_src, out, report):
    """Re-emit any recognized document in canonical form (round-trip
    stable)."""
    t0 = time.perf_counter()

    @_guard("export")
    def run():
        doc = _read_doc(input_src)
        if "gamma_a" in doc:
            ga, gb = _load_pair(doc)
            payload = _pair_doc(ga, gb)
        elif "cubes" in doc:
            payload = CubeComplex.from_json_dict(doc).to_json_dict()
        elif "pairs" in doc:
            payload = Pocset.from_json_dict(doc).to_json_dict()
        elif "n" in doc:
            payload = ColoredComplex.from_json_dict(doc).to_json_dict()
        elif "vertices" in doc:
            payload = SimplicialComplex.from_json_dict(doc).to_json_dict()
        else:
            raise ComplexError("unrecognized document type")
        _emit("export", payload, out, t0, {"input": digest(doc)}, report)

    run()


if __name__ == "__main__":
    main()
