"""Command-line front end.

One subcommand per operation or experiment; deterministic byte output for
identical (argv, seed); exit codes: 0 pass, 1 failed verdict, 2 usage error,
3 resource limit.
"""

from __future__ import annotations

import ast
import concurrent.futures
import re
import sys

import click

from . import experiments as ex
from . import groups as gr
from .errors import DomainError, NotGeneratingError, ResourceLimitExceeded
from .gensets import make_symmetric
from .girth import girth as girth_op
from .metric import word_length
from .reports import render_report

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_FACTOR_GRAMMAR = {
    "Z": lambda: gr.IntVector(1),
    "Dinf": lambda: gr.DihedralInfinite(),
    "H3": lambda: gr.Heisenberg(),
}


def parse_group(text):
    """Parse a group descriptor: Z, Z^d, Z/q, D2n, Dinf, H3, F k, and
    products joined with " x "."""
    parts = re.split(r"\s+x\s+", text.strip())
    factors = [_parse_factor(p) for p in parts]
    G = factors[0]
    for H in factors[1:]:
        G = gr.Product(G, H)
    return G


def _parse_factor(text):
    text = text.strip()
    if text in _FACTOR_GRAMMAR:
        return _FACTOR_GRAMMAR[text]()
    m = re.fullmatch(r"Z\^(\d+)", text)
    if m:
        return gr.IntVector(int(m.group(1)))
    m = re.fullmatch(r"Z/(\d+)", text)
    if m:
        return gr.FiniteCyclic(int(m.group(1)))
    m = re.fullmatch(r"D(\d+)", text)
    if m:
        order = int(m.group(1))
        if order % 2 or order < 2:
            raise ValueError(f"dihedral order must be even and >= 2: {text}")
        return gr.DihedralFinite(order // 2)
    m = re.fullmatch(r"F\s*(\d+)", text)
    if m:
        return gr.Free(int(m.group(1)))
    raise ValueError(f"cannot parse group descriptor {text!r}")


_FREE_WORD = re.compile(r"([a-z]+)(\d+)(?:\^(-?\d+))?")


def parse_free_word(G, text):
    """Words like x1*x2^-1 over a free group's basis letters."""
    word = G.identity()
    for piece in text.split("*"):
        m = _FREE_WORD.fullmatch(piece.strip())
        if not m:
            raise ValueError(f"cannot parse free-word factor {piece!r}")
        i = int(m.group(2))
        exp = int(m.group(3)) if m.group(3) is not None else 1
        if not 1 <= i <= G.k:
            raise ValueError(f"basis index {i} out of range for rank {G.k}")
        word = G.mul(word, G.power(G.generator(i), exp))
    return word


def parse_element(G, text):
    """Parse an element: flat integer tuple (or scalar) or a free word."""
    if isinstance(G, gr.Free):
        return parse_free_word(G, text)
    value = ast.literal_eval(text)
    if isinstance(value, int):
        value = (value,)
    flat = tuple(int(v) for v in value)
    if len(flat) != gr.flat_arity(G):
        raise ValueError(
            f"element needs {gr.flat_arity(G)} coordinates, got {len(flat)}")
    return gr.element_from_flat(G, flat)


def parse_genset(G, text):
    """Parse a genset: literal list of flat tuples / ints, or free words."""
    if isinstance(G, gr.Free):
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        elems = [parse_free_word(G, p) for p in body.split(",") if p.strip()]
    else:
        value = ast.literal_eval(text)
        if not isinstance(value, (list, tuple)):
            raise ValueError("genset must be a list")
        elems = []
        for item in value:
            if isinstance(item, int):
                item = (item,)
            flat = tuple(int(v) for v in item)
            if len(flat) != gr.flat_arity(G):
                raise ValueError(
                    f"letter needs {gr.flat_arity(G)} coordinates, got {len(flat)}")
            elems.append(gr.element_from_flat(G, flat))
    return make_symmetric(G, elems)


def _emit(data, output):
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _fail_usage(message):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_USAGE)


@click.group()
def main():
    """Word metrics on finitely generated groups."""


@main.command()
@click.option("--group", "group_text", required=True, help="Group descriptor, e.g. 'Z x Z/2'.")
@click.option("--genset", "genset_text", required=True, help="Generator list, e.g. '[(5,1),(3,0)]'.")
@click.option("--element", "element_text", required=True, help="Target element, e.g. '(0,1)'.")
@click.option("--cap", type=int, required=True, help="Search radius bound.")
@click.option("--mode", type=click.Choice(["auto", "bfs", "bidirectional"]), default="auto")
def length(group_text, genset_text, element_text, cap, mode):
    """Exact word length of an element, searched out to --cap."""
    try:
        G = parse_group(group_text)
        S = parse_genset(G, genset_text)
        g = parse_element(G, element_text)
    except (ValueError, SyntaxError, DomainError) as exc:
        _fail_usage(str(exc))
    try:
        cert = word_length(G, S, g, cap=cap, mode=mode)
    except ResourceLimitExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_RESOURCE)
    if cert.length is None:
        click.echo(f"> {cap}")
        sys.exit(EXIT_FAIL)
    click.echo(str(cert.length))


@main.command()
@click.option("--group", "group_text", required=True)
@click.option("--genset", "genset_text", required=True)
@click.option("--cap", type=int, required=True)
def girth(group_text, genset_text, cap):
    """Girth of the Cayley graph: shortest simple loop at the identity."""
    try:
        G = parse_group(group_text)
        S = parse_genset(G, genset_text)
    except (ValueError, SyntaxError, DomainError) as exc:
        _fail_usage(str(exc))
    try:
        result = girth_op(G, S, cap=cap)
    except ResourceLimitExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_RESOURCE)
    click.echo(str(result))


def _run_named(name):
    return name, ex.DEFAULT_RUNS[name]()


@main.command()
@click.argument("name")
@click.option("--q", type=int, default=None, help="Torsion modulus (zxzq).")
@click.option("--primes", default=None, help="Comma-separated primes (zxzq).")
@click.option("--pairs", default=None, help="Comma-separated pairs like 2:3,3:5.")
@click.option("--samples", type=int, default=None, help="Sample count (zxd8).")
@click.option("--seed", type=int, default=None, help="RNG seed for sampled runs.")
@click.option("--p", type=int, default=None, help="Odd prime (quotient-orbit).")
@click.option("--ks", default=None, help="Comma-separated units mod p (quotient-orbit).")
@click.option("--jobs", type=int, default=1, help="Worker pool size for 'all'.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "table"]), default="table")
@click.option("--output", default=None, help="Write the report here instead of stdout.")
@click.option("--explain", is_flag=True, help="Print the claim the experiment checks and exit.")
@click.option("--regenerate-golden", is_flag=True,
              help="Rewrite the stored golden table (uniform-length only).")
def experiment(name, q, primes, pairs, samples, seed, p, ks, jobs, fmt, output,
               explain, regenerate_golden):
    """Run a named experiment, or 'all' for the full deterministic suite."""
    if name != "all" and name not in ex.DEFAULT_RUNS:
        _fail_usage(
            f"unknown experiment {name!r}; choose from "
            f"{', '.join(sorted(ex.DEFAULT_RUNS))} or 'all'")
    if explain:
        if name == "all":
            for key in sorted(ex.CLAIMS):
                click.echo(f"{key}: {ex.CLAIMS[key]}")
        else:
            click.echo(ex.CLAIMS[name])
        return
    if regenerate_golden:
        if name != "uniform-length":
            _fail_usage("--regenerate-golden applies to the uniform-length experiment")
        path = ex.regenerate_d8_golden()
        click.echo(f"regenerated {path}", err=True)

    def parse_pairs(text):
        return [tuple(int(v) for v in chunk.split(":")) for chunk in text.split(",")]

    try:
        if name == "all":
            names = sorted(ex.DEFAULT_RUNS)
            if jobs > 1:
                with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
                    results = dict(pool.map(_run_named, names))
            else:
                results = dict(_run_named(n) for n in names)
            reports = [results[n] for n in names]  # merge order: by name
        elif name == "zxzq":
            reports = [ex.unbounded_witness_zxzq(
                q if q is not None else 2,
                [int(v) for v in primes.split(",")] if primes else [5, 7, 11],
            )]
        elif name == "heisenberg" and pairs:
            reports = [ex.unbounded_witness_heisenberg(1, parse_pairs(pairs))]
        elif name == "dinfty" and pairs:
            reports = [ex.unbounded_witness_dinfty(parse_pairs(pairs))]
        elif name == "zd" and pairs:
            reports = [ex.unbounded_witness_zd(2, (1, 0), parse_pairs(pairs))]
        elif name == "heisenberg-center" and seed is not None:
            reports = [ex.heisenberg_center_experiment(samples or 100, seed)]
        elif name == "zxd8" and (samples is not None or seed is not None):
            reports = [ex.bound_witness_zxd8(samples or 200, 42 if seed is None else seed)]
        elif name == "quotient-orbit" and (p is not None or ks is not None):
            pp = p if p is not None else 5
            kk = [int(v) for v in ks.split(",")] if ks else list(range(1, pp))
            reports = [ex.quotient_orbit_experiment(pp, kk)]
        else:
            reports = [ex.DEFAULT_RUNS[name]()]
    except (ValueError, NotGeneratingError, SyntaxError) as exc:
        _fail_usage(str(exc))
    except ResourceLimitExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_RESOURCE)
    payload = b"".join(render_report(r, fmt) for r in reports)
    _emit(payload, output)
    if not all(r.passed for r in reports):
        sys.exit(EXIT_FAIL)


if __name__ == "__main__":
    main()
