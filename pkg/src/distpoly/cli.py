"""Command-line interface.

    distpoly compute GRAPH_FILE [--format edgelist|graph6] [--output text|json]
                                [--force-oracle] [--budget N]
    distpoly family {path,cycle,complete,star,multipartite} PARAMS...
    distpoly verify [--max-n N] [--max-k K] [--suites a,b,...] [--budget N]

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 resource
budget exceeded, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .automorphism import automorphisms, vertex_orbits
from .closed_forms import (
    Family,
    complete_multipartite_poly,
    compute_dist_poly,
    multipartite_aut_order,
)
from .errors import CountingError, ParseError, ResourceError
from .graph import Graph, parse_edge_list, parse_graph6_lines, to_graph6
from .oracle import (
    DEFAULT_BUDGET,
    checked_phi,
    dist_poly_oracle,
    distinguishing_number_from_poly,
)
from .polynomial import IntPoly, RatPoly, zero_multiplicity
from .verify import SUITES, run_suites

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_RESOURCE, EXIT_INTERNAL = 0, 1, 2, 3, 4


@dataclass
class Report:
    graph: str
    n: int
    poly: IntPoly
    phi: RatPoly
    aut_order: int
    dist_number: int | None
    orbits: int
    zero_multiplicity: int
    provenance: tuple[str, ...]
    orbit_blocks: tuple[tuple[int, ...], ...] | None = None

    @property
    def multiplicity_ok(self) -> bool:
        return self.zero_multiplicity >= self.orbits

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "n": str(self.n),
            "poly": self.poly.to_json(),
            "poly_text": str(self.poly),
            "phi": {"num": self.phi.num.to_json(), "den": str(self.phi.den)},
            "aut_order": str(self.aut_order),
            "dist_number": None if self.dist_number is None else str(self.dist_number),
            "orbits": str(self.orbits),
            "zero_multiplicity": str(self.zero_multiplicity),
            "multiplicity_ok": self.multiplicity_ok,
            "provenance": list(self.provenance),
        }

    def to_text(self) -> str:
        lines = [
            f"graph: {self.graph}",
            f"D_k(G) = {self.poly}",
            f"Phi_k(G) = {self.phi}",
            f"|Aut(G)| = {self.aut_order}",
            f"D(G) = {self.dist_number if self.dist_number is not None else '-'}",
            f"orbits q = {self.orbits}" + self._blocks_text(),
            f"zero multiplicity = {self.zero_multiplicity} "
            f"({'>=' if self.multiplicity_ok else '<'} q)",
            "provenance: " + ", ".join(self.provenance),
        ]
        return "\n".join(lines)

    def _blocks_text(self) -> str:
        if not self.orbit_blocks:
            return ""
        # vertices shown 1-based
        return ": " + " ".join(
            "{" + ",".join(str(v + 1) for v in block) + "}" for block in self.orbit_blocks
        )


def _finish(graph: str, n: int, poly: IntPoly, aut_order: int, q: int, provenance) -> Report:
    if poly.degree != n or not poly.is_monic():
        raise CountingError(f"{poly} is not monic of degree {n}")
    phi = checked_phi(poly, aut_order, n)
    return Report(
        graph=graph,
        n=n,
        poly=poly,
        phi=phi,
        aut_order=aut_order,
        dist_number=distinguishing_number_from_poly(poly) if n >= 1 else None,
        orbits=q,
        zero_multiplicity=zero_multiplicity(poly),
        provenance=tuple(provenance),
    )


def graph_report(g: Graph, force_oracle: bool = False, budget: int = DEFAULT_BUDGET) -> Report:
    if force_oracle:
        poly, aut, prov = dist_poly_oracle(g, budget), automorphisms(g).order, ("oracle",)
    else:
        res = compute_dist_poly(g, budget)
        poly, aut, prov = res.poly, res.aut_order, res.provenance
    desc = f"n={g.n} m={g.m} graph6={to_graph6(g)}"
    blocks = vertex_orbits(g)
    report = _finish(desc, g.n, poly, aut, len(blocks), prov)
    report.orbit_blocks = tuple(blocks)
    return report


def family_report(name: str, params: list[str]) -> Report:
    if name == "multipartite":
        parts = []
        for tok in params:
            try:
                size, mult = (int(x) for x in tok.split(":"))
            except ValueError:
                raise ValueError(f"multipartite parameters are size:count pairs, got {tok!r}") from None
            parts.append((size, mult))
        if not parts:
            raise ValueError("multipartite needs at least one size:count pair")
        poly = complete_multipartite_poly(parts)
        n = sum(s * m for s, m in parts)
        label = "K_{" + ",".join(str(s) for s, m in parts for _ in range(m)) + "}"
        return _finish(
            label, n, poly, multipartite_aut_order(parts), len(parts),
            ["closed-form:multipartite"],
        )
    if len(params) != 1:
        raise ValueError(f"family {name} takes exactly one integer parameter")
    try:
        value = int(params[0])
    except ValueError:
        raise ValueError(f"bad parameter {params[0]!r}") from None
    minimum = {"path": 1, "cycle": 1, "complete": 0, "star": 1}[name]
    if value < minimum:
        raise ValueError(f"family {name} needs a parameter >= {minimum}")
    fam = Family(name, value)
    n = value + 1 if name == "star" else value
    return _finish(str(fam), n, fam.poly(), fam.aut_order(), fam.orbit_count(), [f"closed-form:{fam}"])


def _emit(reports: list[Report], output: str) -> None:
    for i, rep in enumerate(reports):
        if output == "json":
            print(json.dumps(rep.to_json()))
        else:
            if i:
                print()
            print(rep.to_text())


def cmd_compute(args) -> int:
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from None
    graphs = parse_graph6_lines(text) if args.format == "graph6" else [parse_edge_list(text)]
    if not graphs:
        raise ParseError("no graph in input")
    _emit([graph_report(g, args.force_oracle, args.budget) for g in graphs], args.output)
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        report = family_report(args.family, args.params)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    _emit([report], args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = [s.strip() for s in args.suites.split(",") if s.strip()] if args.suites else None
    try:
        checks = run_suites(names, args.max_n, args.max_k, args.budget)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    by_suite: dict[str, list] = {}
    for c in checks:
        by_suite.setdefault(c.suite, []).append(c)
    width = max(len(s) for s in by_suite) if by_suite else 5
    failed = [c for c in checks if not c.ok]
    for suite, items in by_suite.items():
        bad = sum(not c.ok for c in items)
        status = "PASS" if not bad else "FAIL"
        print(f"{suite:<{width}}  {status}  {len(items) - bad}/{len(items)}")
    for c in failed:
        print(f"FAILED {c.suite}: {c.case}: {c.detail}")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distpoly", description="Exact distinguishing polynomials of small graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="polynomial report for a graph file")
    p.add_argument("input", help="graph file, or - for stdin")
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.add_argument("--force-oracle", action="store_true", help="skip closed forms")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="closed-form report for a named family")
    p.add_argument("family", choices=["path", "cycle", "complete", "star", "multipartite"])
    p.add_argument("params", nargs="+", help="n (leaves for star), or size:count pairs")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--suites", help="comma-separated subset of: " + ",".join(SUITES))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CountingError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
