"""Command-line interface.

Subcommands:

  verify N [--oracle]          run the counting checks, print a table
  generators N                 list every MCS, one per line
  spread N [--method ...]      print one or more spreads as blocks
  graph N [--format dot|json]  export the commutation graph
  commute P Q [--oracle]       test two Pauli words

Exit codes: 0 = success / commute, 1 = a check failed / anticommute,
2 = usage error.  JSON output always uses the envelope
{"n": ..., "kind": ..., "data": [...]} with sorted keys and two-space
indentation, so parse-and-reserialize is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import CapacityError, DomainError, QPolarError
from .geometry import (
    desarguesian_spread,
    enumerate_generators,
    enumerate_spreads,
    params,
)
from .gf2 import all_points, perp_census, span_points
from .pauli import (
    MAX_ORACLE_QUBITS,
    commutation_sweep,
    commutes,
    commutes_matrix,
    mcs_of_generator,
    vector_to_pauli,
)

MAX_VERIFY_QUBITS = 4
MAX_VERIFY_ORACLE_QUBITS = 3
MAX_GRAPH_QUBITS = 3


@dataclass(frozen=True)
class Check:
    """One named count with its closed-formula expectation."""

    name: str
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.ok,
        }


@dataclass(frozen=True)
class VerificationReport:
    n_qubits: int
    checks: tuple[Check, ...]

    @property
    def overall(self) -> bool:
        return all(c.ok for c in self.checks)


def run_verification(n_qubits: int, oracle: bool = False) -> VerificationReport:
    """Recount everything the formulas predict, by actual enumeration.

    The check names are the report's stable identifiers; downstream
    scripts key on them.
    """
    p = params(n_qubits)
    checks: list[Check] = []

    point_total = sum(1 for _ in all_points(n_qubits))
    checks.append(Check("eq1_point_count", p.point_count, point_total))

    gens = enumerate_generators(n_qubits)
    checks.append(Check("eq2_generator_count", p.generator_count, len(gens)))

    sizes = {len(span_points(g)) for g in gens}
    size_actual = sizes.pop() if len(sizes) == 1 else -1
    checks.append(Check("eq4_generator_size", p.generator_size, size_actual))

    try:
        blocks = len(desarguesian_spread(n_qubits).blocks)
    except DomainError:
        blocks = -1
    checks.append(Check("eq3_spread_partition", p.spread_size, blocks))

    censuses = {perp_census(pt)[1] for pt in all_points(n_qubits)}
    census_actual = censuses.pop() if len(censuses) == 1 else -1
    checks.append(Check("eq5_non_perp_census", p.non_perp_count, census_actual))

    if oracle:
        pairs, mismatches = commutation_sweep(n_qubits)
        checks.append(Check("oracle_pairs_checked", p.point_count**2, pairs))
        checks.append(Check("oracle_mismatches", 0, mismatches))

    return VerificationReport(n_qubits, tuple(checks))


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _emit_json(n_qubits: int, kind: str, data) -> None:
    print(canonical_json({"n": n_qubits, "kind": kind, "data": data}))


def _block_words(subspace) -> list[str]:
    return sorted(mcs_of_generator(subspace))


def cmd_verify(args) -> int:
    n = args.n_qubits
    if not 1 <= n <= MAX_VERIFY_QUBITS:
        raise DomainError(f"verify supports 1 <= N <= {MAX_VERIFY_QUBITS}, got {n}")
    if args.oracle and n > MAX_VERIFY_ORACLE_QUBITS:
        raise DomainError(
            f"verify --oracle supports N <= {MAX_VERIFY_ORACLE_QUBITS}, got {n}"
        )
    report = run_verification(n, oracle=args.oracle)
    if args.format == "json":
        _emit_json(n, "report", [c.to_dict() for c in report.checks])
    else:
        print(f"verification report  N={n}")
        for c in report.checks:
            status = "pass" if c.ok else "FAIL"
            print(f"  {c.name:<22} expected {c.expected:>8}  actual {c.actual:>8}  {status}")
        print(f"overall: {'pass' if report.overall else 'FAIL'}")
    return 0 if report.overall else 1


def cmd_generators(args) -> int:
    blocks = [_block_words(g) for g in enumerate_generators(args.n_qubits)]
    if args.format == "json":
        _emit_json(args.n_qubits, "generators", blocks)
    else:
        for block in blocks:
            print(",".join(block))
    return 0


def cmd_spread(args) -> int:
    n = args.n_qubits
    if args.all and args.limit is not None:
        raise DomainError("--all and --limit are mutually exclusive")
    if args.method == "desarguesian":
        if args.all or args.limit is not None:
            raise DomainError("--all/--limit apply only to --method search")
        spreads = [desarguesian_spread(n)]
    else:
        if args.all:
            if n > 2:
                raise CapacityError("--all (full enumeration) is capped at N<=2")
            spreads = enumerate_spreads(n, limit=None)
        else:
            limit = 1 if args.limit is None else args.limit
            spreads = enumerate_spreads(n, limit=limit)
    for s in spreads:
        s.validate()
    rendered = [[_block_words(b) for b in s.blocks] for s in spreads]
    if args.format == "json":
        _emit_json(n, "spreads", rendered)
    else:
        for i, spread in enumerate(rendered):
            if i:
                print()
            for block in spread:
                print(",".join(block))
    return 0


def cmd_graph(args) -> int:
    n = args.n_qubits
    if not 1 <= n <= MAX_GRAPH_QUBITS:
        raise DomainError(f"graph supports 1 <= N <= {MAX_GRAPH_QUBITS}, got {n}")
    words = sorted(vector_to_pauli(p) for p in all_points(n))
    adjacency = {
        w: [u for u in words if u != w and commutes(w, u)] for w in words
    }
    if args.format == "json":
        _emit_json(n, "graph", [[w, adjacency[w]] for w in words])
    else:
        print(f"graph commutation_n{n} {{")
        for w in words:
            print(f'  "{w}";')
        for w in words:
            for u in adjacency[w]:
                if w < u:
                    print(f'  "{w}" -- "{u}";')
        print("}")
    return 0


def cmd_commute(args) -> int:
    verdict = commutes(args.word1, args.word2)
    print("commute" if verdict else "anticommute")
    agree = True
    if args.oracle:
        if len(args.word1) > MAX_ORACLE_QUBITS:
            raise CapacityError(f"--oracle supports N <= {MAX_ORACLE_QUBITS}")
        matrix_verdict = commutes_matrix(args.word1, args.word2)
        print(f"matrix: {'commute' if matrix_verdict else 'anticommute'}")
        agree = verdict == matrix_verdict
        print(f"agreement: {'yes' if agree else 'no'}")
    return 0 if verdict and agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpolar",
        description="Pauli commutation structure as a binary symplectic geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="recount points, generators, spreads, censuses")
    p.add_argument("n_qubits", type=int)
    p.add_argument("--oracle", action="store_true", help="also sweep the matrix oracle")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generators", help="list every maximally commuting set")
    p.add_argument("n_qubits", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("spread", help="print spreads as blocks of operators")
    p.add_argument("n_qubits", type=int)
    p.add_argument("--method", choices=("desarguesian", "search"), default="desarguesian")
    p.add_argument("--all", action="store_true", help="search: enumerate every spread (N <= 2)")
    p.add_argument("--limit", type=int, help="search: stop after this many spreads")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_spread)

    p = sub.add_parser("graph", help="export the commutation graph")
    p.add_argument("n_qubits", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("commute", help="test whether two Pauli words commute")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--oracle", action="store_true", help="cross-check with exact matrices")
    p.set_defaults(func=cmd_commute)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    try:
        return args.func(args)
    except QPolarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
