"""Command-line interface over the supertree library.

One subcommand per operation, line-oriented output: single values print as
``key=value``, tables print as CSV (or aligned key=value rows under
``--format plain``), and supertrees print in the .sht text format. Floats
carry 12 decimal digits. Exit codes: 0 success or verified, 1 verification
failure, 2 malformed input or usage error.
"""

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .config import DEFAULT_SEED, DEFAULT_TOLERANCES, Config
from .core import (
    DegreeSequence,
    Supertree,
    canonical_code,
    parse_sht,
    serialize_sht,
)
from .enumeration import (
    FkCertificate,
    enumerate_supertrees,
    fk1_sweep,
    verify_fk_theorem1,
    verify_fk_theorem2,
    verify_majorization_monotonicity,
)
from .errors import InvalidSpec, SupertreeError
from .slo import check_slo, construct_slo_supertree, find_slo_ordering, relabel
from .spectral import first_dirichlet_eigenpair
from .transforms import (
    ShiftSpec,
    SwitchSpec,
    apply_shift,
    apply_switch,
    majorizes,
    unit_transformation,
)

__all__ = ["main"]


def _fmt(x: float) -> str:
    return f"{x:.12f}"


def _tf(flag: bool) -> str:
    return "true" if flag else "false"


def _print_rows(cfg: Config, header: list[str], rows) -> None:
    if cfg.output == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(row))
    else:
        for row in rows:
            print(" ".join(f"{h}={v}" for h, v in zip(header, row)))


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip() != ""]


def _load(path: str) -> Supertree:
    return parse_sht(Path(path).read_text(encoding="utf-8"))


def _degree_sequence(k: int, text: str) -> DegreeSequence:
    return DegreeSequence.from_degrees(k, _int_list(text))


def _edge_at(G: Supertree, index: int) -> tuple[int, ...]:
    if not 0 <= index < G.m:
        raise InvalidSpec(f"edge index {index} outside 0..{G.m - 1}")
    return G.edges[index]


def _cmd_validate(args, cfg: Config) -> int:
    G = _load(args.file)
    print(f"ok k={G.k} n={G.n} m={G.m}")
    return 0


def _cmd_eigen(args, cfg: Config) -> int:
    G = _load(args.file)
    pair = first_dirichlet_eigenpair(G, cfg.tolerances)
    print(f"lambda={_fmt(pair.lam)}")
    print(f"gap={_fmt(pair.gap)}")
    print(f"degenerate={_tf(pair.degenerate)}")
    rows = [
        [str(v), _tf(G.degrees[v] >= 2), _fmt(float(pair.f[v]))]
        for v in range(G.n)
    ]
    _print_rows(cfg, ["vertex_id", "is_interior", "f_value"], rows)
    return 0


def _cmd_slo_check(args, cfg: Config) -> int:
    G = _load(args.file)
    violations = check_slo(G, _int_list(args.order))
    if not violations:
        print("ok")
        return 0
    for violation in violations:
        print(f"violation rule={violation.rule} witness={violation.witness}")
    return 1


def _cmd_slo_find(args, cfg: Config) -> int:
    G = _load(args.file)
    order = find_slo_ordering(G)
    if order is None:
        print("none")
        return 1
    print("order " + " ".join(str(v) for v in order))
    return 0


def _cmd_slo_construct(args, cfg: Config) -> int:
    pi = _degree_sequence(args.k, args.pi)
    G, order = construct_slo_supertree(pi)
    sys.stdout.write(serialize_sht(G))
    print("order " + " ".join(str(v) for v in order))
    return 0


def _cmd_relabel(args, cfg: Config) -> int:
    G = _load(args.file)
    pair = first_dirichlet_eigenpair(G, cfg.tolerances)
    labels = relabel(G, pair.f, cfg.tolerances)
    rows = [
        [str(v), str(s), str(i), str(p), _fmt(float(pair.f[v]))]
        for v, (s, i, p) in sorted(labels.items(), key=lambda item: item[1])
    ]
    _print_rows(cfg, ["vertex_id", "s", "i", "p", "f_value"], rows)
    return 0


def _cmd_switch(args, cfg: Config) -> int:
    G = _load(args.file)
    spec = SwitchSpec(
        e1=_edge_at(G, args.e1),
        e2=_edge_at(G, args.e2),
        u1=frozenset(_int_list(args.u1)),
        v1=frozenset(_int_list(args.v1)),
    )
    sys.stdout.write(serialize_sht(apply_switch(G, spec)))
    return 0


def _cmd_shift(args, cfg: Config) -> int:
    G = _load(args.file)
    spec = ShiftSpec(
        u=args.u,
        edges=tuple(_edge_at(G, i) for i in _int_list(args.edges)),
        v=args.v,
    )
    sys.stdout.write(serialize_sht(apply_shift(G, spec)))
    return 0


def _cmd_unit(args, cfg: Config) -> int:
    pi = _degree_sequence(args.k, args.pi)
    print(f"pi={unit_transformation(pi, args.p)}")
    return 0


def _cmd_enumerate(args, cfg: Config) -> int:
    pi = _degree_sequence(args.k, args.pi)
    members = enumerate_supertrees(pi)
    print(f"count={len(members)}")
    rows = [[canonical_code(G).decode("ascii")] for G in members]
    _print_rows(cfg, ["canonical_code"], rows)
    return 0


def _print_certificate(cfg: Config, cert: FkCertificate) -> None:
    print(
        f"family={cert.family.describe()} "
        f"unique={_tf(cert.unique)} slo_match={_tf(cert.slo_match)}"
    )
    winner_code = cert.all_lambdas[0][0]
    rows = [
        [
            code.decode("ascii"),
            _fmt(lam),
            _tf(code == winner_code),
            _tf(code == cert.slo_code),
        ]
        for code, lam in cert.all_lambdas
    ]
    _print_rows(cfg, ["canonical_code", "lambda", "is_winner", "is_slo"], rows)


def _sweep_exit(certs: list[FkCertificate]) -> int:
    passed = sum(1 for cert in certs if cert.passed)
    for cert in certs:
        print(
            f"family={cert.family.describe()} "
            f"unique={_tf(cert.unique)} slo_match={_tf(cert.slo_match)}"
        )
    print(f"families={len(certs)} passed={passed} failed={len(certs) - passed}")
    return 0 if passed == len(certs) else 1


def _cmd_verify_fk1(args, cfg: Config) -> int:
    if args.all:
        certs = fk1_sweep(args.k, args.n_max, cfg.tolerances, cfg.jobs)
        return _sweep_exit(certs)
    if args.pi is None:
        raise InvalidSpec("pass --pi, or --all with --n-max")
    cert = verify_fk_theorem1(_degree_sequence(args.k, args.pi), cfg.tolerances)
    _print_certificate(cfg, cert)
    return 0 if cert.passed else 1


def _cmd_verify_fk2(args, cfg: Config) -> int:
    cert = verify_fk_theorem2(args.n, args.n0, args.k, args.d, cfg.tolerances)
    _print_certificate(cfg, cert)
    return 0 if cert.passed else 1


def _cmd_majorize(args, cfg: Config) -> int:
    pi = _degree_sequence(args.k, args.pi)
    pi_prime = _degree_sequence(args.k, args.pi_prime)
    majorized = majorizes(pi, pi_prime)
    print(f"majorized={_tf(majorized)}")
    if not majorized:
        return 2
    decreased = verify_majorization_monotonicity(pi, pi_prime, cfg.tolerances)
    lam = first_dirichlet_eigenpair(
        construct_slo_supertree(pi)[0], cfg.tolerances
    ).lam
    lam_prime = first_dirichlet_eigenpair(
        construct_slo_supertree(pi_prime)[0], cfg.tolerances
    ).lam
    print(f"lambda_pi={_fmt(lam)}")
    print(f"lambda_pi_prime={_fmt(lam_prime)}")
    print(f"strict_decrease={_tf(decreased)}")
    return 0 if decreased else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supertrees",
        description="k-uniform supertrees: Dirichlet eigenvalues, "
        "SLO orderings, and Faber-Krahn verification",
    )
    parser.add_argument(
        "--format", choices=("csv", "plain"), default="csv",
        help="table output style (default csv)",
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="parallel workers for sweeps"
    )
    parser.add_argument(
        "--seed", type=int, default=DEFAULT_SEED,
        help="seed recorded for generated-data reproduction",
    )
    parser.add_argument(
        "--epsilon", type=float, default=None,
        help="override the relative comparison tolerance",
    )
    parser.add_argument(
        "--eig-threshold", type=float, default=None,
        help="override the eigensolver off-diagonal threshold",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an .sht file")
    p.add_argument("file")
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("eigen", help="first Dirichlet eigenpair")
    p.add_argument("file")
    p.set_defaults(run=_cmd_eigen)

    p = sub.add_parser("slo-check", help="check an ordering against S1-S5")
    p.add_argument("file")
    p.add_argument("--order", required=True, help="comma-separated vertex ids")
    p.set_defaults(run=_cmd_slo_check)

    p = sub.add_parser("slo-find", help="search for a spiral-like ordering")
    p.add_argument("file")
    p.set_defaults(run=_cmd_slo_find)

    p = sub.add_parser(
        "slo-construct", help="build the SLO-supertree of a degree sequence"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi", required=True, help="comma-separated degrees")
    p.set_defaults(run=_cmd_slo_construct)

    p = sub.add_parser(
        "relabel", help="label vertices along the first Dirichlet eigenfunction"
    )
    p.add_argument("file")
    p.set_defaults(run=_cmd_relabel)

    p = sub.add_parser("switch", help="exchange vertex groups between two edges")
    p.add_argument("file")
    p.add_argument("--e1", type=int, required=True, help="edge index")
    p.add_argument("--e2", type=int, required=True, help="edge index")
    p.add_argument("--u1", default="", help="comma-separated vertex ids")
    p.add_argument("--v1", default="", help="comma-separated vertex ids")
    p.set_defaults(run=_cmd_switch)

    p = sub.add_parser("shift", help="re-hang a bundle of edges from u onto v")
    p.add_argument("file")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--edges", default="", help="comma-separated edge indices")
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(run=_cmd_shift)

    p = sub.add_parser(
        "unit", help="unit transformation on a degree sequence"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--p", type=int, required=True, help="interior position")
    p.set_defaults(run=_cmd_unit)

    p = sub.add_parser(
        "enumerate", help="all isomorphism classes with a degree sequence"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi", required=True)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser(
        "verify-fk1",
        help="SLO-supertree minimizes lambda among its degree sequence class",
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi", help="comma-separated degrees")
    p.add_argument("--all", action="store_true", help="sweep all sequences")
    p.add_argument("--n-max", type=int, default=9, help="sweep size bound")
    p.set_defaults(run=_cmd_verify_fk1)

    p = sub.add_parser(
        "verify-fk2",
        help="flattest SLO-supertree minimizes lambda at fixed counts",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(run=_cmd_verify_fk2)

    p = sub.add_parser(
        "majorize", help="eigenvalue monotonicity along majorization"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--pi-prime", required=True)
    p.set_defaults(run=_cmd_majorize)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    tol = DEFAULT_TOLERANCES
    if args.epsilon is not None:
        tol = replace(tol, rel_eps=args.epsilon)
    if args.eig_threshold is not None:
        tol = replace(tol, eig_rel_threshold=args.eig_threshold)
    cfg = Config(
        tolerances=tol, jobs=args.jobs, output=args.format, seed=args.seed
    )
    try:
        return args.run(args, cfg)
    except SupertreeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
