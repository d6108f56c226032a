"""Command-line driver.

Subcommands compute, cross-check, display and persist the generating series,
the Donaldson-Thomas tables, the enumeration oracles and the local Hom
reports.  Every command re-verifies its own output against an independent
route before emitting it.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 failed internal
cross-check.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import formulas, oracles, serialize
from .geometry import (
    FibrationSpec,
    HodgeDiamond,
    K_TRIVIAL_SURFACE_NAMES,
    registry_lookup,
    registry_names,
    surface_with_euler_number,
)
from .localhom import MonomialIdeal, hom_dimension, tangent_jump_report

__all__ = ["main", "build_parser", "Q_MAX_CAP", "D_MAX_CAP"]

# Caps keep the worst case (a K3 surface at full truncation order, or a deep
# elimination window) under about a minute on commodity hardware.
Q_MAX_CAP = 50
D_MAX_CAP = 12

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CROSSCHECK = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fiberdt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    series = sub.add_parser(
        "series",
        help="generating series of Hilbert schemes, nested Hilbert schemes or "
        "ideal-sheaf moduli",
    )
    series.add_argument(
        "kind",
        choices=("hilb", "incidence", "im1"),
        help="hilb: Hilbert schemes of points of the surface; incidence: nested "
        "pairs of point subschemes; im1: ideal-sheaf moduli of the fibered "
        "3-fold with one extra point",
    )
    series.add_argument(
        "--surface",
        required=True,
        help="registry surface name or path to a diamond JSON file",
    )
    series.add_argument("--genus", type=int, default=None, help="fiber genus (im1 only)")
    series.add_argument("--qmax", dest="q_max", type=int, required=True)
    series.add_argument(
        "--euler", action="store_true", help="emit the s = t = 1 specialization"
    )
    series.add_argument("--format", choices=("text", "json", "csv"), default="text")
    series.add_argument("--out", default=None, help="write to this file instead of stdout")
    series.add_argument("--cache", default=None, help="directory for the series cache")
    series.add_argument(
        "--threads",
        type=int,
        default=1,
        help="expand product factors on this many threads (output is bit-identical)",
    )
    series.set_defaults(func=_cmd_series)

    dt = sub.add_parser("dt", help="table of Donaldson-Thomas numbers")
    dt.add_argument("--surface", required=True, help="base surface, k3 or abelian")
    dt.add_argument("--mmax", dest="m_max", type=int, required=True)
    dt.add_argument("--format", choices=("text", "json"), default="text")
    dt.add_argument("--out", default=None)
    dt.set_defaults(func=_cmd_dt)

    oracle = sub.add_parser("oracle", help="brute-force enumeration counters")
    oracle.add_argument("kind", choices=("colored", "nested"))
    oracle.add_argument("--chi", type=int, required=True, help="number of colors")
    oracle.add_argument("--m", type=int, required=True, help="total partition size")
    oracle.add_argument(
        "--check",
        action="store_true",
        help="compare against the matching series coefficient",
    )
    oracle.set_defaults(func=_cmd_oracle)

    localhom = sub.add_parser(
        "localhom", help="truncated Hom dimensions of monomial-ideal local models"
    )
    localhom.add_argument("--dmax", dest="d_max", type=int, required=True)
    localhom.add_argument(
        "--ideal-file",
        default=None,
        help="JSON list of exponent triples; without it, the built-in "
        "tangent-jump verification runs for every truncation degree up to dmax",
    )
    localhom.add_argument("--format", choices=("text", "json"), default="text")
    localhom.add_argument("--out", default=None)
    localhom.set_defaults(func=_cmd_localhom)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        args.func(args)
        return EXIT_OK
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except RuntimeError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve_surface(token: str) -> tuple[str | None, HodgeDiamond]:
    """A registry name, or failing that a path to a diamond JSON file."""
    try:
        return token, registry_lookup(token)
    except ValueError as name_error:
        path = Path(token)
        if not path.exists():
            raise ValueError(f"{name_error}; and no file named {token!r} exists") from None
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ValueError(f"{token}: not valid JSON ({exc})") from None
        return None, HodgeDiamond.from_json(doc)


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def _cmd_series(args) -> None:
    kind = args.kind
    if args.q_max < 0:
        raise ValueError("qmax must be nonnegative")
    if args.q_max > Q_MAX_CAP:
        raise ValueError(f"qmax {args.q_max} exceeds the cap {Q_MAX_CAP}")
    if args.threads < 1:
        raise ValueError("threads must be at least 1")
    name, surface = _resolve_surface(args.surface)
    if surface.dim != 2:
        raise ValueError(f"series need a surface diamond, got dimension {surface.dim}")
    if kind == "im1":
        if args.genus is None:
            raise UsageError("im1 series require --genus")
        fibration = FibrationSpec(
            surface,
            args.genus,
            0,
            name in K_TRIVIAL_SURFACE_NAMES if name else False,
        )
    else:
        if args.genus is not None:
            raise UsageError("--genus applies only to im1 series")
        fibration = None

    series = _compute_series_cached(
        kind, surface, fibration, args.q_max, name, args.cache, args.threads
    )
    _crosscheck_series(kind, surface, fibration, series)

    genus = fibration.fiber_genus if fibration else None
    if args.euler:
        values = series.euler_sequence()
        if args.format == "json":
            doc = serialize.euler_to_document(
                values, kind=kind, surface_doc=surface.to_json(), surface_name=name, genus=genus
            )
            text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
        elif args.format == "csv":
            text = serialize.euler_to_csv(values, kind=kind)
        else:
            text = _euler_text(kind, name, values)
    else:
        if args.format == "json":
            doc = serialize.series_to_document(
                series, kind=kind, surface_doc=surface.to_json(), surface_name=name, genus=genus
            )
            text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
        elif args.format == "csv":
            text = serialize.series_to_csv(series, kind=kind)
        else:
            text = _series_text(kind, name, series)
    _emit(text, args.out)


def _series_label(kind: str, m: int) -> str:
    if kind in serialize.LABELED_KINDS and m >= 1:
        return f"q^{m} (m={m - 1})"
    return f"q^{m}"


def _series_text(kind: str, name: str | None, series) -> str:
    lines = [f"# kind={kind} surface={name or 'custom'} q_max={series.q_max}"]
    for m, poly in enumerate(series.coefficients):
        lines.append(f"{_series_label(kind, m)}: {poly}")
    return "\n".join(lines) + "\n"


def _euler_text(kind: str, name: str | None, values) -> str:
    lines = [f"# kind={kind} surface={name or 'custom'} q_max={len(values) - 1} euler"]
    for m, v in enumerate(values):
        lines.append(f"{_series_label(kind, m)}: {v}")
    return "\n".join(lines) + "\n"


def _compute_series(kind: str, surface, fibration, q_max: int, threads: int):
    if kind == "hilb":
        return formulas.hilbert_hodge_series(surface, q_max, threads=threads)
    if kind == "incidence":
        return formulas.nested_hodge_series(surface, q_max, threads=threads)
    return formulas.ideal_sheaf_hodge_series(fibration, q_max, threads=threads)


def _compute_series_cached(kind, surface, fibration, q_max, name, cache_dir, threads):
    genus = fibration.fiber_genus if fibration else None
    path = None
    if cache_dir:
        key_doc = {"kind": kind, "surface": surface.to_json(), "genus": genus, "q_max": q_max}
        key = hashlib.sha256(serialize.canonical_json(key_doc).encode()).hexdigest()[:16]
        path = Path(cache_dir) / f"{kind}-{key}.json"
        if path.exists():
            try:
                doc = json.loads(path.read_text())
                if serialize.checksum_ok(doc):
                    return serialize.series_from_document(doc)
            except (ValueError, KeyError, TypeError):
                pass  # unusable cache entry: fall through and recompute
    series = _compute_series(kind, surface, fibration, q_max, threads)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = serialize.series_to_document(
            series, kind=kind, surface_doc=surface.to_json(), surface_name=name, genus=genus
        )
        path.write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return series


def _crosscheck_series(kind, surface, fibration, series) -> None:
    for m, poly in enumerate(series.coefficients):
        if poly.swap_variables() != poly:
            raise RuntimeError(f"q^{m} coefficient is not symmetric under swapping s and t")
    chi_base = surface.euler_number()
    if kind == "hilb":
        expected = formulas.hilbert_euler_direct(chi_base, series.q_max)
    elif kind == "incidence":
        expected = formulas.nested_euler_direct(chi_base, series.q_max)
    else:
        expected = formulas.ideal_sheaf_euler_direct(
            fibration.euler_number(), chi_base, series.q_max
        )
    if series.euler_sequence() != expected:
        raise RuntimeError(
            "Euler specialization disagrees with the direct integer series"
        )


# ---------------------------------------------------------------------------
# dt
# ---------------------------------------------------------------------------


def _cmd_dt(args) -> None:
    name = args.surface
    if name not in K_TRIVIAL_SURFACE_NAMES:
        allowed = ", ".join(sorted(K_TRIVIAL_SURFACE_NAMES))
        raise ValueError(
            f"surface {name!r} does not satisfy the K = 0 hypothesis; "
            f"the Donaldson-Thomas table requires one of: {allowed}"
        )
    if args.m_max < 0:
        raise ValueError("mmax must be nonnegative")
    if args.m_max + 1 > Q_MAX_CAP:
        raise ValueError(f"mmax {args.m_max} needs q_max {args.m_max + 1} over the cap {Q_MAX_CAP}")
    fibration = FibrationSpec.from_surface_name(name, 1)
    sequence = formulas.ideal_sheaf_euler_sequence(fibration, args.m_max + 1)
    direct = formulas.ideal_sheaf_euler_direct(
        fibration.euler_number(), fibration.base.euler_number(), args.m_max + 1
    )
    if sequence != direct:
        raise RuntimeError("Euler specialization disagrees with the direct integer series")
    rows = []
    for m in range(args.m_max + 1):
        euler = sequence[m + 1]
        value = (-1) ** formulas.moduli_dimension(m) * euler
        if value != 0:
            raise RuntimeError(f"expected a vanishing Donaldson-Thomas number at m={m}, got {value}")
        rows.append(
            {"m": m, "dimension": formulas.moduli_dimension(m), "euler": euler, "dt": value}
        )
    if args.format == "json":
        doc = {"surface": name, "fiber_genus": 1, "m_max": args.m_max, "rows": rows}
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        lines = [f"# dt surface={name} fiber_genus=1", f"{'m':>4} {'dim':>5} {'euler':>7} {'dt':>5}"]
        for row in rows:
            lines.append(f"{row['m']:>4} {row['dimension']:>5} {row['euler']:>7} {row['dt']:>5}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


def _cmd_oracle(args) -> None:
    chi, m = args.chi, args.m
    if not 1 <= chi <= oracles.RECOMMENDED_COLOR_CAP:
        raise ValueError(
            f"cap exceeded: chi must lie in 1..{oracles.RECOMMENDED_COLOR_CAP}"
        )
    if not 0 <= m <= oracles.RECOMMENDED_SIZE_CAP:
        raise ValueError(f"cap exceeded: m must lie in 0..{oracles.RECOMMENDED_SIZE_CAP}")
    if args.kind == "colored":
        count = oracles.colored_partitions_count(chi, m)
    else:
        count = oracles.nested_colored_count(chi, m)
    print(count)
    if args.check:
        surface = surface_with_euler_number(chi)
        if args.kind == "colored":
            coefficient = formulas.hilbert_euler_series(surface, m)[m]
        else:
            coefficient = formulas.nested_hodge_series(surface, m + 1).euler_sequence()[m + 1]
        print(f"series coefficient: {coefficient}")
        ok = coefficient == count
        print("check: pass" if ok else "check: FAIL")
        if not ok:
            raise RuntimeError(
                f"enumeration gives {count} but the series coefficient is {coefficient}"
            )


# ---------------------------------------------------------------------------
# localhom
# ---------------------------------------------------------------------------


def _cmd_localhom(args) -> None:
    if args.d_max < 0:
        raise ValueError("dmax must be nonnegative")
    if args.d_max > D_MAX_CAP:
        raise ValueError(f"dmax {args.d_max} exceeds the cap {D_MAX_CAP}")
    if args.ideal_file:
        try:
            doc = json.loads(Path(args.ideal_file).read_text())
        except json.JSONDecodeError as exc:
            raise ValueError(f"{args.ideal_file}: not valid JSON ({exc})") from None
        ideal = MonomialIdeal.from_json(doc)
        solution = hom_dimension(ideal, args.d_max)
        report = {
            "ideal": ideal.to_json(),
            "d_max": args.d_max,
            "dimension": solution.dimension,
            "rank": solution.rank,
            "n_unknowns": solution.n_unknowns,
            "quotient_basis_size": len(solution.quotient.basis),
        }
        if args.format == "json":
            text = json.dumps(report, sort_keys=True, indent=2) + "\n"
        else:
            lines = [f"# localhom ideal={ideal} d_max={args.d_max}"]
            for key in ("dimension", "rank", "n_unknowns", "quotient_basis_size"):
                lines.append(f"{key}: {report[key]}")
            text = "\n".join(lines) + "\n"
        _emit(text, args.out)
        return
    if args.d_max < 1:
        raise UsageError("the built-in verification needs --dmax of at least 1")
    report = tangent_jump_report(range(1, args.d_max + 1))
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        lines = [
            "# localhom built-in tangent-jump verification",
            f"{'D':>3} {'line':>6} {'embedded':>9} {'difference':>11} {'ok':>4}",
        ]
        for row in report["rows"]:
            lines.append(
                f"{row['d_max']:>3} {row['line_dimension']:>6} "
                f"{row['embedded_dimension']:>9} {row['local_difference']:>11} "
                f"{'yes' if row['ok'] else 'NO':>4}"
            )
        lines.append(
            f"local difference {report['local_difference']} + series family offset "
            f"{report['series_family_offset']} = global jump {report['global_jump']}"
        )
        lines.append("passed" if report["passed"] else "FAILED")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if not report["passed"]:
        raise RuntimeError("tangent-jump pattern violated; see report")


if __name__ == "__main__":
    sys.exit(main())
