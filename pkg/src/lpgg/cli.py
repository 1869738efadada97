"""Command-line front end: construction, conversion, and verification.

Exit codes: 0 success (corrected findings included), 1 domain error or
failed verification, 2 usage error.  JSON output is schema-stable and
byte-identical across runs with the same seed.  The LPGG_BACKEND
environment variable (exact | approx) selects the default coefficient
backend for inputs that allow both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__, atlas, frames, simplex, spectral, star, verify
from .algebra import AlgebraError
from .reporting import VerificationReport
from .scalars import APPROX, EXACT, Radical
from .textform import ParseError, format_multivector, parse_multivector

USAGE_ERROR = 2
DOMAIN_ERROR = 1


def _backend_from_env() -> str:
    value = os.environ.get("LPGG_BACKEND", EXACT).strip().lower()
    if value not in (EXACT, APPROX):
        raise SystemExit(
            f"LPGG_BACKEND must be 'exact' or 'approx', not {value!r}"
        )
    return value


def _scalar_json(value):
    if isinstance(value, Radical):
        return value.to_json_terms()
    if isinstance(value, Fraction):
        return Radical(value).to_json_terms()
    return value


def _matrix_json(matrix):
    return [[_scalar_json(v) for v in row] for row in matrix]


def _matrix_csv_rows(name, matrix):
    yield [name]
    for row in matrix:
        yield [str(v) for v in row]


def _parse_coordinate(text: str, backend: str):
    text = text.strip()
    if "." not in text and "e" not in text.lower():
        value = Fraction(text)
        return value if backend == EXACT else float(value)
    return float(text)


# -- commands ---------------------------------------------------------------------------


def cmd_mult_table(args) -> int:
    size = args.n
    if not 2 <= size <= 8:
        print(f"--n must be in 2..8, got {size}", file=sys.stderr)
        return USAGE_ERROR
    sign = 1 if args.sign == "+" else -1
    frame = frames.build_null_frame(size, sign)
    table = frames.verify_multiplication_table(frame)

    a1, a2 = frame.vector(1), frame.vector(2)
    labels = ["a1", "a2", "a1*a2", "a2*a1"]
    elements = [a1, a2, a1 * a2, a2 * a1]
    grid = [
        [format_multivector(row_el * col_el) for col_el in elements]
        for row_el in elements
    ]
    payload = {
        "size": size,
        "sign": args.sign,
        "labels": labels,
        "grid": grid,
        "pairs_checked": table.checked,
        "violations": list(table.violations),
        "ok": table.ok,
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"pair product grid (n+1 = {size}, sign {args.sign}):")
        width = max(len(cell) for row in grid for cell in row)
        header = " " * 8 + "  ".join(label.ljust(width) for label in labels)
        print(header)
        for label, row in zip(labels, grid):
            print(f"{label:>6s}  " + "  ".join(cell.ljust(width) for cell in row))
        print(
            f"checked {table.checked} products over all pairs: "
            + ("all match" if table.ok else f"violations: {table.violations}")
        )
    return 0 if table.ok else DOMAIN_ERROR


def cmd_frame(args) -> int:
    size = args.n
    if not 2 <= size <= frames.FRAME_LIMIT:
        print(f"--n must be in 2..{frames.FRAME_LIMIT}, got {size}",
              file=sys.stderr)
        return USAGE_ERROR
    frame = frames.build_null_frame(size, 1 if args.sign == "+" else -1)
    recip = frames.reciprocal_frame(frame)
    if args.format == "json":
        payload = {
            "size": size,
            "sign": args.sign,
            "exact": frame.exact,
            "T": _matrix_json(frame.t_matrix),
            "T_inverse": _matrix_json(frame.t_inverse),
            "null_vectors": [format_multivector(a) for a in frame.vectors],
            "reciprocal_vectors": [format_multivector(r) for r in recip],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        import csv

        writer = csv.writer(sys.stdout)
        for section, matrix in (("T", frame.t_matrix),
                                ("T_inverse", frame.t_inverse)):
            for row in _matrix_csv_rows(section, matrix):
                writer.writerow(row)
        writer.writerow(["null_vectors"])
        for a in frame.vectors:
            writer.writerow([format_multivector(a)])
        writer.writerow(["reciprocal_vectors"])
        for r in recip:
            writer.writerow([format_multivector(r)])
    return 0


def cmd_verify(args) -> int:
    name = args.suite
    if name != "all" and name not in verify.SUITES:
        print(
            f"unknown suite {name!r}; pick from all, {', '.join(verify.SUITES)}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    report: VerificationReport = verify.run_suite(
        name, n_max=args.n_max, seed=args.seed, backend=_backend_from_env()
    )
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    return report.exit_code()


def cmd_spectral(args) -> int:
    try:
        raw = json.loads(args.g)
    except json.JSONDecodeError as exc:
        print(f"--g must be JSON: {exc}", file=sys.stderr)
        return USAGE_ERROR
    coefficients = {}
    try:
        for key, value in raw.items():
            if not (len(key) == 3 and key[0] == "g" and key[1:].isdigit()):
                raise ValueError(f"bad coefficient key {key!r}")
            i, j = int(key[1]), int(key[2])
            if isinstance(value, str):
                value = Fraction(value)
            elif isinstance(value, int):
                value = Fraction(value)
            coefficients[(i, j)] = value
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    frame = frames.build_null_frame(3, 1)
    try:
        op = spectral.BivectorOperator(frame, coefficients)
        decomposition = spectral.spectral_decompose(op)
    except (spectral.DegenerateSpectrumError, ValueError) as exc:
        print(f"spectral error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    payload = decomposition.to_json()
    payload["element"] = format_multivector(op.element())
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def cmd_simplex(args) -> int:
    size = args.n + 1
    if not 2 <= size <= frames.FRAME_LIMIT:
        print(f"--n must be in 1..{frames.FRAME_LIMIT - 1}", file=sys.stderr)
        return USAGE_ERROR
    if not args.point and not args.vertices and not args.vertices_file:
        print("need --point, --vertices, or --vertices-file", file=sys.stderr)
        return USAGE_ERROR
    backend = _backend_from_env()
    frame = frames.build_null_frame(size, 1)
    payload = {"n": args.n}

    if args.point:
        try:
            coords = tuple(
                _parse_coordinate(c, backend) for c in args.point.split(",")
            )
            point = simplex.SimplexPoint(frame, coords)
        except (ValueError, ZeroDivisionError) as exc:
            print(f"bad --point: {exc}", file=sys.stderr)
            return USAGE_ERROR
        norm_sq = point.norm_squared()
        payload.update({
            "coordinates": [str(c) for c in coords],
            "barycentric": point.is_barycentric(),
            "norm_squared": str(norm_sq),
            "norm_squared_float": float(norm_sq),
            "on_cone": point.is_on_cone(),
        })
        if not point.is_on_cone():
            try:
                payload["unit"] = format_multivector(point.unit())
            except simplex.LightConeError as exc:
                payload["unit_error"] = str(exc)

    if args.vertices or args.vertices_file:
        try:
            if args.vertices_file:
                with open(args.vertices_file) as handle:
                    text = handle.read()
            else:
                text = args.vertices.replace(";", "\n")
            matrix = simplex.simplicial_matrix_from_csv(
                frame, text, barycentric=not args.free_vertices
            )
        except (OSError, ValueError) as exc:
            print(f"bad vertex rows: {exc}", file=sys.stderr)
            return USAGE_ERROR
        content, degenerate = simplex.content_vertices(matrix)
        payload["vertices"] = {
            "rows": [[str(v) for v in row] for row in matrix.rows],
            "content": format_multivector(content),
            "degenerate": degenerate,
            "closed": simplex.is_closed(matrix),
            "order": simplex.order(matrix),
        }

    payload["content"] = format_multivector(simplex.content_null(frame))
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def cmd_express(args) -> int:
    size = args.n
    if not 2 <= size <= frames.CANONICAL_BASIS_LIMIT:
        print(f"--n must be in 2..{frames.CANONICAL_BASIS_LIMIT}",
              file=sys.stderr)
        return USAGE_ERROR
    frame = frames.build_null_frame(size, 1)
    try:
        mv = parse_multivector(args.mv, frame.algebra)
    except (ParseError, AlgebraError) as exc:
        print(f"bad --mv: {exc}", file=sys.stderr)
        return USAGE_ERROR
    subsets, _, _ = frames.null_canonical_basis(frame)
    coefficients = frames.express_in_null_basis(frame, mv)

    def product_label(subset):
        if not subset:
            return "1"
        return "*".join(f"a{t + 1}" for t in range(size) if subset >> t & 1)

    payload = {
        "input": format_multivector(mv),
        "null_products": {
            product_label(s): str(c)
            for s, c in zip(subsets, coefficients) if c
        },
    }
    if args.a_matrix:
        payload["a_matrix"] = star.a_matrix(frame, mv).to_json()
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def cmd_classify(args) -> int:
    if args.max > atlas.ATLAS_LIMIT:
        print(f"--max must be <= {atlas.ATLAS_LIMIT}", file=sys.stderr)
        return USAGE_ERROR
    data = atlas.atlas(args.max)
    if args.format == "json":
        payload = {
            "levels": {str(k): v for k, v in data["levels"].items()},
            "sign_sequence": data["sign_sequence"],
            "product_sequence": data["product_sequence"],
            "rows": [
                {
                    "p": row.p,
                    "q": row.q,
                    "blade": row.blade,
                    "square_sign": row.square_sign,
                    "generator_sign_product": row.generator_sign_product,
                }
                for row in data["rows"]
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        import csv

        writer = csv.writer(sys.stdout)
        writer.writerow(["p", "q", "sign", "product_of_signs"])
        for row in data["rows"]:
            writer.writerow(
                [row.p, row.q,
                 "+" if row.square_sign > 0 else "-",
                 "+" if row.generator_sign_product > 0 else "-"]
            )
    else:
        for level in sorted(data["levels"]):
            print(f"level {level}: {data['levels'][level]}")
        print("sign sequence:", data["sign_sequence"])
        print("product sequence:", data["product_sequence"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpgg",
        description=(
            "Correlated null-frame geometric algebra: construction, "
            "conversion, spectral, simplex, and verification commands."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult-table", help="pair product grid and table check")
    p.add_argument("--n", type=int, required=True,
                   help="frame size (count of null vectors)")
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_mult_table)

    p = sub.add_parser("frame", help="emit T, T^-1, null and reciprocal vectors")
    p.add_argument("--n", type=int, required=True,
                   help="frame size (count of null vectors)")
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_frame)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all",
                   help="all, " + ", ".join(verify.SUITES))
    p.add_argument("--n-max", type=int, default=verify.DEFAULT_N_MAX)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectral", help="spectral decomposition of g_ij")
    p.add_argument("--g", required=True,
                   help='JSON like {"g12": 1, "g21": "1/2"}')
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("simplex", help="barycentric point and vertex-set "
                                       "diagnostics")
    p.add_argument("--n", type=int, required=True, help="simplex dimension n")
    p.add_argument("--point",
                   help="comma-separated coordinates (n+1 of them)")
    p.add_argument("--vertices",
                   help="inline vertex rows, ';'-separated CSV lines")
    p.add_argument("--vertices-file",
                   help="CSV file with one vertex row per line")
    p.add_argument("--free-vertices", action="store_true",
                   help="skip the barycentric row checks")
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("express", help="expand a multivector over the "
                                       "canonical null products")
    p.add_argument("--n", type=int, required=True,
                   help="frame size (count of null vectors)")
    p.add_argument("--mv", required=True,
                   help="multivector text, e.g. '1/2*e1 + 1/2*f1'")
    p.add_argument("--a-matrix", action="store_true",
                   help="include the A-matrix grid in the output")
    p.set_defaults(func=cmd_express)

    p = sub.add_parser("classify", help="pseudoscalar sign atlas")
    p.add_argument("--max", type=int, default=6, help="largest level p+q")
    p.add_argument("--format", choices=["text", "json", "csv"],
                   default="text")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AlgebraError as exc:
        print(str(exc), file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
