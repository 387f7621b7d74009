"""Command-line front end.

Each subcommand prints one JSON document (or a CSV table) to stdout or to
``--output-path``. Exit status: 0 success, 1 bad input, 2 numeric or range
failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import bessel2, companion, cubic, gtrig, hypercomplex, matrix_exp2
from .errors import DomainError, NumericError

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def read_matrix(path: str) -> np.ndarray:
    """Square matrix from JSON (array of rows, or ``{"matrix": ...}``) or headerless CSV."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [row for row in csv.reader(io.StringIO(text)) if row and any(c.strip() for c in row)]
    if isinstance(data, dict):
        if "matrix" not in data:
            raise DomainError("JSON object must carry a 'matrix' key")
        data = data["matrix"]
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise DomainError("matrix must be a non-empty list of rows")
    n = len(data)
    if any(len(r) != n for r in data):
        raise DomainError(f"matrix must be square; got rows of lengths {[len(r) for r in data]}")
    try:
        m = np.array([[float(v) for v in row] for row in data])
    except (TypeError, ValueError) as exc:
        raise DomainError(f"non-numeric matrix entry: {exc}") from None
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix entries must be finite")
    return m


def _f(v):
    return None if v is None else float(v)


def cmd_tlf(args):
    if args.steps < 1:
        raise DomainError("--steps must be at least 1")
    u = gtrig.QuadraticUnit(args.a, args.b)
    thetas = np.linspace(args.theta_min, args.theta_max, args.steps)
    table = gtrig.tabulate_cs(u, thetas)
    rows = [{"theta": float(t), "C": float(c), "S": float(s)} for t, (c, s) in zip(thetas, table)]
    return {"command": "tlf", "a": u.a, "b": u.b, "rows": rows}


def cmd_expm(args):
    m = read_matrix(args.matrix_file)
    n = m.shape[0]
    theta = args.theta
    if n == 2:
        res = matrix_exp2.exp2(m, theta)
        u, c, s = res.u, res.cs.c, res.cs.s
        vec = [c, s]
        resid = matrix_exp2.det_identity_residual(m, theta)
        degenerate = False
    else:
        vec_obj = companion.tlf_vector(companion.char_poly(m), theta)
        u = companion.exp_n(m, theta)
        vec = list(vec_obj.values)
        c = s = None
        resid = abs(float(np.linalg.det(u)) - math.exp(theta * float(np.trace(m))))
        degenerate = vec_obj.near_degenerate
    return {
        "command": "expm",
        "n": n,
        "theta": theta,
        "matrix": [[float(v) for v in row] for row in u],
        "C": _f(c),
        "S": _f(s),
        "tlf_vector": [float(v) for v in vec],
        "det_residual": float(resid),
        "near_degenerate": bool(degenerate),
    }


def cmd_conic(args):
    m = read_matrix(args.matrix_file)
    if m.shape != (2, 2):
        raise DomainError("conic classification needs a 2x2 matrix")
    cls = gtrig.classify_conic(m, tol=args.tol)
    return {
        "command": "conic",
        "delta": cls.delta,
        "kind": cls.kind.value,
        "chi": cls.chi,
        "chi_defined": cls.chi_defined,
    }


def cmd_cubic(args):
    u = cubic.CubicUnit(args.a0, args.a1, args.a2)
    t = cubic.eval_a2(u, args.theta, args.phi)
    return {
        "command": "cubic",
        "a0": u.a0, "a1": u.a1, "a2": u.a2,
        "theta": args.theta, "phi": args.phi,
        "A0": t.a0v, "A1": t.a1v, "A2": t.a2v,
        "identity_residual": cubic.cubic_identity_residual(u, args.theta, args.phi),
        "near_degenerate": t.near_degenerate,
    }


def cmd_bessel(args):
    p = bessel2.BesselParams(args.alpha, args.beta)
    m, n, x = args.m, args.n, args.x
    return {
        "command": "bessel",
        "alpha": p.alpha, "beta": p.beta, "m": m, "n": n, "x": x,
        "value": bessel2.bessel2_eval(p, m, n, x),
        "x_recurrence_residual": bessel2.bessel2_x_recurrence_residual(p, m, n, x),
        "theta_recurrence_residual": bessel2.bessel2_theta_recurrence_residual(p, m, n, x),
    }


def cmd_hyper(args):
    unit = gtrig.QuadraticUnit(args.unit_a, args.unit_b)
    f = hypercomplex.PRESETS[args.fn]()
    z = hypercomplex.HypercomplexNumber(args.x, args.y, unit)
    u, v = hypercomplex.analytic_eval(f, z)
    return {
        "command": "hyper",
        "unit_a": unit.a, "unit_b": unit.b, "fn": args.fn, "x": args.x, "y": args.y,
        "u": u, "v": v,
        "cauchy_riemann_residual": hypercomplex.cauchy_riemann_residual(f, unit, args.x, args.y, args.cr_step),
        "pde_residual": hypercomplex.wave_pde_residual(f, unit, args.x, args.y, args.pde_step),
    }


def _finite_float(text):
    v = float(text)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="geneuler", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    common.add_argument("--output-path", default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    num = _finite_float

    p = sub.add_parser("tlf", parents=[common], help="tabulate C(theta), S(theta)")
    p.add_argument("--a", type=num, required=True)
    p.add_argument("--b", type=num, required=True)
    p.add_argument("--theta-min", type=num, required=True)
    p.add_argument("--theta-max", type=num, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_tlf)

    p = sub.add_parser("expm", parents=[common], help="exponentiate a square matrix")
    p.add_argument("--matrix-file", required=True, help="JSON or CSV file, '-' for stdin")
    p.add_argument("--theta", type=num, default=1.0)
    p.set_defaults(func=cmd_expm)

    p = sub.add_parser("conic", parents=[common], help="classify the conic of a 2x2 matrix")
    p.add_argument("--matrix-file", required=True)
    p.add_argument("--tol", type=num, default=1e-12)
    p.set_defaults(func=cmd_conic)

    p = sub.add_parser("cubic", parents=[common], help="third-order TLFs")
    p.add_argument("--a0", type=num, required=True)
    p.add_argument("--a1", type=num, required=True)
    p.add_argument("--a2", type=num, required=True)
    p.add_argument("--theta", type=num, required=True)
    p.add_argument("--phi", type=num, default=0.0)
    p.set_defaults(func=cmd_cubic)

    p = sub.add_parser("bessel", parents=[common], help="two-index Bessel function")
    p.add_argument("--alpha", type=num, required=True)
    p.add_argument("--beta", type=num, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=num, required=True)
    p.set_defaults(func=cmd_bessel)

    p = sub.add_parser("hyper", parents=[common], help="analytic function of x + h y")
    p.add_argument("--unit-a", type=num, required=True)
    p.add_argument("--unit-b", type=num, required=True)
    p.add_argument("--fn", choices=sorted(hypercomplex.PRESETS), required=True)
    p.add_argument("--x", type=num, required=True)
    p.add_argument("--y", type=num, required=True)
    p.add_argument("--cr-step", type=num, default=1e-4)
    p.add_argument("--pde-step", type=num, default=1e-3)
    p.set_defaults(func=cmd_hyper)
    return parser


def _cell(v):
    if isinstance(v, float):
        return f"{v:.17g}"
    if v is None:
        return ""
    return str(v)


def _flatten(result):
    """One header row plus data rows; nested lists become indexed columns."""
    if result["command"] == "tlf":
        return ["theta", "C", "S"], [[r["theta"], r["C"], r["S"]] for r in result["rows"]]
    header, row = [], []
    for key, val in result.items():
        if key == "matrix":
            for i, r in enumerate(val):
                for j, v in enumerate(r):
                    header.append(f"matrix_{i}_{j}")
                    row.append(v)
        elif isinstance(val, list):
            for i, v in enumerate(val):
                header.append(f"{key}_{i}")
                row.append(v)
        else:
            header.append(key)
            row.append(val)
    return header, [row]


def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2, allow_nan=False) + "\n"
    header, rows = _flatten(result)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        result = args.func(args)
        text = render(result, args.output_format)
        if args.output_path:
            with open(args.output_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except NumericError as exc:
        print(f"geneuler: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (DomainError, ValueError, OSError) as exc:
        print(f"geneuler: bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
