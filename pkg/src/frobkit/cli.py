"""Command-line front end.

Subcommands: verify, frame, sweep, pvi, tau, top.  Output is JSON on
stdout (or --out FILE); sweeps emit CSV.  Complex numbers serialize as
[re, im].  Exit codes: 0 all checks pass, 1 check failure, 2 usage
error, 3 numerical degeneracy.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import canonical, eulertop, models, painleve
from .errors import (BranchError, CoordinateChartError,
                     DegenerateConfigurationError, RootFindingError)
from .kernels import backend_name
from .report import VerificationReport

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3


def _parse_complex(token: str) -> complex:
    if ":" in token:
        re_s, im_s = token.split(":", 1)
        return complex(float(re_s), float(im_s))
    return complex(float(token), 0.0)


def _parse_point(text: str) -> list:
    try:
        return [_parse_complex(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad point {text!r}: {exc}") from exc


def _parse_range(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"range must be a:b:count, got {text!r}")
    a, b, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 2:
        raise argparse.ArgumentTypeError("range needs at least 2 samples")
    return a, b, count


def _pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _report_dict(rep: VerificationReport, model: str, point) -> dict:
    detail = dict(rep.detail)
    convention = detail.pop("convention", None)
    return {
        "check_name": rep.name,
        "model": model,
        "point": [_pair(v) for v in point],
        "residual": rep.residual,
        "tolerance": rep.tolerance,
        "passed": bool(rep.passed),
        "convention": convention,
        "metadata": {k: str(v) for k, v in sorted(detail.items())},
    }


def _emit(payload: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


def _finish(dicts: list, args) -> int:
    if getattr(args, "format", "json") == "csv":
        lines = ["check_name,model,residual,tolerance,status,convention"]
        for d in dicts:
            conv = d["convention"] or ""
            lines.append(f"{d['check_name']},{d['model']},{d['residual']:.6e},"
                         f"{d['tolerance']:.1e},"
                         f"{'pass' if d['passed'] else 'FAIL'},\"{conv}\"")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = {
            "backend": backend_name(),
            "checks": dicts,
            "all_passed": all(d["passed"] for d in dicts),
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return EXIT_OK if all(d["passed"] for d in dicts) else EXIT_CHECK_FAILED


def _with_tolerance(reports: list, tol: float | None) -> list:
    if tol is None:
        return reports
    return [VerificationReport(name=r.name, residual=r.residual,
                               tolerance=tol, detail=r.detail)
            for r in reports]


def _resolve_model(parser: argparse.ArgumentParser, text: str):
    """-> (kind, payload): ("named", model_id) or ("custom", (n, m))."""
    if text in models.MODEL_IDS:
        return "named", text
    if text.startswith("custom:"):
        try:
            n_s, m_s = text[len("custom:"):].split(",")
            n, m = int(n_s), int(m_s)
        except ValueError:
            parser.error(f"bad custom model spec {text!r}; expected custom:n,m")
        if n < 0 or m < 1:
            parser.error("custom model needs n >= 0 and m >= 1")
        if n > 2:
            parser.error("polynomial tails beyond n = 2 are not supported")
        return "custom", (n, m)
    parser.error(f"unknown model {text!r}; choose nm11, nm02 or custom:n,m")


def cmd_verify(parser, args) -> int:
    kind, payload = _resolve_model(parser, args.model)
    perm_search = args.perm_search == "on"
    dicts = []
    if kind == "named":
        model = models.get_model(payload)
        point = tuple(args.point) if args.point else model.default_coords
        reports = _with_tolerance(
            models.verification_suite(payload, point, perm_search=perm_search),
            args.tol)
        dicts += [_report_dict(r, payload, point) for r in reports]
        if args.random:
            rng = np.random.default_rng(args.seed)
            for extra in model.sample_coords(rng, args.random):
                reports = _with_tolerance(
                    models.verification_suite(payload, extra,
                                              perm_search=perm_search,
                                              curves=False), args.tol)
                dicts += [_report_dict(r, payload, extra) for r in reports]
    else:
        n, m = payload
        if not args.point:
            parser.error("custom models need an explicit --point")
        point = tuple(args.point)
        reports = _with_tolerance(
            models.generic_suite(n, m, point, perm_search=perm_search), args.tol)
        dicts += [_report_dict(r, args.model, point) for r in reports]
    return _finish(dicts, args)


def cmd_frame(parser, args) -> int:
    kind, payload = _resolve_model(parser, args.model)
    if kind == "named":
        model = models.get_model(payload)
        point = tuple(args.point) if args.point else model.default_coords
        W, p = model.potential(point)
    else:
        n, m = payload
        if not args.point:
            parser.error("custom models need an explicit --point")
        point = tuple(args.point)
        from .frobenius import FlatPoint, build_potential
        c = np.asarray(point, dtype=complex)
        p = FlatPoint(x=c[n:], xt=-c[:n])
        W = build_potential(n, m, p)
    frame = canonical.canonical_frame(W, p)
    payload_out = {
        "model": args.model,
        "point": [_pair(v) for v in point],
        "critical_points": [_pair(v) for v in frame.alphas],
        "canonical_coordinates": [_pair(v) for v in frame.u],
        "jacobian": [[_pair(v) for v in row] for row in frame.jac],
        "lame_sq": [_pair(v) for v in frame.lame_sq],
        "coordinate": frame.coordinate,
        "degrees": [float(d) for d in p.degrees],
        "backend": backend_name(),
    }
    _emit(json.dumps(payload_out, indent=2, sort_keys=True), args.out)
    return EXIT_OK


_SWEEP_CHECKS = ("flat-metric-closed-form", "unit-row-matches-metric",
                 "wdvv-associativity", "rotation-symmetry", "casimir-sum")


def cmd_sweep(parser, args) -> int:
    kind, payload = _resolve_model(parser, args.model)
    if kind != "named":
        parser.error("sweep supports the named models only")
    model = models.get_model(payload)
    base = list(args.point) if args.point else list(model.default_coords)
    if not 1 <= args.param <= len(base):
        parser.error(f"--param must be 1..{len(base)}")
    a, b, count = args.range
    lines = ["param," + ",".join(_SWEEP_CHECKS)]
    failed = False
    for value in np.linspace(a, b, count):
        coords = list(base)
        coords[args.param - 1] = float(value)
        reports = models.verification_suite(payload, coords, curves=False)
        by_name = {r.name: r for r in reports}
        row = [f"{value:.10g}"]
        for name in _SWEEP_CHECKS:
            rep = by_name[name]
            row.append(f"{rep.residual:.6e}")
            failed = failed or not rep.passed
        lines.append(",".join(row))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_pvi(parser, args) -> int:
    sol = painleve.hitchin_solution(args.solution)
    if args.x_range:
        a, b, count = args.x_range
    else:
        a, b = sol.default_range
        count = 50
    rep = painleve.parametric_pvi_residual(sol, a, b, samples=count)
    report = VerificationReport(
        name=f"pvi-{args.solution}-residual", residual=rep.max_residual,
        tolerance=args.tol if args.tol is not None else 1e-8,
        detail={"worst_t": rep.worst_t, "samples": rep.samples})
    return _finish([_report_dict(report, args.solution, [a, b])], args)


def cmd_tau(parser, args) -> int:
    point = (0.0, args.x2, args.x3)
    reports = models.verification_suite("nm11", point, curves=False)
    keep = {"tau-value-reference", "tau-x3-derivative-vs-q-form",
            "tau-euler-action", "tau-omega-form-constant-offset",
            "tau-identity-sum", "tau-euler-sum", "tau-gradient-closed-form"}
    reports = _with_tolerance([r for r in reports if r.name in keep], args.tol)
    return _finish([_report_dict(r, "nm11", point) for r in reports], args)


def cmd_top(parser, args) -> int:
    if len(args.w0) != 3:
        parser.error("--w0 needs three components")
    result = eulertop.integrate_rk4(args.s0, args.w0, args.s1, steps=args.steps)
    report = VerificationReport(
        name="casimir-drift", residual=result.casimir_drift,
        tolerance=args.tol if args.tol is not None else 1e-10,
        detail={"s0": args.s0, "s1": args.s1, "steps": args.steps,
                "drift_per_step4": f"{result.drift_constant:.6e}",
                "w_end": [complex(v) for v in result.w1]})
    return _finish([_report_dict(report, "top", args.w0)], args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobkit",
        description="Certify the flat-structure identities of rational potentials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, model=True):
        if model:
            sp.add_argument("--model", default="nm11",
                            help="nm11, nm02 or custom:n,m")
            sp.add_argument("--point", type=_parse_point, default=None,
                            help="comma-separated coordinates, re or re:im")
        sp.add_argument("--tol", type=float, default=None,
                        help="override every check tolerance")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", default=None, help="write output to FILE")

    sp = sub.add_parser("verify", help="run the identity suite for a model")
    add_common(sp)
    sp.add_argument("--random", type=int, default=0, metavar="N",
                    help="also verify N random regular points")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--perm-search", choices=("on", "off"), default="on")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("frame", help="dump the canonical frame at a point")
    add_common(sp)
    sp.set_defaults(func=cmd_frame)

    sp = sub.add_parser("sweep", help="grid a coordinate, CSV residuals")
    add_common(sp)
    sp.add_argument("--param", type=int, required=True,
                    help="1-based coordinate index to vary")
    sp.add_argument("--range", type=_parse_range, required=True,
                    metavar="A:B:COUNT")
    sp.set_defaults(func=cmd_sweep, format="csv")

    sp = sub.add_parser("pvi", help="scan an algebraic solution family")
    add_common(sp, model=False)
    sp.add_argument("--solution", choices=("k3", "k6", "omega"), default="k3")
    sp.add_argument("--x-range", type=_parse_range, default=None,
                    metavar="A:B:COUNT")
    sp.set_defaults(func=cmd_pvi)

    sp = sub.add_parser("tau", help="tau-function checks of the first model")
    add_common(sp, model=False)
    sp.add_argument("--x2", type=float, default=2.0)
    sp.add_argument("--x3", type=float, default=1.0)
    sp.set_defaults(func=cmd_tau)

    sp = sub.add_parser("top", help="integrate the top system, report drift")
    add_common(sp, model=False)
    sp.add_argument("--s0", type=_parse_complex, default=complex(2.0))
    sp.add_argument("--s1", type=_parse_complex, default=complex(3.0))
    sp.add_argument("--w0", type=_parse_point, default=[1.0, 1.0, 1.0],
                    help="initial components, comma-separated")
    sp.add_argument("--steps", type=int, default=4096)
    sp.set_defaults(func=cmd_top)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except (BranchError, CoordinateChartError,
            DegenerateConfigurationError, RootFindingError) as exc:
        print(f"degenerate configuration: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
