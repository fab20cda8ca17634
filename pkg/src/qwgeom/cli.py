"""Command-line surface: deterministic CSV/JSON artifacts for each tool.

Exit codes: 0 success, 2 usage error (argparse), 3 domain error
(gapless point, degenerate input, finite-difference failure).  Angles
are radians, given either as decimals or as exact multiples of pi
("pi/4", "-pi/2", "1.5pi"), so special points are not blurred by
rounding.  Grid scans honor the QWGEOM_WORKERS environment variable.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

import numpy as np

from . import emit
from .errors import QwGeomError
from .holonomy import (TangentVector, latitude_loop, parallel_transport,
                       quantum_geometric_tensor, solid_angle, sphere_point)
from .models import TWO_ANGLE_FAMILIES, WalkModel, make_model
from .spin import bloch_sphere_state
from .topology import find_dirac_points, scan_gap, winding_number
from .utils import fold_angle
from .walk import (initial_state, momentum_oracle, probability_distribution,
                   similarity, step, total_variation)
from .zak import zak_map, zak_numeric

_PI_FORM = re.compile(
    r"^([+-]?)(\d+(?:\.\d*)?|\.\d+)?pi(?:/(\d+(?:\.\d*)?|\.\d+))?$")

_BAND = {"plus": +1, "minus": -1}


def parse_angle(text: str) -> float:
    """Angle in radians from a decimal or an exact pi-multiple string."""
    s = text.strip().lower().replace(" ", "")
    try:
        return float(s)
    except ValueError:
        pass
    m = _PI_FORM.match(s)
    if m is None:
        raise argparse.ArgumentTypeError(
            f"cannot parse angle {text!r} (use a decimal or forms like "
            "pi/4, -pi/2, 1.5pi)")
    sign = -1.0 if m.group(1) == "-" else 1.0
    coef = float(m.group(2)) if m.group(2) else 1.0
    den = float(m.group(3)) if m.group(3) else 1.0
    if den == 0.0:
        raise argparse.ArgumentTypeError("zero denominator in angle")
    return sign * coef * math.pi / den


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0.0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def _resolution(text: str) -> int:
    value = int(text)
    if value < 3:
        raise argparse.ArgumentTypeError("resolution must be >= 3")
    return value


def _k_samples(text: str) -> int:
    value = int(text)
    if value < 8:
        raise argparse.ArgumentTypeError("k-samples must be >= 8")
    return value


def _zak_points(text: str) -> int:
    value = int(text)
    if value < 16 or value % 2:
        raise argparse.ArgumentTypeError("n-points must be even and >= 16")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _transport_steps(text: str) -> int:
    value = int(text)
    if value < 100:
        raise argparse.ArgumentTypeError("steps must be >= 100")
    return value


def _add_model_args(sp: argparse.ArgumentParser,
                    families=("standard", "noncommuting", "splitstep")):
    sp.add_argument("--family", required=True, choices=families)
    sp.add_argument("--theta", type=parse_angle, default=None)
    sp.add_argument("--phi", type=parse_angle, default=None)
    sp.add_argument("--theta1", type=parse_angle, default=None)
    sp.add_argument("--theta2", type=parse_angle, default=None)


def _add_out(sp: argparse.ArgumentParser):
    sp.add_argument("--out", default="-",
                    help="output path ('-' for stdout, the default)")


def _build_model(parser: argparse.ArgumentParser,
                 args: argparse.Namespace) -> WalkModel:
    family = args.family
    if family == "standard":
        if args.theta is None:
            parser.error("standard family needs --theta")
        if args.phi is not None and args.phi != 0.0:
            parser.error("standard family takes --phi 0 only")
        if args.theta1 is not None or args.theta2 is not None:
            parser.error("standard family takes --theta (not --theta1/2)")
        return make_model(family, (args.theta,))
    if family == "noncommuting":
        if args.theta is None or args.phi is None:
            parser.error("noncommuting family needs --theta and --phi")
        if args.theta1 is not None or args.theta2 is not None:
            parser.error("noncommuting family takes --theta/--phi")
        return make_model(family, (args.theta, args.phi))
    if args.theta1 is None or args.theta2 is None:
        parser.error("splitstep family needs --theta1 and --theta2")
    if args.theta is not None or args.phi is not None:
        parser.error("splitstep family takes --theta1/--theta2")
    return make_model(family, (args.theta1, args.theta2))


def _k_grid(n: int) -> np.ndarray:
    return np.linspace(-np.pi, np.pi, n)


def _cmd_spectrum(parser, args) -> int:
    model = _build_model(parser, args)
    emit.write_text(emit.spectrum_csv(model, _k_grid(args.k_samples)),
                    args.out)
    return 0


def _cmd_bloch(parser, args) -> int:
    model = _build_model(parser, args)
    emit.write_text(emit.bloch_csv(model, _k_grid(args.k_samples)), args.out)
    return 0


def _cmd_phase_diagram(parser, args) -> int:
    gm = scan_gap(args.family, resolution=args.resolution,
                  k_samples=args.k_samples)
    emit.write_text(emit.gap_map_csv(gm), args.out)
    return 0


def _cmd_dirac_points(parser, args) -> int:
    ds = find_dirac_points(args.family, coarse_resolution=args.resolution,
                           k_samples=args.k_samples, accept_gap=args.tol)
    if ds.continuous_boundary:
        print("note: gapless set includes extended curves; only isolated "
              "points are listed", file=sys.stderr)
    if ds.dropped:
        print(f"note: {ds.dropped} candidate cluster(s) failed refinement",
              file=sys.stderr)
    emit.write_text(emit.dirac_points_json(ds), args.out)
    return 0


def _cmd_zak(parser, args) -> int:
    model = _build_model(parser, args)
    zr = zak_numeric(model, _BAND[args.band], k_origin=args.k_origin,
                     n_points=args.n_points, span=args.span,
                     closed=args.closed)
    emit.write_text(emit.zak_result_json(zr), args.out)
    return 0


def _cmd_zak_map(parser, args) -> int:
    zm = zak_map(args.family, resolution=args.resolution,
                 n_points=args.n_points, span=args.span)
    emit.write_text(emit.zak_map_csv(zm), args.out)
    return 0


def _cmd_winding(parser, args) -> int:
    model = _build_model(parser, args)
    w = winding_number(model, k_samples=args.k_samples)
    emit.write_text(emit.winding_json(model, w, args.k_samples), args.out)
    return 0


def _cmd_walk(parser, args) -> int:
    model = _build_model(parser, args)
    state = initial_state(args.chirality)
    norm0 = state.norm()
    max_drift = 0.0
    for _ in range(args.steps):
        state = step(state, model)
        max_drift = max(max_drift, abs(state.norm() - norm0))
    dist = probability_distribution(state)
    oracle = momentum_oracle(initial_state(args.chirality), model, args.steps)
    tv = total_variation(dist, oracle)
    sim = similarity(dist, oracle)
    print(f"oracle TV distance: {tv:.3e}, similarity: {sim:.12f}",
          file=sys.stderr)
    emit.write_text(emit.distribution_csv(dist), args.out)
    if args.manifest is not None:
        text = emit.walk_manifest_json(
            model, args.steps, args.chirality, norm0, state.norm(),
            max_drift, sim, tv)
        emit.write_text(text, args.manifest)
    return 0


def _cmd_holonomy_sphere(parser, args) -> int:
    def rows():
        for i in range(args.loops):
            theta0 = math.pi * (i + 1) / (args.loops + 1)
            curve = latitude_loop(theta0)
            v0 = TangentVector(v=np.array([0.0, 1.0, 0.0]),
                               base=sphere_point(theta0, 0.0))
            vf, rotation = parallel_transport(curve, v0, steps=args.steps)
            area = solid_angle(curve, steps=args.steps)
            mismatch = abs(fold_angle(rotation - area))
            drift = abs(vf.norm - v0.norm)
            yield (theta0, rotation, area, mismatch, drift)

    emit.write_text(emit.holonomy_table_csv(rows()), args.out)
    return 0


def _cmd_qgt(parser, args) -> int:
    band = _BAND[args.band]

    def family(a: float, b: float) -> np.ndarray:
        return bloch_sphere_state(a, b, band)

    gt = quantum_geometric_tensor(family, (args.theta, args.phi), h=args.h)
    emit.write_text(emit.qgt_json(gt, band, args.h), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwgeom",
        description="Quantum-walk band geometry: spectra, Dirac points, "
                    "Zak phases, windings, walks, and sphere transport.",
        epilog="Set QWGEOM_WORKERS to bound the threads used by grid scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="quasi-energy curve E(k)")
    _add_model_args(sp)
    sp.add_argument("--k-samples", type=_k_samples, default=361)
    _add_out(sp)
    sp.set_defaults(handler=_cmd_spectrum)

    sp = sub.add_parser("bloch", help="Bloch vector samples n(k)")
    _add_model_args(sp)
    sp.add_argument("--k-samples", type=_k_samples, default=361)
    _add_out(sp)
    sp.set_defaults(handler=_cmd_bloch)

    sp = sub.add_parser("phase-diagram",
                        help="minimum-gap map over a two-angle grid")
    _add_model_args(sp, families=TWO_ANGLE_FAMILIES)
    sp.add_argument("--resolution", type=_resolution, default=201)
    sp.add_argument("--k-samples", type=_k_samples, default=361)
    _add_out(sp)
    sp.set_defaults(handler=_cmd_phase_diagram)

    sp = sub.add_parser("dirac-points",
                        help="isolated gap closings in the angle square")
    _add_model_args(sp, families=TWO_ANGLE_FAMILIES)
    sp.add_argument("--resolution", type=_resolution, default=721)
    sp.add_argument("--k-samples", type=_k_samples, default=721)
    sp.add_argument("--tol", type=_positive_float, default=1e-9,
                    help="residual gap accepted after refinement")
    _add_out(sp)
    sp.set_defaults(handler=_cmd_dirac_points)

    sp = sub.add_parser("zak", help="Zak phase of one band")
    _add_model_args(sp)
    sp.add_argument("--band", required=True, choices=("plus", "minus"))
    sp.add_argument("--k-origin", type=parse_angle, default=0.0)
    sp.add_argument("--n-points", type=_zak_points, default=2048)
    sp.add_argument("--span", choices=("half", "full"), default="half")
    sp.add_argument("--closed", action="store_true",
                    help="include the wrap-around overlap (closed chain)")
    _add_out(sp)
    sp.set_defaults(handler=_cmd_zak)

    sp = sub.add_parser("zak-map",
                        help="Zak phases of both bands over an angle grid")
    _add_model_args(sp, families=TWO_ANGLE_FAMILIES)
    sp.add_argument("--resolution", type=_resolution, default=201)
    sp.add_argument("--n-points", type=_zak_points, default=512)
    sp.add_argument("--span", choices=("half", "full"), default="half")
    _add_out(sp)
    sp.set_defaults(handler=_cmd_zak_map)

    sp = sub.add_parser("winding",
                        help="winding number of the Bloch curve")
    _add_model_args(sp)
    sp.add_argument("--k-samples", type=_k_samples, default=1024)
    _add_out(sp)
    sp.set_defaults(handler=_cmd_winding)

    sp = sub.add_parser("walk",
                        help="position distribution after N steps")
    _add_model_args(sp)
    sp.add_argument("--steps", type=_nonnegative_int, required=True)
    sp.add_argument("--chirality", choices=("+", "-"), default="+")
    sp.add_argument("--manifest", default=None,
                    help="also write a JSON run manifest to this path")
    _add_out(sp)
    sp.set_defaults(handler=_cmd_walk)

    sp = sub.add_parser("holonomy-sphere",
                        help="parallel-transport table for latitude loops")
    sp.add_argument("--loops", type=_resolution, default=9,
                    help="number of latitude loops (>= 3)")
    sp.add_argument("--steps", type=_transport_steps, default=20_000,
                    help="integrator steps per loop (>= 100)")
    _add_out(sp)
    sp.set_defaults(handler=_cmd_holonomy_sphere)

    sp = sub.add_parser("qgt",
                        help="quantum geometric tensor of the spin family")
    sp.add_argument("--theta", type=parse_angle, required=True)
    sp.add_argument("--phi", type=parse_angle, required=True)
    sp.add_argument("--band", choices=("plus", "minus"), default="plus")
    sp.add_argument("--h", type=_positive_float, default=1e-4)
    _add_out(sp)
    sp.set_defaults(handler=_cmd_qgt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(parser, args)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    except QwGeomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
