"""Command-line interface: channel inspection, code analysis, numerical
ranges with SVG figures, minimum-entropy code construction and the
regression driver over the named catalog instances.

Exit codes: 0 success, 1 input or validation error, 2 not correctable or
no code exists, 3 unsupported parameters, 4 regression failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

import numpy as np

from . import catalog, serialization
from .binary_unitary import (
    BinaryUnitaryChannel,
    NumRangeRegion,
    biunitary_code_entropy,
    constituent_hulls,
    entropy_vs_p,
    extremal_lambda,
    grouping_code,
    numerical_range,
)
from .channel import channel_from_json, choi_gram, validate_channel
from .code import build_recovery, classify_code, code_from_json, kl_check, sigma_equals_lambda_check
from .errors import (
    LambdaOutsideRegionError,
    NoCodeError,
    NoFeasiblePartitionError,
    NotCorrectable,
    NotTracePreserving,
    QecError,
    RecoveryVerificationError,
    UnsupportedCodeDimensionError,
)
from .numerics import DEFAULT_TOL, ToleranceConfig, as_matrix, is_unitary, unitary_eigen

TOLERANCES_ENV = "QECENTROPY_TOLERANCES"

SVG_HELP = (
    "SVG viewport: the unit disk is mapped to a size-by-size pixel canvas "
    "with a 5%% margin, so a point z maps to px = size/2 + 0.45*size*Re(z), "
    "py = size/2 - 0.45*size*Im(z); the y axis is flipped so the complex "
    "plane reads conventionally."
)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_json_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_tolerances(path: str | None) -> ToleranceConfig:
    if path is None:
        path = os.environ.get(TOLERANCES_ENV) or None
    if path is None:
        return DEFAULT_TOL
    obj = _load_json_file(path)
    if not isinstance(obj, dict):
        raise ValueError("tolerance file must be a JSON object")
    fields = {f.name for f in dataclasses.fields(ToleranceConfig)}
    unknown = set(obj) - fields
    if unknown:
        raise ValueError(f"unknown tolerance keys: {sorted(unknown)}")
    return ToleranceConfig(**{k: float(v) for k, v in obj.items()})


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"complex value must be 'RE' or 'RE,IM', got {text!r}")


def _load_unitary(path: str, tol: ToleranceConfig) -> np.ndarray:
    u = as_matrix(serialization.matrix_from_json(_load_json_file(path)))
    if not is_unitary(u, tol):
        raise ValueError(f"matrix in {path} is not unitary")
    return u


def _emit(text: str, output: str | None) -> None:
    if output is None:
        print(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


# SVG figure emission ------------------------------------------------------


def _svg_point(z: complex, size: float) -> tuple[float, float]:
    scale = 0.45 * size
    return size / 2 + scale * z.real, size / 2 - scale * z.imag


def _svg_coords(zs, size: float) -> str:
    return " ".join(
        f"{serialization.format_float(x)},{serialization.format_float(y)}"
        for x, y in (_svg_point(z, size) for z in zs)
    )


def render_region_svg(
    region: NumRangeRegion,
    eigenvalues: np.ndarray,
    hulls: list[np.ndarray] | None = None,
    size: int = 600,
) -> str:
    """Static figure of a rank-k numerical range inside the unit circle."""
    s = float(size)
    cx, cy = _svg_point(0.0, s)
    radius = 0.45 * s
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<circle cx="{serialization.format_float(cx)}" cy="{serialization.format_float(cy)}" '
        f'r="{serialization.format_float(radius)}" fill="none" stroke="#888888" stroke-width="1"/>',
    ]
    for hull in hulls or []:
        if len(hull) >= 3:
            parts.append(
                f'<polygon class="hull" points="{_svg_coords(hull, s)}" fill="none" '
                'stroke="#bbbbbb" stroke-width="1" stroke-dasharray="4 3"/>'
            )
        elif len(hull) == 2:
            (x1, y1), (x2, y2) = (_svg_point(z, s) for z in hull)
            parts.append(
                f'<line class="hull" x1="{serialization.format_float(x1)}" '
                f'y1="{serialization.format_float(y1)}" x2="{serialization.format_float(x2)}" '
                f'y2="{serialization.format_float(y2)}" stroke="#bbbbbb" stroke-width="1" '
                'stroke-dasharray="4 3"/>'
            )
    verts = region.vertices
    if len(verts) >= 3:
        parts.append(
            f'<polygon class="region" points="{_svg_coords(verts, s)}" '
            'fill="#6699cc" fill-opacity="0.5" stroke="#336699" stroke-width="1.5"/>'
        )
    elif len(verts) == 2:
        (x1, y1), (x2, y2) = (_svg_point(z, s) for z in verts)
        parts.append(
            f'<line class="region" x1="{serialization.format_float(x1)}" '
            f'y1="{serialization.format_float(y1)}" x2="{serialization.format_float(x2)}" '
            f'y2="{serialization.format_float(y2)}" stroke="#336699" stroke-width="2"/>'
        )
    elif len(verts) == 1:
        x, y = _svg_point(complex(verts[0]), s)
        parts.append(
            f'<circle class="region" cx="{serialization.format_float(x)}" '
            f'cy="{serialization.format_float(y)}" r="4" fill="#336699"/>'
        )
    for z in eigenvalues:
        x, y = _svg_point(complex(z), s)
        parts.append(
            f'<circle class="eigenvalue" cx="{serialization.format_float(x)}" '
            f'cy="{serialization.format_float(y)}" r="3" fill="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# Subcommand implementations -----------------------------------------------


def _cmd_channel_info(args, tol: ToleranceConfig) -> int:
    c = channel_from_json(_load_json_file(args.channel))
    validate_channel(c, tol)
    gram = choi_gram(c, tol)
    report = {
        "dim": c.dim,
        "num_kraus": c.num_kraus,
        "choi_gram_spectrum": [float(w) for w in gram.weights],
        "choi_rank": gram.choi_rank,
    }
    _emit(serialization.dumps(report, indent=2), args.output)
    return 0


def _cmd_code_analyze(args, tol: ToleranceConfig) -> int:
    c = channel_from_json(_load_json_file(args.channel))
    code = code_from_json(_load_json_file(args.code), tol)
    report = classify_code(c, code, tol).to_json()
    if args.sigma_samples > 0:
        report["sigma_matches_lambda"] = sigma_equals_lambda_check(
            c, code, args.sigma_samples, seed=args.seed, tol=tol
        )
    _emit(serialization.dumps(report, indent=2), args.output)
    return 0


def _cmd_code_recovery(args, tol: ToleranceConfig) -> int:
    c = channel_from_json(_load_json_file(args.channel))
    code = code_from_json(_load_json_file(args.code), tol)
    rec = build_recovery(c, code, tol)
    report = {"channel": rec.channel.to_json(), "residual": rec.residual}
    _emit(serialization.dumps(report, indent=2), args.output)
    return 0


def _cmd_numrange(args, tol: ToleranceConfig) -> int:
    u = _load_unitary(args.unitary, tol)
    region = numerical_range(u, args.k, tol)
    _emit(serialization.dumps(region.to_json(), indent=2), args.output)
    if args.svg is not None:
        dec = unitary_eigen(u, tol)
        hulls = constituent_hulls(u, args.k, tol) if args.hulls else None
        svg = render_region_svg(region, dec.eigenvalues, hulls, size=args.size)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def _cmd_min_entropy_code(args, tol: ToleranceConfig) -> int:
    u = _load_unitary(args.unitary, tol)
    if not 0.0 <= args.p <= 1.0:
        raise ValueError(f"mixing probability must be in [0, 1], got {args.p}")
    region = numerical_range(u, args.k, tol)
    lam = extremal_lambda(region).min_entropy_lambdas[0]
    built = grouping_code(u, args.k, lam, tol)
    binary = BinaryUnitaryChannel(args.p, u)
    # Independent verification of the construction before anything is printed.
    lam_matrix, residual = kl_check(binary.to_channel(tol), built.code, tol)
    report = {
        "lambda": serialization.complex_to_json(lam),
        "entropy_bits": biunitary_code_entropy(args.p, lam),
        "kl_residual": residual,
        "lambda_spectrum": [float(x) for x in lam_matrix.spectrum],
        "partition": [list(g) for g in built.partition],
        "weights": [list(w) for w in built.weights],
        "code": built.code.to_json(),
    }
    _emit(serialization.dumps(report, indent=2), args.output)
    return 0


def _cmd_entropy_vs_p(args, tol: ToleranceConfig) -> int:
    u = _load_unitary(args.unitary, tol)
    lam = _parse_complex(args.lam)
    if args.p_grid is not None:
        grid = [float(x) for x in args.p_grid.split(",")]
    else:
        grid = [i / (args.p_steps - 1) for i in range(args.p_steps)]
    rows = entropy_vs_p(u, args.k, lam, grid, tol)
    report = {
        "k": args.k,
        "lambda": serialization.complex_to_json(lam),
        "points": [{"p": p, "entropy_bits": s} for p, s in rows],
    }
    _emit(serialization.dumps(report, indent=2), args.output)
    return 0


def _instance_json(inst: catalog.NamedInstance) -> dict:
    obj: dict = {
        "name": inst.name,
        "channel": inst.channel.to_json(),
        "codes": [{"label": label, "code": code.to_json()} for label, code in inst.codes],
        "expected": [
            {
                "quantity": e.quantity,
                "code_label": e.code_label,
                "target": e.target,
                "tolerance": e.tolerance,
                "provenance": e.provenance,
            }
            for e in inst.expected
        ],
    }
    if inst.binary is not None:
        obj["binary"] = {
            "p": inst.binary.p,
            "unitary": serialization.matrix_to_json(inst.binary.u),
        }
    if inst.k is not None:
        obj["k"] = inst.k
    return obj


def _cmd_catalog(args, tol: ToleranceConfig) -> int:
    instances = catalog.all_instances()
    if args.catalog_command == "list":
        _emit(serialization.dumps(sorted(instances), indent=2), args.output)
        return 0
    if args.name not in instances:
        raise ValueError(f"unknown catalog instance {args.name!r}; "
                         f"known: {', '.join(sorted(instances))}")
    _emit(serialization.dumps(_instance_json(instances[args.name]), indent=2), args.output)
    return 0


def _csv_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    if isinstance(value, complex):
        sign = "+" if value.imag >= 0 else "-"
        return (f"{serialization.format_float(value.real)}{sign}"
                f"{serialization.format_float(abs(value.imag))}i")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return serialization.format_float(float(value))


def _cmd_reproduce(args, tol: ToleranceConfig) -> int:
    inst = catalog.all_instances()[args.table]
    rows = catalog.evaluate_instance(inst, tol)
    lines = ["quantity,expected,computed,abs_error,tolerance,pass"]
    for row in rows:
        lines.append(",".join([
            row["quantity"],
            _csv_value(row["expected"]),
            _csv_value(row["computed"]),
            _csv_value(row["abs_error"]),
            _csv_value(row["tolerance"]),
            _csv_value(row["passed"]),
        ]))
    _emit("\n".join(lines), args.output)
    return 0 if all(row["passed"] for row in rows) else 4


# Argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qecentropy",
        description="Entropy, classification and construction of quantum "
        "error-correcting codes for finite-dimensional noise channels.",
        epilog=SVG_HELP,
    )
    parser.add_argument(
        "--tolerances",
        metavar="FILE",
        default=None,
        help="JSON file overriding numerical tolerances (eps_rank, eps_kl, "
        f"eps_geom, eps_eig); defaults to ${TOLERANCES_ENV} if set",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    chan = sub.add_parser("channel", help="channel inspection")
    chan_sub = chan.add_subparsers(dest="channel_command", required=True)
    info = chan_sub.add_parser("info", help="dimension, Choi-Gram spectrum and Choi rank")
    info.add_argument("channel", help="channel JSON file")
    info.add_argument("--output", default=None)
    info.set_defaults(func=_cmd_channel_info)

    code = sub.add_parser("code", help="code analysis and recovery")
    code_sub = code.add_subparsers(dest="code_command", required=True)
    analyze = code_sub.add_parser("analyze", help="verify a code and report entropy and class")
    analyze.add_argument("channel", help="channel JSON file")
    analyze.add_argument("code", help="code JSON file")
    analyze.add_argument("--sigma-samples", type=int, default=0,
                         help="also test the exchange-state identity on this many random code states")
    analyze.add_argument("--seed", type=int, default=0)
    analyze.add_argument("--output", default=None)
    analyze.set_defaults(func=_cmd_code_analyze)
    recovery = code_sub.add_parser("recovery", help="construct and verify a recovery operation")
    recovery.add_argument("channel", help="channel JSON file")
    recovery.add_argument("code", help="code JSON file")
    recovery.add_argument("--output", default=None)
    recovery.set_defaults(func=_cmd_code_recovery)

    numrange = sub.add_parser(
        "numrange", help="rank-k numerical range of a unitary matrix", epilog=SVG_HELP
    )
    numrange.add_argument("unitary", help="unitary matrix JSON file")
    numrange.add_argument("k", type=int)
    numrange.add_argument("--svg", default=None, help="also write an SVG figure to this path")
    numrange.add_argument("--hulls", action="store_true",
                          help="draw the constituent subset hulls in the SVG")
    numrange.add_argument("--size", type=int, default=600, help="SVG canvas size in pixels")
    numrange.add_argument("--output", default=None)
    numrange.set_defaults(func=_cmd_numrange)

    mec = sub.add_parser("min-entropy-code",
                         help="construct a minimum-entropy rank-k code by eigenstate grouping")
    mec.add_argument("unitary", help="unitary matrix JSON file")
    mec.add_argument("k", type=int)
    mec.add_argument("p", type=float, help="mixing probability of the binary unitary channel")
    mec.add_argument("--output", default=None)
    mec.set_defaults(func=_cmd_min_entropy_code)

    evp = sub.add_parser("entropy-vs-p", help="code entropy along a mixing-probability grid")
    evp.add_argument("unitary", help="unitary matrix JSON file")
    evp.add_argument("k", type=int)
    evp.add_argument("--lam", required=True, help="compression value as 'RE' or 'RE,IM'")
    evp.add_argument("--p-grid", default=None, help="comma-separated probabilities")
    evp.add_argument("--p-steps", type=int, default=21, help="uniform grid size on [0, 1]")
    evp.add_argument("--output", default=None)
    evp.set_defaults(func=_cmd_entropy_vs_p)

    cat = sub.add_parser("catalog", help="named reference instances")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    cat_list = cat_sub.add_parser("list", help="list instance names")
    cat_list.add_argument("--output", default=None)
    cat_list.set_defaults(func=_cmd_catalog)
    cat_get = cat_sub.add_parser("get", help="emit one instance as JSON")
    cat_get.add_argument("name")
    cat_get.add_argument("--output", default=None)
    cat_get.set_defaults(func=_cmd_catalog)

    rep = sub.add_parser("reproduce", help="check expected quantities of a named instance (CSV)")
    rep.add_argument("table", choices=["table1", "stabilizer", "example33", "qutrit"])
    rep.add_argument("--output", default=None)
    rep.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = _load_tolerances(args.tolerances)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return _fail(str(exc), 1)
    try:
        return args.func(args, tol)
    except (NotCorrectable, NoCodeError, NoFeasiblePartitionError,
            RecoveryVerificationError) as exc:
        return _fail(str(exc), 2)
    except UnsupportedCodeDimensionError as exc:
        return _fail(str(exc), 3)
    except (NotTracePreserving, LambdaOutsideRegionError, QecError) as exc:
        return _fail(str(exc), 1)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail(str(exc), 1)


if __name__ == "__main__":
    sys.exit(main())
