"""Command-line surface: classification, batch reports, mesh export, verification.

Exit codes: 0 success, 1 verification or residual failure, 2 usage/input error.
All output is deterministic for fixed flags (and seed); floats print as the
shortest decimal that round-trips.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    CausalCharacter,
    CirculantMetric,
    GeometryError,
    ToleranceConfig,
    ZeroVectorError,
    causal_character,
    clamp_cos,
    cos_phi,
    f_inner,
    fmt_float,
)
from .frames import gram_matrix, orthonormal_q_basis
from .quadrics import (
    QuadricSpec,
    classify_quadric,
    cone_sphere_intersection,
    quadric_equation,
    radius_vector_character,
    sample_quadric,
)
from .conics import ConicSpec, classify_conic, conic_coefficients, discriminant
from .oracle import run_suite


@dataclass(frozen=True)
class BatchRow:
    """One classified input row; index equals the 0-based input position."""

    index: int
    x: float
    y: float
    z: float
    cos_phi: float
    phi_rad: float
    character: str


def _parse_metric(text: str) -> CirculantMetric:
    parts = text.split(",")
    if len(parts) != 2:
        raise GeometryError(f"--metric expects 'A,B', got {text!r}")
    try:
        a, b = (float(p) for p in parts)
    except ValueError:
        raise GeometryError(f"--metric expects two reals, got {text!r}") from None
    return CirculantMetric(a, b)


def _parse_vector(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise GeometryError(f"--vector expects 'X,Y,Z', got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError:
        raise GeometryError(f"--vector expects three reals, got {text!r}") from None


def _parse_samples(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise GeometryError(f"--samples expects 'NS,NT', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GeometryError(f"--samples expects 'NS,NT', got {text!r}") from None


def _vector_line(label: str, v: np.ndarray) -> str:
    return f"{label} = {fmt_float(v[0])} {fmt_float(v[1])} {fmt_float(v[2])}"


def _cmd_classify(args) -> int:
    metric = _parse_metric(args.metric)
    vector = _parse_vector(args.vector)
    tol = DEFAULT_TOLERANCES if args.eps is None else ToleranceConfig(eps_null=args.eps)
    character = causal_character(metric, vector, tol)
    c = cos_phi(metric, vector)
    phi = math.acos(clamp_cos(c, tol))
    print(
        f"character={character.value} cos_phi={fmt_float(c)} "
        f"phi_rad={fmt_float(phi)} f_uu={fmt_float(f_inner(metric, vector, vector))}"
    )
    return 0


def _read_batch_rows(path: str) -> list[tuple[float, float, float]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GeometryError(f"cannot read {path!r}: {exc}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].strip() != "x,y,z":
        raise GeometryError("line 1: expected CSV header 'x,y,z'")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.strip().split(",")
        if len(parts) != 3:
            raise GeometryError(f"line {lineno}: expected three comma-separated reals, got {line!r}")
        try:
            rows.append(tuple(float(p) for p in parts))
        except ValueError:
            raise GeometryError(f"line {lineno}: could not parse {line!r}") from None
    return rows


def _cmd_classify_batch(args) -> int:
    metric = _parse_metric(args.metric)
    tol = DEFAULT_TOLERANCES
    rows = []
    for index, (x, y, z) in enumerate(_read_batch_rows(args.input)):
        vector = np.array([x, y, z])
        try:
            character = causal_character(metric, vector, tol).value
            c = cos_phi(metric, vector)
            phi = math.acos(clamp_cos(c, tol))
        except ZeroVectorError:
            character, c, phi = "error:zero-vector", math.nan, math.nan
        rows.append(BatchRow(index, x, y, z, c, phi, character))
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"metric a={fmt_float(metric.a)} b={fmt_float(metric.b)}\n")
        fh.write(
            f"tolerance eps_null={fmt_float(tol.eps_null)} eps_angle={fmt_float(tol.eps_angle)}\n"
        )
        fh.write(f"rows n={len(rows)}\n")
        for r in rows:
            fh.write(
                f"row index={r.index} x={fmt_float(r.x)} y={fmt_float(r.y)} z={fmt_float(r.z)} "
                f"cos_phi={fmt_float(r.cos_phi)} phi_rad={fmt_float(r.phi_rad)} "
                f"character={r.character}\n"
            )
    print(f"wrote {len(rows)} rows to {args.output}")
    return 0


def _cmd_qbasis(args) -> int:
    metric = _parse_metric(args.metric)
    basis = orthonormal_q_basis(metric)
    residual = float(np.max(np.abs(gram_matrix(metric, basis.vectors()) - np.eye(3))))
    print(_vector_line("u", basis.u))
    print(_vector_line("qu", basis.qu))
    print(_vector_line("q2u", basis.q2u))
    print(f"gram_residual={fmt_float(residual)}")
    return 0 if residual <= 1e-10 else 1


def _cmd_quadric(args) -> int:
    spec = QuadricSpec(args.r2)
    print(f"class={classify_quadric(spec).value}")
    print(f"equation={quadric_equation(spec)}")
    print(f"character={radius_vector_character(spec).value}")
    if args.mesh is not None:
        n_s, n_theta = _parse_samples(args.samples)
        vertices = sample_quadric(spec, n_s, n_theta, extent=args.t_max)
        with open(args.mesh, "w", encoding="utf-8", newline="\n") as fh:
            for x, y, z in vertices:
                fh.write(f"v {fmt_float(x)} {fmt_float(y)} {fmt_float(z)}\n")
    return 0


def _cmd_conic(args) -> int:
    if args.cos_phi is not None:
        spec = ConicSpec(args.cos_phi, args.r2)
    else:
        spec = ConicSpec.from_phi(args.phi, args.r2)
    k = conic_coefficients(spec)
    result = classify_conic(spec)
    print(f"A={fmt_float(k.A)} B={fmt_float(k.B)} C={fmt_float(k.C)}")
    print(f"discriminant={fmt_float(discriminant(spec))}")
    print(f"class={result.kind.value}")
    print(f"equation={result.equation}")
    if result.circle_radius is not None:
        print(f"radius={fmt_float(result.circle_radius)}")
    if result.extension:
        print("extension=true")
    return 0


def _cmd_intersect(args) -> int:
    circle = cone_sphere_intersection()
    print(f"x'^2+y'^2 = {fmt_float(circle.radius_sq)}")
    print(f"z' = ±{fmt_float(circle.z_planes[0])}")
    return 0


def _cmd_verify(args) -> int:
    reports = run_suite(args.seed, args.trials)
    print(f"seed={args.seed} trials={args.trials}")
    failed = 0
    for r in reports:
        status = "ok  " if r.passed else "FAIL"
        if not r.passed:
            failed += 1
        print(
            f"{status} {r.name:<32} trials={r.trials} "
            f"max_residual={fmt_float(r.max_residual)} tol={fmt_float(r.tolerance)}"
        )
    print(f"result={'pass' if failed == 0 else 'fail'} checks={len(reports)} failed={failed}")
    return 0 if failed == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circgeo",
        description="Circulant tangent-space geometry: causal classification, "
        "quadric and conic pipelines, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="causal character of one vector")
    p.add_argument("--metric", required=True, help="metric coefficients 'A,B'")
    p.add_argument("--vector", required=True, help="vector components 'X,Y,Z'")
    p.add_argument("--eps", type=float, default=None, help="null-band tolerance override")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("classify-batch", help="classify a CSV of vectors into a report file")
    p.add_argument("--metric", required=True, help="metric coefficients 'A,B'")
    p.add_argument("--input", required=True, help="CSV file with header x,y,z")
    p.add_argument("--output", required=True, help="report file to write")
    p.set_defaults(func=_cmd_classify_batch)

    p = sub.add_parser("qbasis", help="deterministic orthonormal shift basis")
    p.add_argument("--metric", required=True, help="metric coefficients 'A,B'")
    p.set_defaults(func=_cmd_qbasis)

    p = sub.add_parser("quadric", help="classify the surface f(v,v) = r2, optionally mesh it")
    p.add_argument("--r2", type=float, required=True, help="level constant r^2")
    p.add_argument("--mesh", default=None, help="write vertices 'v x y z' to this file")
    p.add_argument("--samples", default="32,64", help="mesh grid 'NS,NT' (default 32,64)")
    p.add_argument("--t-max", type=float, default=None, help="cylindrical-radius reach of the mesh")
    p.set_defaults(func=_cmd_quadric)

    p = sub.add_parser("conic", help="classify the plane locus f(v,v) = r2")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--phi", type=float, default=None, help="shift angle in radians")
    group.add_argument("--cos-phi", type=float, default=None, help="cosine of the shift angle")
    p.add_argument("--r2", type=float, required=True, help="level constant r^2")
    p.set_defaults(func=_cmd_conic)

    p = sub.add_parser("intersect", help="cone and unit-sphere intersection circles")
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("verify", help="run the deterministic oracle suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
