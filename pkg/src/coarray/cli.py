"""Command-line interface: the `coarray` tool.

Subcommands mirror the analysis surfaces: ``weights``, ``analyze``,
``gen-2fra``, ``scan``, ``doa``, and ``serve`` (the embedded HTTP service
behind the browser UI). Machine formats come straight from
:mod:`coarray.serialize`, so CLI JSON and service JSON are byte-identical.

Errors print a structured envelope to stderr and exit nonzero: 2 for input
errors, 1 for domain errors.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .arrays import (
    coarray_profile,
    parse_and_normalize,
    parse_positions_text,
    weight_table,
)
from .errors import CoarrayError, EdgeSensorFailure, InputError, InvalidRange
from .family import (
    DEFAULT_SCAN_CEILING,
    generate_2fra,
    periodicity_report,
    scan_family,
)
from .music import (
    DEFAULT_GRID_STEP_DEG,
    DEFAULT_SNAPSHOTS,
    DEFAULT_SNR_DB,
    DOAScenario,
    compare_health_states,
)
from .plots import svg_spectra_overlay, svg_stem_plot
from .robustness import VERDICT_SENTENCES, classify
from .serialize import to_json

#: Human-readable scan output elides positions beyond this sensor count.
SCAN_HUMAN_POSITIONS_LIMIT = 60


def _parse_array(text: str, max_aperture: int | None = None):
    return parse_and_normalize(parse_positions_text(text), max_aperture=max_aperture)


def _parse_angles(spec: str) -> tuple[float, ...]:
    """Angle list: either comma/space separated or a start:step:stop sweep."""
    spec = spec.strip()
    if ":" in spec:
        fields = spec.split(":")
        if len(fields) != 3:
            raise InvalidRange(f"angle sweep must be start:step:stop, got {spec!r}")
        start, step, stop = (float(f) for f in fields)
        if step <= 0:
            raise InvalidRange("angle sweep step must be positive")
        angles = []
        a = start
        while a <= stop + 1e-9:
            angles.append(round(a, 9))
            a += step
        return tuple(angles)
    parts = [p for p in spec.replace(",", " ").split() if p]
    if not parts:
        raise InvalidRange("no source angles given")
    return tuple(float(p) for p in parts)


def _parse_fail_set(spec: str) -> tuple[int, ...]:
    spec = spec.strip()
    if not spec or spec.lower() == "none":
        return ()
    try:
        return tuple(int(p) for p in spec.replace(",", " ").split())
    except ValueError:
        raise InvalidRange(f"failure set must list integer positions, got {spec!r}")


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)


def _fragility_line(report) -> str:
    frac = report.fragility
    return (
        f"{len(report.essential_positions)}/{report.n_sensors} "
        f"({float(frac):.4f})"
    )


def cmd_weights(args) -> int:
    arr = _parse_array(args.positions, args.max_aperture)
    wt = weight_table(arr)
    profile = coarray_profile(wt)
    if args.format == "json":
        _emit(to_json(serialize.weights_payload(arr, wt, profile)), args.output)
    elif args.format == "csv":
        _emit(serialize.weights_csv(wt), args.output)
    elif args.format == "svg":
        _emit(svg_stem_plot(wt, title=f"Weight function of {arr}"), args.output)
    else:
        lines = [
            f"array        {arr}",
            f"sensors      {arr.n_sensors}",
            f"aperture     {arr.aperture}",
            f"hole-free    {'yes' if profile.hole_free else 'no'}",
            f"holes        {list(profile.holes) if profile.holes else 'none'}",
            f"central ULA  [-{profile.central_ula_bound}, {profile.central_ula_bound}]",
            "",
            "  lag  weight",
        ]
        for lag in range(0, arr.aperture + 1):
            lines.append(f"  {lag:4d}  {wt.weight(lag):5d}")
        _emit("\n".join(lines), args.output)
    return 0


def cmd_analyze(args) -> int:
    arr = _parse_array(args.positions, args.max_aperture)
    report = classify(arr, sweep_on_non_ddb=args.include_sweep_on_non_ddb)
    if args.format == "json":
        _emit(to_json(serialize.report_payload(report)), args.output)
        return 0
    lines = [
        f"array      {arr}",
        f"verdict    {report.verdict.value}",
        f"           {VERDICT_SENTENCES[report.verdict]}",
        f"ddb        {'satisfied' if report.ddb_satisfied else 'violated'}",
        f"hes        {list(report.hes_positions) if report.hes_positions else 'none'}",
        f"essential  {list(report.essential_positions)}",
        f"fragility  {_fragility_line(report)}",
    ]
    for outcome in report.failure_outcomes:
        status = (
            f"holes at {list(outcome.residual_holes)}"
            if outcome.breaks_continuity
            else "coarray intact"
        )
        lines.append(f"  fail {outcome.removed_position:4d} -> {status}")
    _emit("\n".join(lines), args.output)
    return 0


def cmd_gen_2fra(args) -> int:
    config = generate_2fra(args.n)
    report = classify(config.positions)
    if args.format == "json":
        _emit(to_json(serialize.family_payload(config, report)), args.output)
        return 0
    hes = list(report.hes_positions) if report.hes_positions else "none"
    lines = [
        f"N          {config.n_sensors}",
        f"m*, p*     {config.m_star}, {config.p_star}",
        f"ies        {list(config.ies_word)}",
        f"positions  {config.positions}",
        f"aperture   {config.positions.aperture}",
        f"verdict    {report.verdict.value}",
        f"hes        {hes}",
    ]
    _emit("\n".join(lines), args.output)
    return 0


def cmd_scan(args) -> int:
    rows = scan_family(args.n_from, args.n_to, ceiling=args.ceiling)
    summary = periodicity_report(rows)
    if args.format == "csv":
        artifact = serialize.scan_csv(rows)
    elif args.format == "json":
        artifact = to_json(serialize.scan_rows_payload(rows))
    else:
        lines = [f"{'N':>4}  {'verdict':<14} {'hes':<12} {'L':>5}  positions"]
        for row in rows:
            if row.n_sensors > SCAN_HUMAN_POSITIONS_LIMIT:
                pos = f"[0 .. {row.aperture}] ({row.n_sensors} sensors)"
            else:
                pos = "[" + " ".join(str(p) for p in row.positions) + "]"
            hes = ",".join(str(p) for p in row.hes_positions) or "-"
            lines.append(
                f"{row.n_sensors:>4}  {row.verdict.value:<14} {hes:<12} "
                f"{row.aperture:>5}  {pos}"
            )
        artifact = "\n".join(lines)
    frac = summary.fraction_with_hes
    summary_text = (
        f"scanned N = {summary.n_from}..{summary.n_to}: "
        f"{summary.n_with_hes}/{summary.n_rows} with HES "
        f"(fraction {frac.numerator}/{frac.denominator} = {float(frac):.4f}); "
        f"4-on/4-off pattern "
        + (
            "verified"
            if summary.pattern_verified
            else f"VIOLATED at N={summary.first_violation}"
        )
    )
    if args.out:
        _emit(artifact, args.out)
        print(summary_text)
    else:
        print(artifact)
        print(summary_text, file=sys.stderr)
    return 0


def cmd_doa(args) -> int:
    arr = _parse_array(args.array, args.max_aperture)
    angles = _parse_angles(args.sources)
    failure_sets = [_parse_fail_set(s) for s in args.fail] if args.fail else [()]
    if not args.allow_edge:
        for fs in failure_sets:
            for p in fs:
                if p in (0, arr.aperture):
                    raise EdgeSensorFailure(
                        f"position {p} is an edge sensor; failing it changes "
                        "the coarray span (pass --allow-edge to force)",
                        detail={"position": p},
                    )
    scenario = DOAScenario(
        array=arr,
        source_angles_deg=angles,
        snr_db=args.snr,
        n_snapshots=args.snapshots,
        rng_seed=args.seed,
    )
    results = compare_health_states(
        scenario, failure_sets, grid_step_deg=args.grid_step
    )
    labels = [
        "healthy" if not fs else "fail {" + ",".join(str(p) for p in fs) + "}"
        for fs in failure_sets
    ]
    if args.svg:
        series = [
            (label, res.grid_deg, res.spectrum_db())
            for label, res in zip(labels, results)
        ]
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg_spectra_overlay(series, true_angles_deg=angles))
    if args.format == "json":
        payload = serialize.doa_run_payload(
            arr,
            angles,
            args.snr,
            args.snapshots,
            args.seed,
            args.grid_step,
            failure_sets,
            results,
        )
        _emit(to_json(payload), args.output)
        return 0
    lines = []
    for label, res in zip(labels, results):
        rmse = f"{res.rmse_deg:.3f} deg" if res.rmse_deg is not None else "n/a"
        lines.append(
            f"{label:<16} matched {len(res.matched)}/{len(angles)}  "
            f"missed {len(res.missed)}  ghosts {len(res.ghosts)}  rmse {rmse}  "
            f"(central ULA bound {res.central_ula_bound})"
        )
    _emit("\n".join(lines), args.output)
    return 0


def cmd_serve(args) -> int:
    from .service import run_server

    run_server(host=args.host, port=args.port, static_dir=args.static_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coarray",
        description=(
            "Difference-coarray robustness analysis for sparse linear arrays: "
            "weight functions, hidden-essential-sensor detection, 2FRA family "
            "audits, and coarray MUSIC failure demos."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats, default_format):
        p.add_argument(
            "--format", choices=formats, default=default_format, help="output format"
        )
        p.add_argument("--output", help="write output to this file instead of stdout")
        p.add_argument(
            "--max-aperture",
            type=int,
            default=None,
            help="override the aperture cap (default from COARRAY_MAX_APERTURE "
            "or 100000)",
        )

    p = sub.add_parser("weights", help="weight function of an array")
    p.add_argument("positions", help='sensor positions, e.g. "[0 1 2 6 10 13]"')
    add_common(p, ["json", "csv", "svg", "human"], "human")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("analyze", help="two-fold redundancy verdict")
    p.add_argument("positions", help='sensor positions, e.g. "[0 1 5 6 12 13 14 15 16]"')
    p.add_argument(
        "--include-sweep-on-non-ddb",
        action="store_true",
        help="carry raw failure outcomes even when the array is not a DDB",
    )
    add_common(p, ["json", "human"], "human")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen-2fra", help="generate one closed-form 2FRA member")
    p.add_argument("n", type=int, help="sensor count (N >= 6)")
    add_common(p, ["json", "human"], "human")
    p.set_defaults(func=cmd_gen_2fra)

    p = sub.add_parser("scan", help="generate and audit a family range")
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.add_argument("--out", help="write the scan artifact to this path")
    p.add_argument(
        "--ceiling",
        type=int,
        default=DEFAULT_SCAN_CEILING,
        help="largest permitted N (default %(default)s)",
    )
    p.add_argument("--format", choices=["json", "csv", "human"], default="human")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("doa", help="coarray MUSIC healthy-vs-faulty comparison")
    p.add_argument("--array", required=True, help="sensor positions")
    p.add_argument(
        "--sources",
        required=True,
        help="source angles: a start:step:stop sweep or comma list of degrees; "
        "attach values starting with a dash as --sources=-20:4:20",
    )
    p.add_argument(
        "--fail",
        action="append",
        default=[],
        help='failure set, e.g. "16" or "16,17" or "none"; repeatable',
    )
    p.add_argument("--snr", type=float, default=DEFAULT_SNR_DB, help="per-source SNR in dB")
    p.add_argument("--snapshots", type=int, default=DEFAULT_SNAPSHOTS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid-step", type=float, default=DEFAULT_GRID_STEP_DEG)
    p.add_argument(
        "--allow-edge",
        action="store_true",
        help="permit failing the edge sensors 0 and L",
    )
    p.add_argument("--svg", help="write an overlay plot of all spectra to this path")
    add_common(p, ["json", "human"], "human")
    p.set_defaults(func=cmd_doa)

    p = sub.add_parser("serve", help="run the local HTTP service and web UI")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8008)
    p.add_argument("--static-dir", default=None, help="directory of web UI assets")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CoarrayError as exc:
        print(to_json(exc.envelope()), file=sys.stderr)
        return 2 if isinstance(exc, InputError) else 1
    except OSError as exc:
        print(
            to_json({"code": "IO_ERROR", "message": str(exc)}), file=sys.stderr
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
