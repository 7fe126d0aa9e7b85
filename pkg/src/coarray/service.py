"""Embedded local HTTP JSON service and static host for the web UI.

All handlers call the same pure library functions and the same serializers
as the CLI, so responses for identical inputs are byte-identical across the
two surfaces. The service keeps no per-request state beyond configuration
loaded at startup; requests may interleave freely (threaded server).

Endpoints (see docs/api.md for the full reference):

* ``POST /api/weights``   weight function + coarray profile
* ``POST /api/analyze``   robustness verdict
* ``GET  /api/family/{n}`` one generated family member
* ``GET  /api/scan?from=&to=`` family audit rows + periodicity summary
* ``POST /api/doa``       coarray MUSIC comparison across failure sets
* ``GET  /``              static web UI assets

Errors return ``{"code": ..., "message": ..., "detail": ...}`` with status
400 for input errors, 422 for domain errors, and 500 otherwise. Request
bodies with unknown fields are rejected.
"""

from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from . import serialize
from .arrays import coarray_profile, parse_and_normalize, parse_positions_text, weight_table
from .errors import (
    CoarrayError,
    InvalidRequest,
    RangeTooLarge,
    ResponseTooLarge,
    http_status,
)
from .family import DEFAULT_SCAN_CEILING, generate_2fra, periodicity_report, scan_family
from .music import (
    DEFAULT_GRID_STEP_DEG,
    DEFAULT_MATCH_TOLERANCE_DEG,
    DEFAULT_SNAPSHOTS,
    DEFAULT_SNR_DB,
    DOAScenario,
    compare_health_states,
)
from .robustness import classify
from .serialize import to_json

#: Largest (to - from) accepted by one scan request.
SCAN_SPAN_LIMIT = 1000

#: Cap on grid points times failure sets per DOA request (response size guard).
DOA_MAX_POINTS = 200_000

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".svg": "image/svg+xml",
    ".json": "application/json",
    ".map": "application/json",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


def default_static_dir() -> Path:
    return Path(__file__).parent / "static"


def _check_fields(body: dict, required: dict, optional: dict, where: str = "request"):
    """Validate presence and types; unknown fields are rejected."""
    if not isinstance(body, dict):
        raise InvalidRequest(f"{where} body must be a JSON object")
    unknown = set(body) - set(required) - set(optional)
    if unknown:
        raise InvalidRequest(
            f"unknown field(s) in {where}: {sorted(unknown)}",
            detail={"unknown": sorted(unknown)},
        )
    for name, types in required.items():
        if name not in body:
            raise InvalidRequest(f"missing required field {name!r} in {where}")
        if not isinstance(body[name], types):
            raise InvalidRequest(f"field {name!r} has the wrong type")
    for name, types in optional.items():
        if name in body and not isinstance(body[name], types):
            raise InvalidRequest(f"field {name!r} has the wrong type")


def _parse_options(body: dict) -> dict:
    options = body.get("options", {})
    _check_fields(
        options,
        required={},
        optional={"include_sweep_on_non_ddb": bool, "max_aperture": int},
        where="options",
    )
    return options


def _parse_body_array(body: dict, field: str, options: dict):
    raw = parse_positions_text(body[field])
    return parse_and_normalize(raw, max_aperture=options.get("max_aperture"))


def handle_weights(body: dict) -> dict:
    _check_fields(body, required={"positions": str}, optional={"options": dict})
    options = _parse_options(body)
    arr = _parse_body_array(body, "positions", options)
    wt = weight_table(arr)
    return serialize.weights_payload(arr, wt, coarray_profile(wt))


def handle_analyze(body: dict) -> dict:
    _check_fields(body, required={"positions": str}, optional={"options": dict})
    options = _parse_options(body)
    arr = _parse_body_array(body, "positions", options)
    report = classify(
        arr, sweep_on_non_ddb=bool(options.get("include_sweep_on_non_ddb", False))
    )
    return serialize.report_payload(report)


def handle_family(n: int) -> dict:
    config = generate_2fra(n)
    return serialize.family_payload(config, classify(config.positions))


def handle_scan(query: dict) -> dict:
    unknown = set(query) - {"from", "to"}
    if unknown:
        raise InvalidRequest(
            f"unknown query parameter(s): {sorted(unknown)}",
            detail={"unknown": sorted(unknown)},
        )
    try:
        n_from = int(query["from"][0])
        n_to = int(query["to"][0])
    except (KeyError, IndexError, ValueError):
        raise InvalidRequest("scan needs integer 'from' and 'to' query parameters")
    if n_to - n_from > SCAN_SPAN_LIMIT:
        raise RangeTooLarge(
            f"scan span {n_to - n_from} exceeds per-request limit {SCAN_SPAN_LIMIT}",
            detail={"span": n_to - n_from, "limit": SCAN_SPAN_LIMIT},
        )
    rows = scan_family(n_from, n_to, ceiling=DEFAULT_SCAN_CEILING)
    return serialize.scan_payload(rows, periodicity_report(rows))


_NUMBER = (int, float)


def handle_doa(body: dict) -> dict:
    _check_fields(
        body,
        required={"array": str, "sources": list},
        optional={
            "fail": list,
            "snr_db": _NUMBER,
            "snapshots": int,
            "seed": int,
            "grid_step": _NUMBER,
            "match_tolerance": _NUMBER,
        },
    )
    arr = parse_and_normalize(parse_positions_text(body["array"]))
    sources = body["sources"]
    if not all(isinstance(a, _NUMBER) for a in sources):
        raise InvalidRequest("'sources' must be a list of angles in degrees")
    failure_sets = body.get("fail", [[]])
    if not failure_sets:
        failure_sets = [[]]
    for fs in failure_sets:
        if not isinstance(fs, list) or not all(isinstance(p, int) for p in fs):
            raise InvalidRequest("'fail' must be a list of integer-position lists")
    grid_step = float(body.get("grid_step", DEFAULT_GRID_STEP_DEG))
    if grid_step <= 0:
        raise InvalidRequest("'grid_step' must be positive")
    n_grid = max(round(180.0 / grid_step) - 1, 0)
    if n_grid * len(failure_sets) > DOA_MAX_POINTS:
        raise ResponseTooLarge(
            "grid points x failure sets exceeds the response budget "
            f"({n_grid} x {len(failure_sets)} > {DOA_MAX_POINTS}); "
            "coarsen the grid or split the request",
            detail={"limit": DOA_MAX_POINTS},
        )
    scenario = DOAScenario(
        array=arr,
        source_angles_deg=tuple(float(a) for a in sources),
        snr_db=float(body.get("snr_db", DEFAULT_SNR_DB)),
        n_snapshots=int(body.get("snapshots", DEFAULT_SNAPSHOTS)),
        rng_seed=int(body.get("seed", 0)),
    )
    results = compare_health_states(
        scenario,
        [tuple(fs) for fs in failure_sets],
        grid_step_deg=grid_step,
        match_tolerance_deg=float(
            body.get("match_tolerance", DEFAULT_MATCH_TOLERANCE_DEG)
        ),
    )
    return serialize.doa_run_payload(
        arr,
        scenario.source_angles_deg,
        scenario.snr_db,
        scenario.n_snapshots,
        scenario.rng_seed,
        grid_step,
        failure_sets,
        results,
    )


class CoarrayRequestHandler(BaseHTTPRequestHandler):
    server_version = "coarray-service/0.1"
    protocol_version = "HTTP/1.1"

    # --- plumbing ---------------------------------------------------------

    def log_message(self, fmt, *args):
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    def _send_text(self, status: int, text: str, content_type: str):
        data = text.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def _send_json(self, status: int, payload):
        self._send_text(status, to_json(payload), "application/json")

    def _send_error_envelope(self, exc: CoarrayError):
        self._send_json(http_status(exc), exc.envelope())

    def _read_json_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise InvalidRequest("request body must be a JSON object")
        try:
            return json.loads(raw.decode("utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as err:
            raise InvalidRequest(f"malformed JSON body: {err}")

    def _dispatch(self, handler):
        try:
            payload = handler()
        except CoarrayError as exc:
            self._send_error_envelope(exc)
        except Exception as exc:  # pragma: no cover - defensive
            self._send_json(
                500, {"code": "INTERNAL_ERROR", "message": str(exc)}
            )
        else:
            self._send_json(200, payload)

    # --- routing -----------------------------------------------------------

    def do_POST(self):
        parsed = urlparse(self.path)
        route = parsed.path.rstrip("/")
        if route == "/api/weights":
            self._dispatch(lambda: handle_weights(self._read_json_body()))
        elif route == "/api/analyze":
            self._dispatch(lambda: handle_analyze(self._read_json_body()))
        elif route == "/api/doa":
            self._dispatch(lambda: handle_doa(self._read_json_body()))
        else:
            self._send_json(
                404, {"code": "NOT_FOUND", "message": f"no POST route {parsed.path}"}
            )

    def do_GET(self):
        parsed = urlparse(self.path)
        route = parsed.path
        if route.startswith("/api/family/"):
            tail = route[len("/api/family/") :]
            def run():
                try:
                    n = int(tail)
                except ValueError:
                    raise InvalidRequest(f"family size must be an integer, got {tail!r}")
                return handle_family(n)
            self._dispatch(run)
        elif route.rstrip("/") == "/api/scan":
            self._dispatch(lambda: handle_scan(parse_qs(parsed.query)))
        elif route.startswith("/api"):
            self._send_json(
                404, {"code": "NOT_FOUND", "message": f"no GET route {route}"}
            )
        else:
            self._serve_static(route)

    def _serve_static(self, route: str):
        static_root: Path = self.server.static_dir
        rel = route.lstrip("/") or "index.html"
        target = (static_root / rel).resolve()
        root = static_root.resolve()
        if root not in target.parents and target != root:
            self._send_json(404, {"code": "NOT_FOUND", "message": "no such asset"})
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._send_json(
                404, {"code": "NOT_FOUND", "message": f"no asset at {route}"}
            )
            return
        content_type = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        data = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def make_server(
    host: str = "127.0.0.1",
    port: int = 0,
    static_dir: str | os.PathLike | None = None,
    verbose: bool = False,
) -> ThreadingHTTPServer:
    """Build (but do not start) the service; port 0 picks an ephemeral port."""
    server = ThreadingHTTPServer((host, port), CoarrayRequestHandler)
    server.static_dir = Path(static_dir) if static_dir else default_static_dir()
    server.verbose = verbose
    return server


def run_server(
    host: str = "127.0.0.1",
    port: int = 8008,
    static_dir: str | os.PathLike | None = None,
):
    """Run the service until interrupted."""
    server = make_server(host, port, static_dir, verbose=True)
    print(f"coarray service listening on http://{host}:{server.server_port}/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
