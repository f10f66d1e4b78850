"""Command-line front door: rank, explain, simulate and serve.

Exit codes (machine-stable, also listed in --help):
  0  success
  2  bad usage or invalid flag values
  3  input/output failure (message names the path)
  4  malformed input (CSV/JSON syntax)
  5  invalid assessment data (range, duplicates, dimensions, ...)
  6  unknown alternative or attribute id
  7  server could not bind

Every failure prints one line to stderr, prefixed with the error code.
Set FSPRANK_FIXTURE_DIR to resolve bare input paths against a fixture
directory; pass "-" as the input path to read standard input.
"""

from __future__ import annotations

import argparse
import os
import socket
import sys
from pathlib import Path

from . import io as fio
from .core import Measure, explain, rank, restrict_attributes
from .errors import (
    DegenerateScoresError,
    DimensionMismatchError,
    DuplicateIdError,
    EmptyAttributeSetError,
    EmptyUniverseError,
    FsprankError,
    GradeOutOfRangeError,
    GradePrecisionError,
    InvalidIdError,
    ParseError,
    UnknownAlternativeError,
    UnknownAttributeError,
)
from .simulate import SimulationConfig, emit_report, run_simulation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_PARSE = 4
EXIT_VALIDATION = 5
EXIT_UNKNOWN_ID = 6
EXIT_BIND = 7

_EXIT_BY_ERROR = {
    ParseError: EXIT_PARSE,
    GradeOutOfRangeError: EXIT_VALIDATION,
    GradePrecisionError: EXIT_VALIDATION,
    DimensionMismatchError: EXIT_VALIDATION,
    DuplicateIdError: EXIT_VALIDATION,
    InvalidIdError: EXIT_VALIDATION,
    EmptyUniverseError: EXIT_VALIDATION,
    EmptyAttributeSetError: EXIT_VALIDATION,
    DegenerateScoresError: EXIT_VALIDATION,
    UnknownAlternativeError: EXIT_UNKNOWN_ID,
    UnknownAttributeError: EXIT_UNKNOWN_ID,
}

FIXTURE_DIR_ENV = "FSPRANK_FIXTURE_DIR"
STATE_DIR_ENV = "FSPRANK_STATE_DIR"


def _fail(code: str, message: str, status: int) -> int:
    print(f"{code}: {message}", file=sys.stderr)
    return status


def _error_status(exc: FsprankError) -> int:
    return _EXIT_BY_ERROR.get(type(exc), EXIT_VALIDATION)


def _resolve_input(path: str) -> Path:
    candidate = Path(path)
    if candidate.exists():
        return candidate
    fixture_dir = os.environ.get(FIXTURE_DIR_ENV)
    if fixture_dir and not candidate.is_absolute():
        fallback = Path(fixture_dir) / path
        if fallback.exists():
            return fallback
    return candidate  # let open() raise with the original path


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return _resolve_input(path).read_bytes()


def _input_format(path: str, override: str | None) -> str:
    if override:
        return override
    if path != "-" and path.lower().endswith(".json"):
        return fio.JSON_FORMAT
    return fio.CSV_FORMAT


def _write(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


def _render_table_text(table) -> bytes:
    header = ("rank", "alternative", "gamma1", "gamma2", "gamma3", "tie_group")
    rows = [
        (
            str(r.rank),
            r.alternative,
            f"{fio.format_fraction(r.gamma1)} ({fio.fraction_ratio(r.gamma1)})",
            str(r.gamma2),
            f"{fio.format_fraction(r.gamma3)} ({fio.fraction_ratio(r.gamma3)})",
            str(r.tie_group),
        )
        for r in table.rows
    ]
    widths = [max(len(header[c]), *(len(row[c]) for row in rows)) for c in range(len(header))]
    lines = ["  ".join(h.ljust(widths[c]) for c, h in enumerate(header))]
    lines.append("  ".join("-" * widths[c] for c in range(len(header))))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)))
    lines.append(f"measure: {table.measure.value}  source: {table.source_digest}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _render_explanation_text(report) -> bytes:
    lines = [f"alternative: {report.alternative}"]
    lines.append(
        f"dom={report.scores.dom} sub={report.scores.sub} equity={report.scores.equity}"
    )
    lines.append(
        f"gamma1={fio.format_fraction(report.gamma1)} ({fio.fraction_ratio(report.gamma1)})  "
        f"gamma2={report.gamma2}  "
        f"gamma3={fio.format_fraction(report.gamma3)} ({fio.fraction_ratio(report.gamma3)})"
    )
    labels = dict(zip(report.attributes, report.attribute_labels or report.attributes))

    def show(attrs) -> str:
        return "{" + ",".join(attrs) + "}"

    for opp in report.opponents:
        lines.append(
            f"vs {opp.opponent}: rho={show(opp.rho)} chi={show(opp.chi)} eq={show(opp.eq)}"
        )
    if report.attribute_labels is not None:
        lines.append("attributes:")
        for attribute in report.attributes:
            lines.append(f"  {attribute}: {labels[attribute]}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_explanation(report, format: str) -> bytes:
    if format == "text":
        return _render_explanation_text(report)
    import json

    return (
        json.dumps(fio.explanation_payload(report), ensure_ascii=False, indent=2) + "\n"
    ).encode("utf-8")


def _cmd_rank(args: argparse.Namespace) -> int:
    data = _read_input(args.input)
    fss = fio.parse_assessment(data, _input_format(args.input, args.input_format))
    if args.keep:
        fss = restrict_attributes(fss, args.keep.split(","))
    table = rank(fss, Measure.from_text(args.measure))
    out_format = args.format or ("table" if sys.stdout.isatty() else "csv")
    if out_format == "table":
        _write(_render_table_text(table))
    else:
        _write(fio.emit_decision_table(table, out_format))
    return EXIT_OK


def _cmd_explain(args: argparse.Namespace) -> int:
    data = _read_input(args.input)
    fss = fio.parse_assessment(data, _input_format(args.input, args.input_format))
    report = explain(fss, args.alternative)
    _write(render_explanation(report, args.format))
    return EXIT_OK


_SIM_DEFAULTS = {
    "scenarios": 1000,
    "alternatives": 10,
    "attributes": 20,
    "grid_step": "0.1",
    "seed": 0,
    "measures": "g1,g2,g3",
}


def _cmd_simulate(args: argparse.Namespace) -> int:
    import json

    from .core import Grade

    values = dict(_SIM_DEFAULTS)
    if args.config:
        loaded = json.loads(_read_input(args.config))
        unknown = set(loaded) - set(values)
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if "measures" in loaded and isinstance(loaded["measures"], list):
            loaded["measures"] = ",".join(loaded["measures"])
        values.update(loaded)
    # explicit flags beat both defaults and the config file
    for name in _SIM_DEFAULTS:
        given = getattr(args, name)
        if given is not None:
            values[name] = given

    measures = tuple(Measure.from_text(m) for m in str(values["measures"]).split(","))
    config = SimulationConfig(
        scenarios=int(values["scenarios"]),
        n_alternatives=int(values["alternatives"]),
        n_attributes=int(values["attributes"]),
        grid_step=Grade.parse(str(values["grid_step"])),
        seed=int(values["seed"]),
        measures=measures,
    )
    report = run_simulation(config)
    out_format = args.format or ("histogram" if sys.stdout.isatty() else "csv")
    _write(emit_report(report, out_format))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    # Probe the port first so an occupied port fails fast with a clear code.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, args.port))
    except OSError as exc:
        probe.close()
        return _fail("BIND_ERROR", f"cannot bind {args.host}:{args.port}: {exc}", EXIT_BIND)
    probe.close()

    import uvicorn

    from .service import create_app

    state_dir = args.state_dir or os.environ.get(STATE_DIR_ENV)
    app = create_app(
        state_dir=Path(state_dir) if state_dir else None,
        cors_origins=tuple(args.cors_origin) if args.cors_origin else ("*",),
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fsprank",
        description="Rank graded alternatives by pairwise dominance over fuzzy soft sets.",
        epilog="Exit codes" + __doc__.split("Exit codes", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="rank an assessment matrix")
    p_rank.add_argument("input", help="assessment path (csv/json), or - for stdin")
    p_rank.add_argument("--measure", choices=["g1", "g2", "g3"], default="g1")
    p_rank.add_argument("--format", choices=["csv", "json", "table"], default=None,
                        help="default: table on a terminal, csv when redirected")
    p_rank.add_argument("--input-format", choices=["csv", "json"], default=None)
    p_rank.add_argument("--keep", metavar="ATTRS", default=None,
                        help="comma-separated attribute ids to keep (eliminates the rest)")
    p_rank.set_defaults(func=_cmd_rank)

    p_explain = sub.add_parser("explain", help="explain one alternative's standing")
    p_explain.add_argument("input", help="assessment path (csv/json), or - for stdin")
    p_explain.add_argument("alternative", help="alternative id to explain")
    p_explain.add_argument("--format", choices=["text", "json"], default="text")
    p_explain.add_argument("--input-format", choices=["csv", "json"], default=None)
    p_explain.set_defaults(func=_cmd_explain)

    p_sim = sub.add_parser("simulate", help="run the seeded measure-bias study")
    p_sim.add_argument("--config", default=None, metavar="PATH",
                       help="JSON file with scenarios/alternatives/attributes/"
                            "grid_step/seed/measures; explicit flags override it")
    p_sim.add_argument("--scenarios", type=int, default=None,
                       help=f"default {_SIM_DEFAULTS['scenarios']}")
    p_sim.add_argument("--alternatives", type=int, default=None,
                       help=f"default {_SIM_DEFAULTS['alternatives']}")
    p_sim.add_argument("--attributes", type=int, default=None,
                       help=f"default {_SIM_DEFAULTS['attributes']}")
    p_sim.add_argument("--grid-step", dest="grid_step", default=None,
                       help=f"default {_SIM_DEFAULTS['grid_step']}")
    p_sim.add_argument("--seed", type=int, default=None,
                       help=f"default {_SIM_DEFAULTS['seed']}")
    p_sim.add_argument("--measures", default=None,
                       help="comma-separated subset of g1,g2,g3")
    p_sim.add_argument("--format", choices=["csv", "json", "histogram"], default=None,
                       help="default: histogram on a terminal, csv when redirected")
    p_sim.set_defaults(func=_cmd_simulate)

    p_serve = sub.add_parser("serve", help="serve the what-if HTTP API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--state-dir", default=None,
                         help=f"session snapshot directory (or ${STATE_DIR_ENV})")
    p_serve.add_argument("--cors-origin", action="append", default=None,
                         help="allowed CORS origin, repeatable (default: *)")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FsprankError as exc:
        return _fail(exc.code, str(exc), _error_status(exc))
    except ValueError as exc:
        return _fail("INVALID_CONFIG", str(exc), EXIT_USAGE)
    except OSError as exc:
        name = getattr(exc, "filename", None)
        detail = f"{exc.strerror or exc}: {name}" if name else str(exc)
        return _fail("IO_ERROR", detail, EXIT_IO)


if __name__ == "__main__":
    raise SystemExit(main())
