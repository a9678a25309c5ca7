"""
Argument grammar and dispatch behind ``manage.py planar``.

``run(argv)`` drives the same parser in-process and returns a CommandResult
instead of writing to stdout; exit codes are 0 (success), 1 (domain error,
class name on stderr) and 2 (usage error).
"""

import argparse
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path

from django.core.management.base import CommandError, CommandParser
from rest_framework.renderers import JSONRenderer

from core.corpus import fixture
from core.embedding import PlanarEmbedding, parse_embedding, serialize_embedding
from core.exceptions import InputFileError, PlanarError
from core.metrics import face_summary
from core.serializers import FacesReportSerializer, FixtureSerializer

from .bounds import bounds_report
from .exceptions import TheoremCheckFailed
from .grinberg import grinberg_set, grinberg_set_of, repeat_lower_bound
from .reduction import reduction_report
from .serializers import (
    BoundsReportSerializer,
    GrinbergReportSerializer,
    ReductionReportSerializer,
    SolveSerializer,
    SpectrumSerializer,
    WalkStatsSerializer,
)
from .walks import (
    ClosedWalk,
    hamiltonian_number_exact,
    hamiltonian_spectrum,
    parse_walk,
    serialize_walk,
    validate_walk,
)

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
DOMAIN_ERROR = 1


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    text: str = ""
    json: str | None = None
    stderr: str = ""


# ---------------------------------------------------------------------------
# Argument grammar
# ---------------------------------------------------------------------------


def _face_lengths(value: str) -> list[int]:
    try:
        return [int(token) for token in value.split(",") if token.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {value!r}"
        ) from None


def add_arguments(parser: argparse.ArgumentParser) -> None:
    output_flags = (
        ("--json", "Print one JSON document instead of text."),
        ("--quiet", "Suppress the human-readable text."),
    )
    for flag, help_text in output_flags:
        parser.add_argument(flag, action="store_true", help=help_text)
    # Repeated after the subcommand; SUPPRESS keeps an absent flag from
    # resetting the value given before it.
    output = argparse.ArgumentParser(add_help=False)
    for flag, help_text in output_flags:
        output.add_argument(flag, action="store_true", default=argparse.SUPPRESS, help=help_text)

    # CommandParser hands called_from_command_line down to its subparsers
    commands = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    faces = commands.add_parser("faces", parents=[output], help="Trace the faces of a graph file.")
    faces.add_argument("file")

    grinberg = commands.add_parser(
        "grinberg", parents=[output], help="Grinberg set of a graph file or a face-length list."
    )
    source = grinberg.add_mutually_exclusive_group(required=True)
    source.add_argument("file", nargs="?")
    source.add_argument("--face-lengths", type=_face_lengths, metavar="L1,L2,...")

    bounds = commands.add_parser("bounds", parents=[output], help="Bounds on the Hamiltonian number.")
    bounds.add_argument("file")
    bounds.add_argument("--solve", action="store_true", help="Run the exact solver as well.")
    bounds.add_argument("--limit", type=int, default=None)
    bounds.add_argument("--walk", metavar="WFILE", help="Witness walk file.")

    solve = commands.add_parser("solve", parents=[output], help="Exact Hamiltonian number.")
    solve.add_argument("file")
    solve.add_argument("--limit", type=int, default=None)

    spectrum = commands.add_parser("spectrum", parents=[output], help="Hamiltonian spectrum.")
    spectrum.add_argument("file")
    spectrum.add_argument("--limit", type=int, default=None)

    verify = commands.add_parser("verify", parents=[output], help="Validate a closed spanning walk.")
    verify.add_argument("file")
    verify.add_argument("--walk", metavar="WFILE", required=True)

    for name, help_text in (
        ("reduce", "Reduction of a graph relative to a walk."),
        ("theorem-check", "Reduction plus a pass/fail verdict on the repeat bound."),
    ):
        command = commands.add_parser(name, parents=[output], help=help_text)
        command.add_argument("file")
        command.add_argument("--walk", metavar="WFILE", required=True)
        command.add_argument("--outer-face", type=int, default=None, metavar="K")

    corpus = commands.add_parser("corpus", parents=[output], help="Emit a corpus fixture.")
    corpus.add_argument("name")
    corpus.add_argument("params", nargs="*")
    corpus.add_argument("--walks", action="store_true", help="Emit the witness walks instead.")


# ---------------------------------------------------------------------------
# Subcommands: each returns (text, JSON-ready data)
# ---------------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from exc


def _graph(options) -> PlanarEmbedding:
    return parse_embedding(_read(options["file"]))


def _walk(options) -> ClosedWalk:
    return parse_walk(_read(options["walk"]))


def _numbers(values) -> str:
    return " ".join(str(value) for value in values)


def _faces(options):
    summary = face_summary(_graph(options))
    lines = [
        f"n={summary.num_vertices} m={summary.num_edges} faces={len(summary.face_lengths)}",
        f"face lengths: {_numbers(summary.face_lengths)}",
    ]
    if summary.bridges:
        lines.append(f"bridges: {_numbers(summary.bridges)}")
    return lines, FacesReportSerializer(summary).data


def _grinberg(options):
    if options["face_lengths"] is not None:
        s = grinberg_set(options["face_lengths"])
    else:
        s = grinberg_set_of(_graph(options))
    lines = [
        f"Grinberg set: {_numbers(s.values)}",
        f"g={s.g}",
        f"repeats >= {repeat_lower_bound(s.g)}",
    ]
    return lines, GrinbergReportSerializer(s).data


def _not_applicable(applicable: bool) -> str:
    return "" if applicable else ", not applicable"


def _bounds(options):
    witness = _walk(options) if options["walk"] else None
    report = bounds_report(
        _graph(options), solve=options["solve"], limit=options["limit"], witness=witness
    )
    lines = [
        f"n={report.n}",
        f"lower: elementary {report.lower_elementary}, "
        f"Grinberg {report.lower_grinberg} (g={report.grinberg_number}"
        f"{', doubled' if report.grinberg_on_doubled else ''})",
        f"upper: elementary {report.upper_elementary}, "
        f"Goodman-Hedetniemi {report.upper_gh} (k={report.connectivity}, d={report.diameter}"
        f"{_not_applicable(report.gh_applicable)}), "
        f"Bermond {report.upper_bermond} (c={report.bermond_c}"
        f"{_not_applicable(report.bermond_applicable)})",
    ]
    if report.witness_length is not None:
        lines.append(f"witness walk: L={report.witness_length}")
    if report.certified:
        lines.append(f"h={report.exact} ({report.certificate})")
    else:
        lines.append(f"h in [{report.lower}, {report.upper}]")
    return lines, BoundsReportSerializer(report).data


def _solve(options):
    solved = hamiltonian_number_exact(_graph(options), limit=options["limit"])
    lines = [
        f"h={solved.h}",
        f"ordering: {_numbers(solved.ordering.vertices)}",
        serialize_walk(solved.walk).rstrip("\n"),
    ]
    return lines, SolveSerializer(solved).data


def _spectrum(options):
    g = _graph(options)
    spectrum = hamiltonian_spectrum(g, limit=options["limit"])
    data = {"n": g.num_vertices, "spectrum": spectrum, "h": spectrum[0]}
    return [f"spectrum: {_numbers(spectrum)}", f"h={spectrum[0]}"], SpectrumSerializer(data).data


def _verify(options):
    stats = validate_walk(_graph(options), _walk(options))
    repeated = [f"{v}x{m}" for v, m in enumerate(stats.multiplicities, start=1) if m]
    lines = [f"closed spanning walk: L={stats.length} repeats={stats.repeats}"]
    if repeated:
        lines.append(f"repeated: {' '.join(repeated)}")
    return lines, WalkStatsSerializer(stats).data


def _sign(value: int) -> str:
    return "+" if value > 0 else "-"


def _reduce(options):
    report = reduction_report(_graph(options), _walk(options), outer_face=options["outer_face"])
    lines = [
        f"Phi={report.phi} sum_m={report.sum_m} two-gons={report.two_gons}",
        f"n+={report.n_plus} n-={report.n_minus} |Delta|={report.delta_abs} "
        f"nu={report.nu} pi={report.pi}",
        f"f={report.f} in Grinberg set {_numbers(report.grinberg_set)}"
        if report.f in report.grinberg_set
        else f"f={report.f} NOT in Grinberg set {_numbers(report.grinberg_set)}",
        f"epsilon: {' '.join(_sign(e) for e in report.epsilon)}",
        "checks: " + ", ".join(
            f"{name.removesuffix('_ok')} {'ok' if ok else 'FAILED'}"
            for name, ok in report.checks.items()
        ),
    ]
    return lines, report


def _reduce_subcommand(options):
    lines, report = _reduce(options)
    return lines, ReductionReportSerializer(report).data


def _theorem_check(options):
    lines, report = _reduce(options)
    if not report.all_ok:
        failed = [name for name, ok in report.checks.items() if not ok]
        raise TheoremCheckFailed(f"failed checks: {', '.join(failed)}")
    half_g = repeat_lower_bound(report.grinberg_set[0])
    verdict = f"ρ={report.sum_m} ≥ g/2={half_g}"
    if report.sum_m == half_g:
        verdict += " (tight)"
    verdict += f"; f={report.f}"
    data = dict(ReductionReportSerializer(report).data)
    data["verdict"] = verdict
    return [*lines, verdict], data


def _corpus(options):
    item = fixture(options["name"], *options["params"])
    if options["walks"]:
        lines = [serialize_walk(ClosedWalk(walk)).rstrip("\n") for walk in item.walks]
    elif item.embedding is not None:
        lines = [serialize_embedding(item.embedding).rstrip("\n")]
    else:
        lines = [f"# {item.name}: face vector only", f"# faces {_numbers(item.face_lengths)}"]
    return lines, FixtureSerializer(item).data


SUBCOMMANDS: dict[str, Callable] = {
    "faces": _faces,
    "grinberg": _grinberg,
    "bounds": _bounds,
    "solve": _solve,
    "spectrum": _spectrum,
    "verify": _verify,
    "reduce": _reduce_subcommand,
    "theorem-check": _theorem_check,
    "corpus": _corpus,
}


def render_json(data) -> str:
    return JSONRenderer().render(data).decode("utf-8")


def dispatch(options) -> CommandResult:
    """Run one parsed subcommand; domain errors propagate as PlanarError."""
    lines, data = SUBCOMMANDS[options["subcommand"]](options)
    if options["json"]:
        return CommandResult(0, json=render_json(data))
    text = "" if options["quiet"] else "\n".join(lines) + "\n"
    return CommandResult(0, text=text)


def run(argv: Sequence[str]) -> CommandResult:
    parser = CommandParser(prog="manage.py planar", called_from_command_line=False)
    add_arguments(parser)
    try:
        options = vars(parser.parse_args([str(arg) for arg in argv]))
    except CommandError as exc:
        return CommandResult(USAGE_ERROR, stderr=str(exc))
    try:
        return dispatch(options)
    except PlanarError as exc:
        logger.debug("planar %s failed", options["subcommand"], exc_info=True)
        return CommandResult(DOMAIN_ERROR, stderr=f"{exc.name}: {exc}")
