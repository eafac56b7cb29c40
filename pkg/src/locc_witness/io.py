"""Problem and report files: JSON with [re, im] amplitude pairs.

Complex numbers are serialized as pairs of decimal reals (never polar
form), layouts as ordered label-to-dimension maps, so files round-trip
losslessly through the parser.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .states import PureState, SubsystemLayout
from .witness import (
    ALL_PRODUCT,
    CERTIFIED_INDISTINGUISHABLE,
    CONTAINS_ENTANGLED,
    INCONCLUSIVE,
    PROTOCOL_DISTINGUISHES,
    PROTOCOL_FAILS,
    WitnessProblem,
    WitnessReport,
)

VERDICTS = frozenset(
    {
        CERTIFIED_INDISTINGUISHABLE,
        INCONCLUSIVE,
        ALL_PRODUCT,
        CONTAINS_ENTANGLED,
        PROTOCOL_DISTINGUISHES,
        PROTOCOL_FAILS,
    }
)

_PROB_FILE_TOL = 1e-8


class ProblemFileError(ValueError):
    """Parse or validation failure, annotated with its source location."""

    def __init__(self, source: str, where: str, message: str) -> None:
        self.source = source
        self.where = where
        super().__init__(f"{source}: {where}: {message}")


@dataclass
class ParsedProblem:
    """A problem file after parsing: states plus optional detector block."""

    source: str
    states: list[PureState]
    state_names: list[str]
    detectors: list[PureState] | None = None
    detector_names: list[str] | None = None
    probs: list[float] | None = None
    options: dict = field(default_factory=dict)
    description: str | None = None
    expect: dict | None = None
    notes: list[str] = field(default_factory=list)

    def witness_problem(self) -> WitnessProblem:
        if self.detectors is None or self.probs is None:
            raise ProblemFileError(self.source, "detectors", "detectors block is required")
        return WitnessProblem(tuple(self.states), tuple(self.detectors), tuple(self.probs))

    def normalization_warnings(self) -> list[str]:
        out = []
        groups = [("state", self.states, self.state_names)]
        if self.detectors:
            groups.append(("detector", self.detectors, self.detector_names))
        for kind, group, names in groups:
            for name, s in zip(names, group):
                if abs(s.input_norm - 1.0) > 1e-6:
                    out.append(f"{kind} {name}: input norm {s.input_norm:.9g} (renormalized)")
        return out


def _parse_layout(doc, source: str, where: str) -> SubsystemLayout:
    if not isinstance(doc, dict) or not doc:
        raise ProblemFileError(source, where, "layout must be a nonempty label-to-dimension map")
    parts = []
    for label, dim in doc.items():
        if not isinstance(dim, int) or dim < 1:
            raise ProblemFileError(source, f"{where}.{label}", f"dimension must be a positive integer, got {dim!r}")
        parts.append((str(label), dim))
    try:
        return SubsystemLayout(tuple(parts))
    except ValueError as exc:
        raise ProblemFileError(source, where, str(exc)) from exc


def _parse_states(doc, layout: SubsystemLayout, source: str, where: str):
    if not isinstance(doc, list) or not doc:
        raise ProblemFileError(source, where, "states must be a nonempty list")
    states, names = [], []
    for i, entry in enumerate(doc):
        loc = f"{where}[{i}]"
        if not isinstance(entry, dict) or "amplitudes" not in entry:
            raise ProblemFileError(source, loc, "each state needs an 'amplitudes' field")
        name = str(entry.get("name", f"state{i}"))
        raw = entry["amplitudes"]
        if not isinstance(raw, list) or len(raw) != layout.dim:
            got = len(raw) if isinstance(raw, list) else type(raw).__name__
            raise ProblemFileError(
                source, f"{loc}.amplitudes", f"expected {layout.dim} amplitudes for layout {layout}, got {got}"
            )
        amps = np.empty(layout.dim, dtype=complex)
        for j, pair in enumerate(raw):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, (int, float)) for v in pair)
            ):
                raise ProblemFileError(
                    source, f"{loc}.amplitudes[{j}]", f"amplitudes must be [re, im] pairs, got {pair!r}"
                )
            amps[j] = complex(pair[0], pair[1])
        try:
            states.append(PureState(layout, amps))
        except ValueError as exc:
            raise ProblemFileError(source, loc, str(exc)) from exc
        names.append(name)
    return states, names


def parse_problem(doc: dict, source: str = "<memory>") -> ParsedProblem:
    if not isinstance(doc, dict):
        raise ProblemFileError(source, "$", "top level must be a JSON object")
    for key in ("layout", "states"):
        if key not in doc:
            raise ProblemFileError(source, key, "required field is missing")
    layout = _parse_layout(doc["layout"], source, "layout")
    states, names = _parse_states(doc["states"], layout, source, "states")
    parsed = ParsedProblem(
        source=source,
        states=states,
        state_names=names,
        options=dict(doc.get("options", {})),
        description=doc.get("description"),
        expect=doc.get("expect"),
    )

    if "detectors" in doc:
        block = doc["detectors"]
        if not isinstance(block, dict):
            raise ProblemFileError(source, "detectors", "detectors must be an object")
        for key in ("layout", "states", "probs"):
            if key not in block:
                raise ProblemFileError(source, f"detectors.{key}", "required field is missing")
        det_layout = _parse_layout(block["layout"], source, "detectors.layout")
        dets, det_names = _parse_states(block["states"], det_layout, source, "detectors.states")
        probs = block["probs"]
        if not isinstance(probs, list) or not all(isinstance(p, (int, float)) for p in probs):
            raise ProblemFileError(source, "detectors.probs", "probs must be a list of numbers")
        if len(probs) != len(dets):
            raise ProblemFileError(
                source, "detectors.probs", f"{len(probs)} probabilities for {len(dets)} detectors"
            )
        probs = [float(p) for p in probs]
        if min(probs, default=0.0) < 0:
            raise ProblemFileError(source, "detectors.probs", f"negative probability {min(probs)!r}")
        total = sum(probs)
        if abs(total - 1.0) > _PROB_FILE_TOL:
            raise ProblemFileError(
                source, "detectors.probs", f"probabilities sum to {total!r}, expected 1 within {_PROB_FILE_TOL}"
            )
        if abs(total - 1.0) > 1e-12:
            probs = [p / total for p in probs]
            parsed.notes.append(f"probabilities renormalized from sum {total!r}")
        parsed.detectors = dets
        parsed.detector_names = det_names
        parsed.probs = probs

    return parsed


def load_problem(path) -> ParsedProblem:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemFileError(str(path), "$", str(exc)) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(str(path), f"line {exc.lineno}, column {exc.colno}", exc.msg) from exc
    return parse_problem(doc, source=str(path))


def _amplitudes_to_json(state: PureState) -> list[list[float]]:
    return [[float(a.real), float(a.imag)] for a in state.amplitudes]


def _layout_to_json(layout: SubsystemLayout) -> dict:
    return {label: dim for label, dim in layout.parts}


def problem_to_dict(problem: WitnessProblem, state_names=None, detector_names=None) -> dict:
    state_names = state_names or [f"state{i}" for i in range(len(problem.states))]
    detector_names = detector_names or [f"detector{i}" for i in range(len(problem.detectors))]
    return {
        "layout": _layout_to_json(problem.state_layout),
        "states": [
            {"name": n, "amplitudes": _amplitudes_to_json(s)}
            for n, s in zip(state_names, problem.states)
        ],
        "detectors": {
            "layout": _layout_to_json(problem.detector_layout),
            "states": [
                {"name": n, "amplitudes": _amplitudes_to_json(s)}
                for n, s in zip(detector_names, problem.detectors)
            ],
            "probs": [float(p) for p in problem.probs],
        },
    }


def states_to_dict(states, names=None, description=None) -> dict:
    states = list(states)
    names = names or [f"state{i}" for i in range(len(states))]
    doc = {
        "layout": _layout_to_json(states[0].layout),
        "states": [
            {"name": n, "amplitudes": _amplitudes_to_json(s)} for n, s in zip(names, states)
        ],
    }
    if description:
        doc = {"description": description, **doc}
    return doc


def witness_report_to_dict(report: WitnessReport) -> dict:
    return {
        "verdict": report.verdict,
        "margin": report.margin,
        "tol": report.tol,
        "source_schmidt": [float(v) for v in report.source_schmidt],
        "target_average": [float(v) for v in report.target_average],
        "partial_sums": {
            "source": list(report.source_partial_sums),
            "average": list(report.average_partial_sums),
        },
        "warnings": list(report.warnings),
    }


def write_report(path, doc: dict) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_report(path) -> dict:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ProblemFileError(str(path), f"line {exc.lineno}, column {exc.colno}", exc.msg) from exc
    if not isinstance(doc, dict):
        raise ProblemFileError(str(path), "$", "report must be a JSON object")
    verdict = doc.get("verdict")
    if verdict is not None and verdict not in VERDICTS:
        raise ProblemFileError(str(path), "verdict", f"unknown verdict {verdict!r}")
    return doc


def fixture_dir() -> Path:
    return Path(resources.files("locc_witness") / "fixtures")


def list_fixtures() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.json"))


def fixture_path(name: str) -> Path:
    stem = name[:-5] if name.endswith(".json") else name
    path = fixture_dir() / f"{stem}.json"
    if not path.exists():
        raise ProblemFileError(name, "$", f"unknown fixture; available: {', '.join(list_fixtures())}")
    return path


def resolve_input(text: str) -> Path:
    """Interpret a CLI input as a filesystem path, else a bundled fixture name."""
    path = Path(text)
    if path.exists():
        return path
    try:
        return fixture_path(text)
    except ProblemFileError:
        raise ProblemFileError(text, "$", "no such file and no bundled fixture with this name") from None
