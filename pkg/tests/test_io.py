import json

import numpy as np
import pytest

from locc_witness.catalog import bell_states, set_s_prime
from locc_witness.io import (
    ProblemFileError,
    fixture_path,
    list_fixtures,
    load_problem,
    load_report,
    parse_problem,
    problem_to_dict,
    resolve_input,
    states_to_dict,
    witness_report_to_dict,
    write_report,
)
from locc_witness.witness import WitnessProblem, check_witness

EXPECTED_FIXTURES = {
    "bell",
    "bell_joint",
    "bell_witness",
    "computational_2x2",
    "computational_3x3",
    "domino_basis",
    "omega_basis",
    "s",
    "s_prime",
    "s_prime_witness",
    "s_witness",
    "two_state",
}


def minimal_doc():
    return {
        "layout": {"A": 2, "B": 2},
        "states": [
            {"name": "ket00", "amplitudes": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]}
        ],
    }


class TestParsing:
    def test_minimal_roundtrip(self):
        parsed = parse_problem(minimal_doc())
        assert parsed.state_names == ["ket00"]
        assert parsed.states[0].layout.labels == ("A", "B")
        assert parsed.detectors is None

    def test_missing_layout(self):
        doc = minimal_doc()
        del doc["layout"]
        with pytest.raises(ProblemFileError, match="layout"):
            parse_problem(doc)

    def test_wrong_amplitude_count(self):
        doc = minimal_doc()
        doc["states"][0]["amplitudes"] = [[1.0, 0.0]]
        with pytest.raises(ProblemFileError, match=r"states\[0\]"):
            parse_problem(doc)

    def test_amplitude_must_be_pair(self):
        doc = minimal_doc()
        doc["states"][0]["amplitudes"][0] = [1.0]
        with pytest.raises(ProblemFileError, match=r"amplitudes\[0\]"):
            parse_problem(doc)

    def test_bad_probability_sum_rejected(self):
        doc = json.loads(fixture_path("bell_witness").read_text())
        doc["detectors"]["probs"] = [0.5, 0.5, 0.5, 0.5]
        with pytest.raises(ProblemFileError, match="probs"):
            parse_problem(doc)

    def test_probs_renormalized_within_file_tolerance(self):
        doc = json.loads(fixture_path("bell_witness").read_text())
        doc["detectors"]["probs"] = [0.25 + 2e-9, 0.25, 0.25, 0.25]
        parsed = parse_problem(doc)
        assert sum(parsed.probs) == pytest.approx(1.0, abs=1e-15)
        assert any("renormalized" in n for n in parsed.notes)

    def test_json_error_reports_line(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"layout": {"A": 2,\n  ???')
        with pytest.raises(ProblemFileError, match="line 2"):
            load_problem(bad)

    def test_unnormalized_amplitudes_flagged(self):
        doc = minimal_doc()
        doc["states"][0]["amplitudes"] = [[2.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]
        parsed = parse_problem(doc)
        assert any("input norm" in w for w in parsed.normalization_warnings())


class TestProblemRoundTrip:
    def test_witness_problem_survives_serialization(self, tmp_path):
        problem = WitnessProblem(
            tuple(set_s_prime()), tuple(bell_states(("C", "D"))[:3]), (0.16, 0.16, 0.68)
        )
        doc = problem_to_dict(problem)
        path = tmp_path / "p.json"
        write_report(path, doc)
        parsed = load_problem(path)
        rebuilt = parsed.witness_problem()
        for a, b in zip(problem.states, rebuilt.states):
            assert np.array_equal(a.amplitudes, b.amplitudes)
        for a, b in zip(problem.detectors, rebuilt.detectors):
            assert np.array_equal(a.amplitudes, b.amplitudes)
        assert rebuilt.probs == problem.probs
        assert check_witness(rebuilt).margin == check_witness(problem).margin

    def test_states_doc_roundtrip(self, tmp_path):
        doc = states_to_dict(bell_states(), ["b1", "b2", "b3", "b4"], "test doc")
        path = tmp_path / "states.json"
        write_report(path, doc)
        parsed = load_problem(path)
        assert parsed.description == "test doc"
        for orig, back in zip(bell_states(), parsed.states):
            assert np.array_equal(orig.amplitudes, back.amplitudes)


class TestReportFiles:
    def test_report_roundtrip(self, tmp_path):
        problem = WitnessProblem(
            tuple(bell_states()), tuple(bell_states(("C", "D"))), (0.25,) * 4
        )
        report = check_witness(problem)
        doc = {"tool": "locc-witness", "version": "0.1.0", **witness_report_to_dict(report)}
        path = tmp_path / "report.json"
        write_report(path, doc)
        back = load_report(path)
        assert back["verdict"] == report.verdict
        assert back["margin"] == report.margin
        assert back["partial_sums"]["source"] == list(report.source_partial_sums)

    def test_unknown_verdict_rejected(self, tmp_path):
        path = tmp_path / "r.json"
        path.write_text(json.dumps({"verdict": "MAYBE"}))
        with pytest.raises(ProblemFileError, match="verdict"):
            load_report(path)


class TestFixtures:
    def test_expected_fixtures_present(self):
        assert EXPECTED_FIXTURES <= set(list_fixtures())

    def test_all_fixtures_parse(self):
        for name in list_fixtures():
            parsed = load_problem(fixture_path(name))
            assert parsed.states

    def test_resolve_input_prefers_paths(self, tmp_path):
        path = tmp_path / "bell.json"
        write_report(path, minimal_doc())
        assert resolve_input(str(path)) == path
        assert resolve_input("bell") == fixture_path("bell")

    def test_resolve_unknown(self):
        with pytest.raises(ProblemFileError):
            resolve_input("no_such_thing")
