#!/usr/bin/env python3
"""
Tests for the job layer, report verification and the command-line interface
"""
import argparse
import json

import pytest
from pydantic import ValidationError

from src.cli import EXIT_INPUT, EXIT_OK, EXIT_REFUTED, main, parse_bound
from src.errors import JobSpecError, RingSpecError
from src.jobs import TASKS, JobSpec, Report, get_task, parse_matrix, parse_module, parse_ring, run_job, verify_report
from src.jobs.codec import matrix_to_json, module_to_json, ring_to_json
from src.jobs.models import TASK_NAMES
from src.jobs.runner import REFS, THEOREMS
from src.linalg import FinDimAlgebra, Integers, IntegersMod


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def read_report(path):
    return json.loads(open(path, encoding="utf-8").read())


# ============================================================================
# Codec
# ============================================================================


class TestCodec:
    @pytest.mark.parametrize("text,ring", [("Z", Integers()), ("Z/4", IntegersMod(4)), ("Z6", IntegersMod(6))])
    def test_ring_shorthands(self, text, ring):
        assert parse_ring(text) == ring

    def test_field_and_algebra_shorthands(self):
        assert parse_ring("F_2").is_field
        assert parse_ring("A2") == FinDimAlgebra.path_a2()

    def test_unknown_ring(self):
        with pytest.raises(RingSpecError):
            parse_ring("Q")

    def test_algebra_block_round_trip(self):
        ring = FinDimAlgebra.path_a2()
        assert parse_ring(ring_to_json(ring)) == ring

    def test_algebra_expressions(self):
        ring = FinDimAlgebra.path_a2()
        m = parse_matrix(ring, [["e1 + a", "2*e2"], [[0, 1, 1], 1]])
        e1, e2, a = ring.basis()
        assert m[0, 0] == ring.add(e1, a)
        assert ring.is_zero(m[0, 1])
        assert m[1, 0] == ring.add(e2, a)
        assert m[1, 1] == ring.one()
        assert parse_matrix(ring, matrix_to_json(m)) == m

    def test_module_round_trip(self):
        ring = IntegersMod(4)
        module = parse_module(ring, {"generators": 2, "relations": [["2", "1"]], "side": "right"})
        assert module.side == "right"
        assert parse_module(ring, module_to_json(module)) == module

    def test_empty_relations(self):
        module = parse_module(Integers(), {"generators": 1})
        assert module.relations.rows == 0

    def test_bad_entry(self):
        with pytest.raises(JobSpecError):
            parse_matrix(Integers(), [["two"]])

    def test_unknown_basis_name(self):
        with pytest.raises(JobSpecError):
            parse_matrix(FinDimAlgebra.path_a2(), [["b"]])


# ============================================================================
# Jobs
# ============================================================================


class TestJobs:
    def test_registry_covers_every_task(self):
        assert set(TASKS) == set(TASK_NAMES)

    def test_unknown_task(self):
        with pytest.raises(JobSpecError):
            get_task("nope")

    def test_extra_fields_rejected(self):
        with pytest.raises(ValidationError):
            JobSpec.model_validate({"ring": "Z", "task": "ext", "colour": "blue"})

    def test_ext_job(self):
        z2 = {"generators": 1, "relations": [["2"]]}
        run = run_job(JobSpec.model_validate({"ring": "Z/4", "task": "ext", "first": z2, "second": z2}))
        assert run.exit_code == 0
        assert run.results[0].data["group"]["text"] == "C2"
        assert run.job["seed"] == 0

    def test_semi_hereditary_job_fails_over_z4(self):
        run = run_job(JobSpec.model_validate({"ring": "Z/4", "task": "semi-hereditary", "matrix": [["2"]]}))
        assert run.exit_code == 1
        assert run.results[0].verdict == "failure"
        assert "refutation" in run.results[0].data

    def test_results_carry_statement_refs(self):
        assert set(TASK_NAMES) <= set(REFS)
        run = run_job(JobSpec.model_validate({"ring": "Z/6", "task": "semi-hereditary", "matrix": [["2"]]}))
        result = run.results[0].model_dump()
        assert result["paper_ref"] == "semi-hereditary-criterion"
        assert result["theorem"] == THEOREMS["semi-hereditary"]

    def test_yoneda_by_name(self):
        job = JobSpec.model_validate(
            {"ring": "A2", "task": "yoneda", "module": {"generators": 1}, "idempotent": "e2"}
        )
        run = run_job(job)
        assert [r.data["idempotent"] for r in run.results] == ["e2"]
        assert run.results[0].verdict == "equal"

    def test_class_alias(self):
        job = JobSpec.model_validate(
            {
                "ring": "Z/4",
                "task": "membership",
                "module": {"generators": 1, "relations": [["2"]]},
                "class": "I_n",
                "bound": {"rows": 1, "cols": 1},
            }
        )
        run = run_job(job)
        assert run.results[0].verdict == "out"
        assert run.results[0].data["reverified"]
        assert run.job["class"] == "I_n"

    def test_verify_detects_tampering(self):
        run = run_job(JobSpec.model_validate({"ring": "Z/6", "task": "semi-hereditary", "matrix": [["2"]]}))
        report = Report(version="0", exit_code=0, runs=[run])
        assert verify_report(report) == (1, [])
        run.results[0].data["c"] = {"rows": 1, "cols": 1, "entries": [["1"]]}
        checked, failures = verify_report(report)
        assert checked == 1 and len(failures) == 1

    def test_hom_certificates_verify(self):
        z2 = {"generators": 1, "relations": [["2"]]}
        free = {"generators": 1}
        run = run_job(JobSpec.model_validate({"ring": "Z/4", "task": "hom", "first": z2, "second": free}))
        report = Report(version="0", exit_code=0, runs=[run])
        assert verify_report(report) == (1, [])


# ============================================================================
# Command line
# ============================================================================


class TestCli:
    def test_parse_bound(self):
        assert parse_bound("2x3") == {"rows": 2, "cols": 3}
        with pytest.raises(argparse.ArgumentTypeError):
            parse_bound("0x1")
        with pytest.raises(argparse.ArgumentTypeError):
            parse_bound("big")

    def test_run_refuted(self, tmp_path):
        spec = write_json(tmp_path / "job.json", {"ring": "Z/4", "task": "semi-hereditary", "matrix": [["2"]]})
        out = tmp_path / "report.json"
        assert main(["run", spec, "--output", str(out)]) == EXIT_REFUTED
        report = read_report(out)
        assert report["tool"] == "hereditas"
        assert report["exit_code"] == 1
        assert report["runs"][0]["results"][0]["verdict"] == "failure"

    def test_run_and_verify(self, tmp_path):
        spec = write_json(tmp_path / "job.json", {"ring": "Z", "task": "semi-hereditary", "matrix": [["2"]]})
        out = tmp_path / "report.json"
        assert main(["run", spec, "--output", str(out), "--seed", "7"]) == EXIT_OK
        report = read_report(out)
        assert report["runs"][0]["job"]["seed"] == 7
        assert report["runs"][0]["results"][0]["data"]["c"]["entries"] == [["1"]]
        assert main(["verify", str(out)]) == EXIT_OK

    def test_verify_rejects_tampered_report(self, tmp_path):
        spec = write_json(tmp_path / "job.json", {"ring": "Z/6", "task": "semi-hereditary", "matrix": [["2"]]})
        out = tmp_path / "report.json"
        assert main(["run", spec, "--output", str(out)]) == EXIT_OK
        report = read_report(out)
        report["runs"][0]["results"][0]["data"]["c"]["entries"] = [["1"]]
        tampered = write_json(tmp_path / "tampered.json", report)
        assert main(["verify", tampered]) == EXIT_REFUTED

    @pytest.mark.parametrize(
        "content",
        [
            '{"ring": "Z", "task": "nope"}',
            '{"ring": "Q", "task": "ext"}',
            '{"ring": "Z", "task": "semi-hereditary"}',
            "[1, 2]",
            "{not json",
        ],
    )
    def test_malformed_spec(self, tmp_path, content):
        spec = tmp_path / "job.json"
        spec.write_text(content, encoding="utf-8")
        assert main(["run", str(spec)]) == EXIT_INPUT

    def test_missing_file(self, tmp_path):
        assert main(["run", str(tmp_path / "missing.json")]) == EXIT_INPUT

    def test_no_command(self):
        assert main([]) == EXIT_INPUT

    def test_stdout_report(self, tmp_path, capsys):
        spec = write_json(tmp_path / "job.json", {"ring": "Z", "task": "tensor",
                                                   "first": {"generators": 1, "relations": [["4"]]},
                                                   "second": {"generators": 1, "relations": [["6"]]}})
        assert main(["run", spec]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["runs"][0]["results"][0]["data"]["group"]["invariant_factors"] == ["2"]

    @pytest.mark.parametrize("name", ["f2", "a2"])
    def test_demo_is_deterministic(self, tmp_path, name):
        first, second = tmp_path / "first.json", tmp_path / "second.json"
        code = main(["demo", name, "--output", str(first)])
        assert main(["demo", name, "--output", str(second)]) == code
        assert first.read_bytes() == second.read_bytes()
        assert code == EXIT_OK
        assert main(["verify", str(first)]) == EXIT_OK


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
