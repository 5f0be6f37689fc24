import json
import time

import pytest

from corequot.commands import COMMANDS, CommandRequest, run_batch, run_command
from corequot.linalg import SolveStatus
from corequot.reporter import RunReport, RunStatus, format_report, save_report
from corequot.runner import run_ordered
from corequot.symfunc import GradedPolynomial
from corequot.vertex import CommutatorFit, Operator


def _run(name, *arguments, settings=None, **options):
    return run_command(CommandRequest(name, arguments, options), settings)


class TestCombinatorics:
    def test_quotient(self):
        report = _run("quotient", "4,3,1,1")
        assert report.status is RunStatus.passed
        assert report.payload["beta_set"] == [7, 5, 2, 1]
        assert report.payload["core"] == "2,1"
        assert report.payload["core_index"] == 2
        assert report.payload["quotient0"] == "1"
        assert report.payload["quotient1"] == "1,1"

    def test_quotient_with_padding(self):
        report = _run("quotient", "2,1", padding=4)
        assert report.payload["padding"] == 4
        assert report.payload["beta_set"] == [5, 3, 1, 0]

    def test_core(self):
        payload = _run("core", "2,2").payload
        assert payload["core"] == ""
        assert payload["dominoes_removed"] == 2
        assert not payload["is_core"]

    def test_sign(self):
        assert _run("sign", "1,1").payload["sign"] == "-1"
        assert _run("sign", "2,2").payload["sign"] == "+1"

    def test_reduced_schur(self):
        payload = _run("schur", "3,1", reduced=True).payload
        assert payload["polynomial"] == "1/8·t1^4"
        assert payload["terms"] == [{"exps": {"1": 4}, "coeff": "1/8"}]

    def test_character(self):
        payload = _run("character", "2,1", "3").payload
        assert payload["value"] == -1
        assert payload["degree"] == 2

    def test_lr(self):
        assert _run("lr", "3,2,1", "2,1", "2,1").payload["coefficient"] == 2

    def test_basis(self):
        payload = _run("basis", "0", "2").payload
        assert payload["basis"] == ["4", "2,1,1"]
        assert payload["dimension"] == 2

    def test_weight_space(self):
        payload = _run("weight-space", "0", "1").payload
        assert [m["partition"] for m in payload["members"]] == ["2", "1,1"]


class TestErrors:
    def test_unknown_subcommand(self):
        report = _run("frobnicate")
        assert report.status is RunStatus.error
        assert report.exit_code == 2
        assert "unknown subcommand" in report.message

    @pytest.mark.parametrize("text", ["1,2", "3,-1", "a,b"])
    def test_malformed_partition(self, text):
        report = _run("quotient", text)
        assert report.status is RunStatus.error
        assert report.message

    def test_wrong_argument_count(self):
        assert _run("lr", "2,1").status is RunStatus.error

    def test_bad_weight(self):
        assert "integer" in _run("basis", "x", "2").message


class TestVerify:
    def test_theorem3_up_to_six(self, settings):
        report = _run("verify theorem3", settings=settings, max_size=6)
        assert report.status is RunStatus.passed
        assert report.payload["total"] == 1 + 1 + 2 + 3 + 5 + 7 + 11
        assert report.payload["failed"] == 0

    def test_theorem3_single_partition(self, settings):
        report = _run("verify theorem3", "2,2", settings=settings)
        assert report.status is RunStatus.passed
        assert report.payload["formula"] == ["-1", "1"]
        assert report.payload["status"] == "unique"

    def test_theorem2_one_weight(self, settings):
        report = _run("verify theorem2", settings=settings, r=1, n=3)
        assert report.status is RunStatus.passed
        assert report.checks[0]["rank"] == 3

    def test_theorem2_sweeps_the_missing_bound(self, settings):
        settings.verify.max_n = 2
        settings.verify.max_r = 1
        report = _run("verify theorem2", settings=settings, r=3)
        assert [(c["r"], c["n"]) for c in report.checks] == [(3, 0), (3, 1), (3, 2)]
        report = _run("verify theorem2", settings=settings, n=2)
        assert [(c["r"], c["n"]) for c in report.checks] == [(0, 2), (1, 2)]

    def test_threads_keep_order(self, settings):
        settings.threads = 4
        report = _run("verify proposition1", settings=settings, max_size=5)
        subjects = [c["subject"] for c in report.checks]
        assert subjects[:4] == ["", "1", "2", "1,1"]
        assert report.status is RunStatus.passed

    def test_multiplicity_and_gauss(self, settings):
        assert _run("verify multiplicity", settings=settings, max_degree=20).status is RunStatus.passed
        assert _run("verify gauss", settings=settings, order=30).status is RunStatus.passed

    def test_maximal(self, settings):
        report = _run("verify maximal", settings=settings, max_r=3)
        assert [c["subject"] for c in report.checks] == ["", "1", "2,1", "3,2,1"]


class TestBatch:
    def test_lines(self, tmp_path, settings):
        path = tmp_path / "batch.txt"
        path.write_text("# degree four\n2,2\n\n1,1,1,1\n", encoding="utf-8")
        report = run_batch(str(path), settings=settings)
        assert report.status is RunStatus.passed
        assert [(c["line"], c["subject"]) for c in report.checks] == [(2, "2,2"), (4, "1,1,1,1")]

    def test_empty_file(self, tmp_path, settings):
        path = tmp_path / "empty.txt"
        path.write_text("", encoding="utf-8")
        report = run_batch(str(path), settings=settings)
        assert report.status is RunStatus.passed
        assert report.payload["total"] == 0

    def test_bad_line(self, tmp_path, settings):
        path = tmp_path / "bad.txt"
        path.write_text("1,2\n", encoding="utf-8")
        report = run_batch(str(path), settings=settings)
        assert report.status is RunStatus.error
        assert "line 1" in report.message

    def test_missing_file(self, tmp_path, settings):
        report = run_batch(str(tmp_path / "absent.txt"), settings=settings)
        assert report.status is RunStatus.error

    @pytest.mark.parametrize("check", ["proposition1", "sign"])
    def test_other_checks(self, tmp_path, settings, check):
        path = tmp_path / "batch.txt"
        path.write_text("4,3,1,1\n3,2,1\n", encoding="utf-8")
        report = run_batch(str(path), check, settings=settings)
        assert report.status is RunStatus.passed
        assert report.payload["check"] == check

    def test_unknown_check(self, tmp_path, settings):
        path = tmp_path / "batch.txt"
        path.write_text("1\n", encoding="utf-8")
        assert run_batch(str(path), "theorem9", settings=settings).status is RunStatus.error


class TestVertex:
    def test_apply_to_vacuum(self):
        payload = _run("vertex apply", "", k=-1).payload
        assert payload["output"] == "-t1"

    def test_apply_named_operator(self):
        payload = _run("vertex apply", "t1^2", operator="a1").payload
        assert payload["output"] == "2·t1"

    def test_apply_needs_an_operator(self):
        assert _run("vertex apply", "t1").status is RunStatus.error

    def test_commutators(self, settings):
        report = _run("vertex commutators", settings=settings, degree=4, max_a=3, max_k=2, max_x=1)
        assert report.status is RunStatus.passed
        fits = report.payload["fits"]
        assert [f["commutator"] for f in fits[:2]] == ["[X-1,X-1]", "[X-1,X0]"]
        assert all(f["status"] != "inconsistent" and f["witness"] is None for f in fits)

    def test_inconsistent_fit_fails_with_witness(self, settings, monkeypatch):
        broken = CommutatorFit(
            op1=Operator("X", 1),
            op2=Operator("X", -1),
            degree_bound=3,
            candidates=[Operator("I")],
            coefficients=None,
            status=SolveStatus.inconsistent,
            checked=5,
            witness=GradedPolynomial.variable(1),
        )
        monkeypatch.setattr("corequot.commands.commutator_table", lambda max_x, degree: [broken])
        report = _run("vertex commutators", settings=settings, degree=3, max_a=1, max_k=1, max_x=1)
        assert report.status is RunStatus.failed
        assert report.exit_code == 1
        assert report.payload["fits"][0]["witness"] == "t1"
        assert report.checks[-1] == {"relation": "[X1,X-1]", "passed": False, "witness": "t1"}


def test_every_command_is_registered():
    assert {"quotient", "verify theorem3", "vertex commutators", "history"} <= set(COMMANDS)


class TestReport:
    @pytest.mark.parametrize(
        "name, arguments, options",
        [
            ("quotient", ("4,3,1,1",), {}),
            ("core", ("5,3,1",), {}),
            ("sign", ("3,1",), {}),
            ("schur", ("2,2",), {"reduced": True}),
            ("character", ("3,1", "2,1,1"), {}),
            ("lr", ("3,2,1", "2,1", "2,1"), {}),
            ("lr-expand", ("2,1", "1"), {}),
            ("weight", ("4,3,1,1",), {}),
            ("basis", ("1", "2"), {}),
            ("weight-space", ("0", "2"), {}),
            ("verify theorem2", (), {"r": 0, "n": 2}),
            ("verify theorem3", ("2,2",), {}),
            ("verify multiplicity", (), {"max_degree": 6}),
            ("verify gauss", (), {"order": 10}),
            ("vertex apply", ("2,2",), {"k": 0}),
            ("quotient", ("1,2",), {}),
        ],
    )
    def test_json_round_trip(self, name, arguments, options):
        report = _run(name, *arguments, **options)
        assert RunReport.from_json(json.loads(report.dumps())) == report

    def test_counts(self, settings):
        report = _run("verify maximal", settings=settings, max_r=2)
        assert report.counts() == (3, 3, 0)
        assert _run("core", "1").counts() == (1, 1, 0)

    def test_pretty_output_mentions_command(self):
        text = format_report(_run("quotient", "2,1"))
        assert "COREQUOT QUOTIENT" in text
        assert "beta_set" in text

    def test_save_report(self, tmp_path):
        json_file, markdown_file = save_report(_run("lr-expand", "1", "1"), str(tmp_path / "out"))
        data = json.loads(open(json_file, encoding="utf-8").read())
        assert data["command"] == "lr-expand"
        markdown = open(markdown_file, encoding="utf-8").read()
        assert "# corequot lr-expand" in markdown
        assert "| shape" in markdown


def test_run_ordered_returns_input_order():
    # later subjects finish first
    def check(x):
        time.sleep(0.01 * (5 - x))
        return x * x

    assert run_ordered(check, [0, 1, 2, 3, 4], threads=5) == [0, 1, 4, 9, 16]
    assert run_ordered(check, [], threads=3) == []
