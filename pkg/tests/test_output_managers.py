import io
import json

import pytest

from data_types import CheckResult, CheckStatus, Command, OutputFormat, Report
from exceptions import InvalidOutputDirectoryError
from output_manager.base_output_manager import render_report
from output_manager.file_output_manager import FileOutputManager
from output_manager.multi_output_manager import MultiOutputManager
from output_manager.stream_output_manager import StreamOutputManager


@pytest.fixture
def report():
    return Report(
        command=Command.MACWILLIAMS,
        field={"p": 2, "s": 1, "m": 2},
        params={"q": "2", "m": "2", "n": "3", "k": "2"},
        results={"output": {"metric": "rank", "degree": 3, "coeffs": ["1", "0", "3", "0"]}},
        checks=[
            CheckResult(name="rank_kernel_form", status=CheckStatus.PASS),
            CheckResult(name="hadamard", status=CheckStatus.SKIPPED, detail="q is not prime"),
        ],
    )


def test_render_json(report):
    text = render_report(report)
    assert text.endswith("}\n")
    data = json.loads(text)
    assert list(data) == ["command", "field", "params", "results", "checks", "status"]
    assert data["command"] == "macwilliams"
    assert data["checks"][1] == {"name": "hadamard", "status": "skipped", "detail": "q is not prime"}
    assert render_report(report) == text


def test_render_text(report):
    lines = render_report(report, OutputFormat.TEXT).splitlines()
    assert lines[0] == "command: macwilliams"
    assert lines[1] == "status: pass"
    assert "params: q=2, m=2, n=3, k=2" in lines
    assert lines[-2] == "[PASS] rank_kernel_form"
    assert lines[-1] == "[SKIPPED] hadamard (q is not prime)"


def test_stream_output(report):
    stream = io.StringIO()
    StreamOutputManager(OutputFormat.TEXT, stream).save_output(report)
    assert stream.getvalue() == render_report(report, OutputFormat.TEXT)


def test_file_output(report, tmp_path):
    directory = tmp_path / "nested" / "reports"
    manager = FileOutputManager(directory)
    assert directory.is_dir()
    manager.save_output(report)
    path = directory / "macwilliams-report.json"
    assert manager.output_path(report) == path
    assert json.loads(path.read_text())["results"]["output"]["coeffs"] == ["1", "0", "3", "0"]


def test_file_output_rejects_a_file(tmp_path):
    target = tmp_path / "report.txt"
    target.write_text("")
    with pytest.raises(InvalidOutputDirectoryError):
        FileOutputManager(target)


def test_multi_output(report, tmp_path):
    stream = io.StringIO()
    MultiOutputManager([StreamOutputManager(stream=stream), FileOutputManager(tmp_path)]).save_output(report)
    assert stream.getvalue() == (tmp_path / "macwilliams-report.json").read_text()
