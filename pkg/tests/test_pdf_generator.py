import pytest

pytest.importorskip("reportlab")
pytest.importorskip("qrcode")

from app import EXIT_OK, main
from config import Config
from pdf_generator import generate_pdf_report, payload_digest

PAYLOAD = {
    "command": "verify",
    "inputs": {"suites": ["degree"], "tol": 1e-6},
    "checks": [
        {"name": "degree", "inputs": {"m": "1"}, "lhs": 0.5833, "rhs": 0.5833, "abs_diff": 0.0, "status": "PASS"},
        {"name": "degree", "inputs": {"m": "2"}, "lhs": 1.0, "rhs": 1.5, "abs_diff": 0.5, "status": "FAIL"},
    ],
}


def test_payload_digest_ignores_key_order():
    reordered = {key: PAYLOAD[key] for key in reversed(list(PAYLOAD))}
    assert payload_digest(reordered) == payload_digest(PAYLOAD)
    assert len(payload_digest(PAYLOAD)) == 64


def test_generate_pdf_report(tmp_path):
    target = tmp_path / "checks.pdf"
    assert generate_pdf_report(PAYLOAD, str(target)) is True
    assert target.read_bytes().startswith(b"%PDF")


def test_generate_pdf_report_reports_failure(tmp_path):
    assert generate_pdf_report(PAYLOAD, str(tmp_path / "missing" / "checks.pdf")) is False


def test_cli_pdf_output(tmp_path):
    target = tmp_path / "reports" / "coeff.pdf"
    assert main(["coeff", "--m-from", "1", "--m-to", "3", "--format", "pdf", "--output", str(target)]) == EXIT_OK
    assert target.read_bytes().startswith(b"%PDF")


def test_cli_pdf_bare_name_goes_to_report_dir(tmp_path, monkeypatch):
    monkeypatch.setattr(Config, "REPORT_DIR", str(tmp_path / "reports"))
    assert main(["verify", "--only", "functional-equation", "--format", "pdf", "--output", "checks.pdf"]) == EXIT_OK
    assert (tmp_path / "reports" / "checks.pdf").exists()
