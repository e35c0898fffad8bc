"""
Verification reports and their renderings
"""

import json

import pytest

from jordanian.core.exceptions import MatrixException, ValidationException
from jordanian.core.matrix import ParamMatrix
from jordanian.core.report import VerificationReport
from jordanian.utils.serialization import (
    load_report,
    matrix_from_json,
    matrix_to_json,
    matrix_to_latex,
    matrix_to_plain,
    render_matrix,
    render_report,
)


def test_matrix_identity_entries(ring):
    report = VerificationReport('demo')
    eye = ParamMatrix.identity(2, ring)
    report.add_matrix_identity("zero", eye - eye)
    report.add_matrix_identity("nonzero", eye, {'note': 'expected'})
    assert report.get("zero") == {'identity': 'zero', 'status': 'pass', 'residual': None}
    failed = report.get("nonzero")
    assert failed['residual'] == {'rows': 2, 'cols': 2, 'entries': [['1', '0'], ['0', '1']]}
    assert failed['details'] == {'note': 'expected'}
    assert (report.passed_count, report.failed_count) == (1, 1)
    assert not report.passed


def test_exceptions_become_failures(ring):
    report = VerificationReport()

    def raising():
        raise MatrixException("shape")

    entry = report.check_matrix("shapes agree", raising)
    assert entry['status'] == 'fail'
    assert entry['details'] == {'error': 'shape', 'error_type': 'MatrixException'}
    assert report.check_fact("fact", lambda: (True, {'n': 1}))['status'] == 'pass'
    assert report.failures() == [entry]


def test_facts_and_lookup():
    report = VerificationReport()
    report.add_fact("witness", True)
    with pytest.raises(KeyError):
        report.get("missing")
    assert report.to_json('rtt') == [{'identity': 'witness', 'status': 'pass', 'residual': None, 'suite': 'rtt'}]
    assert report.to_json() == [{'identity': 'witness', 'status': 'pass', 'residual': None}]


def test_extend_copies_entries():
    first, second = VerificationReport('a'), VerificationReport('b')
    second.add_fact("x", False)
    first.extend(second)
    first.entries[0]['status'] = 'pass'
    assert second.entries[0]['status'] == 'fail'
    assert len(first) == 1


def test_matrix_renderings(ring):
    eye = ParamMatrix.identity(2, ring)
    assert matrix_to_latex(eye) == "\\begin{pmatrix}\n  1 & 0 \\\\\n  0 & 1\n\\end{pmatrix}"
    assert matrix_to_plain(ParamMatrix.from_rows([[ring.h, -1], [0, 1]], ring)) == "[ h  -1 ]\n[ 0   1 ]"
    assert json.loads(render_matrix(eye, 'json')) == matrix_to_json(eye)
    with pytest.raises(ValidationException):
        render_matrix(eye, 'html')


def test_matrix_json_parsing(ring, lam):
    m = ParamMatrix.from_rows([[ring.h + lam * ring.s, 0], [ring.h / 2, 1]], ring)
    assert matrix_from_json(matrix_to_json(m), ring) == m
    with pytest.raises(ValidationException):
        matrix_from_json({'rows': 2, 'cols': 2, 'entries': [['1']]}, ring)
    with pytest.raises(ValidationException):
        matrix_from_json({'rows': 2}, ring)


def test_report_renderings():
    entries = [
        {'identity': 'R_12 R_13 R_23 = R_23 R_13 R_12', 'status': 'pass', 'residual': None, 'suite': 'ybe'},
        {'identity': 'a & b', 'status': 'fail', 'residual': None},
    ]
    plain = render_report(entries, 'plain')
    assert plain.splitlines() == [
        "PASS  [ybe] R_12 R_13 R_23 = R_23 R_13 R_12",
        "FAIL  a & b",
        "1/2 identities passed",
    ]
    latex = render_report(entries, 'latex')
    assert "R\\_12" in latex
    assert "a \\& b" in latex
    assert latex.endswith("\\end{tabular}")
    assert json.loads(render_report(entries, 'json')) == entries


def test_load_report_accepts_run_results(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'reports': {
        'ybe': [{'identity': 'x', 'status': 'pass'}],
        'braid': [{'identity': 'y', 'status': 'fail', 'residual': None}],
    }}))
    entries = load_report(path)
    assert [(e['suite'], e['identity']) for e in entries] == [('braid', 'y'), ('ybe', 'x')]
    assert entries[1]['residual'] is None


def test_load_report_errors(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text("not json")
    with pytest.raises(ValidationException):
        load_report(path)
    path.write_text(json.dumps([{'status': 'pass'}]))
    with pytest.raises(ValidationException):
        load_report(path)
    with pytest.raises(ValidationException):
        load_report(tmp_path / 'missing.json')
