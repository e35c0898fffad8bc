"""
Command-line interface
"""

import json

import pytest
from click.testing import CliRunner

from jordanian.__version__ import __version__
from jordanian.cli.main import cli, parse_bindings
from jordanian.core.scalars import f_scalar, scalar_ring


COLOURLESS_R = (
    "[ 1  h  -h  h^2 ]\n"
    "[ 0  1   0    h ]\n"
    "[ 0  0   1   -h ]\n"
    "[ 0  0   0    1 ]\n"
)

UNITARITY_REPORT = (
    "PASS  [unitarity] R(l,m) P R(m,l) P = 1\n"
    "PASS  [unitarity] P R(m,l) P = R(l,m)^-1\n"
    "2/2 identities passed\n"
)


@pytest.fixture
def invoke(log_dir):
    runner = CliRunner()

    def run(*args):
        return runner.invoke(cli, ['--log-dir', str(log_dir), *args])

    return run


def test_parse_bindings():
    assert parse_bindings("h=1, s=2,lambda=3") == {'h': '1', 's': '2', 'lambda': '3'}
    assert parse_bindings(None) == {}


# ----------------------------------------------------------------------------
# emit
# ----------------------------------------------------------------------------

def test_emit_colourless_r_matrix(invoke):
    result = invoke('emit', 'r-matrix', '--lambda', '0', '--mu', '0')
    assert result.exit_code == 0
    assert result.output == COLOURLESS_R


def test_emit_json(invoke):
    result = invoke('emit', 'r-matrix', '--format', 'json')
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert (data['rows'], data['cols']) == (4, 4)
    assert data['entries'][0][1] == 'h + lambda*s'
    ring = scalar_ring(['lambda', 'mu'])
    assert ring.parse(data['entries'][0][3]) == f_scalar(ring.gen('lambda'), ring.gen('mu'))


def test_emit_latex(invoke):
    result = invoke('emit', 'braid', '--lambda', '0', '--mu', '0', '--format', 'latex')
    assert result.exit_code == 0
    assert result.output.startswith("\\begin{pmatrix}")


def test_emit_at_point(invoke):
    result = invoke('emit', 'r-matrix', '--at', 'h=1,s=1,lambda=0,mu=0')
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "[ 1  1  -1   1 ]"


def test_emit_relations(invoke):
    result = invoke('emit', 'relations')
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 16
    assert lines[8] == "[c_l,c_m]: c_lambda*c_mu - c_mu*c_lambda = 0"


def test_emit_representation(invoke):
    result = invoke('emit', 'representation', '--eta', '0', '--format', 'json')
    assert result.exit_code == 0
    assert len(json.loads(result.output)) >= 5


def test_emit_determinant(invoke):
    result = invoke('emit', 'determinant')
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("D (first) = ")
    assert lines[1].startswith("D (alternate) = ")


def test_emit_to_file(invoke, tmp_path):
    path = tmp_path / 'out' / 'r.txt'
    result = invoke('emit', 'r-matrix', '--lambda', '0', '--mu', '0', '--output', str(path))
    assert result.exit_code == 0
    assert path.read_text(encoding='utf-8') == COLOURLESS_R


@pytest.mark.parametrize('args', [
    ('emit', 'q-matrix'),
    ('emit', 'r-matrix', '--at', 'h'),
    ('emit', 'r-matrix', '--at', 'kappa=1'),
    ('emit', 'r-matrix', '--lambda', 'lambda +'),
    ('emit', 'r-matrix', '--at', 'h=0'),
])
def test_emit_usage_errors(invoke, args):
    assert invoke(*args).exit_code == 2


# ----------------------------------------------------------------------------
# verify and report
# ----------------------------------------------------------------------------

def test_verify_unitarity(invoke):
    result = invoke('verify', 'unitarity')
    assert result.exit_code == 0
    assert result.output == UNITARITY_REPORT


def test_verify_usage_errors(invoke):
    assert invoke('verify', 'bogus').exit_code == 2
    assert invoke('verify', 'braid', '--max-sector-dim', '0').exit_code == 2
    assert invoke('verify', 'braid', '--workers', '0').exit_code == 2


def test_verify_fails_inside_sector_limit(invoke):
    assert invoke('verify', 'rtt', '--max-sector-dim', '16').exit_code == 1


def test_verify_with_config_file(invoke, tmp_path):
    path = tmp_path / 'settings.yaml'
    path.write_text("workers: 2\n")
    result = invoke('verify', 'braid', '--config', str(path), '--at', 'h=1,s=2,lambda=3,mu=5,nu=7')
    assert result.exit_code == 0
    assert result.output.endswith("identities passed\n")


def test_report_round_trip(invoke, tmp_path):
    path = tmp_path / 'unitarity.json'
    assert invoke('verify', 'unitarity', '--format', 'json', '--output', str(path)).exit_code == 0
    result = invoke('report', str(path))
    assert result.exit_code == 0
    assert result.output == UNITARITY_REPORT

    latex = invoke('report', str(path), '--format', 'latex')
    assert latex.exit_code == 0
    assert latex.output.startswith("\\begin{tabular}")


def test_report_with_failure(invoke, tmp_path):
    path = tmp_path / 'report.json'
    path.write_text(json.dumps([
        {'identity': 'a = a', 'status': 'pass', 'residual': None},
        {'identity': 'a = b', 'status': 'fail', 'residual': None},
    ]))
    result = invoke('report', str(path))
    assert result.exit_code == 1
    assert result.output == "PASS  a = a\nFAIL  a = b\n1/2 identities passed\n"


def test_malformed_report(invoke, tmp_path):
    path = tmp_path / 'report.json'
    path.write_text('{"x": 1}')
    assert invoke('report', str(path)).exit_code == 2
    path.write_text('[{"identity": "a", "status": "maybe"}]')
    assert invoke('report', str(path)).exit_code == 2


# ----------------------------------------------------------------------------
# info
# ----------------------------------------------------------------------------

def test_info(invoke):
    result = invoke('info')
    assert result.exit_code == 0
    assert f"Jordanian v{__version__}" in result.output
    assert "Suites:" in result.output
    assert "char-eq" in result.output


def test_version(invoke):
    result = invoke('--version')
    assert result.exit_code == 0
    assert __version__ in result.output
