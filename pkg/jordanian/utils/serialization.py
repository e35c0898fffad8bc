"""
Jordanian Serialization
=======================

Matrix and report exchange formats:
- JSON matrix: {"rows": n, "cols": m, "entries": [[string, ...], ...]}
- LaTeX pmatrix and aligned plain text for matrices
- JSON, plain and LaTeX renderings of verification reports
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

from ..core.exceptions import ValidationException
from ..core.matrix import ParamMatrix
from ..core.scalars import ScalarRing
from ..core.types import MatrixJSON, ReportEntry


def matrix_to_json(matrix: ParamMatrix) -> MatrixJSON:
    """Matrix in the JSON exchange format with plain-text entries"""
    ring = matrix.ring
    return {
        'rows': matrix.rows,
        'cols': matrix.cols,
        'entries': [[ring.format(x) for x in row] for row in matrix.row_list()],
    }


def matrix_from_json(data: Dict[str, Any], ring: ScalarRing) -> ParamMatrix:
    """
    Parse a JSON matrix

    Args:
        data: Decoded JSON object
        ring: Ring to parse entries into

    Returns:
        ParamMatrix: Parsed matrix
    """
    try:
        rows, cols, entries = int(data['rows']), int(data['cols']), data['entries']
    except (KeyError, TypeError, ValueError) as e:
        raise ValidationException(f"Malformed matrix JSON: {e}")
    if len(entries) != rows or any(len(row) != cols for row in entries):
        raise ValidationException("Matrix JSON entries do not match rows/cols", {'rows': rows, 'cols': cols})
    return ParamMatrix.from_rows([[ring.parse(str(x)) for x in row] for row in entries], ring)


def matrix_to_latex(matrix: ParamMatrix) -> str:
    ring = matrix.ring
    lines = [' & '.join(ring.format(x, 'latex') for x in row) for row in matrix.row_list()]
    body = ' \\\\\n'.join(f"  {line}" for line in lines)
    return f"\\begin{{pmatrix}}\n{body}\n\\end{{pmatrix}}"


def matrix_to_plain(matrix: ParamMatrix) -> str:
    """Column-aligned rows, one per line"""
    ring = matrix.ring
    cells = [[ring.format(x) for x in row] for row in matrix.row_list()]
    widths = [max(len(cells[i][j]) for i in range(matrix.rows)) for j in range(matrix.cols)]
    lines = []
    for row in cells:
        lines.append('[ ' + '  '.join(cell.rjust(width) for cell, width in zip(row, widths)) + ' ]')
    return '\n'.join(lines)


def render_matrix(matrix: ParamMatrix, output_format: str) -> str:
    """Render a matrix as json, latex or plain"""
    if output_format == 'json':
        return json.dumps(matrix_to_json(matrix), indent=2, ensure_ascii=False)
    if output_format == 'latex':
        return matrix_to_latex(matrix)
    if output_format == 'plain':
        return matrix_to_plain(matrix)
    raise ValidationException(f"Unknown output format '{output_format}'", {'format': output_format})


# ----------------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------------

def report_to_json(entries: Sequence[ReportEntry]) -> str:
    return json.dumps(list(entries), indent=2, ensure_ascii=False)


def report_to_plain(entries: Sequence[ReportEntry]) -> str:
    """One line per identity, followed by a summary line"""
    lines = []
    for entry in entries:
        status = 'PASS' if entry['status'] == 'pass' else 'FAIL'
        suite = f"[{entry['suite']}] " if entry.get('suite') else ''
        lines.append(f"{status}  {suite}{entry['identity']}")
    failed = sum(1 for e in entries if e['status'] != 'pass')
    lines.append(f"{len(entries) - failed}/{len(entries)} identities passed")
    return '\n'.join(lines)


def report_to_latex(entries: Sequence[ReportEntry]) -> str:
    rows = []
    for entry in entries:
        identity = entry['identity'].replace('_', '\\_').replace('&', '\\&')
        suite = entry.get('suite', '')
        rows.append(f"  {suite} & {identity} & {entry['status']} \\\\")
    header = "\\begin{tabular}{lll}\n  suite & identity & status \\\\\n  \\hline"
    return header + '\n' + '\n'.join(rows) + "\n\\end{tabular}"


def render_report(entries: Sequence[ReportEntry], output_format: str) -> str:
    if output_format == 'json':
        return report_to_json(entries)
    if output_format == 'latex':
        return report_to_latex(entries)
    if output_format == 'plain':
        return report_to_plain(entries)
    raise ValidationException(f"Unknown output format '{output_format}'", {'format': output_format})


def load_report(path: Union[str, Path]) -> List[ReportEntry]:
    """
    Read a report file written by ``jordanian verify``

    Accepts either a bare list of entries or an object with a ``reports``
    mapping of suite name to entries.
    """
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except (OSError, json.JSONDecodeError) as e:
        raise ValidationException(f"Cannot read report: {e}", {'path': str(path)})

    if isinstance(data, dict) and isinstance(data.get('reports'), dict):
        entries = []
        for suite in sorted(data['reports']):
            for entry in data['reports'][suite]:
                entries.append({**entry, 'suite': entry.get('suite', suite)})
        data = entries

    if not isinstance(data, list):
        raise ValidationException("Report must be a list of entries", {'path': str(path)})
    for index, entry in enumerate(data):
        if not isinstance(entry, dict) or not isinstance(entry.get('identity'), str):
            raise ValidationException("Report entry without identity", {'index': index})
        if entry.get('status') not in ('pass', 'fail'):
            raise ValidationException("Report entry with invalid status", {'index': index, 'status': entry.get('status')})
        entry.setdefault('residual', None)
    return data
