"""
Report Formatter
Renders verification reports as JSON documents or flat CSV tables
"""

import io
import logging
from typing import Dict, List, Sequence, Union

import pandas as pd
import ujson

from app.errors import UnknownFormatError
from app.reporting.report import VerificationReport

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    'n', 'gamma', 'alpha', 'theorem', 'direction', 'bound',
    'extremal_value', 'satisfied', 'equality_count', 'family_match',
]

FORMATS = ('json', 'csv')

ReportInput = Union[VerificationReport, Sequence[VerificationReport]]


class ReportFormatter:
    """Format verification reports"""

    @staticmethod
    def to_json(reports: Sequence[VerificationReport], include_runtime: bool = True) -> bytes:
        """
        Serialize reports as a JSON array

        Args:
            reports: Reports in output order
            include_runtime: Drop runtime_ms for byte-for-byte comparisons

        Returns:
            UTF-8 encoded document
        """
        payload = [r.to_dict(include_runtime=include_runtime) for r in reports]
        return ujson.dumps(payload, ensure_ascii=False).encode('utf-8')

    @staticmethod
    def csv_records(reports: Sequence[VerificationReport]) -> List[Dict]:
        """One record per (n, gamma, alpha, theorem)"""
        records = []
        for report in reports:
            for row in report.rows:
                for check in row.applicable_bounds:
                    records.append({
                        'n': report.order,
                        'gamma': row.gamma,
                        'alpha': report.alpha,
                        'theorem': check.theorem_id,
                        'direction': check.direction,
                        'bound': check.value,
                        'extremal_value': check.extremal_value,
                        'satisfied': check.satisfied,
                        'equality_count': check.equality_count,
                        'family_match': check.family_match,
                    })
        return records

    @staticmethod
    def to_csv(reports: Sequence[VerificationReport]) -> bytes:
        frame = pd.DataFrame(ReportFormatter.csv_records(reports), columns=CSV_COLUMNS)
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False)
        return buffer.getvalue().encode('utf-8')


def _as_list(report: ReportInput) -> List[VerificationReport]:
    if isinstance(report, VerificationReport):
        return [report]
    return list(report)


def emit_report(report: ReportInput, fmt: str = 'json', include_runtime: bool = True) -> bytes:
    """Render one report or a list of them; fmt is 'json' or 'csv'"""
    reports = _as_list(report)
    if fmt == 'json':
        return ReportFormatter.to_json(reports, include_runtime=include_runtime)
    if fmt == 'csv':
        return ReportFormatter.to_csv(reports)
    raise UnknownFormatError(f"Unknown report format '{fmt}' (expected one of {', '.join(FORMATS)})")


def parse_reports(data: Union[bytes, str]) -> List[VerificationReport]:
    """Inverse of the JSON rendering"""
    if isinstance(data, bytes):
        data = data.decode('utf-8')
    payload = ujson.loads(data)
    if isinstance(payload, dict):
        payload = [payload]
    return [VerificationReport.from_dict(item) for item in payload]
