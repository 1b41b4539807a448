# Verification report types and their JSON / CSV renderings
from .report import BoundCheck, ReportRow, VerificationReport
from .report_formatter import ReportFormatter, emit_report, parse_reports, CSV_COLUMNS

__all__ = [
    'BoundCheck', 'ReportRow', 'VerificationReport', 'ReportFormatter',
    'emit_report', 'parse_reports', 'CSV_COLUMNS',
]
