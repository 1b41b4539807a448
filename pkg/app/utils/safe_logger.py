"""
Safe Logger - ASCII console output
Math symbols and status emoji in log messages are transliterated for
consoles that cannot encode them; log files keep the original text.
"""

import logging
import sys
from typing import Optional

from config import LOG_FORMAT

# Symbol mapping for safe output
SYMBOL_MAP = {
    '✅': '[OK]',
    '❌': '[FAIL]',
    '⚠️': '[WARN]',
    '🚀': '[START]',
    '📊': '[DATA]',
    '🌲': '[TREES]',
    '🧪': '[TEST]',
    'α': 'alpha',
    'γ': 'gamma',
    'Δ': 'Delta',
    'Σ': 'sum',
    '⁰R': '0R',
    '≤': '<=',
    '≥': '>=',
    '≠': '!=',
    '→': '->',
    '⌈': 'ceil(',
    '⌉': ')',
    '⌊': 'floor(',
    '⌋': ')',
    '…': '...',
}


def transliterate(text: str) -> str:
    """Replace known symbols, then drop anything still outside ASCII"""
    if not text:
        return text

    result = text
    for symbol, replacement in SYMBOL_MAP.items():
        result = result.replace(symbol, replacement)

    return result.encode('ascii', 'ignore').decode('ascii')


def safe_print(text: str, **kwargs):
    """Print text, falling back to ASCII when stdout cannot encode it"""
    try:
        print(text, **kwargs)
    except UnicodeEncodeError:
        print(transliterate(str(text)), **kwargs)


class SafeFormatter(logging.Formatter):
    """Formatter whose output is pure ASCII"""

    def format(self, record):
        return transliterate(super().format(record))


def setup_logging(level: str = 'INFO', log_file: Optional[str] = None) -> logging.Logger:
    """Configure the root logger: ASCII console on stderr, optional UTF-8 file

    stdout is left alone so CLI output stays machine-readable.
    """
    root = logging.getLogger()
    root.setLevel(getattr(logging, str(level).upper(), logging.INFO))

    for handler in root.handlers[:]:
        root.removeHandler(handler)

    fmt = LOG_FORMAT
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(SafeFormatter(fmt, datefmt='%Y-%m-%d %H:%M:%S'))
    root.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(logging.Formatter(fmt))
        root.addHandler(file_handler)

    return root
