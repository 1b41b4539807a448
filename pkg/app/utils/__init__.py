"""
Utility modules for treebound
"""

from .safe_logger import setup_logging, safe_print, transliterate, SafeFormatter

__all__ = ['setup_logging', 'safe_print', 'transliterate', 'SafeFormatter']
