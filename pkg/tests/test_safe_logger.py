import logging

from app.utils.safe_logger import SafeFormatter, setup_logging, transliterate


def test_transliterate_math_symbols():
    assert transliterate("γ ≤ ⌊n/2⌋ for α ≥ 2") == "gamma <= floor(n/2) for alpha >= 2"
    assert transliterate("✅ done") == "[OK] done"


def test_formatter_output_is_ascii():
    record = logging.LogRecord('t', logging.INFO, __file__, 1, "⁰R_α on %s trees 🌲", ('Σ',), None)
    text = SafeFormatter('%(message)s').format(record)
    assert text == "0R_alpha on sum trees [TREES]"
    assert text.isascii()


def test_setup_logging_file_keeps_unicode(tmp_path, restore_root_logging):
    log_file = tmp_path / 'run.log'
    setup_logging('DEBUG', str(log_file))
    logging.getLogger('treebound.test').info("γ=3")
    for handler in logging.getLogger().handlers:
        handler.flush()
    assert "γ=3" in log_file.read_text(encoding='utf-8')
