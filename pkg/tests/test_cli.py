import pytest
import ujson

from app.graph.tree import dump_tree, path_tree, spider_tree
from app.reporting.report_formatter import parse_reports
from main import main

pytestmark = pytest.mark.usefixtures('restore_root_logging')


def _write_tree(tmp_path, tree, name='tree.json'):
    path = tmp_path / name
    path.write_text(dump_tree(tree))
    return str(path)


class TestCli:
    def test_enumerate_codes(self, capsys):
        assert main(['enumerate', '--order', '4', '--format', 'codes']) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2

    def test_enumerate_json(self, capsys):
        assert main(['enumerate', '--order', '7']) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 11
        assert all(ujson.loads(line)['n'] == 7 for line in lines)

    def test_index(self, tmp_path, capsys):
        assert main(['index', '--tree', _write_tree(tmp_path, path_tree(6)), '--alpha', '2']) == 0
        assert capsys.readouterr().out.strip() == '18'

    def test_gamma(self, tmp_path, capsys):
        assert main(['gamma', '--tree', _write_tree(tmp_path, spider_tree([2, 2, 1]))]) == 0
        assert ujson.loads(capsys.readouterr().out)['gamma'] == 3

    def test_bounds(self, capsys):
        assert main(['bounds', '--order', '6', '--gamma', '2', '--alpha', '2']) == 0
        results = ujson.loads(capsys.readouterr().out)
        assert [r['theorem_id'] for r in results] == ['F1_BOUND', 'F2_BOUND', 'F3_BOUND']
        assert [r['value'] for r in results] == [18, 18, 24]

    def test_bounds_all_gamma(self, capsys):
        assert main(['bounds', '--order', '6', '--alpha', '0.5', '--all-gamma']) == 0
        results = ujson.loads(capsys.readouterr().out)
        assert sorted({r['gamma'] for r in results}) == [1, 2, 3]

    def test_family(self, capsys):
        assert main(['family', '--kind', 'f1', '--order', '10', '--gamma', '3', '--all']) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2

    def test_infeasible_family_exit_code(self, capsys):
        assert main(['family', '--kind', 'f3', '--order', '5', '--gamma', '3']) == 2
        assert capsys.readouterr().err

    def test_verify_writes_report(self, tmp_path):
        out = tmp_path / 'report.json'
        code = main(['verify', '--min-order', '3', '--max-order', '7', '--alphas=-1,0.5,2', '--out', str(out)])
        assert code == 0
        reports = parse_reports(out.read_bytes())
        assert len(reports) == 5 * 3
        assert all(r.violations() == 0 for r in reports)

    def test_verify_negative_alphas_as_separate_argument(self, tmp_path):
        out = tmp_path / 'report.json'
        assert main(['verify', '--min-order', '3', '--max-order', '4', '--alphas', '-1,0.5', '--out', str(out)]) == 0
        reports = parse_reports(out.read_bytes())
        assert sorted({float(r.alpha) for r in reports}) == [-1.0, 0.5]

    def test_verify_csv(self, tmp_path):
        out = tmp_path / 'report.csv'
        assert main(['verify', '--min-order', '4', '--max-order', '5', '--alphas', '2', '--format', 'csv', '--out', str(out)]) == 0
        assert out.read_text().splitlines()[0].startswith('n,gamma,alpha,theorem')

    def test_verify_ceiling(self, monkeypatch, capsys):
        monkeypatch.setenv('TREEBOUND_MAX_ORDER', '5')
        assert main(['verify', '--min-order', '3', '--max-order', '6', '--alphas', '2']) == 2

    def test_degenerate_alpha_exit_code(self, tmp_path):
        assert main(['index', '--tree', _write_tree(tmp_path, path_tree(4)), '--alpha', '2']) == 0
        assert main(['bounds', '--order', '6', '--gamma', '2', '--alpha', '1']) == 2
