import json

import polars as pl
import pytest
from src.linkpred import EvalReport, generate_markdown_report, report_to_dict, save_report


def make_report() -> EvalReport:
    def folds(values):
        return [{'fold': i, 'train_auc': train, 'test_auc': test} for i, (train, test) in enumerate(values)]

    return EvalReport(
        dataset='toy',
        params={'T': 10, 'b': 10.0, 'dim': 4, 'folds': 2, 'seed': 0, 'j_index': 'canonical', 'oversample': 10, 'power_iters': 7},
        recipes=['a', 'trunc_log_q', 'sig_log_q'],
        folds={
            'a': folds([(0.80, 0.70), (0.82, 0.72)]),
            'trunc_log_q': folds([(0.95, 0.90), (0.97, 0.92)]),
            'sig_log_q': folds([(0.90, 0.80), (0.92, 0.84)]),
        },
    )


class TestReportDict:
    def test_schema(self):
        """Recipe entries carry folds, mean, sd and phi vs trunc_log_q."""
        data = report_to_dict(make_report())
        assert data['dataset'] == 'toy'
        assert [r['name'] for r in data['recipes']] == ['a', 'trunc_log_q', 'sig_log_q']
        first = data['recipes'][0]
        assert set(first) >= {'name', 'folds', 'mean', 'sd', 'phi_vs_trunc'}
        assert first['folds'] == [{'train_auc': 0.80, 'test_auc': 0.70}, {'train_auc': 0.82, 'test_auc': 0.72}]
        assert first['mean'] == pytest.approx(0.71)
        assert first['phi_vs_trunc'] == pytest.approx((0.71 - 0.91) / 0.91 * 100)
        assert data['recipes'][1]['phi_vs_trunc'] == 0.0

    def test_sigmoid_effect(self):
        """Only pairs evaluated on both sides appear."""
        effects = report_to_dict(make_report())['sigmoid_effect']
        assert [(e['sigmoid'], e['base']) for e in effects] == [('sig_log_q', 'trunc_log_q')]

    def test_json_serializable(self):
        """No NaN or numpy scalars leak into the JSON."""
        json.dumps(report_to_dict(make_report()), allow_nan=False)


class TestMarkdownReport:
    def test_best_bold_second_italic(self):
        """Best mean is bold, runner-up italic."""
        md = generate_markdown_report(make_report())
        assert '| trunc_log_q | **0.9100 ± 0.0141** |' in md
        assert '| sig_log_q | *0.8200 ± 0.0283* |' in md
        assert '| a | 0.7100 ± 0.0141 |' in md

    def test_sections(self):
        """Improvement, sigmoid, generalization and per-fold sections are present."""
        md = generate_markdown_report(make_report())
        for heading in ('## Test ROC AUC', '## Effect of the sigmoid', '## Generalization', '## Per-fold ROC AUC'):
            assert heading in md
        assert 'Errors' not in md

    def test_errors_listed(self):
        """Recorded failures get their own section."""
        report = make_report()
        report.errors.append({'recipe': 'a', 'fold': 1, 'error': 'FloatingPointError: boom'})
        assert '- a (fold 1): FloatingPointError: boom' in generate_markdown_report(report)


class TestSaveReport:
    def test_files_written(self, tmp_path):
        """JSON, markdown, folds CSV and workbook all land in the output folder."""
        files = save_report(make_report(), tmp_path)
        for key in ('json', 'markdown', 'folds_csv', 'excel'):
            assert (tmp_path / files[key].split('/')[-1]).exists()

    def test_folds_csv(self, tmp_path):
        """One row per (recipe, fold)."""
        save_report(make_report(), tmp_path)
        df = pl.read_csv(tmp_path / 'folds.csv')
        assert df.columns == ['recipe', 'fold', 'train_auc', 'test_auc']
        assert df.height == 6

    def test_byte_identical_reruns(self, tmp_path):
        """Same report, same JSON bytes."""
        save_report(make_report(), tmp_path / 'one')
        save_report(make_report(), tmp_path / 'two')
        assert (tmp_path / 'one' / 'report.json').read_bytes() == (tmp_path / 'two' / 'report.json').read_bytes()
        assert (tmp_path / 'one' / 'report.md').read_bytes() == (tmp_path / 'two' / 'report.md').read_bytes()
