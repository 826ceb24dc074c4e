"""
Evaluation report artifacts: JSON, markdown tables, per-fold CSV and an Excel workbook.
"""

import logging
from pathlib import Path

import polars as pl

from ..constants import FileNames, RecipeTokens
from ..utils import write_json
from .evaluate import EvalReport


def report_to_dict(report: EvalReport) -> dict:
    """JSON-ready report; recipe entries follow the evaluation order"""
    recipes = []
    for name in report.recipes:
        recipes.append(
            {
                'name': name,
                'folds': [{'train_auc': f['train_auc'], 'test_auc': f['test_auc']} for f in report.folds.get(name, [])],
                'mean': report.mean(name),
                'sd': report.sd(name),
                'train_mean': report.mean(name, 'train'),
                'train_sd': report.sd(name, 'train'),
                'phi_vs_trunc': report.phi_vs_reference(name),
                'gen_gap': report.generalization_gap(name),
            }
        )
    return {
        'dataset': report.dataset,
        'params': report.params,
        'recipes': recipes,
        'sigmoid_effect': report.sigmoid_effect(),
        'errors': report.errors,
    }


def _fmt(value: float | None, digits: int = 4, signed: bool = False) -> str:
    if value is None:
        return 'n/a'
    return f'{value:+.{digits}f}' if signed else f'{value:.{digits}f}'


def _mark(text: str, name: str, ranking: list[str]) -> str:
    """Bold the best recipe, italicize the runner-up"""
    if ranking and name == ranking[0]:
        return f'**{text}**'
    if len(ranking) > 1 and name == ranking[1]:
        return f'*{text}*'
    return text


def generate_markdown_report(report: EvalReport) -> str:
    """Markdown tables: improvement over trunc_log_q, sigmoid effect, generalization, per-fold values"""
    params = report.params
    test_rank = report.best_recipes('test')
    train_rank = report.best_recipes('train')

    lines = []
    lines.append(f'# Link prediction report: {report.dataset}\n')
    lines.append(
        f'**T:** {params["T"]}  **b:** {params["b"]:g}  **dim:** {params["dim"]}  '
        f'**folds:** {params["folds"]}  **seed:** {params["seed"]}  **J index:** {params["j_index"]}'
    )
    lines.append('\n---\n')

    lines.append(f'## Test ROC AUC and improvement over {RecipeTokens.PHI_REFERENCE}\n')
    lines.append(f'| recipe | test ROC AUC (mean ± sd) | φ vs {RecipeTokens.PHI_REFERENCE} (%) |')
    lines.append('|---|---:|---:|')
    for name in report.recipes:
        cell = f'{_fmt(report.mean(name))} ± {_fmt(report.sd(name))}'
        lines.append(f'| {name} | {_mark(cell, name, test_rank)} | {_fmt(report.phi_vs_reference(name), 2, True)} |')

    lines.append('\n## Effect of the sigmoid\n')
    effects = report.sigmoid_effect()
    if effects:
        lines.append('| σ(M) | M | φ(σ(M), M) (%) |')
        lines.append('|---|---|---:|')
        for effect in effects:
            lines.append(f'| {effect["sigmoid"]} | {effect["base"]} | {_fmt(effect["phi"], 2, True)} |')
    else:
        lines.append('No sigmoid pair was evaluated on both sides.')

    lines.append('\n## Generalization (train vs test)\n')
    lines.append('| recipe | train ROC AUC | test ROC AUC | φ(test, train) (%) |')
    lines.append('|---|---:|---:|---:|')
    for name in report.recipes:
        train = _mark(_fmt(report.mean(name, 'train')), name, train_rank)
        test = _mark(_fmt(report.mean(name)), name, test_rank)
        lines.append(f'| {name} | {train} | {test} | {_fmt(report.generalization_gap(name), 2, True)} |')

    lines.append('\n## Per-fold ROC AUC\n')
    lines.append('| recipe | fold | train | test |')
    lines.append('|---|---:|---:|---:|')
    for name in report.recipes:
        for f in report.folds.get(name, []):
            lines.append(f'| {name} | {f["fold"]} | {_fmt(f["train_auc"])} | {_fmt(f["test_auc"])} |')

    if report.errors:
        lines.append('\n## ⚠️ Errors\n')
        for err in report.errors:
            lines.append(f'- {err["recipe"]} (fold {err["fold"]}): {err["error"]}')

    lines.append('')
    return '\n'.join(lines)


def folds_frame(report: EvalReport) -> pl.DataFrame:
    rows = [
        {'recipe': name, 'fold': f['fold'], 'train_auc': f['train_auc'], 'test_auc': f['test_auc']}
        for name in report.recipes
        for f in report.folds.get(name, [])
    ]
    schema = {'recipe': pl.String, 'fold': pl.Int64, 'train_auc': pl.Float64, 'test_auc': pl.Float64}
    return pl.DataFrame(rows, schema=schema)


def summary_frame(report: EvalReport) -> pl.DataFrame:
    rows = [
        {
            'recipe': name,
            'test_mean': report.mean(name),
            'test_sd': report.sd(name),
            'train_mean': report.mean(name, 'train'),
            'train_sd': report.sd(name, 'train'),
            'phi_vs_trunc': report.phi_vs_reference(name),
            'gen_gap': report.generalization_gap(name),
        }
        for name in report.recipes
    ]
    schema = {'recipe': pl.String, **{k: pl.Float64 for k in ('test_mean', 'test_sd', 'train_mean', 'train_sd', 'phi_vs_trunc', 'gen_gap')}}
    return pl.DataFrame(rows, schema=schema)


def save_excel_report(excel_file: Path, report: EvalReport, logger: logging.Logger | None = None) -> Path:
    """
    Multi-sheet workbook: Summary, Folds, Sigmoid Effect, Generalization, Errors

    Args:
        excel_file: Path to save the workbook
        report: Evaluation report
        logger: Logger instance
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.linkpred')

    import xlsxwriter

    logger.debug(f'Creating Excel report: {excel_file.name}')
    workbook = xlsxwriter.Workbook(excel_file)
    try:
        summary = summary_frame(report)
        _write_dataframe_to_worksheet(workbook, summary, 'Summary', logger)
        _write_dataframe_to_worksheet(workbook, folds_frame(report), 'Folds', logger)

        effects = pl.DataFrame(
            report.sigmoid_effect(), schema={'sigmoid': pl.String, 'base': pl.String, 'phi': pl.Float64}
        )
        _write_dataframe_to_worksheet(workbook, effects, 'Sigmoid Effect', logger)
        _write_dataframe_to_worksheet(workbook, summary.select('recipe', 'train_mean', 'test_mean', 'gen_gap'), 'Generalization', logger)

        errors = pl.DataFrame(report.errors, schema={'recipe': pl.String, 'fold': pl.Int64, 'error': pl.String})
        _write_dataframe_to_worksheet(workbook, errors, 'Errors', logger)
    finally:
        workbook.close()

    logger.debug(f'Saved Excel report: {excel_file.name}')
    return excel_file


def _write_dataframe_to_worksheet(workbook, df: pl.DataFrame, sheet_name: str, logger: logging.Logger | None = None):
    """
    Write a polars DataFrame to a worksheet with a bold header row

    Args:
        workbook: xlsxwriter Workbook object
        df: Polars DataFrame to write
        sheet_name: Name of the worksheet
        logger: Logger instance
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.linkpred')

    worksheet = workbook.add_worksheet(sheet_name[:31])  # Excel sheet name limit is 31 chars
    header_format = workbook.add_format({'bold': True, 'bg_color': '#D3D3D3'})
    auc_format = workbook.add_format({'num_format': '0.0000'})

    for col_num, column_name in enumerate(df.columns):
        worksheet.write(0, col_num, column_name, header_format)

    for row_num, row in enumerate(df.iter_rows(), start=1):
        for col_num, value in enumerate(row):
            if value is None:
                worksheet.write_blank(row_num, col_num, None)
            elif isinstance(value, float):
                worksheet.write_number(row_num, col_num, value, auc_format)
            else:
                worksheet.write(row_num, col_num, value)

    for col_num, column_name in enumerate(df.columns):
        width = max([len(column_name), *(len(str(v)) for v in df[column_name].to_list())], default=8)
        worksheet.set_column(col_num, col_num, min(width + 2, 50))
    logger.debug(f'  Sheet {sheet_name}: {df.height} row(s)')


def save_report(report: EvalReport, output_dir: Path, logger: logging.Logger | None = None) -> dict:
    """Write report.json, report.md, folds.csv and report.xlsx into output_dir"""
    if logger is None:
        logger = logging.getLogger('graphfactor.linkpred')

    output_dir = Path(output_dir)
    json_file = write_json(report_to_dict(report), output_dir / FileNames.REPORT_JSON, logger)

    md_file = output_dir / FileNames.REPORT_MD
    with open(md_file, 'w', encoding='utf-8') as f:
        f.write(generate_markdown_report(report))
    logger.debug(f'Saved Markdown report: {md_file.name}')

    csv_file = output_dir / FileNames.FOLDS_CSV
    folds_frame(report).write_csv(csv_file)

    excel_file = save_excel_report(output_dir / FileNames.REPORT_XLSX, report, logger)
    return {'json': str(json_file), 'markdown': str(md_file), 'folds_csv': str(csv_file), 'excel': str(excel_file)}
