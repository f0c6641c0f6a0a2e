"""
Escritor de relatórios TSV e tabelas alinhadas
"""
import logging
import sys
from typing import List, Sequence

import pandas as pd
from pydantic import BaseModel

from src.application.ports.report_writer_port import ReportWriterPort
from src.application.services.metrics_service import (
    PERCENT_PLACES,
    PERPLEXITY_PLACES,
    RELATIVE_PLACES,
    format_fixed,
)
from src.domain.entities.experiment import ExperimentReport, RejectionRow, SourceSummary

logger = logging.getLogger(__name__)

EXPERIMENT_COLUMNS = [
    'language', 'source', 'source_kind', 'base_pp', 'exp_pp', 'raw_diff', 'relative_diff',
    'diff_from_median', 'effect', 'n_test_ngrams', 'kept', 'rejected', 'pct_rejected', 'divisor',
]
REJECTION_COLUMNS = ['language', 'source', 'source_kind', 'kept', 'rejected', 'pct_rejected']
SUMMARY_COLUMNS = ['group', 'count', 'average', 'median']

DISPLAY_PLACES = {
    'base_pp': PERPLEXITY_PLACES,
    'exp_pp': PERPLEXITY_PLACES,
    'raw_diff': PERPLEXITY_PLACES,
    'relative_diff': RELATIVE_PLACES,
    'diff_from_median': RELATIVE_PLACES,
    'pct_rejected': PERCENT_PLACES,
    'average': PERCENT_PLACES,
    'median': PERCENT_PLACES,
}


def _frame(rows: Sequence[BaseModel], columns: List[str]) -> pd.DataFrame:
    return pd.DataFrame([row.model_dump(mode='json') for row in rows], columns=columns)


class TsvReportWriter(ReportWriterPort):
    """Tabelas separadas por TAB, com cabeçalho, em UTF-8 e precisão total"""

    def _write(self, frame: pd.DataFrame, path: str) -> None:
        if path == '-':
            frame.to_csv(sys.stdout, sep='\t', index=False)
        else:
            frame.to_csv(path, sep='\t', index=False, encoding='utf-8')
            logger.info(f"💾 Tabela com {len(frame)} linha(s) gravada em {path}")

    def write_experiments(self, reports: List[ExperimentReport], path: str) -> None:
        self._write(_frame(reports, EXPERIMENT_COLUMNS), path)

    def write_rejections(self, rows: List[RejectionRow], path: str) -> None:
        self._write(_frame(rows, REJECTION_COLUMNS), path)

    def write_summaries(self, summaries: List[SourceSummary], path: str) -> None:
        self._write(_frame(summaries, SUMMARY_COLUMNS), path)

    def render(self, path: str) -> str:
        frame = pd.read_csv(path, sep='\t', encoding='utf-8', keep_default_na=False)
        for column, places in DISPLAY_PLACES.items():
            if column in frame.columns:
                frame[column] = [
                    format_fixed(float(value), places) if value != '' else ''
                    for value in frame[column]
                ]
        return frame.to_string(index=False)
