"""
CLI Commands
Subcomandos normalize, stats, eval, experiment e report
"""
import functools
import logging
from typing import List, Optional

import click
import yaml
from pydantic import ValidationError

from src.adapters.input.corpus.corpus_file_reader import CorpusFileReader
from src.adapters.output.persistence.ngram_counts_file import NgramCountsFile
from src.adapters.output.persistence.yaml_profile_repository import YamlProfileRepository
from src.adapters.output.reports.sentence_writer import PlainSentenceWriter
from src.adapters.output.reports.tsv_report_writer import TsvReportWriter
from src.application.services.language_model_service import LanguageModelService
from src.application.services.language_rules_service import LanguageRulesService
from src.application.services.metrics_service import MetricsService
from src.application.use_cases.normalize_corpus_use_case import NormalizeCorpusUseCase
from src.application.use_cases.run_experiment_use_case import RunExperimentUseCase
from src.config.settings import Settings
from src.domain.entities.corpus import CorpusSource, SourceKind
from src.domain.entities.experiment import ExperimentPlanEntry, RejectionRow, RelativeDivisor, Scoring
from src.domain.entities.language_profile import FilterMode
from src.domain.entities.ngram_model import SplitSpec
from src.domain.exceptions import InvalidUtf8Error, TextNormError

logger = logging.getLogger(__name__)

SOURCE_KINDS = [kind.value for kind in SourceKind]


class AppContainer:
    """Adaptadores e serviços compartilhados pelos comandos"""

    def __init__(self, profiles_path: Optional[str] = None):
        self.profiles_path = profiles_path
        self._profiles = None
        self.reader = CorpusFileReader(
            expand_ac_frequencies=Settings.EXPAND_AC_FREQUENCIES,
            default_oscar_limit=Settings.OSCAR_LINE_LIMIT,
        )
        self.rules = LanguageRulesService()
        self.language_model = LanguageModelService()
        self.report_writer = TsvReportWriter()
        self.sentence_writer = PlainSentenceWriter()
        self.counts_file = NgramCountsFile()

    @property
    def profiles(self) -> YamlProfileRepository:
        if self._profiles is None:
            self._profiles = YamlProfileRepository(self.profiles_path)
        return self._profiles

    def normalize_use_case(self, divisor: str = Settings.RELATIVE_DIVISOR) -> NormalizeCorpusUseCase:
        return NormalizeCorpusUseCase(self.reader, self.profiles, self.rules, MetricsService(divisor))

    def experiment_use_case(self, divisor: str = Settings.RELATIVE_DIVISOR) -> RunExperimentUseCase:
        return RunExperimentUseCase(
            reader=self.reader,
            profiles=self.profiles,
            rules=self.rules,
            language_model=self.language_model,
            metrics=MetricsService(divisor),
            max_workers=Settings.MAX_WORKERS,
        )


def handle_errors(command):
    """Converte erros do domínio em ClickException (status 1)"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except TextNormError as e:
            logger.error(f"❌ {type(e).__name__}: {e}")
            raise click.ClickException(f"{type(e).__name__}: {e}") from e
    return wrapper


def _source_options(command):
    options = [
        click.option('--language', required=False, help='Idioma do perfil (ex.: malagasy)'),
        click.option('--source-kind', type=click.Choice(SOURCE_KINDS), default=SourceKind.PLAIN.value,
                     show_default=True),
        click.option('--direction', default=None, help='Direção hausa (niger|nigeria) ou igbo (onwu|new_standard)'),
        click.option('--line-limit', type=click.IntRange(min=1), default=None, help='Limite de linhas OSCAR'),
        click.option('--words-path', type=click.Path(exists=True, dir_okay=False), default=None,
                     help='Arquivo de palavras AC (estatísticas)'),
        click.option('--label', default=None, help='Rótulo da fonte no relatório (ex.: LCC-wiki-30K)'),
        click.option('--filter-mode', type=click.Choice([m.value for m in FilterMode]),
                     default=Settings.DEFAULT_FILTER_MODE, show_default=True),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _require_language(language: Optional[str]) -> str:
    if not language:
        raise click.UsageError("--language é obrigatório sem --plan")
    return language


def _load_plan(path: str) -> List[ExperimentPlanEntry]:
    with open(path, encoding='utf-8') as handle:
        document = yaml.safe_load(handle) or {}
    entries = document.get('experiments') if isinstance(document, dict) else document
    try:
        return [ExperimentPlanEntry.model_validate(entry) for entry in entries or []]
    except ValidationError as e:
        raise click.BadParameter(f"Plano inválido: {e}", param_hint='--plan') from e


def _plan_from_flags(language, source_kind, path, label, words_path, line_limit, direction) -> List[ExperimentPlanEntry]:
    return [ExperimentPlanEntry(
        language=_require_language(language),
        kind=source_kind,
        path=path,
        label=label,
        words_path=words_path,
        line_limit=line_limit,
        direction=direction,
    )]


def _read_stdin() -> List[str]:
    raw = click.get_binary_stream('stdin').read()
    try:
        return raw.decode('utf-8').splitlines()
    except UnicodeDecodeError as e:
        raise InvalidUtf8Error(f"Entrada padrão não é UTF-8 válido: {e}") from e


@click.command()
@_source_options
@click.option('--input', 'input_path', default='-', show_default=True, help="Arquivo de entrada ('-' = stdin)")
@click.option('--output', 'output', type=click.File('w', encoding='utf-8'), default='-', show_default=True)
@click.option('--rejected', 'rejected', type=click.File('w', encoding='utf-8'), default=None,
              help='Arquivo lateral com as sentenças rejeitadas')
@click.option('--no-rules', is_flag=True, help='Normalizador base (sem regras do idioma)')
@click.option('--trace', is_flag=True, help='Mostra a saída de cada um dos seis passos')
@click.pass_obj
@handle_errors
def normalize(app: AppContainer, language, source_kind, direction, line_limit, words_path, label, filter_mode,
              input_path, output, rejected, no_rules, trace):
    """Normaliza um corpus (uma sentença por linha na saída)"""
    use_case = app.normalize_use_case()
    profile = use_case.profile_for(_require_language(language), direction)
    mode = FilterMode(filter_mode)

    if input_path == '-':
        lines = _read_stdin()
    else:
        source = CorpusSource(kind=source_kind, path=input_path, line_limit=line_limit,
                              words_path=words_path, label=label)
        lines = app.reader.read(source).sentences

    normalizer = use_case.normalizer_for(profile)

    if trace:
        for line in lines:
            for number, step in enumerate(normalizer.trace(line, mode)):
                output.write(f"{number}\t{step}\n")
        return

    batch = normalizer.normalize_lines(lines, mode, apply_rules=not no_rules)
    app.sentence_writer.write(batch.kept, output)
    if rejected is not None:
        app.sentence_writer.write(batch.rejected, rejected)
    click.echo(f"{batch.kept_count} mantidas, {batch.rejected_count} rejeitadas", err=True)


@click.command()
@_source_options
@click.argument('path', required=False, type=click.Path(exists=True, dir_okay=False))
@click.option('--plan', type=click.Path(exists=True, dir_okay=False), default=None, help='Plano YAML de fontes')
@click.option('--output', default='-', show_default=True, help='TSV de sentenças mantidas/rejeitadas')
@click.option('--summary', default=None, help='TSV com média e mediana por família de fonte')
@click.pass_obj
@handle_errors
def stats(app: AppContainer, language, source_kind, direction, line_limit, words_path, label, filter_mode,
          path, plan, output, summary):
    """Tabela de sentenças mantidas e rejeitadas"""
    if plan:
        entries = _load_plan(plan)
    elif path:
        entries = _plan_from_flags(language, source_kind, path, label, words_path, line_limit, direction)
    else:
        raise click.UsageError("Informe PATH ou --plan")

    use_case = app.normalize_use_case()
    rows = []
    for entry in entries:
        profile = use_case.profile_for(entry.language, entry.direction)
        _, row = use_case.execute(entry.to_source(), profile, FilterMode(filter_mode), apply_rules=False)
        rows.append(row)

    app.report_writer.write_rejections(rows, output)
    if summary:
        app.report_writer.write_summaries(use_case.metrics.summarize_by_source(rows), summary)


@click.command(name='eval')
@_source_options
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--seed', type=int, default=Settings.DEFAULT_SEED, show_default=True)
@click.option('--scoring', type=click.Choice([s.value for s in Scoring]), default=Settings.DEFAULT_SCORING,
              show_default=True)
@click.option('--no-rules', is_flag=True, help='Normalizador base (sem regras do idioma)')
@click.option('--save-counts', type=click.Path(dir_okay=False), default=None, help='Exporta as contagens do modelo')
@click.option('--load-counts', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Avalia o corpus inteiro com um modelo exportado')
@click.pass_obj
@handle_errors
def evaluate(app: AppContainer, language, source_kind, direction, line_limit, words_path, label, filter_mode,
             path, seed, scoring, no_rules, save_counts, load_counts):
    """Perplexidade de um único modelo de linguagem"""
    use_case = app.normalize_use_case()
    profile = use_case.profile_for(_require_language(language), direction)
    source = CorpusSource(kind=source_kind, path=path, line_limit=line_limit, words_path=words_path, label=label)
    batch, _ = use_case.execute(source, profile, FilterMode(filter_mode), apply_rules=not no_rules)

    lm = app.language_model
    if load_counts:
        model, test = app.counts_file.import_counts(load_counts), batch.kept
    else:
        train, test = lm.split(batch.kept, SplitSpec(train_fraction=Settings.TRAIN_FRACTION, seed=seed))
        model = lm.fit(train)

    if save_counts:
        app.counts_file.export_counts(model, save_counts)

    report = lm.perplexity(model, test, Scoring(scoring))
    click.echo(f"perplexity\t{report.perplexity!r}")
    click.echo(f"n_ngrams\t{report.n_ngrams}")
    click.echo(f"log_prob_sum\t{report.log_prob_sum!r}")


@click.command()
@_source_options
@click.argument('path', required=False, type=click.Path(exists=True, dir_okay=False))
@click.option('--plan', type=click.Path(exists=True, dir_okay=False), default=None, help='Plano YAML de experimentos')
@click.option('--seed', type=int, default=Settings.DEFAULT_SEED, show_default=True)
@click.option('--scoring', type=click.Choice([s.value for s in Scoring]), default=Settings.DEFAULT_SCORING,
              show_default=True)
@click.option('--relative-divisor', type=click.Choice([d.value for d in RelativeDivisor]),
              default=Settings.RELATIVE_DIVISOR, show_default=True)
@click.option('--output', default='-', show_default=True, help='TSV de resultados')
@click.option('--rejections', default=None, help='TSV de sentenças mantidas/rejeitadas')
@click.option('--summary', default=None, help='TSV com média e mediana por família de fonte')
@click.pass_obj
@handle_errors
def experiment(app: AppContainer, language, source_kind, direction, line_limit, words_path, label, filter_mode,
               path, plan, seed, scoring, relative_divisor, output, rejections, summary):
    """Compara o normalizador base com o normalizador com regras"""
    if plan:
        entries = _load_plan(plan)
    elif path:
        entries = _plan_from_flags(language, source_kind, path, label, words_path, line_limit, direction)
    else:
        raise click.UsageError("Informe PATH ou --plan")

    use_case = app.experiment_use_case(relative_divisor)
    spec = SplitSpec(train_fraction=Settings.TRAIN_FRACTION, seed=seed)
    reports = use_case.execute(entries, FilterMode(filter_mode), spec, Scoring(scoring))

    if not reports:
        raise click.ClickException("Nenhum experimento terminou com sucesso")

    app.report_writer.write_experiments(reports, output)
    if rejections:
        rows = [RejectionRow(**report.model_dump(include=set(RejectionRow.model_fields))) for report in reports]
        app.report_writer.write_rejections(rows, rejections)
    if summary:
        app.report_writer.write_summaries(use_case.metrics.summarize_by_source(reports), summary)


@click.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
@handle_errors
def report(app: AppContainer, path):
    """Renderiza um TSV de resultados como tabela alinhada"""
    click.echo(app.report_writer.render(path))


def register_commands(group: click.Group) -> None:
    for command in (normalize, stats, evaluate, experiment, report):
        group.add_command(command)
