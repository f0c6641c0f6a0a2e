"""
Ponto de entrada da aplicação - CLI de normalização e experimentos
"""
import logging
import sys
from typing import Optional

import click
from pythonjsonlogger.json import JsonFormatter

from src.adapters.input.cli.commands import AppContainer, register_commands
from src.config.settings import Settings

LOG_FORMAT = '%(asctime)s | %(name)s | %(levelname)s | %(message)s'
JSON_LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'


def setup_logging(level: Optional[str] = None, log_format: Optional[str] = None, log_file: Optional[str] = None):
    """
    Configura o sistema de logging

    Logs vão para stderr (stdout carrega os dados). Em formato json, ou com
    --log-file, cada registro inclui os campos extras source, line_number e reason.
    """
    level = level or Settings.LOG_LEVEL
    log_format = log_format or Settings.LOG_FORMAT

    stream_handler = logging.StreamHandler(sys.stderr)
    if log_format == 'json':
        stream_handler.setFormatter(JsonFormatter(JSON_LOG_FORMAT))
    else:
        stream_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handlers = [stream_handler]

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(JsonFormatter(JSON_LOG_FORMAT))
        handlers.append(file_handler)

    logging.basicConfig(level=getattr(logging, level), handlers=handlers, force=True)


@click.group()
@click.option('--profiles', 'profiles_path', type=click.Path(dir_okay=False), default=None,
              help='Arquivo YAML de perfis de idioma (sobrescreve os embutidos)')
@click.option('--log-level', default=None, type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR']))
@click.option('--log-file', default=None, type=click.Path(dir_okay=False),
              help='Log estruturado (JSON) das linhas ignoradas e do andamento')
@click.pass_context
def cli(ctx: click.Context, profiles_path: Optional[str], log_level: Optional[str], log_file: Optional[str]):
    """Normalização de texto e avaliação de corpus para idiomas com poucos recursos"""
    logger = logging.getLogger(__name__)

    try:
        Settings.validate()
    except ValueError as e:
        setup_logging(log_level or 'INFO', 'text', log_file)
        logger.error(f"❌ Erro de configuração: {e}")
        ctx.exit(1)

    setup_logging(log_level, Settings.LOG_FORMAT, log_file)
    logger.debug(f"🚀 {Settings.APP_NAME} iniciado")
    ctx.obj = AppContainer(profiles_path or Settings.PROFILES_PATH)


register_commands(cli)


def main():
    cli(obj=None)


if __name__ == "__main__":
    main()
