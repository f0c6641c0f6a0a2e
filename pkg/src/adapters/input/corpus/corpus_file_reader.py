"""
Corpus File Reader
Leitores dos formatos UD (CoNLL-U), LCC, OSCAR, AC e texto simples
"""
import gzip
import logging
import zlib
from typing import IO, Iterator, List, Optional, Tuple

import conllu
import regex

from src.application.ports.corpus_reader_port import CorpusReaderPort
from src.domain.entities.corpus import Corpus, CorpusSource, ReadStats, SourceKind
from src.domain.exceptions import MalformedConlluError, MalformedLineError

logger = logging.getLogger(__name__)

_FIELDS = regex.compile(r"[ \t]+")


def _open(path: str) -> IO[bytes]:
    """Arquivos .gz são descomprimidos de forma transparente"""
    if path.endswith('.gz'):
        return gzip.open(path, 'rb')
    return open(path, 'rb')


class CorpusFileReader(CorpusReaderPort):
    """Leitor de arquivos de corpus; nunca falha por causa do conteúdo do arquivo"""

    def __init__(self, expand_ac_frequencies: bool = False, default_oscar_limit: Optional[int] = None):
        """
        Args:
            expand_ac_frequencies: Repete cada bigrama AC pela sua frequência
            default_oscar_limit: Limite de linhas OSCAR quando a fonte não define um
        """
        self.expand_ac_frequencies = expand_ac_frequencies
        self.default_oscar_limit = default_oscar_limit
        logger.info("CorpusFileReader inicializado")

    def _skip(self, stats: ReadStats, path: str, line_number: int, reason: str) -> None:
        stats.skipped += 1
        logger.warning(
            f"⚠️ Unidade ignorada em {path}:{line_number} ({reason})",
            extra={'source': path, 'line_number': line_number, 'reason': reason},
        )

    def _lines(self, path: str, stats: ReadStats) -> Iterator[Tuple[int, str]]:
        """
        Linhas decodificadas (sem quebra de linha); linhas não UTF-8 são contadas e puladas

        Um .gz truncado ou corrompido encerra a leitura no ponto do erro; o restante
        do arquivo conta como uma unidade ignorada.
        """
        number = 0
        with _open(path) as handle:
            try:
                for number, raw in enumerate(handle, start=1):
                    try:
                        line = raw.decode('utf-8')
                    except UnicodeDecodeError:
                        self._skip(stats, path, number, 'invalid-utf8')
                        continue
                    yield number, line.rstrip('\r\n')
            except (EOFError, OSError, zlib.error) as e:
                logger.error(f"❌ Arquivo corrompido {path}: {e}")
                self._skip(stats, path, number + 1, 'corrupt-file')

    def read_ud(self, path: str) -> Corpus:
        stats = ReadStats()
        sentences: List[str] = []
        block: List[str] = []
        block_start = 1

        def flush() -> None:
            if not block:
                return
            try:
                parsed = conllu.parse("\n".join(block) + "\n\n")
                texts = [sentence.metadata.get('text') for sentence in parsed]
                if not texts or any(text is None for text in texts):
                    raise MalformedConlluError("Bloco sem comentário '# text ='")
                sentences.extend(texts)
                stats.units += len(texts)
            except MalformedConlluError:
                self._skip(stats, path, block_start, MalformedConlluError.__name__)
            except Exception as e:
                self._skip(stats, path, block_start, f'conllu-parse-error: {e}')

        for number, line in self._lines(path, stats):
            if line.strip():
                if not block:
                    block_start = number
                block.append(line)
            else:
                flush()
                block = []
        flush()

        logger.info(f"📚 UD {path}: {stats.units} sentenças, {stats.skipped} ignoradas")
        return Corpus(sentences=sentences, stats=stats)

    def read_lcc(self, path: str) -> Corpus:
        stats = ReadStats()
        sentences: List[str] = []

        for number, line in self._lines(path, stats):
            if not line.strip():
                continue
            if '\t' in line:
                sentences.append(line.split('\t', 1)[1])
            else:
                logger.warning(
                    f"⚠️ Linha sem TAB em {path}:{number}, usada inteira",
                    extra={'source': path, 'line_number': number, 'reason': 'missing-tab'},
                )
                sentences.append(line)
            stats.units += 1

        logger.info(f"📚 LCC {path}: {stats.units} sentenças")
        return Corpus(sentences=sentences, stats=stats)

    def read_oscar(self, path: str, line_limit: Optional[int] = None) -> Corpus:
        stats = ReadStats()
        sentences: List[str] = []

        for _, line in self._lines(path, stats):
            if line_limit is not None and stats.units >= line_limit:
                break
            if not line.strip():
                continue
            sentences.append(line)
            stats.units += 1

        logger.info(f"📚 OSCAR {path}: {stats.units} linhas (limite: {line_limit or 'nenhum'})")
        return Corpus(sentences=sentences, stats=stats)

    def _frequency_lines(self, path: str, stats: ReadStats, width: int) -> Iterator[Tuple[List[str], int]]:
        for number, line in self._lines(path, stats):
            if not line.strip():
                continue
            fields = _FIELDS.split(line.strip())
            if len(fields) != width + 1 or not fields[-1].isdigit():
                self._skip(stats, path, number, MalformedLineError.__name__)
                continue
            yield fields[:-1], int(fields[-1])

    def read_ac_words(self, words_path: str) -> ReadStats:
        """Estatísticas de vocabulário do arquivo de palavras"""
        stats = ReadStats()
        scalars = set()
        for tokens, _ in self._frequency_lines(words_path, stats, width=1):
            stats.word_types += 1
            scalars.update(tokens[0])
        stats.units = stats.word_types
        stats.distinct_scalars = len(scalars)
        return stats

    def read_ac(self, words_path: Optional[str], bigrams_path: str, expand_frequencies: Optional[bool] = None) -> Corpus:
        expand = self.expand_ac_frequencies if expand_frequencies is None else expand_frequencies
        stats = self.read_ac_words(words_path) if words_path else ReadStats()
        stats = stats.model_copy(update={'units': 0})
        sentences: List[str] = []

        for tokens, count in self._frequency_lines(bigrams_path, stats, width=2):
            sentence = " ".join(tokens)
            repeats = count if expand else 1
            sentences.extend([sentence] * repeats)
            stats.units += 1

        logger.info(f"📚 AC {bigrams_path}: {stats.units} bigramas, {len(sentences)} sentenças")
        return Corpus(sentences=sentences, stats=stats)

    def read_plain(self, path: str) -> Corpus:
        stats = ReadStats()
        sentences = [line for _, line in self._lines(path, stats)]
        stats.units = len(sentences)
        return Corpus(sentences=sentences, stats=stats)

    def read(self, source: CorpusSource) -> Corpus:
        if source.kind == SourceKind.UD:
            return self.read_ud(source.path)
        if source.kind == SourceKind.LCC:
            return self.read_lcc(source.path)
        if source.kind == SourceKind.OSCAR:
            return self.read_oscar(source.path, source.line_limit or self.default_oscar_limit)
        if source.kind == SourceKind.AC_BIGRAMS:
            return self.read_ac(source.words_path, source.path)
        if source.kind == SourceKind.AC_WORDS:
            return Corpus(sentences=[], stats=self.read_ac_words(source.path))
        return self.read_plain(source.path)
