"""
Arquivo texto de contagens de n-gramas
"""
import logging
from typing import Dict, Set, Tuple

from src.application.ports.ngram_counts_port import NgramCountsPort
from src.domain.entities.ngram_model import NgramModel
from src.domain.exceptions import MalformedLineError

logger = logging.getLogger(__name__)

VOCAB_HEADER = '#vocab'
UNIGRAM_HEADER = '#unigram'
BIGRAM_HEADER = '#bigram'


class NgramCountsFile(NgramCountsPort):
    """
    Formato UTF-8 em três seções:

        #vocab
        token
        #unigram
        token<TAB>count
        #bigram
        w1<TAB>w2<TAB>count
    """

    def export_counts(self, model: NgramModel, path: str) -> None:
        with open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(f"{VOCAB_HEADER}\n")
            for token in sorted(model.vocabulary):
                handle.write(f"{token}\n")
            handle.write(f"{UNIGRAM_HEADER}\n")
            for token, count in sorted(model.unigram_counts.items()):
                handle.write(f"{token}\t{count}\n")
            handle.write(f"{BIGRAM_HEADER}\n")
            for (history, token), count in sorted(model.bigram_counts.items()):
                handle.write(f"{history}\t{token}\t{count}\n")
        logger.info(f"💾 Contagens exportadas para {path}")

    def import_counts(self, path: str) -> NgramModel:
        vocabulary: Set[str] = set()
        unigrams: Dict[str, int] = {}
        pairs: Dict[Tuple[str, str], int] = {}
        histories: Dict[str, int] = {}
        section = None

        with open(path, encoding='utf-8') as handle:
            for number, line in enumerate(handle, start=1):
                line = line.rstrip('\n')
                if line in (VOCAB_HEADER, UNIGRAM_HEADER, BIGRAM_HEADER):
                    section = line
                    continue
                if not line:
                    continue

                fields = line.split('\t')
                try:
                    if section == VOCAB_HEADER and len(fields) == 1:
                        vocabulary.add(fields[0])
                    elif section == UNIGRAM_HEADER and len(fields) == 2:
                        unigrams[fields[0]] = int(fields[1])
                    elif section == BIGRAM_HEADER and len(fields) == 3:
                        count = int(fields[2])
                        pairs[(fields[0], fields[1])] = count
                        histories[fields[0]] = histories.get(fields[0], 0) + count
                    else:
                        raise ValueError(f"seção {section or 'ausente'}")
                except ValueError as e:
                    raise MalformedLineError(f"{path}:{number}: linha inválida ({e})") from e

        logger.info(f"📥 Contagens importadas de {path}")
        return NgramModel(
            vocabulary=frozenset(vocabulary),
            unigram_counts=unigrams,
            bigram_counts=pairs,
            history_counts=histories,
            n_train=sum(unigrams.values()),
        )
