"""
Escritor de sentenças em texto simples
"""
from typing import Iterable, TextIO

from src.application.ports.report_writer_port import SentenceWriterPort


class PlainSentenceWriter(SentenceWriterPort):
    """Uma sentença por linha; lido de volta por read_plain sem perdas"""

    def write(self, sentences: Iterable[str], stream: TextIO) -> int:
        written = 0
        for sentence in sentences:
            stream.write(f"{sentence}\n")
            written += 1
        return written
