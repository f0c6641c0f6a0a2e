"""
Unit tests for CorpusFileReader
"""
import gzip
import logging

import pytest

from src.adapters.input.corpus.corpus_file_reader import CorpusFileReader
from src.domain.entities.corpus import CorpusSource, SourceKind


def _token(index, form):
    return "\t".join([str(index), form, form, "X", "_", "_", "0", "root", "_", "_"])


def _ud_block(text, sent_id="1", with_text=True):
    lines = [f"# sent_id = {sent_id}"]
    if with_text:
        lines.append(f"# text = {text}")
    lines += [_token(i, form) for i, form in enumerate(text.split(), start=1)]
    return "\n".join(lines) + "\n\n"


class TestCorpusFileReader:
    """Test cases for CorpusFileReader"""

    @pytest.fixture
    def reader(self):
        return CorpusFileReader()

    # ---- UD ----

    def test_read_ud(self, reader, write_file):
        """Test one sentence per '# text =' comment"""
        path = write_file("ud.conllu", _ud_block("Sannu da zuwa", "1") + _ud_block("Ina kwana", "2"))
        corpus = reader.read_ud(path)
        assert corpus.sentences == ["Sannu da zuwa", "Ina kwana"]
        assert corpus.stats.units == 2
        assert corpus.stats.skipped == 0

    def test_read_ud_skips_block_without_text(self, reader, write_file, caplog):
        """Test block without text comment is counted and skipped"""
        content = _ud_block("first one", "1") + _ud_block("lost", "2", with_text=False) + _ud_block("third", "3")
        path = write_file("ud.conllu", content)
        with caplog.at_level(logging.WARNING):
            corpus = reader.read_ud(path)
        assert corpus.sentences == ["first one", "third"]
        assert corpus.stats.skipped == 1
        assert "MalformedConlluError" in caplog.text

    def test_read_ud_without_trailing_blank_line(self, reader, write_file):
        path = write_file("ud.conllu", _ud_block("last one").rstrip("\n"))
        assert reader.read_ud(path).sentences == ["last one"]

    def test_read_ud_gzip(self, reader, tmp_path):
        """Test transparent decompression"""
        path = tmp_path / "ud.conllu.gz"
        with gzip.open(path, 'wt', encoding='utf-8') as handle:
            handle.write(_ud_block("compressed sentence"))
        assert reader.read_ud(str(path)).sentences == ["compressed sentence"]

    def test_read_ud_empty_file(self, reader, write_file):
        corpus = reader.read_ud(write_file("empty.conllu", ""))
        assert corpus.sentences == []
        assert corpus.stats.units == 0

    # ---- LCC ----

    def test_read_lcc(self, reader, write_file):
        path = write_file("lcc.txt", "1\tFirst sentence.\n2\tSecond\twith tab.\n")
        assert reader.read_lcc(path).sentences == ["First sentence.", "Second\twith tab."]

    def test_read_lcc_line_without_tab(self, reader, write_file, caplog):
        """Test line without tab is used whole and logged"""
        path = write_file("lcc.txt", "1\tok\nno tab here\n\n")
        with caplog.at_level(logging.WARNING):
            corpus = reader.read_lcc(path)
        assert corpus.sentences == ["ok", "no tab here"]
        assert "sem TAB" in caplog.text

    # ---- OSCAR ----

    def test_read_oscar_limit(self, reader, write_file):
        path = write_file("oscar.txt", "a\n\nb\nc\nd\n")
        corpus = reader.read_oscar(path, line_limit=2)
        assert corpus.sentences == ["a", "b"]
        assert corpus.stats.units == 2

    def test_read_oscar_without_limit(self, reader, write_file):
        path = write_file("oscar.txt", "a\nb\nc\n")
        assert reader.read_oscar(path).sentences == ["a", "b", "c"]

    def test_default_oscar_limit(self, write_file):
        reader = CorpusFileReader(default_oscar_limit=1)
        path = write_file("oscar.txt", "a\nb\n")
        assert reader.read(CorpusSource(kind=SourceKind.OSCAR, path=path)).sentences == ["a"]

    # ---- AC ----

    def test_read_ac(self, reader, write_file):
        words = write_file("words.txt", "sannu 10\nda 7\n")
        bigrams = write_file("bigrams.txt", "sannu da 3\nda zuwa 1\n")
        corpus = reader.read_ac(words, bigrams)
        assert corpus.sentences == ["sannu da", "da zuwa"]
        assert corpus.stats.units == 2
        assert corpus.stats.word_types == 2

    def test_read_ac_expanded(self, reader, write_file):
        bigrams = write_file("bigrams.txt", "sannu da 3\nda zuwa 1\n")
        corpus = reader.read_ac(None, bigrams, expand_frequencies=True)
        assert corpus.sentences == ["sannu da"] * 3 + ["da zuwa"]

    def test_read_ac_malformed_lines(self, reader, write_file):
        """Test lines out of format are skipped"""
        bigrams = write_file("bigrams.txt", "sannu da 3\nsozinho\nda zuwa x\nda\tzuwa\t2\n")
        corpus = reader.read_ac(None, bigrams)
        assert corpus.sentences == ["sannu da", "da zuwa"]
        assert corpus.stats.skipped == 2

    def test_read_ac_words(self, reader, write_file):
        stats = reader.read_ac_words(write_file("words.txt", "ab 3\nba 2\nc 1\nbad line here\n"))
        assert stats.word_types == 3
        assert stats.distinct_scalars == 3
        assert stats.skipped == 1

    # ---- texto simples e erros de codificação ----

    def test_read_plain_keeps_lines(self, reader, write_file):
        path = write_file("plain.txt", "Uma linha\n\nOutra  linha \r\n")
        assert reader.read_plain(path).sentences == ["Uma linha", "", "Outra  linha "]

    def test_invalid_utf8_line_is_skipped(self, reader, write_file, caplog):
        path = write_file("bad.txt", b"ok\n\xff\xfe bad\nalso ok\n")
        with caplog.at_level(logging.WARNING):
            corpus = reader.read_plain(path)
        assert corpus.sentences == ["ok", "also ok"]
        assert corpus.stats.skipped == 1
        assert "invalid-utf8" in caplog.text

    def test_truncated_gzip_is_skipped(self, reader, write_file, caplog):
        payload = gzip.compress("\n".join(f"linha {i}" for i in range(2000)).encode('utf-8'))
        path = write_file("cut.txt.gz", payload[: len(payload) // 2])
        with caplog.at_level(logging.WARNING):
            corpus = reader.read_plain(path)
        assert corpus.stats.skipped == 1
        assert "corrupt-file" in caplog.text

    def test_plain_bytes_with_gz_suffix_are_skipped(self, reader, write_file):
        path = write_file("fake.txt.gz", b"uncompressed\tline\n")
        corpus = reader.read_lcc(path)
        assert corpus.sentences == []
        assert corpus.stats.skipped == 1

    # ---- despacho ----

    @pytest.mark.parametrize("kind, method", [
        (SourceKind.UD, 'read_ud'),
        (SourceKind.LCC, 'read_lcc'),
        (SourceKind.PLAIN, 'read_plain'),
    ])
    def test_read_dispatch(self, reader, mocker, kind, method):
        target = mocker.patch.object(reader, method)
        reader.read(CorpusSource(kind=kind, path="corpus.txt"))
        target.assert_called_once_with("corpus.txt")

    def test_read_dispatch_ac_bigrams(self, reader, mocker):
        target = mocker.patch.object(reader, 'read_ac')
        reader.read(CorpusSource(kind=SourceKind.AC_BIGRAMS, path="b.txt", words_path="w.txt"))
        target.assert_called_once_with("w.txt", "b.txt")

    def test_read_ac_words_source_has_no_sentences(self, reader, write_file):
        path = write_file("words.txt", "sannu 10\n")
        corpus = reader.read(CorpusSource(kind=SourceKind.AC_WORDS, path=path))
        assert corpus.sentences == []
        assert corpus.stats.word_types == 1
