"""
Unit tests for NgramCountsFile
"""
import pytest

from src.adapters.output.persistence.ngram_counts_file import NgramCountsFile
from src.domain.exceptions import MalformedLineError


class TestNgramCountsFile:
    """Test cases for NgramCountsFile"""

    @pytest.fixture
    def counts_file(self):
        return NgramCountsFile()

    def test_export_then_import_keeps_model(self, counts_file, language_model, tmp_path):
        """Test the imported model scores like the original"""
        model = language_model.fit(["sannu da zuwa", "da zuwa", "ina kwana"])
        path = str(tmp_path / "counts.tsv")
        counts_file.export_counts(model, path)
        restored = counts_file.import_counts(path)

        assert restored == model
        test = ["sannu da kwana", "wani abu"]
        assert language_model.perplexity(restored, test) == language_model.perplexity(model, test)

    def test_export_format(self, counts_file, language_model, tmp_path):
        path = tmp_path / "counts.tsv"
        counts_file.export_counts(language_model.fit(["a"]), str(path))
        assert path.read_text(encoding='utf-8').splitlines() == [
            "#vocab", "</s>", "<UNK>", "<s>", "a",
            "#unigram", "</s>\t1", "<s>\t1", "a\t1",
            "#bigram", "<s>\ta\t1", "a\t</s>\t1",
        ]

    def test_malformed_line(self, counts_file, write_file):
        path = write_file("counts.tsv", "#vocab\na\n#unigram\na\tmany\n")
        with pytest.raises(MalformedLineError) as exc_info:
            counts_file.import_counts(path)
        assert ":4:" in str(exc_info.value)

    def test_line_before_any_section(self, counts_file, write_file):
        with pytest.raises(MalformedLineError):
            counts_file.import_counts(write_file("counts.tsv", "a\t1\n"))
