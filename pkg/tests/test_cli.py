import csv
import io
import json

import pytest

from osum.cli import main

from conftest import RAKE_ABSTRACT


def run_cli(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def review_file(tmp_path):
    path = tmp_path / "review.txt"
    path.write_text(
        "The acting was excellent throughout. The plot was boring and predictable. "
        "The music soared beautifully. A dull ending wasted the promise."
    )
    return str(path)


class TestSummarizeCommand:
    def test_happy_path(self, review_file, capsys):
        code, out, err = run_cli(
            ["summarize", "--function", "a4", "--alpha", "0.5", "--r", "1",
             "--budget", "200", "--input", review_file],
            capsys,
        )
        assert code == 0
        assert "acting" in out

    def test_bad_alpha_exits_two_naming_flag(self, review_file, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["summarize", "--alpha", "1.5", "--input", review_file])
        assert excinfo.value.code == 2
        assert "--alpha" in capsys.readouterr().err

    def test_zero_budget_empty_output(self, review_file, capsys):
        code, out, err = run_cli(
            ["summarize", "--budget", "0", "--input", review_file], capsys
        )
        assert code == 0
        assert out.strip() == ""

    def test_missing_input_exits_one(self, capsys):
        code, out, err = run_cli(["summarize", "--input", "/no/such/file.txt"], capsys)
        assert code == 1
        assert "error" in err
        assert out == ""

    def test_stdin_and_json_format(self, review_file, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("A superb film. Dull filler text."))
        code, out, err = run_cli(["summarize", "--format", "json", "--budget", "3"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"summary", "selectedIndices", "parameters", "objectiveValue"}
        assert payload["parameters"]["budget"] == 3

    def test_trace_goes_to_stderr(self, review_file, capsys):
        code, out, err = run_cli(
            ["summarize", "--input", review_file, "--budget", "10", "--trace"], capsys
        )
        assert code == 0
        assert "candidate=" in err and "candidate=" not in out


class TestKeywordsCommand:
    def test_rake_on_worked_abstract(self, tmp_path, capsys):
        path = tmp_path / "abstract.txt"
        path.write_text(RAKE_ABSTRACT)
        code, out, err = run_cli(
            ["keywords", "--method", "rake", "--input", str(path)], capsys
        )
        assert code == 0
        assert out.splitlines()[0].endswith("minimal generating sets")

    def test_tfidf_with_corpus(self, tmp_path, capsys):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "other.txt").write_text("hybrid cars on roads")
        doc = tmp_path / "doc.txt"
        doc.write_text("solar panels solar")
        code, out, err = run_cli(
            ["keywords", "--method", "tfidf", "--input", str(doc),
             "--corpus", str(corpus), "--top", "2"],
            capsys,
        )
        assert code == 0
        assert out.splitlines()[0].endswith("solar")

    def test_textrank_with_query(self, tmp_path, capsys):
        doc = tmp_path / "doc.txt"
        doc.write_text("solar hybrid. solar hybrid. solar hybrid.")
        code, out, err = run_cli(
            ["keywords", "--method", "textrank", "--input", str(doc), "--emit-query"],
            capsys,
        )
        assert code == 0
        assert "!1000" in out


class TestAggregateCommand:
    def test_single_system_keeps_order(self, tmp_path, capsys):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "d1.txt").write_text("solar panels power homes")
        doc = tmp_path / "doc.txt"
        doc.write_text("Solar panels, solar power. Solar panels everywhere.")
        code, out, err = run_cli(
            ["aggregate", "--input", str(doc), "--systems", "rake",
             "--corpus", str(corpus), "--weight", "kl-uni", "--emit-query"],
            capsys,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) >= 2
        assert " AND " in lines[-1] or "!" in lines[-1]

    def test_unknown_system_rejected(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["aggregate", "--systems", "bogus", "--corpus", str(tmp_path), "--input", "-"])
        assert excinfo.value.code == 2


class TestEvaluateCommand:
    @pytest.fixture
    def corpus(self, tmp_path):
        docs = tmp_path / "docs"
        refs = tmp_path / "refs"
        docs.mkdir()
        refs.mkdir()
        for i, text in enumerate(
            ["Fine acting here. Plain filler words.", "Boring plot there. Second filler words."]
        ):
            (docs / f"d{i}.txt").write_text(text)
            (refs / f"d{i}.txt").write_text(text)
        return str(docs), str(refs)

    def test_report_line(self, corpus, capsys):
        docs, refs = corpus
        code, out, err = run_cli(
            ["evaluate", "--docs", docs, "--refs", refs, "--budget", "6"], capsys
        )
        assert code == 0
        assert "rouge1=" in out and "corr=" in out

    def test_sweep_grid_row_count(self, corpus, tmp_path, capsys):
        docs, refs = corpus
        out_csv = tmp_path / "sweep.csv"
        code, out, err = run_cli(
            ["evaluate", "--docs", docs, "--refs", refs, "--sweep",
             "--budget", "6", "--out", str(out_csv)],
            capsys,
        )
        assert code == 0
        with open(out_csv) as fh:
            rows = list(csv.DictReader(fh))
        # 5 alpha values x 5 r values x 5 variants
        assert len(rows) == 125
        assert set(rows[0]) == {"alpha", "r", "variant", "rouge1", "rouge2", "corr"}


class TestConfig:
    def test_config_file_defaults(self, tmp_path, review_file, capsys, monkeypatch):
        cfg = tmp_path / "osum.ini"
        cfg.write_text("[osum]\nbudget = 3\nfunction = a2\n")
        monkeypatch.setenv("OSUM_CONFIG", str(cfg))
        code, out, err = run_cli(
            ["summarize", "--input", review_file, "--format", "json"], capsys
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["parameters"]["budget"] == 3
        assert payload["parameters"]["function"] == "a2"

    def test_config_with_missing_path_fails(self, tmp_path, review_file, capsys, monkeypatch):
        cfg = tmp_path / "osum.ini"
        cfg.write_text("[osum]\nlexicon = /no/such/lexicon.tsv\n")
        monkeypatch.setenv("OSUM_CONFIG", str(cfg))
        code, out, err = run_cli(["summarize", "--input", review_file], capsys)
        assert code == 1
        assert "lexicon" in err

    def test_config_extractor_choices_feed_aggregate(self, tmp_path, capsys, monkeypatch):
        cfg = tmp_path / "osum.ini"
        cfg.write_text("[osum]\nextractors = rake\n")
        monkeypatch.setenv("OSUM_CONFIG", str(cfg))
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "d1.txt").write_text("solar panels power homes")
        doc = tmp_path / "doc.txt"
        doc.write_text("Solar panels, solar power. Solar panels everywhere.")
        code, out, err = run_cli(
            ["aggregate", "--input", str(doc), "--corpus", str(corpus)], capsys
        )
        assert code == 0
        assert "solar panels" in out

    def test_config_rejects_unknown_extractor(self, tmp_path, review_file, capsys, monkeypatch):
        cfg = tmp_path / "osum.ini"
        cfg.write_text("[osum]\nextractors = bogus\n")
        monkeypatch.setenv("OSUM_CONFIG", str(cfg))
        code, out, err = run_cli(["summarize", "--input", review_file], capsys)
        assert code == 1
        assert "extractors" in err
