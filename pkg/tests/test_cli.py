"""End-to-end tests driving the command-line interface in process."""

import json

import pytest

from trolltext.cli import main
from trolltext.corpus import (
    AccountCategory,
    Corpus,
    Document,
    Source,
    read_corpus_csv,
    write_corpus_csv,
)

LEFT_WORDS = ["justice", "equality", "movement", "rights", "community"]
RIGHT_WORDS = ["border", "patriot", "freedom", "heritage", "flag"]
NEWS_WORDS = ["breaking", "report", "headline", "update", "coverage"]

CATEGORY_WORDS = {
    "LeftTroll": LEFT_WORDS,
    "RightTroll": RIGHT_WORDS,
    "NewsFeed": NEWS_WORDS,
}

GOOD_AD = """\
Ad ID 1234
Ad Text Join us for the rally, drop by and bring friends!
Ad Landing Page https://www.facebook.com/Black-Matters-1579673598947501/
Ad Targeting Location: United States
Ad Impressions 12,576
Ad Clicks 1,063
Ad Creation Date 06/23/16 03:03:51 AM PDT
"""

REDACTED_AD = """\
Ad ID 2001
Ad Text ?? ??? ????
Ad Landing Page https://www.facebook.com/Stop-All-Invaders-44/
Ad Impressions 10
Ad Clicks 2
Ad Creation Date 01/05/17 10:00:00 AM PST
"""


def build_tweet_csv(path):
    lines = ["author,content,publish_date,followers,retweet,account_category"]
    day = 1
    for category, words in CATEGORY_WORDS.items():
        for acct in range(4):
            for i in range(5):
                text = "%s %s %s" % (
                    words[i % 5],
                    words[(i + 1) % 5],
                    words[(i + 2) % 5],
                )
                lines.append(
                    "%s_%d,%s,10/%d/2017 09:15,%d,0,%s"
                    % (category.upper(), acct, text, day % 28 + 1, 50 + i, category)
                )
                day += 1
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def build_unlabeled_corpus(path):
    docs = [
        Document("b0", "justice equality movement", None, Source.TWITTER, "tieacct"),
        Document("b1", "equality movement rights", None, Source.TWITTER, "tieacct"),
        Document("b2", "border patriot freedom", None, Source.TWITTER, "tieacct"),
        Document("b3", "patriot freedom heritage", None, Source.TWITTER, "tieacct"),
        Document("b4", "justice rights community", None, Source.TWITTER, "leftacct"),
        Document("b5", "movement justice equality", None, Source.TWITTER, "leftacct"),
        Document("b6", "community equality justice", None, Source.TWITTER, "leftacct"),
    ]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_corpus_csv(Corpus(docs), fh)
    return path


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    return tmp_path_factory.mktemp("cli")


@pytest.fixture(scope="module")
def tweets_csv(workdir):
    return build_tweet_csv(workdir / "tweets.csv")


@pytest.fixture(scope="module")
def corpus_csv(workdir, tweets_csv):
    out = workdir / "ingest"
    assert main(["ingest-tweets", "--input", str(tweets_csv), "--out", str(out)]) == 0
    return out / "corpus.csv"


@pytest.fixture(scope="module")
def svm_dir(workdir, corpus_csv):
    out = workdir / "svm"
    code = main(
        ["train-svm", "--corpus", str(corpus_csv), "--out", str(out), "--seed", "3"]
    )
    assert code == 0
    return out


class TestIngestTweets:
    def test_outputs(self, corpus_csv):
        out = corpus_csv.parent
        for name in ("corpus.csv", "weekly.csv", "report.txt", "config_used.txt"):
            assert (out / name).exists()
        with open(corpus_csv, encoding="utf-8", newline="") as fh:
            corpus = read_corpus_csv(fh)
        assert len(corpus) == 60
        assert all(d.label is not None for d in corpus)
        report = (out / "report.txt").read_text()
        assert "rows_parsed=60" in report
        assert "category.LeftTroll=20" in report

    def test_missing_column_exits_2(self, workdir, capsys):
        bad = workdir / "bad.csv"
        bad.write_text("author,content\nX,hello world\n", encoding="utf-8")
        code = main(
            ["ingest-tweets", "--input", str(bad), "--out", str(workdir / "bad_out")]
        )
        assert code == 2
        assert "error:" in capsys.readouterr().err


class TestIngestAds:
    def test_dropped_counter_and_corpus(self, tmp_path):
        ads = tmp_path / "ads"
        ads.mkdir()
        (ads / "ad1.txt").write_text(GOOD_AD, encoding="utf-8")
        (ads / "ad2.txt").write_text(REDACTED_AD, encoding="utf-8")
        out = tmp_path / "out"
        assert main(["ingest-ads", "--input", str(ads), "--out", str(out)]) == 0
        report = (out / "report.txt").read_text()
        assert "files=2" in report
        assert "records=1" in report
        assert "dropped_fully_redacted=1" in report
        with open(out / "corpus.csv", encoding="utf-8", newline="") as fh:
            corpus = read_corpus_csv(fh)
        assert len(corpus) == 1
        assert corpus.documents[0].account == "Black Matters"

    def test_empty_directory_exits_2(self, tmp_path):
        empty = tmp_path / "none"
        empty.mkdir()
        assert (
            main(["ingest-ads", "--input", str(empty), "--out", str(tmp_path / "o")])
            == 2
        )


class TestReport:
    def test_top_terms_and_summary(self, corpus_csv, tmp_path):
        out = tmp_path / "report"
        code = main(
            [
                "report",
                "--corpus",
                str(corpus_csv),
                "--out",
                str(out),
                "--top-n",
                "5",
                "--category",
                "LeftTroll",
            ]
        )
        assert code == 0
        lines = (out / "top_terms.csv").read_text().splitlines()
        assert lines[0] == "rank,term,count"
        assert len(lines) == 6
        summary = (out / "summary.txt").read_text()
        assert "documents=60" in summary
        assert "category.LeftTroll=20" in summary
        assert "time_range=" in summary

    def test_category_filter_needs_labels(self, tmp_path):
        corpus = build_unlabeled_corpus(tmp_path / "unlabeled.csv")
        code = main(
            [
                "report",
                "--corpus",
                str(corpus),
                "--out",
                str(tmp_path / "r"),
                "--category",
                "LeftTroll",
            ]
        )
        assert code == 2

    def test_top_n_exceeding_vocabulary(self, corpus_csv, tmp_path):
        out = tmp_path / "wide"
        assert (
            main(
                [
                    "report",
                    "--corpus",
                    str(corpus_csv),
                    "--out",
                    str(out),
                    "--top-n",
                    "500",
                ]
            )
            == 0
        )
        rows = (out / "top_terms.csv").read_text().splitlines()[1:]
        assert 0 < len(rows) <= 15  # three five-word vocabularies


class TestTrainSvm:
    def test_outputs(self, svm_dir):
        for name in (
            "model.json",
            "confusion.csv",
            "accuracy.csv",
            "summary.txt",
            "config_used.txt",
        ):
            assert (svm_dir / name).exists()
        payload = json.loads((svm_dir / "model.json").read_text())
        assert payload["format"] == "trolltext-svm"
        confusion = (svm_dir / "confusion.csv").read_text().splitlines()
        assert confusion[0].startswith("predicted,")
        assert len(confusion) == 5  # header + three classes + truth totals
        summary = (svm_dir / "summary.txt").read_text()
        assert "train_documents=48" in summary
        assert "test_documents=12" in summary

    def test_separable_fixture_is_learned(self, svm_dir):
        accuracy = (svm_dir / "accuracy.csv").read_text().splitlines()
        overall = [l for l in accuracy if l.startswith("overall,")][0]
        assert float(overall.split(",")[1]) == 100.0

    def test_train_size_too_large_exits_2(self, corpus_csv, tmp_path, capsys):
        code = main(
            [
                "train-svm",
                "--corpus",
                str(corpus_csv),
                "--out",
                str(tmp_path / "big"),
                "--train-size",
                "250000",
            ]
        )
        assert code == 2
        assert "250000" in capsys.readouterr().err

    def test_rerun_is_byte_identical(self, corpus_csv, tmp_path):
        outs = []
        for name in ("a", "b"):
            out = tmp_path / name
            code = main(
                [
                    "train-svm",
                    "--corpus",
                    str(corpus_csv),
                    "--out",
                    str(out),
                    "--seed",
                    "11",
                ]
            )
            assert code == 0
            outs.append(out)
        for name in ("model.json", "confusion.csv", "accuracy.csv", "config_used.txt"):
            assert (outs[0] / name).read_bytes() == (outs[1] / name).read_bytes()

    def test_flag_beats_config_file(self, corpus_csv, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("seed=5\nkernel=linear\n", encoding="utf-8")
        out = tmp_path / "prec"
        code = main(
            [
                "train-svm",
                "--corpus",
                str(corpus_csv),
                "--out",
                str(out),
                "--config",
                str(cfg),
                "--seed",
                "9",
            ]
        )
        assert code == 0
        snapshot = (out / "config_used.txt").read_text()
        assert "seed=9\n" in snapshot
        assert "kernel=linear\n" in snapshot


class TestTrainForest:
    def test_outputs_and_determinism(self, corpus_csv, tmp_path):
        outs = []
        for name in ("a", "b"):
            out = tmp_path / name
            code = main(
                [
                    "train-forest",
                    "--corpus",
                    str(corpus_csv),
                    "--out",
                    str(out),
                    "--n-trees",
                    "5",
                    "--seed",
                    "2",
                ]
            )
            assert code == 0
            outs.append(out)
        payload = json.loads((outs[0] / "model.json").read_text())
        assert payload["format"] == "trolltext-forest"
        assert (outs[0] / "model.json").read_bytes() == (
            outs[1] / "model.json"
        ).read_bytes()
        assert (outs[0] / "confusion.csv").exists()


class TestClassify:
    def test_verdicts_with_tie(self, svm_dir, tmp_path):
        corpus = build_unlabeled_corpus(tmp_path / "accounts.csv")
        out = tmp_path / "cls"
        code = main(
            [
                "classify",
                "--model",
                str(svm_dir / "model.json"),
                "--corpus",
                str(corpus),
                "--out",
                str(out),
            ]
        )
        assert code == 0
        predictions = (out / "predictions.csv").read_text().splitlines()
        assert predictions[0] == "doc_id,account,predicted"
        assert len(predictions) == 8

        verdict_rows = (out / "verdicts.csv").read_text().splitlines()
        by_account = {r.split(",")[0]: r.split(",") for r in verdict_rows[1:]}
        assert by_account["tieacct"][1] == "Tie"
        assert by_account["tieacct"][2] == "4"
        assert by_account["leftacct"][1] == "LeftTroll"

        histogram = (out / "histogram.csv").read_text().splitlines()
        assert "total,2" in histogram

    def test_rollup_by_doc(self, svm_dir, tmp_path):
        corpus = build_unlabeled_corpus(tmp_path / "accounts.csv")
        out = tmp_path / "bydoc"
        code = main(
            [
                "classify",
                "--model",
                str(svm_dir / "model.json"),
                "--corpus",
                str(corpus),
                "--out",
                str(out),
                "--by",
                "doc",
            ]
        )
        assert code == 0
        rows = (out / "verdicts.csv").read_text().splitlines()[1:]
        assert len(rows) == 7  # one verdict per document
        assert all(r.split(",")[1] != "Tie" for r in rows)

    def test_empty_corpus_exits_2(self, svm_dir, tmp_path):
        empty = tmp_path / "empty.csv"
        with open(empty, "w", encoding="utf-8", newline="") as fh:
            write_corpus_csv(Corpus([]), fh)
        code = main(
            [
                "classify",
                "--model",
                str(svm_dir / "model.json"),
                "--corpus",
                str(empty),
                "--out",
                str(tmp_path / "e"),
            ]
        )
        assert code == 2

    def test_corrupt_model_exits_2(self, corpus_csv, tmp_path):
        bogus = tmp_path / "model.json"
        bogus.write_text('{"format": "something-else"}', encoding="utf-8")
        code = main(
            [
                "classify",
                "--model",
                str(bogus),
                "--corpus",
                str(corpus_csv),
                "--out",
                str(tmp_path / "c"),
            ]
        )
        assert code == 2


class TestLda:
    ARGS = ["--iterations", "60", "--burn-in", "20", "--sample-lag", "2"]

    def test_fit_writes_topic_report(self, corpus_csv, tmp_path):
        out = tmp_path / "lda"
        code = main(
            ["lda-fit", "--corpus", str(corpus_csv), "--out", str(out), "--k", "2"]
            + self.ARGS
            + ["--top-n", "5"]
        )
        assert code == 0
        topics = (out / "topics.csv").read_text().splitlines()
        assert topics[0] == "topic,rank,term,probability"
        assert len(topics) == 1 + 2 * 5
        doc_topics = (out / "doc_topics.csv").read_text().splitlines()
        assert len(doc_topics) == 1 + 60 * 2
        assert "samples=" in (out / "summary.txt").read_text()

    def test_k_zero_exits_2(self, corpus_csv, tmp_path):
        code = main(
            ["lda-fit", "--corpus", str(corpus_csv), "--out", str(tmp_path / "z")]
            + ["--k", "0"]
            + self.ARGS
        )
        assert code == 2

    def test_select_k_report_and_rerun(self, corpus_csv, tmp_path):
        outs = []
        for name in ("a", "b"):
            out = tmp_path / name
            code = main(
                [
                    "lda-select-k",
                    "--corpus",
                    str(corpus_csv),
                    "--out",
                    str(out),
                    "--k-candidates",
                    "2,3",
                ]
                + self.ARGS
            )
            assert code == 0
            outs.append(out)
        lines = (outs[0] / "perplexity.csv").read_text().splitlines()
        assert lines[0] == "k,perplexity,selected"
        assert len(lines) == 3
        assert sum(int(l.split(",")[2]) for l in lines[1:]) == 1
        assert (outs[0] / "perplexity.csv").read_bytes() == (
            outs[1] / "perplexity.csv"
        ).read_bytes()

    def test_missing_candidates_exits_2(self, corpus_csv, tmp_path):
        code = main(
            [
                "lda-select-k",
                "--corpus",
                str(corpus_csv),
                "--out",
                str(tmp_path / "m"),
            ]
            + self.ARGS
        )
        assert code == 2


class TestArgumentErrors:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as err:
            main(["never-heard-of-it"])
        assert err.value.code == 2

    def test_missing_required_input(self):
        with pytest.raises(SystemExit) as err:
            main(["train-svm", "--out", "/tmp/x"])
        assert err.value.code == 2
