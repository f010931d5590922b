"""Command-line front end.

Every command reads inputs, writes its artifacts into --out, and drops
a config_used.txt snapshot of the resolved settings beside them. Given
the same inputs, flags and seed, outputs are byte-identical across
runs. Exit codes: 0 on success, 2 for input or usage errors, 1 for
anything unexpected.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import config as cfgmod
from . import forest as forestmod
from . import svm as svmmod
from .corpus import (
    AccountCategory,
    Corpus,
    Dropped,
    Grouping,
    Source,
    parse_ad_record,
    parse_tweet_csv,
    read_corpus_csv,
    to_corpus,
    weekly_counts,
    write_corpus_csv,
)
from .errors import (
    EmptyInput,
    InvalidConfigValue,
    ModelFormatError,
    ToolkitError,
    UnknownClass,
)
from .evaluation import (
    classify_accounts,
    confusion_matrix,
    stratified_sample,
    write_accuracy_csv,
    write_confusion_csv,
)
from .lda import GibbsConfig, fit_gibbs, select_k, topic_top_words
from .seeding import derive_seed
from .svm import Kernel, TrainConfig
from .textprep import (
    FeatureSpace,
    build_vocabulary,
    load_stoplist,
    top_terms,
    vectorize,
)


def _outdir(args) -> Path:
    path = Path(args.out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _resolve(args, keys) -> dict:
    file_values = cfgmod.parse_config_file(args.config) if args.config else {}
    overrides = {
        k: getattr(args, k) for k in keys if getattr(args, k, None) is not None
    }
    return cfgmod.resolve(file_values, overrides)


def _snapshot(cfg: dict, keys, out: Path) -> None:
    cfgmod.write_snapshot(cfg, keys, out / "config_used.txt")


def _stoplist(cfg: dict):
    return load_stoplist(cfg["stoplist"]) if cfg["stoplist"] else None


def _grouping(cfg: dict) -> Grouping:
    if cfg["group"] == "per-message":
        return Grouping.PER_MESSAGE
    if cfg["group"] == "per-account":
        return Grouping.PER_ACCOUNT
    raise InvalidConfigValue("group must be per-message or per-account")


def _parse_category(text: str) -> AccountCategory:
    try:
        return AccountCategory.parse(text)
    except ValueError as exc:
        raise UnknownClass(str(exc)) from None


def _parse_categories(text: str):
    if not text.strip():
        return None
    cats = [_parse_category(p) for p in text.split(",") if p.strip()]
    return cats or None


def _write_weekly(records, out: Path) -> int:
    series, untimed = weekly_counts(records)
    with open(out / "weekly.csv", "w", encoding="utf-8") as fh:
        fh.write("week_start,count\n")
        for week, count in series:
            fh.write("%s,%d\n" % (week.isoformat(), count))
    return untimed


INGEST_TWEET_KEYS = ("group", "strict")


def cmd_ingest_tweets(args) -> None:
    cfg = _resolve(args, INGEST_TWEET_KEYS)
    out = _outdir(args)
    grouping = _grouping(cfg)
    with open(args.input, encoding="utf-8", newline="") as fh:
        records, issues = parse_tweet_csv(fh, strict=cfg["strict"])
    if not records:
        raise EmptyInput("no usable rows in %s" % args.input)
    corpus = to_corpus(records, grouping)
    with open(out / "corpus.csv", "w", encoding="utf-8", newline="") as fh:
        write_corpus_csv(corpus, fh)
    untimed = _write_weekly(records, out)

    by_cat: dict[str, int] = {}
    for r in records:
        by_cat[r.category.value] = by_cat.get(r.category.value, 0) + 1
    with open(out / "report.txt", "w", encoding="utf-8") as fh:
        fh.write("rows_parsed=%d\n" % len(records))
        fh.write("rows_skipped=%d\n" % len(issues))
        fh.write("documents=%d\n" % len(corpus))
        fh.write("accounts=%d\n" % len({r.handle for r in records}))
        fh.write("untimed=%d\n" % untimed)
        for name in sorted(by_cat):
            fh.write("category.%s=%d\n" % (name, by_cat[name]))
        for line_no, message in issues[:20]:
            fh.write("skipped line %d: %s\n" % (line_no, message))
        if len(issues) > 20:
            fh.write("skipped %d more rows\n" % (len(issues) - 20))
    _snapshot(cfg, INGEST_TWEET_KEYS, out)


INGEST_AD_KEYS = ("group",)


def cmd_ingest_ads(args) -> None:
    cfg = _resolve(args, INGEST_AD_KEYS)
    out = _outdir(args)
    grouping = _grouping(cfg)
    files = sorted(Path(args.input).glob("*.txt"))
    if not files:
        raise EmptyInput("no .txt ad files in %s" % args.input)
    records = []
    dropped = 0
    for path in files:
        parsed = parse_ad_record(path.read_text(encoding="utf-8", errors="replace"))
        if isinstance(parsed, Dropped):
            dropped += 1
        else:
            records.append(parsed)
    if not records:
        raise EmptyInput("every ad in %s was dropped" % args.input)
    corpus = to_corpus(records, grouping, source=Source.FACEBOOK)
    with open(out / "corpus.csv", "w", encoding="utf-8", newline="") as fh:
        write_corpus_csv(corpus, fh)
    untimed = _write_weekly(records, out)

    from .corpus import ACCOUNT_EVENT, ACCOUNT_UNKNOWN, Redaction

    with open(out / "report.txt", "w", encoding="utf-8") as fh:
        fh.write("files=%d\n" % len(files))
        fh.write("records=%d\n" % len(records))
        fh.write("dropped_fully_redacted=%d\n" % dropped)
        fh.write(
            "partially_redacted=%d\n"
            % sum(1 for r in records if r.redaction is Redaction.PARTIAL)
        )
        fh.write("documents=%d\n" % len(corpus))
        fh.write(
            "accounts=%d\n" % len({r.account for r in records})
        )
        fh.write(
            "unknown_account_ads=%d\n"
            % sum(1 for r in records if r.account == ACCOUNT_UNKNOWN)
        )
        fh.write(
            "event_ads=%d\n" % sum(1 for r in records if r.account == ACCOUNT_EVENT)
        )
        fh.write("untimed=%d\n" % untimed)
    _snapshot(cfg, INGEST_AD_KEYS, out)


REPORT_KEYS = ("top_n", "category", "stoplist")


def cmd_report(args) -> None:
    cfg = _resolve(args, REPORT_KEYS)
    out = _outdir(args)
    with open(args.corpus, encoding="utf-8", newline="") as fh:
        corpus = read_corpus_csv(fh)
    if len(corpus) == 0:
        raise EmptyInput("corpus %s is empty" % args.corpus)
    category = _parse_category(cfg["category"]) if cfg["category"] else None
    if category is not None and all(d.label is None for d in corpus):
        raise EmptyInput("corpus carries no labels; cannot filter by category")
    ranked = top_terms(
        corpus, k=cfg["top_n"], category=category, stopwords=_stoplist(cfg)
    )
    with open(out / "top_terms.csv", "w", encoding="utf-8") as fh:
        fh.write("rank,term,count\n")
        for rank, (term, count) in enumerate(ranked, start=1):
            fh.write("%d,%s,%d\n" % (rank, term, count))

    by_cat: dict[str, int] = {}
    for doc in corpus:
        key = doc.label.value if doc.label else "(unlabeled)"
        by_cat[key] = by_cat.get(key, 0) + 1
    stamps = [d.timestamp for d in corpus if d.timestamp is not None]
    with open(out / "summary.txt", "w", encoding="utf-8") as fh:
        fh.write("documents=%d\n" % len(corpus))
        fh.write(
            "accounts=%d\n" % len({d.account for d in corpus if d.account})
        )
        for name in sorted(by_cat):
            fh.write("category.%s=%d\n" % (name, by_cat[name]))
        if stamps:
            fh.write(
                "time_range=%s..%s\n"
                % (min(stamps).isoformat(), max(stamps).isoformat())
            )
    _snapshot(cfg, REPORT_KEYS, out)


_SPLIT_KEYS = (
    "seed",
    "stoplist",
    "min_df",
    "max_df_frac",
    "weighting",
    "categories",
    "train_size",
    "test_size",
)
TRAIN_SVM_KEYS = _SPLIT_KEYS + (
    "kernel",
    "gamma",
    "degree",
    "coef0",
    "c",
    "epochs",
    "tolerance",
)
TRAIN_FOREST_KEYS = _SPLIT_KEYS + (
    "n_trees",
    "mtry",
    "max_depth",
    "min_leaf",
    "impurity",
    "bootstrap",
)


def _load_labeled_split(args, cfg):
    """Read the corpus, filter to usable labeled docs, split train/test."""
    with open(args.corpus, encoding="utf-8", newline="") as fh:
        corpus = read_corpus_csv(fh)
    cats = _parse_categories(cfg["categories"])
    docs = [
        d
        for d in corpus
        if d.label is not None and (cats is None or d.label in cats)
    ]
    n_unlabeled = sum(1 for d in corpus if d.label is None)
    if not docs:
        raise EmptyInput("no labeled documents to train on")
    train_size = cfg["train_size"] or int(round(0.8 * len(docs)))
    train, rest = stratified_sample(docs, train_size, cfg["seed"])
    if cfg["test_size"]:
        test, _ = stratified_sample(
            rest, cfg["test_size"], derive_seed(cfg["seed"], "test")
        )
    else:
        test = rest
    return train, test, n_unlabeled


def _feature_space(train_docs, cfg) -> FeatureSpace:
    if cfg["weighting"] not in ("count", "tfidf"):
        raise InvalidConfigValue("weighting must be count or tfidf")
    vocab = build_vocabulary(
        Corpus(train_docs),
        min_df=cfg["min_df"],
        max_df_frac=cfg["max_df_frac"],
        stopwords=_stoplist(cfg),
    )
    return FeatureSpace(vocab, cfg["weighting"])


def _write_eval(model_classes, predictions, test_docs, out: Path) -> None:
    observed = {d.label for d in test_docs}
    classes = tuple(
        c for c in AccountCategory if c in set(model_classes) | observed
    )
    pairs = [(p, d.label) for p, d in zip(predictions, test_docs)]
    cm = confusion_matrix(pairs, classes)
    with open(out / "confusion.csv", "w", encoding="utf-8") as fh:
        write_confusion_csv(cm, fh)
    with open(out / "accuracy.csv", "w", encoding="utf-8") as fh:
        write_accuracy_csv(cm, fh)


def _write_train_summary(out, train, test, n_unlabeled, classes) -> None:
    with open(out / "summary.txt", "w", encoding="utf-8") as fh:
        fh.write("train_documents=%d\n" % len(train))
        fh.write("test_documents=%d\n" % len(test))
        fh.write("unlabeled_documents_skipped=%d\n" % n_unlabeled)
        fh.write("classes=%s\n" % ",".join(c.value for c in classes))


def cmd_train_svm(args) -> None:
    cfg = _resolve(args, TRAIN_SVM_KEYS)
    out = _outdir(args)
    train, test, n_unlabeled = _load_labeled_split(args, cfg)
    space = _feature_space(train, cfg)
    kernel = Kernel(
        cfg["kernel"], gamma=cfg["gamma"], degree=cfg["degree"], coef0=cfg["coef0"]
    )
    train_config = TrainConfig(
        c=cfg["c"], epochs=cfg["epochs"], seed=cfg["seed"], tolerance=cfg["tolerance"]
    )
    matrix = space.transform(Corpus(train))
    requested = _parse_categories(cfg["categories"])
    if requested is not None:
        requested = tuple(c for c in AccountCategory if c in set(requested))
    model = svmmod.train_ovr(
        matrix,
        [d.label for d in train],
        kernel,
        train_config,
        feature_space=space,
        classes=requested,
    )
    svmmod.save_svm(model, out / "model.json")
    if test:
        test_matrix = space.transform(Corpus(test))
        predictions = svmmod.predict_matrix(model, test_matrix)
        _write_eval(model.classes, predictions, test, out)
    _write_train_summary(out, train, test, n_unlabeled, model.classes)
    _snapshot(cfg, TRAIN_SVM_KEYS, out)


def cmd_train_forest(args) -> None:
    cfg = _resolve(args, TRAIN_FOREST_KEYS)
    out = _outdir(args)
    train, test, n_unlabeled = _load_labeled_split(args, cfg)
    space = _feature_space(train, cfg)
    forest_config = forestmod.ForestConfig(
        n_trees=cfg["n_trees"],
        mtry=cfg["mtry"] or None,
        max_depth=None if cfg["max_depth"] < 0 else cfg["max_depth"],
        min_leaf=cfg["min_leaf"],
        impurity=cfg["impurity"],
        seed=cfg["seed"],
        bootstrap=cfg["bootstrap"],
    )
    matrix = space.transform(Corpus(train))
    model = forestmod.train_forest(
        matrix, [d.label for d in train], forest_config, feature_space=space
    )
    forestmod.save_forest(model, out / "model.json")
    if test:
        test_matrix = space.transform(Corpus(test))
        predictions = forestmod.predict_forest_matrix(model, test_matrix)
        _write_eval(model.classes, predictions, test, out)
    _write_train_summary(out, train, test, n_unlabeled, model.classes)
    _snapshot(cfg, TRAIN_FOREST_KEYS, out)


CLASSIFY_KEYS = ("by",)


def load_model(path):
    """Open either model file format by its embedded format tag."""
    with open(path, encoding="utf-8") as fh:
        try:
            peek = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError("not a model file: %s" % exc) from exc
    kind = peek.get("format")
    if kind == "trolltext-svm":
        return svmmod.load_svm(path)
    if kind == "trolltext-forest":
        return forestmod.load_forest(path)
    raise ModelFormatError("unrecognized model format %r" % kind)


def cmd_classify(args) -> None:
    cfg = _resolve(args, CLASSIFY_KEYS)
    if cfg["by"] not in ("account", "doc"):
        raise InvalidConfigValue("by must be account or doc")
    out = _outdir(args)
    model = load_model(args.model)
    if model.feature_space is None:
        raise ModelFormatError(
            "model carries no feature space; retrain through the CLI"
        )
    with open(args.corpus, encoding="utf-8", newline="") as fh:
        corpus = read_corpus_csv(fh)
    if len(corpus) == 0:
        raise EmptyInput("corpus %s is empty" % args.corpus)
    matrix = model.feature_space.transform(corpus)
    if isinstance(model, svmmod.SvmModel):
        predictions = svmmod.predict_matrix(model, matrix)
    else:
        predictions = forestmod.predict_forest_matrix(model, matrix)

    with open(out / "predictions.csv", "w", encoding="utf-8") as fh:
        fh.write("doc_id,account,predicted\n")
        for doc, pred in zip(corpus, predictions):
            fh.write("%s,%s,%s\n" % (doc.doc_id, doc.account or "", pred.value))

    def rollup_key(doc):
        if cfg["by"] == "account" and doc.account:
            return doc.account
        return doc.doc_id

    verdicts, histogram = classify_accounts(
        (rollup_key(doc), pred) for doc, pred in zip(corpus, predictions)
    )
    vote_classes = list(model.classes)
    with open(out / "verdicts.csv", "w", encoding="utf-8") as fh:
        fh.write(
            "account,verdict,n_items,"
            + ",".join("votes_%s" % c.value for c in vote_classes)
            + "\n"
        )
        for v in verdicts:
            name = v.verdict if isinstance(v.verdict, str) else v.verdict.value
            votes = ",".join(str(v.votes.get(c, 0)) for c in vote_classes)
            fh.write("%s,%s,%d,%s\n" % (v.account, name, v.n_items, votes))
    with open(out / "histogram.csv", "w", encoding="utf-8") as fh:
        fh.write("verdict,count\n")
        for name, count in histogram.items():
            fh.write("%s,%d\n" % (name, count))
        fh.write("total,%d\n" % sum(histogram.values()))
    _snapshot(cfg, CLASSIFY_KEYS, out)


LDA_FIT_KEYS = (
    "seed",
    "stoplist",
    "min_df",
    "max_df_frac",
    "k",
    "alpha",
    "eta",
    "iterations",
    "burn_in",
    "sample_lag",
    "top_n",
)


def _count_matrix(args, cfg):
    with open(args.corpus, encoding="utf-8", newline="") as fh:
        corpus = read_corpus_csv(fh)
    vocab = build_vocabulary(
        corpus,
        min_df=cfg["min_df"],
        max_df_frac=cfg["max_df_frac"],
        stopwords=_stoplist(cfg),
    )
    return vectorize(corpus, vocab), vocab


def cmd_lda_fit(args) -> None:
    cfg = _resolve(args, LDA_FIT_KEYS)
    out = _outdir(args)
    matrix, vocab = _count_matrix(args, cfg)
    chain = GibbsConfig(
        iterations=cfg["iterations"],
        burn_in=cfg["burn_in"],
        sample_lag=cfg["sample_lag"],
        seed=cfg["seed"],
    )
    model = fit_gibbs(
        matrix, cfg["k"], cfg["alpha"] or None, cfg["eta"], chain, vocab=vocab
    )
    with open(out / "topics.csv", "w", encoding="utf-8") as fh:
        fh.write("topic,rank,term,probability\n")
        for k, ranked in enumerate(topic_top_words(model, cfg["top_n"]), start=1):
            for rank, (term, prob) in enumerate(ranked, start=1):
                fh.write("%d,%d,%s,%s\n" % (k, rank, term, repr(prob)))
    with open(out / "doc_topics.csv", "w", encoding="utf-8") as fh:
        fh.write("doc_id,topic,weight\n")
        for d, doc_id in enumerate(model.doc_ids):
            for k in range(model.n_topics):
                fh.write("%s,%d,%s\n" % (doc_id, k + 1, repr(model.theta_hat[d, k])))
    with open(out / "summary.txt", "w", encoding="utf-8") as fh:
        fh.write("documents=%d\n" % matrix.n_docs)
        fh.write("terms=%d\n" % matrix.n_terms)
        fh.write("tokens=%d\n" % matrix.total_tokens)
        fh.write("samples=%d\n" % model.n_samples)
    _snapshot(cfg, LDA_FIT_KEYS, out)


SELECT_K_KEYS = (
    "seed",
    "stoplist",
    "min_df",
    "max_df_frac",
    "k_candidates",
    "alpha",
    "eta",
    "iterations",
    "burn_in",
    "sample_lag",
    "split_frac",
)


def cmd_lda_select_k(args) -> None:
    cfg = _resolve(args, SELECT_K_KEYS)
    out = _outdir(args)
    raw = cfg["k_candidates"].strip()
    if not raw:
        raise InvalidConfigValue("k_candidates is required, e.g. 2,3,4")
    try:
        candidates = [int(p) for p in raw.split(",") if p.strip()]
    except ValueError:
        raise InvalidConfigValue(
            "k_candidates must be comma-separated integers, got %r" % raw
        ) from None
    matrix, _ = _count_matrix(args, cfg)
    chain = GibbsConfig(
        iterations=cfg["iterations"],
        burn_in=cfg["burn_in"],
        sample_lag=cfg["sample_lag"],
        seed=cfg["seed"],
    )
    best_k, scores = select_k(
        matrix,
        candidates,
        split_frac=cfg["split_frac"],
        alpha=cfg["alpha"] or None,
        eta=cfg["eta"],
        config=chain,
    )
    with open(out / "perplexity.csv", "w", encoding="utf-8") as fh:
        fh.write("k,perplexity,selected\n")
        for k in sorted(scores):
            fh.write("%d,%s,%d\n" % (k, repr(scores[k]), 1 if k == best_k else 0))
    _snapshot(cfg, SELECT_K_KEYS, out)


def _add_option(sub, key: str, help_text: str) -> None:
    """Add a --flag whose dest and type mirror one config key."""
    flag = "--" + key.replace("_", "-")
    default = cfgmod.DEFAULTS[key]
    if isinstance(default, bool):
        sub.add_argument(
            flag,
            dest=key,
            default=None,
            type=lambda raw, k=key: cfgmod.coerce_value(k, raw),
            choices=[True, False],
            metavar="{true,false}",
            help=help_text,
        )
    elif isinstance(default, int):
        sub.add_argument(flag, dest=key, default=None, type=int, help=help_text)
    elif isinstance(default, float):
        sub.add_argument(flag, dest=key, default=None, type=float, help=help_text)
    else:
        sub.add_argument(flag, dest=key, default=None, help=help_text)


_OPTION_HELP = {
    "seed": "master seed for every random draw (default 0)",
    "stoplist": "path to a custom stopword file",
    "min_df": "drop terms seen in fewer documents than this",
    "max_df_frac": "drop terms seen in more than this fraction of documents",
    "weighting": "feature weighting: tfidf or count",
    "group": "document grouping: per-message or per-account",
    "strict": "fail on the first malformed row instead of skipping",
    "categories": "comma-separated category subset to keep",
    "train_size": "stratified training-set size (0 takes 80 percent)",
    "test_size": "stratified test-set size (0 takes the rest)",
    "kernel": "kernel kind: linear, radial or polynomial",
    "gamma": "kernel width for radial / scale for polynomial",
    "degree": "polynomial degree",
    "coef0": "polynomial additive constant",
    "c": "soft-margin penalty",
    "epochs": "training passes over the data",
    "tolerance": "dual convergence threshold",
    "n_trees": "trees in the forest",
    "mtry": "features tried per split (0 picks ceil(sqrt(V)))",
    "max_depth": "tree depth cap (-1 means unlimited)",
    "min_leaf": "minimum rows per leaf",
    "impurity": "split criterion: gini or entropy",
    "bootstrap": "draw a bootstrap resample per tree",
    "k": "number of topics",
    "k_candidates": "topic counts to score, e.g. 2,3,4,6",
    "alpha": "document-topic prior (0 picks 50/k)",
    "eta": "topic-word prior",
    "iterations": "total Gibbs sweeps",
    "burn_in": "sweeps discarded before sampling",
    "sample_lag": "sweeps between kept samples",
    "split_frac": "fraction of documents used for fitting",
    "top_n": "how many entries to report",
    "category": "restrict the report to one category",
    "by": "verdict rollup key: account or doc",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trolltext",
        description="Ingest troll-campaign text, model its topics, classify accounts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text, keys, inputs):
        p = sub.add_parser(name, help=help_text)
        for arg, arg_help in inputs:
            p.add_argument("--" + arg, required=True, help=arg_help)
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--config", help="key=value config file")
        for key in keys:
            _add_option(p, key, _OPTION_HELP[key])
        p.set_defaults(func=handler, keys=keys)
        return p

    command(
        "ingest-tweets",
        cmd_ingest_tweets,
        "parse a tweet CSV into a normalized corpus",
        INGEST_TWEET_KEYS,
        [("input", "tweet CSV file")],
    )
    command(
        "ingest-ads",
        cmd_ingest_ads,
        "parse a directory of ad text files into a corpus",
        INGEST_AD_KEYS,
        [("input", "directory of ad .txt files")],
    )
    command(
        "report",
        cmd_report,
        "frequency report over a corpus",
        REPORT_KEYS,
        [("corpus", "normalized corpus CSV")],
    )
    command(
        "train-svm",
        cmd_train_svm,
        "train and evaluate a one-vs-rest svm",
        TRAIN_SVM_KEYS,
        [("corpus", "normalized corpus CSV")],
    )
    command(
        "train-forest",
        cmd_train_forest,
        "train and evaluate a random forest",
        TRAIN_FOREST_KEYS,
        [("corpus", "normalized corpus CSV")],
    )
    command(
        "classify",
        cmd_classify,
        "classify a corpus with a saved model and roll up verdicts",
        CLASSIFY_KEYS,
        [("model", "model.json from a train command"), ("corpus", "corpus CSV")],
    )
    command(
        "lda-fit",
        cmd_lda_fit,
        "fit topics with collapsed Gibbs sampling",
        LDA_FIT_KEYS,
        [("corpus", "normalized corpus CSV")],
    )
    command(
        "lda-select-k",
        cmd_lda_select_k,
        "pick a topic count by held-out perplexity",
        SELECT_K_KEYS,
        [("corpus", "normalized corpus CSV")],
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
        return 0
    except ToolkitError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - safety net
        print("unexpected error: %s" % exc, file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
