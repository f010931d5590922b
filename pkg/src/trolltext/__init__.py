"""Text-classification toolkit for troll-campaign message archives.

Ingests tweet CSVs and ad text files into a normalized corpus, turns
text into stemmed bag-of-words features, models topics with collapsed
Gibbs sampling, classifies categories with one-vs-rest SVMs and random
forests, and rolls message predictions up to account verdicts.
"""

from .corpus import (
    ACCOUNT_EVENT,
    ACCOUNT_UNKNOWN,
    AccountCategory,
    AdRecord,
    Corpus,
    Document,
    Grouping,
    Redaction,
    Source,
    TweetRecord,
    account_from_landing_page,
    parse_ad_record,
    parse_tweet_csv,
    read_corpus_csv,
    to_corpus,
    weekly_counts,
    write_corpus_csv,
)
from .errors import ToolkitError
from .evaluation import (
    TIE,
    AccountVerdict,
    ConfusionMatrix,
    classify_accounts,
    confusion_matrix,
    overall_accuracy,
    per_class_accuracy,
    stratified_sample,
)
from .forest import (
    ForestConfig,
    ForestModel,
    best_split,
    entropy,
    gini,
    grow_tree,
    load_forest,
    predict_forest,
    predict_tree,
    save_forest,
    train_forest,
)
from .lda import (
    GibbsConfig,
    LdaModel,
    SyntheticSpec,
    fit_gibbs,
    generate_synthetic_corpus,
    perplexity,
    posterior_brute_force,
    select_k,
    topic_top_words,
)
from .svm import (
    Kernel,
    SvmModel,
    TrainConfig,
    kernel_eval,
    load_svm,
    margin,
    predict,
    save_svm,
    train_ovr,
)
from .textprep import (
    DocTermMatrix,
    FeatureSpace,
    SparseVec,
    Vocabulary,
    build_vocabulary,
    default_stoplist,
    preprocess,
    stem,
    tfidf,
    tokenize,
    top_terms,
    vectorize,
)

__version__ = "1.0.0"

__all__ = [
    "ACCOUNT_EVENT",
    "ACCOUNT_UNKNOWN",
    "AccountCategory",
    "AccountVerdict",
    "AdRecord",
    "ConfusionMatrix",
    "Corpus",
    "DocTermMatrix",
    "Document",
    "FeatureSpace",
    "ForestConfig",
    "ForestModel",
    "GibbsConfig",
    "Grouping",
    "Kernel",
    "LdaModel",
    "Redaction",
    "SparseVec",
    "Source",
    "SvmModel",
    "SyntheticSpec",
    "TIE",
    "ToolkitError",
    "TrainConfig",
    "TweetRecord",
    "Vocabulary",
    "account_from_landing_page",
    "best_split",
    "build_vocabulary",
    "classify_accounts",
    "confusion_matrix",
    "default_stoplist",
    "entropy",
    "fit_gibbs",
    "generate_synthetic_corpus",
    "gini",
    "grow_tree",
    "kernel_eval",
    "load_forest",
    "load_svm",
    "margin",
    "overall_accuracy",
    "parse_ad_record",
    "parse_tweet_csv",
    "per_class_accuracy",
    "perplexity",
    "posterior_brute_force",
    "predict",
    "predict_forest",
    "predict_tree",
    "preprocess",
    "read_corpus_csv",
    "save_forest",
    "save_svm",
    "select_k",
    "stem",
    "stratified_sample",
    "tfidf",
    "to_corpus",
    "tokenize",
    "top_terms",
    "topic_top_words",
    "train_forest",
    "train_ovr",
    "vectorize",
    "weekly_counts",
    "write_corpus_csv",
]
