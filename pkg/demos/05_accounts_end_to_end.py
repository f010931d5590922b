"""
From raw tweets to account verdicts, end to end
===============================================

The whole pipeline in one pass: parse a labeled tweet file, build a
feature space on a stratified training split, train a classifier,
score the held-out split, then roll per-document predictions up to
per-account verdicts — where an evenly split vote is reported as Tie
rather than forced into a class.

The command-line equivalent is:

    trolltext ingest-tweets --input tweets.csv --out run/ingest
    trolltext train-svm --corpus run/ingest/corpus.csv --out run/svm
    trolltext classify --model run/svm/model.json \
        --corpus accounts.csv --out run/verdicts
"""

import io

from trolltext.corpus import (
    Corpus,
    Document,
    Grouping,
    Source,
    parse_tweet_csv,
    to_corpus,
)
from trolltext.evaluation import (
    classify_accounts,
    confusion_matrix,
    overall_accuracy,
    stratified_sample,
)
from trolltext.svm import Kernel, TrainConfig, predict_matrix, train_ovr
from trolltext.textprep import FeatureSpace, build_vocabulary

WORDS = {
    "LeftTroll": ["justice", "equality", "movement", "rights", "community"],
    "RightTroll": ["border", "patriot", "freedom", "heritage", "flag"],
    "NewsFeed": ["breaking", "report", "headline", "update", "coverage"],
}


def build_tweets():
    lines = ["author,content,publish_date,followers,retweet,account_category"]
    day = 1
    for category, vocab in WORDS.items():
        for acct in range(4):
            for i in range(5):
                text = "%s %s %s" % (
                    vocab[i % 5], vocab[(i + 1) % 5], vocab[(i + 2) % 5],
                )
                lines.append(
                    "%s_%d,%s,10/%d/2017 09:15,%d,0,%s"
                    % (category.upper(), acct, text, day % 28 + 1, 50 + i, category)
                )
                day += 1
    return "\n".join(lines) + "\n"


records, _ = parse_tweet_csv(io.StringIO(build_tweets()))
corpus = to_corpus(records, Grouping.PER_MESSAGE)
print("corpus: %d labeled documents" % len(corpus))

# --- stratified 80/20 split, feature space fit on train only ---------

train, test = stratified_sample(
    list(corpus), int(round(0.8 * len(corpus))), seed=3, label_of=lambda d: d.label
)
space = FeatureSpace(build_vocabulary(Corpus(train)), "tfidf")
model = train_ovr(
    space.transform(Corpus(train)),
    [d.label for d in train],
    Kernel("linear"),
    TrainConfig(c=1.0, epochs=20, seed=3),
    feature_space=space,
)

predictions = predict_matrix(model, space.transform(Corpus(test)))
cm = confusion_matrix(
    [(p, d.label) for p, d in zip(predictions, test)], model.classes
)
print("held-out overall accuracy: %.1f%%" % overall_accuracy(cm))

# --- roll predictions up to account verdicts --------------------------
# One account posts pure left-vocabulary and pure right-vocabulary
# messages in equal measure: its vote splits 2-2 and the verdict is Tie.

probe = Corpus(
    [
        Document("p0", "justice equality movement", None, Source.TWITTER, "mixed"),
        Document("p1", "equality movement rights", None, Source.TWITTER, "mixed"),
        Document("p2", "border patriot freedom", None, Source.TWITTER, "mixed"),
        Document("p3", "patriot freedom heritage", None, Source.TWITTER, "mixed"),
        Document("p4", "justice rights community", None, Source.TWITTER, "steady"),
        Document("p5", "movement justice equality", None, Source.TWITTER, "steady"),
    ]
)
probe_predictions = predict_matrix(model, space.transform(probe))
verdicts, histogram = classify_accounts(
    (doc.account, pred) for doc, pred in zip(probe.documents, probe_predictions)
)
print("\naccount verdicts:")
for v in verdicts:
    name = v.verdict if isinstance(v.verdict, str) else v.verdict.value
    print("  %-8s %-10s from %d documents, votes %s"
          % (v.account, name, v.n_items,
             {c.value: n for c, n in v.votes.items()}))
print("verdict histogram:", histogram)
