"""
One-vs-rest SVM over bag-of-words features
==========================================

Five account categories with distinct signature vocabularies make a
separable classification problem. The linear kernel solves it; the XOR
arrangement shows where linear decision functions give out and the
radial kernel takes over.
"""

import numpy as np

from trolltext.corpus import AccountCategory
from trolltext.evaluation import confusion_matrix, per_class_accuracy
from trolltext.svm import Kernel, TrainConfig, margin, predict_matrix, train_ovr
from trolltext.textprep import DocTermMatrix, SparseVec

CLASSES = (
    AccountCategory.FEARMONGER,
    AccountCategory.HASHTAG_GAMER,
    AccountCategory.LEFT_TROLL,
    AccountCategory.NEWS_FEED,
    AccountCategory.RIGHT_TROLL,
)


def build_matrix(dense_rows, weighting="count"):
    rows, lengths = [], []
    for r in dense_rows:
        dense = np.asarray(r, dtype=np.float64)
        idx = np.flatnonzero(dense)
        rows.append(SparseVec(idx, dense[idx], dense.size))
        lengths.append(int(dense.sum()) if weighting == "count" else len(idx))
    return DocTermMatrix(
        tuple("d%d" % i for i in range(len(rows))),
        tuple(rows),
        len(dense_rows[0]),
        np.array(lengths, dtype=np.int64),
        weighting,
    )


# --- each class writes with its own ten-word vocabulary --------------

rng = np.random.default_rng(0)


def block_docs(n_per_class):
    dense, labels = [], []
    for ci, cls in enumerate(CLASSES):
        for _ in range(n_per_class):
            counts = np.zeros(50)
            counts[10 * ci : 10 * ci + 10] = rng.multinomial(8, np.full(10, 0.1))
            dense.append(counts)
            labels.append(cls)
    return build_matrix(dense), labels


train_m, train_y = block_docs(200)
test_m, test_y = block_docs(50)

model = train_ovr(
    train_m, train_y, Kernel("linear"), TrainConfig(c=1.0, epochs=20, seed=0)
)
predictions = predict_matrix(model, test_m)
cm = confusion_matrix(list(zip(predictions, test_y)), CLASSES)
print("test confusion matrix (rows predicted, columns truth):")
print(cm.cells)
print("per-class accuracy:")
for cls, acc in per_class_accuracy(cm).items():
    print("  %-12s %s" % (cls.value, "n/a" if acc is None else "%.1f%%" % acc))

x0 = test_m.rows[0]
print(
    "geometric margin of the first test document to its class boundary: %.3f"
    % margin(model, predictions[0], x0)
)

# --- XOR: the classic case a linear decision function cannot solve ---

xor_m = build_matrix([[0, 0], [1, 1], [0, 1], [1, 0]], weighting="tfidf")
xor_y = [
    AccountCategory.LEFT_TROLL,
    AccountCategory.LEFT_TROLL,
    AccountCategory.RIGHT_TROLL,
    AccountCategory.RIGHT_TROLL,
]
cfg = TrainConfig(c=10.0, epochs=500, seed=0, tolerance=1e-6)
for kernel in (Kernel("linear"), Kernel("radial", gamma=1.0)):
    fitted = train_ovr(xor_m, xor_y, kernel, cfg)
    acc = np.mean([p == t for p, t in zip(predict_matrix(fitted, xor_m), xor_y)])
    print("XOR training accuracy with %s kernel: %.0f%%" % (kernel.kind, 100 * acc))
