"""
Decision trees and random forests from impurity up
==================================================

Starting from the two impurity measures, a single tree is grown and
read back; then bagging plus per-split feature subsampling shows its
worth on a task with label noise, where one deep tree overfits and the
ensemble averages the noise away.
"""

import numpy as np

from trolltext.corpus import AccountCategory
from trolltext.forest import (
    ForestConfig,
    InternalNode,
    entropy,
    gini,
    grow_tree,
    predict_forest_matrix,
    train_forest,
)
from trolltext.textprep import DocTermMatrix, SparseVec

CATS = (
    AccountCategory.LEFT_TROLL,
    AccountCategory.RIGHT_TROLL,
    AccountCategory.NEWS_FEED,
)

# --- the impurity measures the splitter minimizes ---------------------

print("gini([5,5])   =", gini([5, 5]), " (maximal for two classes)")
print("gini([10,0])  =", gini([10, 0]), "(pure node)")
print("entropy([5,5])=", entropy([5, 5]), "bit")
print("entropy([3,1])= %.4f bits" % entropy([3, 1]))

# --- grow one tree and walk its structure -----------------------------

x = np.array([[0.1, 5.0], [0.2, 6.0], [0.9, 5.5], [0.8, 6.5]])
y = np.array([0, 0, 1, 1])
tree = grow_tree(x, y, ForestConfig(mtry=2))
assert isinstance(tree, InternalNode)
print(
    "\nsingle tree root splits on feature %d at threshold %.2f"
    % (tree.feature, tree.threshold)
)


def build_matrix(dense_rows):
    rows = []
    for r in dense_rows:
        dense = np.asarray(r, dtype=np.float64)
        idx = np.flatnonzero(dense)
        rows.append(SparseVec(idx, dense[idx], dense.size))
    return DocTermMatrix(
        tuple("d%d" % i for i in range(len(rows))),
        tuple(rows),
        len(dense_rows[0]),
        np.array([len(r.indices) for r in rows], dtype=np.int64),
        "tfidf",
    )


# --- label noise: ensemble versus one deep tree ------------------------


def noisy_task(rng, n_per_class, flip_frac):
    n = n_per_class * 3
    x = rng.uniform(0.0, 1.0, size=(n, 10))
    labels = []
    for i in range(n):
        k = i % 3
        x[i, k] += 1.0  # the class signal lives on one feature
        labels.append(CATS[k])
    for i in rng.permutation(n)[: int(flip_frac * n)]:
        labels[i] = CATS[(CATS.index(labels[i]) + 1 + rng.integers(0, 2)) % 3]
    return build_matrix(x), labels


rng = np.random.default_rng(7)
train_m, train_y = noisy_task(rng, 80, flip_frac=0.15)
test_m, test_y = noisy_task(rng, 40, flip_frac=0.0)

single = train_forest(
    train_m, train_y, ForestConfig(n_trees=1, mtry=10, bootstrap=False, seed=0)
)
forest = train_forest(train_m, train_y, ForestConfig(n_trees=50, seed=0))

for name, model in (("single deep tree", single), ("50-tree forest", forest)):
    acc = np.mean(
        [p == t for p, t in zip(predict_forest_matrix(model, test_m), test_y)]
    )
    print("%-16s test accuracy with 15%% training-label noise: %.1f%%"
          % (name, 100 * acc))
