"""Decision trees and random forests on dense feature columns.

Trees split on midpoint thresholds chosen to maximize the decrease in
count-weighted impurity; exact ties go to the lowest feature id and
then the lowest threshold, so growth is deterministic given the
candidate features. Forests add bootstrap resampling and per-node
feature subsampling, with each tree's randomness derived from the seed
and the tree index.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .corpus import AccountCategory
from .errors import (
    DimensionMismatch,
    EmptyData,
    EmptyNode,
    InvalidHyperparameter,
    ModelFormatError,
)
from .seeding import derive_seed
from .textprep import DocTermMatrix, FeatureSpace, SparseVec


def gini(counts) -> float:
    """Gini impurity: the chance two draws from the node disagree."""
    counts = np.asarray(counts, dtype=np.float64)
    if np.any(counts < 0):
        raise ValueError("negative class counts")
    total = counts.sum()
    if total <= 0:
        raise EmptyNode("impurity of an empty node is undefined")
    p = counts / total
    return float(1.0 - np.dot(p, p))


def entropy(counts) -> float:
    """Shannon entropy of the node's class distribution, in bits."""
    counts = np.asarray(counts, dtype=np.float64)
    if np.any(counts < 0):
        raise ValueError("negative class counts")
    total = counts.sum()
    if total <= 0:
        raise EmptyNode("impurity of an empty node is undefined")
    p = counts[counts > 0] / total
    return float(-(p * np.log2(p)).sum() + 0.0)


_IMPURITY = {"gini": gini, "entropy": entropy}


@dataclass
class Leaf:
    counts: np.ndarray
    prediction: int


@dataclass
class InternalNode:
    feature: int
    threshold: float
    left: object
    right: object


@dataclass(frozen=True)
class ForestConfig:
    n_trees: int = 100
    mtry: int | None = None  # None picks ceil(sqrt(n_features)) at train time
    max_depth: int | None = None
    min_leaf: int = 1
    impurity: str = "gini"
    seed: int = 0
    bootstrap: bool = True

    def __post_init__(self):
        if self.n_trees < 1:
            raise InvalidHyperparameter("n_trees must be >= 1")
        if self.mtry is not None and self.mtry < 1:
            raise InvalidHyperparameter("mtry must be >= 1")
        if self.max_depth is not None and self.max_depth < 0:
            raise InvalidHyperparameter("max_depth must be >= 0")
        if self.min_leaf < 1:
            raise InvalidHyperparameter("min_leaf must be >= 1")
        if self.impurity not in _IMPURITY:
            raise InvalidHyperparameter("impurity must be gini or entropy")


def best_split(
    x: np.ndarray,
    y: np.ndarray,
    candidates,
    impurity: str = "gini",
    min_leaf: int = 1,
    n_classes: int | None = None,
) -> tuple[int, float, float] | None:
    """Best (feature, threshold, decrease) over the candidate features.

    Thresholds sit midway between consecutive distinct column values;
    rows with value <= threshold go left. Only splits that strictly
    decrease the count-weighted impurity and respect min_leaf qualify.
    Returns None when no such split exists.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    n = len(y)
    if n == 0:
        raise EmptyNode("cannot split an empty node")
    if n_classes is None:
        n_classes = int(y.max()) + 1
    imp = _IMPURITY[impurity]
    parent_counts = np.bincount(y, minlength=n_classes)
    parent_imp = imp(parent_counts)

    best = None
    for f in sorted(int(c) for c in candidates):
        col = x[:, f]
        order = np.argsort(col, kind="stable")
        sv = col[order]
        sy = y[order]
        left = np.zeros(n_classes, dtype=np.int64)
        right = parent_counts.copy()
        for i in range(n - 1):
            left[sy[i]] += 1
            right[sy[i]] -= 1
            if sv[i] == sv[i + 1]:
                continue
            nl = i + 1
            nr = n - nl
            if nl < min_leaf or nr < min_leaf:
                continue
            thr = sv[i] + (sv[i + 1] - sv[i]) / 2.0
            if thr >= sv[i + 1]:  # adjacent floats: keep the partition honest
                thr = sv[i]
            child = (nl * imp(left) + nr * imp(right)) / n
            decrease = parent_imp - child
            if decrease > 0.0 and (best is None or decrease > best[2]):
                best = (f, float(thr), float(decrease))
    return best


def grow_tree(
    x: np.ndarray,
    y: np.ndarray,
    config: ForestConfig | None = None,
    rng: np.random.Generator | None = None,
    n_classes: int | None = None,
    depth: int = 0,
):
    """Recursively grow one tree; leaves keep their class counts."""
    if config is None:
        config = ForestConfig()
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if len(y) == 0:
        raise EmptyData("cannot grow a tree from zero rows")
    if n_classes is None:
        n_classes = int(y.max()) + 1
    if rng is None:
        rng = np.random.default_rng(derive_seed(config.seed, "tree", 0))

    counts = np.bincount(y, minlength=n_classes)
    leaf = Leaf(counts, int(np.argmax(counts)))
    if config.max_depth is not None and depth >= config.max_depth:
        return leaf
    if counts.max() == len(y) or len(y) < 2 * config.min_leaf:
        return leaf

    n_features = x.shape[1]
    mtry = config.mtry if config.mtry is not None else math.isqrt(n_features - 1) + 1
    mtry = min(mtry, n_features)
    if mtry == n_features:
        cand = np.arange(n_features)
    else:
        cand = np.sort(rng.choice(n_features, size=mtry, replace=False))
    found = best_split(x, y, cand, config.impurity, config.min_leaf, n_classes)
    if found is None:
        return leaf
    feature, threshold, _ = found
    mask = x[:, feature] <= threshold
    left = grow_tree(x[mask], y[mask], config, rng, n_classes, depth + 1)
    right = grow_tree(x[~mask], y[~mask], config, rng, n_classes, depth + 1)
    return InternalNode(feature, threshold, left, right)


def predict_tree(node, x) -> int:
    """Route one example (SparseVec or dense row) to its leaf class."""
    while isinstance(node, InternalNode):
        value = x.get(node.feature) if isinstance(x, SparseVec) else float(x[node.feature])
        node = node.left if value <= node.threshold else node.right
    return node.prediction


@dataclass
class ForestModel:
    classes: tuple[AccountCategory, ...]
    trees: tuple
    n_features: int
    config: ForestConfig
    feature_space: FeatureSpace | None = None


def train_forest(
    matrix: DocTermMatrix,
    labels,
    config: ForestConfig | None = None,
    feature_space: FeatureSpace | None = None,
) -> ForestModel:
    """Grow config.n_trees trees on bootstrap resamples of the matrix."""
    if config is None:
        config = ForestConfig()
    n = matrix.n_docs
    if n == 0:
        raise EmptyData("no documents to train on")
    labels = list(labels)
    if len(labels) != n:
        raise DimensionMismatch("label count differs from document count")
    present = set(labels)
    classes = tuple(c for c in AccountCategory if c in present)
    class_id = {c: i for i, c in enumerate(classes)}
    y = np.array([class_id[lab] for lab in labels], dtype=np.int64)
    x = matrix.to_dense()

    trees = []
    for t in range(config.n_trees):
        rng = np.random.default_rng(derive_seed(config.seed, "tree", t))
        if config.bootstrap:
            rows = rng.integers(0, n, size=n)
            xt, yt = x[rows], y[rows]
        else:
            xt, yt = x, y
        trees.append(grow_tree(xt, yt, config, rng, len(classes)))
    return ForestModel(classes, tuple(trees), matrix.n_terms, config, feature_space)


def predict_forest(model: ForestModel, x) -> tuple[AccountCategory, np.ndarray]:
    """Majority vote over the trees; ties go to the earlier class."""
    if isinstance(x, SparseVec) and x.dim != model.n_features:
        raise DimensionMismatch(
            "vector has %d features, model expects %d" % (x.dim, model.n_features)
        )
    votes = np.zeros(len(model.classes), dtype=np.int64)
    for tree in model.trees:
        votes[predict_tree(tree, x)] += 1
    return model.classes[int(np.argmax(votes))], votes


def predict_forest_matrix(model: ForestModel, matrix: DocTermMatrix) -> list[AccountCategory]:
    return [predict_forest(model, row)[0] for row in matrix.rows]


def _flatten(node, out: list) -> None:
    if isinstance(node, Leaf):
        out.append({"counts": [int(c) for c in node.counts]})
    else:
        out.append({"f": int(node.feature), "t": float(node.threshold)})
        _flatten(node.left, out)
        _flatten(node.right, out)


def _rebuild(nodes: list, pos: int):
    spec = nodes[pos]
    if "counts" in spec:
        counts = np.array(spec["counts"], dtype=np.int64)
        return Leaf(counts, int(np.argmax(counts))), pos + 1
    left, after_left = _rebuild(nodes, pos + 1)
    right, after_right = _rebuild(nodes, after_left)
    return InternalNode(int(spec["f"]), float(spec["t"]), left, right), after_right


def save_forest(model: ForestModel, path) -> None:
    trees = []
    for tree in model.trees:
        flat: list = []
        _flatten(tree, flat)
        trees.append(flat)
    payload = {
        "format": "trolltext-forest",
        "version": 1,
        "classes": [c.value for c in model.classes],
        "n_features": model.n_features,
        "config": {
            "n_trees": model.config.n_trees,
            "mtry": model.config.mtry,
            "max_depth": model.config.max_depth,
            "min_leaf": model.config.min_leaf,
            "impurity": model.config.impurity,
            "seed": model.config.seed,
            "bootstrap": model.config.bootstrap,
        },
        "feature_space": (
            None if model.feature_space is None else model.feature_space.to_payload()
        ),
        "trees": trees,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_forest(path) -> ForestModel:
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError("model file is not valid JSON: %s" % exc) from None
    if not isinstance(payload, dict):
        raise ModelFormatError("model file does not hold an object")
    if payload.get("format") != "trolltext-forest" or payload.get("version") != 1:
        raise ModelFormatError("not a version-1 forest model file")
    try:
        classes = tuple(AccountCategory(v) for v in payload["classes"])
        config = ForestConfig(**payload["config"])
        trees = []
        for flat in payload["trees"]:
            tree, end = _rebuild(flat, 0)
            if end != len(flat):
                raise ValueError("trailing nodes after tree")
            trees.append(tree)
        fs = payload["feature_space"]
        feature_space = None if fs is None else FeatureSpace.from_payload(fs)
        n_features = int(payload["n_features"])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ModelFormatError("malformed forest model file: %s" % exc) from exc
    return ForestModel(classes, tuple(trees), n_features, config, feature_space)
