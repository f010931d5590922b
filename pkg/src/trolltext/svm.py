"""One-vs-rest support vector machines over sparse document vectors.

The linear machine trains in the primal with a shrinking-step
subgradient descent over the jointly regularized (weights, bias) pair
and keeps the best-objective epoch snapshot, so its objective never
exceeds the all-zeros baseline. Nonlinear kernels train in the dual by
coordinate ascent on an augmented kernel (K + 1), which folds the bias
into the dual coefficients and removes the equality constraint. Every
binary subproblem shares one seed and sees the same index order, so
renaming or reordering the class list cannot change any model.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .corpus import AccountCategory
from .errors import (
    ClassWithNoExamples,
    DimensionMismatch,
    EmptyMatrix,
    InvalidHyperparameter,
    ModelFormatError,
    SingleClass,
    UnknownClass,
    UnsupportedKernel,
    ZeroWeight,
)
from .seeding import derive_seed
from .textprep import DocTermMatrix, FeatureSpace, SparseVec

KERNEL_KINDS = ("linear", "radial", "polynomial")


@dataclass(frozen=True)
class Kernel:
    kind: str
    gamma: float = 1.0
    degree: int = 3
    coef0: float = 0.0

    def __post_init__(self):
        if self.kind not in KERNEL_KINDS:
            raise UnsupportedKernel("unknown kernel kind %r" % self.kind)
        if self.kind in ("radial", "polynomial") and self.gamma <= 0.0:
            raise InvalidHyperparameter("gamma must be positive")
        if self.kind == "polynomial" and self.degree < 1:
            raise InvalidHyperparameter("degree must be >= 1")

    @classmethod
    def linear(cls) -> "Kernel":
        return cls("linear")

    @classmethod
    def radial(cls, gamma: float = 1.0) -> "Kernel":
        return cls("radial", gamma=gamma)

    @classmethod
    def polynomial(
        cls, degree: int = 3, gamma: float = 1.0, coef0: float = 0.0
    ) -> "Kernel":
        return cls("polynomial", gamma=gamma, degree=degree, coef0=coef0)


def kernel_eval(kernel: Kernel, x: SparseVec, y: SparseVec) -> float:
    if x.dim != y.dim:
        raise DimensionMismatch("dimensions differ: %d vs %d" % (x.dim, y.dim))
    if kernel.kind == "linear":
        return x.dot(y)
    if kernel.kind == "radial":
        sq = max(x.sqnorm() + y.sqnorm() - 2.0 * x.dot(y), 0.0)
        return math.exp(-kernel.gamma * sq)
    return (kernel.gamma * x.dot(y) + kernel.coef0) ** kernel.degree


@dataclass(frozen=True)
class TrainConfig:
    c: float = 1.0
    epochs: int = 20
    seed: int = 0
    tolerance: float = 1e-3

    def __post_init__(self):
        if self.c <= 0.0:
            raise InvalidHyperparameter("c must be positive")
        if self.epochs < 1:
            raise InvalidHyperparameter("epochs must be >= 1")
        if self.tolerance <= 0.0:
            raise InvalidHyperparameter("tolerance must be positive")


@dataclass
class LinearDecision:
    weights: np.ndarray
    bias: float

    def value(self, kernel: Kernel, x: SparseVec) -> float:
        return float(np.dot(self.weights[x.indices], x.values)) + self.bias


@dataclass
class DualDecision:
    support_vectors: tuple[SparseVec, ...]
    coeffs: np.ndarray
    bias: float

    def value(self, kernel: Kernel, x: SparseVec) -> float:
        total = self.bias
        for sv, a in zip(self.support_vectors, self.coeffs):
            total += a * kernel_eval(kernel, sv, x)
        return total


@dataclass
class SvmModel:
    classes: tuple[AccountCategory, ...]
    kernel: Kernel
    n_features: int
    decisions: tuple
    config: TrainConfig
    feature_space: FeatureSpace | None = None


def primal_objective(
    rows, y: np.ndarray, lam: float, weights: np.ndarray, bias: float
) -> float:
    """Regularized mean hinge loss of a linear decision function."""
    hinge = 0.0
    for i, row in enumerate(rows):
        pred = float(np.dot(weights[row.indices], row.values)) + bias
        hinge += max(0.0, 1.0 - y[i] * pred)
    return 0.5 * lam * float(np.dot(weights, weights)) + hinge / len(rows)


def _train_linear_binary(rows, y, c, epochs, seed):
    n = len(rows)
    dim = rows[0].dim
    lam = 1.0 / (c * n)
    w = np.zeros(dim)
    b = 0.0
    scale = 1.0
    t = 0
    rng = np.random.default_rng(seed)
    # the all-zeros function is the initial pocket candidate
    best_w, best_b, best_obj = w.copy(), 0.0, primal_objective(rows, y, lam, w, 0.0)
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            row = rows[i]
            pred = scale * float(np.dot(w[row.indices], row.values)) + b
            violated = y[i] * pred < 1.0
            if t == 1:
                scale = 1.0  # the 1 - 1/t decay zeroes w, which is zero already
            else:
                decay = 1.0 - 1.0 / t
                scale *= decay
                b *= decay  # the bias shrinks with the weights
                if scale < 1e-9:
                    w *= scale
                    scale = 1.0
            if violated:
                step = 1.0 / (lam * t)
                w[row.indices] += (step * y[i] / scale) * row.values
                b += step * y[i]
        snapshot = w * scale
        obj = primal_objective(rows, y, lam, snapshot, b)
        if obj < best_obj:
            best_w, best_b, best_obj = snapshot, b, obj
    return best_w, best_b


def _train_dual_binary(gram, y, c, epochs, tol, seed):
    """Coordinate ascent on the box-constrained dual, KKT stopping."""
    n = len(y)
    alpha = np.zeros(n)
    f = np.zeros(n)  # f_i = sum_j alpha_j y_j gram[i, j]
    rng = np.random.default_rng(seed)
    for _ in range(epochs):
        max_violation = 0.0
        for i in rng.permutation(n):
            g = 1.0 - y[i] * f[i]
            if alpha[i] <= 0.0:
                pg = max(g, 0.0)
            elif alpha[i] >= c:
                pg = min(g, 0.0)
            else:
                pg = g
            if abs(pg) > max_violation:
                max_violation = abs(pg)
            if pg != 0.0:
                denom = gram[i, i] if gram[i, i] > 1e-12 else 1e-12
                new = min(max(alpha[i] + g / denom, 0.0), c)
                delta = new - alpha[i]
                if delta != 0.0:
                    alpha[i] = new
                    f += (delta * y[i]) * gram[:, i]
        if max_violation < tol:
            break
    return alpha


def _gram_plus_one(kernel: Kernel, matrix: DocTermMatrix) -> np.ndarray:
    """Dense augmented kernel matrix K(x_i, x_j) + 1."""
    x = matrix.to_dense()
    dots = x @ x.T
    if kernel.kind == "linear":
        gram = dots
    elif kernel.kind == "radial":
        sq = np.diag(dots)
        dist = np.maximum(sq[:, None] + sq[None, :] - 2.0 * dots, 0.0)
        gram = np.exp(-kernel.gamma * dist)
    else:
        gram = (kernel.gamma * dots + kernel.coef0) ** kernel.degree
    return gram + 1.0


def train_ovr(
    matrix: DocTermMatrix,
    labels,
    kernel: Kernel | None = None,
    config: TrainConfig | None = None,
    feature_space: FeatureSpace | None = None,
    classes: tuple[AccountCategory, ...] | None = None,
) -> SvmModel:
    """Train one binary machine per present class.

    Class order is category declaration order; each binary problem sees
    its class as +1 and the rest as -1. An explicit class tuple pins the
    model's class set; every listed class must then have an example.
    """
    if kernel is None:
        kernel = Kernel.linear()
    if config is None:
        config = TrainConfig()
    n = matrix.n_docs
    if n == 0:
        raise EmptyMatrix("no documents to train on")
    labels = list(labels)
    if len(labels) != n:
        raise DimensionMismatch("label count differs from document count")
    present = set(labels)
    if classes is None:
        classes = tuple(c for c in AccountCategory if c in present)
    else:
        classes = tuple(classes)
        missing = [c.value for c in classes if c not in present]
        if missing:
            raise ClassWithNoExamples(
                "no training examples for: " + ", ".join(missing)
            )
    if len(classes) < 2:
        raise SingleClass("one-vs-rest needs at least two classes")

    gram = None if kernel.kind == "linear" else _gram_plus_one(kernel, matrix)
    # One shared stream for every binary subproblem: the sampled index
    # order is label-independent, so renaming classes by a permutation
    # permutes the trained decision functions exactly.
    seed = derive_seed(config.seed, "ovr")
    decisions = []
    for cls in classes:
        y = np.array([1.0 if lab == cls else -1.0 for lab in labels])
        if kernel.kind == "linear":
            w, b = _train_linear_binary(matrix.rows, y, config.c, config.epochs, seed)
            decisions.append(LinearDecision(w, b))
        else:
            alpha = _train_dual_binary(
                gram, y, config.c, config.epochs, config.tolerance, seed
            )
            sv = np.flatnonzero(alpha > 0.0)
            decisions.append(
                DualDecision(
                    tuple(matrix.rows[i] for i in sv),
                    alpha[sv] * y[sv],
                    float(np.dot(alpha, y)),
                )
            )
    return SvmModel(
        classes, kernel, matrix.n_terms, tuple(decisions), config, feature_space
    )


def decision_values(model: SvmModel, x: SparseVec) -> np.ndarray:
    if x.dim != model.n_features:
        raise DimensionMismatch(
            "vector has %d features, model expects %d" % (x.dim, model.n_features)
        )
    return np.array([d.value(model.kernel, x) for d in model.decisions])


def predict(model: SvmModel, x: SparseVec) -> tuple[AccountCategory, np.ndarray]:
    """Highest decision value wins; ties go to the earlier class."""
    scores = decision_values(model, x)
    return model.classes[int(np.argmax(scores))], scores


def predict_matrix(model: SvmModel, matrix: DocTermMatrix) -> list[AccountCategory]:
    return [predict(model, row)[0] for row in matrix.rows]


def margin(model: SvmModel, category: AccountCategory, x: SparseVec) -> float:
    """Signed geometric distance to one class's separating hyperplane."""
    if model.kernel.kind != "linear":
        raise UnsupportedKernel("geometric margins need a linear kernel")
    if category not in model.classes:
        raise UnknownClass("model has no class %r" % category.value)
    decision = model.decisions[model.classes.index(category)]
    norm = math.sqrt(float(np.dot(decision.weights, decision.weights)))
    if norm == 0.0:
        raise ZeroWeight("weight vector is zero; margin undefined")
    return decision.value(model.kernel, x) / norm


def _vec_payload(vec: SparseVec) -> dict:
    return {
        "indices": [int(i) for i in vec.indices],
        "values": [float(v) for v in vec.values],
    }


def _decision_payload(decision) -> dict:
    if isinstance(decision, LinearDecision):
        nz = np.flatnonzero(decision.weights)
        return {
            "type": "linear",
            "indices": [int(i) for i in nz],
            "values": [float(v) for v in decision.weights[nz]],
            "bias": float(decision.bias),
        }
    return {
        "type": "dual",
        "support": [_vec_payload(sv) for sv in decision.support_vectors],
        "coeffs": [float(a) for a in decision.coeffs],
        "bias": float(decision.bias),
    }


def save_svm(model: SvmModel, path) -> None:
    payload = {
        "format": "trolltext-svm",
        "version": 1,
        "classes": [c.value for c in model.classes],
        "kernel": {
            "kind": model.kernel.kind,
            "gamma": model.kernel.gamma,
            "degree": model.kernel.degree,
            "coef0": model.kernel.coef0,
        },
        "config": {
            "c": model.config.c,
            "epochs": model.config.epochs,
            "seed": model.config.seed,
            "tolerance": model.config.tolerance,
        },
        "n_features": model.n_features,
        "feature_space": (
            None if model.feature_space is None else model.feature_space.to_payload()
        ),
        "decisions": [_decision_payload(d) for d in model.decisions],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def _decision_from_payload(payload: dict, n_features: int):
    if payload["type"] == "linear":
        w = np.zeros(n_features)
        w[np.array(payload["indices"], dtype=np.int64)] = payload["values"]
        return LinearDecision(w, float(payload["bias"]))
    if payload["type"] == "dual":
        svs = tuple(
            SparseVec(
                np.array(p["indices"], dtype=np.int64),
                np.array(p["values"]),
                n_features,
            )
            for p in payload["support"]
        )
        return DualDecision(svs, np.array(payload["coeffs"]), float(payload["bias"]))
    raise ModelFormatError("unknown decision type %r" % payload["type"])


def load_svm(path) -> SvmModel:
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError("model file is not valid JSON: %s" % exc) from None
    if not isinstance(payload, dict):
        raise ModelFormatError("model file does not hold an object")
    if payload.get("format") != "trolltext-svm" or payload.get("version") != 1:
        raise ModelFormatError("not a version-1 svm model file")
    try:
        kernel = Kernel(**payload["kernel"])
        config = TrainConfig(**payload["config"])
        n_features = int(payload["n_features"])
        classes = tuple(AccountCategory(v) for v in payload["classes"])
        decisions = tuple(
            _decision_from_payload(p, n_features) for p in payload["decisions"]
        )
        fs = payload["feature_space"]
        feature_space = None if fs is None else FeatureSpace.from_payload(fs)
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError("malformed svm model file: %s" % exc) from exc
    return SvmModel(classes, kernel, n_features, decisions, config, feature_space)
