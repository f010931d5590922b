"""Splits, confusion matrices, and account-level verdicts.

The confusion matrix is oriented with predicted classes as rows and
true classes as columns; per-class accuracy is the diagonal cell as a
percentage of its row total, so it reads "of everything predicted as
class X, how much really was X".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .corpus import AccountCategory
from .errors import EmptyClass, EmptyInput, SampleTooLarge, UnknownClass
from .seeding import derive_seed

TIE = "Tie"


@dataclass
class ConfusionMatrix:
    classes: tuple[AccountCategory, ...]
    cells: np.ndarray  # rows: predicted, cols: truth

    @property
    def total(self) -> int:
        return int(self.cells.sum())

    def row_totals(self) -> np.ndarray:
        return self.cells.sum(axis=1)

    def col_totals(self) -> np.ndarray:
        return self.cells.sum(axis=0)


def confusion_matrix(pairs, classes) -> ConfusionMatrix:
    """Tally (predicted, truth) pairs over a fixed class order."""
    classes = tuple(classes)
    index = {c: i for i, c in enumerate(classes)}
    cells = np.zeros((len(classes), len(classes)), dtype=np.int64)
    for predicted, truth in pairs:
        if predicted not in index:
            raise UnknownClass("predicted class %r not in class list" % (predicted,))
        if truth not in index:
            raise UnknownClass("true class %r not in class list" % (truth,))
        cells[index[predicted], index[truth]] += 1
    return ConfusionMatrix(classes, cells)


def per_class_accuracy(cm: ConfusionMatrix) -> dict[AccountCategory, float | None]:
    """Diagonal share of each predicted-class row, as a percentage.

    Classes never predicted have an undefined accuracy and map to None.
    """
    out: dict[AccountCategory, float | None] = {}
    rows = cm.row_totals()
    for i, cls in enumerate(cm.classes):
        if rows[i] == 0:
            out[cls] = None
        else:
            out[cls] = 100.0 * float(cm.cells[i, i]) / float(rows[i])
    return out


def overall_accuracy(cm: ConfusionMatrix) -> float:
    total = cm.total
    if total == 0:
        raise EmptyInput("confusion matrix is empty")
    return 100.0 * float(np.trace(cm.cells)) / float(total)


def _class_key(label):
    return label.value if isinstance(label, AccountCategory) else str(label)


def stratified_sample(
    items,
    n: int,
    seed: int,
    label_of=None,
    classes=None,
) -> tuple[list, list]:
    """Draw n items with per-class quotas proportional to class sizes.

    Quotas use largest-remainder rounding so they always sum to n, with
    remainder ties broken by class order. Returns (sample, rest), both
    in the original item order; together they are exactly the input.
    """
    if label_of is None:
        label_of = lambda item: item.label
    items = list(items)
    if n < 0:
        raise ValueError("sample size must be non-negative")
    if n > len(items):
        raise SampleTooLarge(
            "asked for %d items but only %d are available" % (n, len(items))
        )
    labels = [label_of(item) for item in items]
    if any(lab is None for lab in labels):
        raise ValueError("cannot stratify unlabeled items")
    if classes is None:
        classes = sorted(set(labels), key=_class_key)
    else:
        classes = list(classes)
    members = {c: [] for c in classes}
    for i, lab in enumerate(labels):
        if lab not in members:
            raise UnknownClass("label %r not in class list" % (lab,))
        members[lab].append(i)
    for c in classes:
        if not members[c]:
            raise EmptyClass("class %r has no members" % _class_key(c))

    total = len(items)
    exact = [n * len(members[c]) / total for c in classes]
    quota = [int(q) for q in exact]
    leftovers = n - sum(quota)
    by_remainder = sorted(
        range(len(classes)), key=lambda i: (-(exact[i] - quota[i]), i)
    )
    for i in by_remainder[:leftovers]:
        quota[i] += 1

    rng = np.random.default_rng(derive_seed(seed, "stratified"))
    chosen: set[int] = set()
    for c, q in zip(classes, quota):
        rows = members[c]
        picks = rng.permutation(len(rows))[:q]
        chosen.update(rows[p] for p in picks)
    sample = [items[i] for i in range(total) if i in chosen]
    rest = [items[i] for i in range(total) if i not in chosen]
    return sample, rest


@dataclass
class AccountVerdict:
    account: str
    verdict: object  # AccountCategory, or TIE on a split vote
    votes: dict
    n_items: int


def classify_accounts(predictions) -> tuple[list[AccountVerdict], dict[str, int]]:
    """Roll per-item predictions up to account verdicts by majority vote.

    An account whose top vote count is shared by two or more classes
    gets the verdict TIE. Returns verdicts sorted by account id plus a
    verdict histogram whose counts sum to the number of accounts.
    """
    groups: dict[str, Counter] = {}
    n_pairs = 0
    for account, predicted in predictions:
        groups.setdefault(account, Counter())[predicted] += 1
        n_pairs += 1
    if n_pairs == 0:
        raise EmptyInput("no predictions to aggregate")

    verdicts = []
    histogram: dict[str, int] = {}
    for account in sorted(groups):
        votes = groups[account]
        top = max(votes.values())
        winners = [c for c, v in votes.items() if v == top]
        verdict = winners[0] if len(winners) == 1 else TIE
        key = verdict if verdict == TIE else _class_key(verdict)
        histogram[key] = histogram.get(key, 0) + 1
        verdicts.append(
            AccountVerdict(
                account=account,
                verdict=verdict,
                votes={c: int(v) for c, v in sorted(votes.items(), key=lambda kv: _class_key(kv[0]))},
                n_items=int(sum(votes.values())),
            )
        )
    ordered = dict(sorted(histogram.items(), key=lambda kv: (kv[0] == TIE, kv[0])))
    return verdicts, ordered


def write_confusion_csv(cm: ConfusionMatrix, stream) -> None:
    """Rows are predicted classes, columns true classes."""
    names = [c.value for c in cm.classes]
    stream.write("predicted," + ",".join(names) + ",total\n")
    rows = cm.row_totals()
    for i, name in enumerate(names):
        cells = ",".join(str(int(v)) for v in cm.cells[i])
        stream.write("%s,%s,%d\n" % (name, cells, int(rows[i])))
    cols = ",".join(str(int(v)) for v in cm.col_totals())
    stream.write("truth_total,%s,%d\n" % (cols, cm.total))


def write_accuracy_csv(cm: ConfusionMatrix, stream) -> None:
    stream.write("category,accuracy_percent\n")
    for cls, acc in per_class_accuracy(cm).items():
        value = "" if acc is None else repr(acc)
        stream.write("%s,%s\n" % (cls.value, value))
    stream.write("overall,%r\n" % overall_accuracy(cm))
