"""Bag-of-words preprocessing: tokens, stems, vocabularies, matrices.

The pipeline applied by build_vocabulary and vectorize is

    tokenize -> stopword removal -> stem -> stopword removal

with tokens shorter than two characters dropped at both ends. The second
stopword pass catches inflected forms whose stem collides with a listed
word ("wills" stems to "will"). A Vocabulary remembers the stoplist it
was built with so later vectorize calls reproduce the same pipeline.
"""

from __future__ import annotations

import hashlib
import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from .corpus import AccountCategory, Corpus
from .errors import DimensionMismatch, EmptyVocabulary
from .porter import stem_word

_URL_RE = re.compile(r"(?:https?://|www\.)\S+")
_MENTION_RE = re.compile(r"@\w+")
_TOKEN_RE = re.compile(r"[a-z0-9]+")

MIN_TOKEN_LEN = 2


def tokenize(text: str) -> list[str]:
    """Lowercase, drop URLs and @-mentions, split on non-alphanumerics.

    Hashtags lose their marker ("#maga" -> "maga"); tokens shorter than
    MIN_TOKEN_LEN are dropped.
    """
    text = text.lower()
    text = _URL_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    return [t for t in _TOKEN_RE.findall(text) if len(t) >= MIN_TOKEN_LEN]


def stem(token: str) -> str:
    """Porter-stem an alphabetic token; tokens with digits pass through."""
    if any(ch.isdigit() for ch in token):
        return token
    return stem_word(token)


def remove_stopwords(tokens: list[str], stopwords: frozenset[str]) -> list[str]:
    return [t for t in tokens if t not in stopwords]


def _parse_stoplist(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line.lower())
    return frozenset(words)


@lru_cache(maxsize=1)
def default_stoplist() -> frozenset[str]:
    data = resources.files("trolltext").joinpath("data/english_stopwords.txt")
    return _parse_stoplist(data.read_text(encoding="utf-8"))


def load_stoplist(path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return _parse_stoplist(fh.read())


def preprocess(text: str, stopwords: frozenset[str] | None = None) -> list[str]:
    """Full token pipeline for one document; returns stems in text order."""
    if stopwords is None:
        stopwords = default_stoplist()
    tokens = remove_stopwords(tokenize(text), stopwords)
    stems = [stem(t) for t in tokens]
    return [s for s in stems if len(s) >= MIN_TOKEN_LEN and s not in stopwords]


@dataclass
class Vocabulary:
    """Sorted term list with document frequencies from the build corpus."""

    terms: tuple[str, ...]
    doc_freq: np.ndarray
    n_docs: int
    stopwords: frozenset[str] = field(repr=False)

    def __post_init__(self):
        self.terms = tuple(self.terms)
        self.doc_freq = np.asarray(self.doc_freq, dtype=np.int64)
        if len(self.terms) != len(self.doc_freq):
            raise ValueError("terms and doc_freq lengths differ")
        if any(a >= b for a, b in zip(self.terms, self.terms[1:])):
            raise ValueError("terms must be sorted and unique")
        if self.n_docs < 1 or np.any(self.doc_freq < 1):
            raise ValueError("doc_freq entries and n_docs must be positive")
        if np.any(self.doc_freq > self.n_docs):
            raise ValueError("doc_freq cannot exceed n_docs")
        self.index = {t: i for i, t in enumerate(self.terms)}

    @property
    def size(self) -> int:
        return len(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index


def build_vocabulary(
    corpus: Corpus,
    min_df: int = 1,
    max_df_frac: float = 1.0,
    stopwords: frozenset[str] | None = None,
) -> Vocabulary:
    """Collect stems over the corpus, filtered by document frequency.

    A term is kept when its doc frequency is >= min_df and its doc
    fraction is <= max_df_frac. Raises EmptyVocabulary when nothing
    survives.
    """
    if min_df < 1:
        raise ValueError("min_df must be >= 1")
    if not 0.0 < max_df_frac <= 1.0:
        raise ValueError("max_df_frac must be in (0, 1]")
    if stopwords is None:
        stopwords = default_stoplist()
    if len(corpus) == 0:
        raise EmptyVocabulary("cannot build a vocabulary from an empty corpus")

    df: Counter[str] = Counter()
    for doc in corpus:
        df.update(set(preprocess(doc.text, stopwords)))

    m = len(corpus)
    kept = sorted(
        t for t, c in df.items() if c >= min_df and c / m <= max_df_frac
    )
    if not kept:
        raise EmptyVocabulary(
            "every term was filtered out (min_df=%d, max_df_frac=%g)"
            % (min_df, max_df_frac)
        )
    freq = np.array([df[t] for t in kept], dtype=np.int64)
    return Vocabulary(tuple(kept), freq, m, stopwords)


@dataclass(frozen=True)
class SparseVec:
    """Sorted sparse vector; no explicit zeros are stored."""

    indices: np.ndarray
    values: np.ndarray
    dim: int

    def __post_init__(self):
        idx = np.asarray(self.indices, dtype=np.int64)
        val = np.asarray(self.values, dtype=np.float64)
        if idx.shape != val.shape or idx.ndim != 1:
            raise ValueError("indices and values must be 1-d and aligned")
        if idx.size:
            if idx[0] < 0 or idx[-1] >= self.dim:
                raise ValueError("index out of range")
            if np.any(np.diff(idx) <= 0):
                raise ValueError("indices must be strictly increasing")
            if np.any(val == 0.0):
                raise ValueError("explicit zeros are not allowed")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "values", val)

    @property
    def nnz(self) -> int:
        return int(self.indices.size)

    def get(self, i: int) -> float:
        pos = np.searchsorted(self.indices, i)
        if pos < self.indices.size and self.indices[pos] == i:
            return float(self.values[pos])
        return 0.0

    def dot(self, other: "SparseVec") -> float:
        if self.dim != other.dim:
            raise DimensionMismatch(
                "dimensions differ: %d vs %d" % (self.dim, other.dim)
            )
        _, ia, ib = np.intersect1d(
            self.indices, other.indices, assume_unique=True, return_indices=True
        )
        return float(np.dot(self.values[ia], other.values[ib]))

    def sqnorm(self) -> float:
        return float(np.dot(self.values, self.values))

    def sum(self) -> float:
        return float(self.values.sum())

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.dim)
        out[self.indices] = self.values
        return out


@dataclass
class DocTermMatrix:
    """Per-document sparse rows over a fixed term axis."""

    doc_ids: tuple[str, ...]
    rows: tuple[SparseVec, ...]
    n_terms: int
    doc_lengths: np.ndarray
    weighting: str = "count"

    def __post_init__(self):
        self.doc_ids = tuple(self.doc_ids)
        self.rows = tuple(self.rows)
        self.doc_lengths = np.asarray(self.doc_lengths, dtype=np.int64)
        if not (len(self.doc_ids) == len(self.rows) == len(self.doc_lengths)):
            raise ValueError("doc_ids, rows and doc_lengths lengths differ")
        if self.weighting not in ("count", "tfidf"):
            raise ValueError("unknown weighting %r" % self.weighting)
        for row in self.rows:
            if row.dim != self.n_terms:
                raise DimensionMismatch("row dimension differs from n_terms")
        if self.weighting == "count":
            for row, n in zip(self.rows, self.doc_lengths):
                if row.sum() != float(n):
                    raise ValueError("count row sum differs from doc length")

    @property
    def n_docs(self) -> int:
        return len(self.rows)

    @property
    def total_tokens(self) -> int:
        return int(self.doc_lengths.sum())

    def row(self, d: int) -> SparseVec:
        return self.rows[d]

    def subset(self, indices) -> "DocTermMatrix":
        indices = list(indices)
        return DocTermMatrix(
            tuple(self.doc_ids[i] for i in indices),
            tuple(self.rows[i] for i in indices),
            self.n_terms,
            self.doc_lengths[indices],
            self.weighting,
        )

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_docs, self.n_terms))
        for i, row in enumerate(self.rows):
            out[i, row.indices] = row.values
        return out


def vectorize(corpus: Corpus, vocab: Vocabulary) -> DocTermMatrix:
    """Count in-vocabulary stems per document.

    Out-of-vocabulary stems are dropped and do not count toward document
    length; a document of only unknown stems gets an empty row.
    """
    rows = []
    lengths = np.zeros(len(corpus), dtype=np.int64)
    for d, doc in enumerate(corpus):
        counts: Counter[int] = Counter()
        for s in preprocess(doc.text, vocab.stopwords):
            term_id = vocab.index.get(s)
            if term_id is not None:
                counts[term_id] += 1
        idx = np.array(sorted(counts), dtype=np.int64)
        val = np.array([counts[i] for i in idx], dtype=np.float64)
        rows.append(SparseVec(idx, val, vocab.size))
        lengths[d] = int(val.sum())
    return DocTermMatrix(
        tuple(doc.doc_id for doc in corpus),
        tuple(rows),
        vocab.size,
        lengths,
        "count",
    )


def tfidf(matrix: DocTermMatrix, vocab: Vocabulary) -> DocTermMatrix:
    """Reweight counts by ln(n_docs / doc_freq) and L2-normalize rows.

    n_docs and doc_freq come from the vocabulary, so transforming new
    documents reuses the statistics of the build corpus. Terms present
    in every build document get weight zero and fall out of the rows.
    """
    if matrix.weighting != "count":
        raise ValueError("tfidf expects a count matrix")
    if matrix.n_terms != vocab.size:
        raise DimensionMismatch("matrix and vocabulary sizes differ")
    idf = np.log(vocab.n_docs / vocab.doc_freq.astype(np.float64))
    rows = []
    for row in matrix.rows:
        w = row.values * idf[row.indices]
        keep = w != 0.0
        idx, w = row.indices[keep], w[keep]
        norm = math.sqrt(float(np.dot(w, w)))
        if norm > 0.0:
            w = w / norm
        rows.append(SparseVec(idx, w, matrix.n_terms))
    return DocTermMatrix(
        matrix.doc_ids, tuple(rows), matrix.n_terms, matrix.doc_lengths, "tfidf"
    )


@dataclass
class FeatureSpace:
    """Frozen featurization recipe carried alongside trained models."""

    vocabulary: Vocabulary
    weighting: str = "tfidf"

    def __post_init__(self):
        if self.weighting not in ("count", "tfidf"):
            raise ValueError("unknown weighting %r" % self.weighting)

    @property
    def n_features(self) -> int:
        return self.vocabulary.size

    def transform(self, corpus: Corpus) -> DocTermMatrix:
        counts = vectorize(corpus, self.vocabulary)
        if self.weighting == "tfidf":
            return tfidf(counts, self.vocabulary)
        return counts

    def to_payload(self) -> dict:
        return {
            "terms": list(self.vocabulary.terms),
            "doc_freq": [int(x) for x in self.vocabulary.doc_freq],
            "n_docs": self.vocabulary.n_docs,
            "stopwords": sorted(self.vocabulary.stopwords),
            "weighting": self.weighting,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "FeatureSpace":
        vocab = Vocabulary(
            tuple(payload["terms"]),
            np.array(payload["doc_freq"], dtype=np.int64),
            int(payload["n_docs"]),
            frozenset(payload["stopwords"]),
        )
        return cls(vocab, payload["weighting"])

    def fingerprint(self) -> str:
        blob = json.dumps(self.to_payload(), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()


def top_terms(
    corpus: Corpus,
    k: int = 30,
    category: AccountCategory | None = None,
    stopwords: frozenset[str] | None = None,
) -> list[tuple[str, int]]:
    """Most frequent stems, optionally restricted to one label.

    Ties rank alphabetically; returns at most k (term, count) pairs.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if stopwords is None:
        stopwords = default_stoplist()
    counts: Counter[str] = Counter()
    for doc in corpus:
        if category is not None and doc.label != category:
            continue
        counts.update(preprocess(doc.text, stopwords))
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:k]


def write_triplets(matrix: DocTermMatrix, terms, stream) -> None:
    """Write (doc_id, term, value) triplets as CSV, header included."""
    terms = list(terms)
    if len(terms) != matrix.n_terms:
        raise DimensionMismatch("term list length differs from n_terms")
    stream.write("doc_id,term,count\n")
    as_count = matrix.weighting == "count"
    for doc_id, row in zip(matrix.doc_ids, matrix.rows):
        for i, v in zip(row.indices, row.values):
            value = str(int(v)) if as_count else repr(float(v))
            stream.write("%s,%s,%s\n" % (doc_id, terms[i], value))
