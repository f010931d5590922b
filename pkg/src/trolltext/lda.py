"""Latent topic modeling via collapsed Gibbs sampling.

Documents are bags of term counts; the sampler integrates out the
document-topic and topic-word distributions and walks the posterior
over per-token topic assignments. Point estimates are smoothed counts
averaged over thinned post-burn-in samples. A brute-force posterior
enumerator over tiny corpora serves as ground truth for the sampler,
and held-out perplexity drives topic-count selection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .corpus import Corpus, Document, Source
from .errors import (
    EmptyMatrix,
    InsufficientDocuments,
    InvalidHyperparameter,
    InvalidSpec,
    TooLarge,
    VocabMismatch,
)
from .seeding import derive_seed
from .textprep import DocTermMatrix, Vocabulary
from . import _gibbs

BRUTE_FORCE_LIMIT = 10_000_000


@dataclass(frozen=True)
class GibbsConfig:
    """Chain schedule: total sweeps, discarded prefix, thinning, seed."""

    iterations: int = 1000
    burn_in: int = 500
    sample_lag: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.iterations < 1:
            raise InvalidHyperparameter("iterations must be >= 1")
        if not 0 <= self.burn_in < self.iterations:
            raise InvalidHyperparameter("burn_in must be in [0, iterations)")
        if self.sample_lag < 1:
            raise InvalidHyperparameter("sample_lag must be >= 1")


@dataclass
class LdaModel:
    """Final sampler state plus averaged posterior point estimates.

    doc_of/word_of/z hold the flattened token stream: documents in
    matrix row order, term ids ascending within a document, counts
    expanded to individual tokens.
    """

    n_topics: int
    n_terms: int
    alpha: float
    eta: float
    doc_ids: tuple[str, ...]
    doc_of: np.ndarray
    word_of: np.ndarray
    z: np.ndarray
    n_dk: np.ndarray
    n_kv: np.ndarray
    n_k: np.ndarray
    theta_hat: np.ndarray
    phi_hat: np.ndarray
    token_topic_freq: np.ndarray
    n_samples: int
    seed: int
    terms: tuple[str, ...] | None = None

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)

    @property
    def n_tokens(self) -> int:
        return int(self.doc_of.shape[0])

    def check_invariants(self, atol: float = 1e-9) -> None:
        """Verify count-table consistency and estimate normalization."""
        t = self.n_tokens
        if np.any(self.n_dk < 0) or np.any(self.n_kv < 0) or np.any(self.n_k < 0):
            raise AssertionError("negative topic counts")
        if int(self.n_k.sum()) != t:
            raise AssertionError("token count not conserved")
        if not np.array_equal(self.n_kv.sum(axis=1), self.n_k):
            raise AssertionError("n_kv rows disagree with n_k")
        doc_tot = np.bincount(self.doc_of, minlength=self.n_docs)
        if not np.array_equal(self.n_dk.sum(axis=1), doc_tot):
            raise AssertionError("n_dk rows disagree with document lengths")
        n_dk = np.zeros_like(self.n_dk)
        n_kv = np.zeros_like(self.n_kv)
        for d, v, k in zip(self.doc_of, self.word_of, self.z):
            n_dk[d, k] += 1
            n_kv[k, v] += 1
        if not (np.array_equal(n_dk, self.n_dk) and np.array_equal(n_kv, self.n_kv)):
            raise AssertionError("count tables disagree with assignments")
        for name, mat in (
            ("theta_hat", self.theta_hat),
            ("phi_hat", self.phi_hat),
            ("token_topic_freq", self.token_topic_freq),
        ):
            if mat.size and np.max(np.abs(mat.sum(axis=1) - 1.0)) > atol:
                raise AssertionError("%s rows do not sum to one" % name)


def _expand_tokens(matrix: DocTermMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Flatten a count matrix into parallel doc-id and term-id streams."""
    t = matrix.total_tokens
    doc_of = np.empty(t, dtype=np.int64)
    word_of = np.empty(t, dtype=np.int64)
    pos = 0
    for d, row in enumerate(matrix.rows):
        for idx, val in zip(row.indices, row.values):
            c = int(val)
            doc_of[pos : pos + c] = d
            word_of[pos : pos + c] = idx
            pos += c
    return doc_of, word_of


def _require_count_matrix(matrix: DocTermMatrix) -> None:
    if matrix.weighting != "count":
        raise ValueError("topic models need a count matrix, not %r" % matrix.weighting)


def _check_hyper(n_topics: int, alpha: float, eta: float) -> None:
    if n_topics < 1:
        raise InvalidHyperparameter("n_topics must be >= 1")
    if alpha <= 0.0 or eta <= 0.0:
        raise InvalidHyperparameter("alpha and eta must be positive")


def fit_gibbs(
    matrix: DocTermMatrix,
    n_topics: int,
    alpha: float | None = None,
    eta: float | None = None,
    config: GibbsConfig | None = None,
    vocab: Vocabulary | None = None,
) -> LdaModel:
    """Run the collapsed Gibbs chain and average the thinned samples.

    alpha defaults to 50 / n_topics and eta to 0.01. The run is
    bit-reproducible for a fixed config on any platform.
    """
    _require_count_matrix(matrix)
    if config is None:
        config = GibbsConfig()
    if alpha is None:
        alpha = 50.0 / n_topics if n_topics >= 1 else 1.0
    if eta is None:
        eta = 0.01
    _check_hyper(n_topics, alpha, eta)
    if matrix.n_docs == 0 or matrix.total_tokens == 0:
        raise EmptyMatrix("nothing to sample: the matrix has no tokens")

    doc_of, word_of = _expand_tokens(matrix)
    t = doc_of.shape[0]
    m, v = matrix.n_docs, matrix.n_terms
    k = n_topics
    z = np.empty(t, dtype=np.int64)
    n_dk = np.zeros((m, k), dtype=np.int64)
    n_kv = np.zeros((k, v), dtype=np.int64)
    n_k = np.zeros(k, dtype=np.int64)
    theta_acc = np.zeros((m, k))
    phi_acc = np.zeros((k, v))
    token_acc = np.zeros((t, k))
    state = np.array([derive_seed(config.seed, "gibbs")], dtype=np.uint64)

    _gibbs.init_assignments(doc_of, word_of, k, state, z, n_dk, n_kv, n_k)
    doc_len = np.bincount(doc_of, minlength=m).astype(np.int64)
    n_samples = _gibbs.run_sweeps(
        doc_of,
        word_of,
        z,
        n_dk,
        n_kv,
        n_k,
        doc_len,
        float(alpha),
        float(eta),
        config.iterations,
        config.burn_in,
        config.sample_lag,
        state,
        theta_acc,
        phi_acc,
        token_acc,
    )

    model = LdaModel(
        n_topics=k,
        n_terms=v,
        alpha=float(alpha),
        eta=float(eta),
        doc_ids=tuple(matrix.doc_ids),
        doc_of=doc_of,
        word_of=word_of,
        z=z,
        n_dk=n_dk,
        n_kv=n_kv,
        n_k=n_k,
        theta_hat=theta_acc / n_samples,
        phi_hat=phi_acc / n_samples,
        token_topic_freq=token_acc / n_samples,
        n_samples=int(n_samples),
        seed=config.seed,
        terms=tuple(vocab.terms) if vocab is not None else None,
    )
    model.check_invariants()
    return model


def posterior_brute_force(
    matrix: DocTermMatrix, n_topics: int, alpha: float, eta: float
) -> np.ndarray:
    """Exact per-token topic marginals by enumerating every assignment.

    Uses the same token expansion order as fit_gibbs, so row i of the
    result corresponds to token i of the sampler. The joint weight of a
    full assignment factorizes sequentially, one smoothed-count ratio
    per token; summing leaf weights per (token, topic) and normalizing
    gives the marginals. Raises TooLarge when n_topics ** n_tokens
    exceeds BRUTE_FORCE_LIMIT.
    """
    _require_count_matrix(matrix)
    _check_hyper(n_topics, alpha, eta)
    if matrix.n_docs == 0 or matrix.total_tokens == 0:
        raise EmptyMatrix("nothing to enumerate: the matrix has no tokens")
    t = matrix.total_tokens
    if n_topics**t > BRUTE_FORCE_LIMIT:
        raise TooLarge(
            "%d^%d assignments exceed the enumeration limit" % (n_topics, t)
        )

    doc_of, word_of = _expand_tokens(matrix)
    m, v, k = matrix.n_docs, matrix.n_terms, n_topics
    n_dk = np.zeros((m, k))
    n_kv = np.zeros((k, v))
    n_k = np.zeros(k)
    z = np.zeros(t, dtype=np.int64)
    veta = v * eta
    log = math.log

    max_logw = -math.inf

    def scan_max(i: int, logw: float) -> None:
        nonlocal max_logw
        if i == t:
            if logw > max_logw:
                max_logw = logw
            return
        d, w = doc_of[i], word_of[i]
        for topic in range(k):
            inc = (
                log(n_dk[d, topic] + alpha)
                + log(n_kv[topic, w] + eta)
                - log(n_k[topic] + veta)
            )
            n_dk[d, topic] += 1
            n_kv[topic, w] += 1
            n_k[topic] += 1
            scan_max(i + 1, logw + inc)
            n_dk[d, topic] -= 1
            n_kv[topic, w] -= 1
            n_k[topic] -= 1

    scan_max(0, 0.0)

    marginal = np.zeros((t, k))
    total_weight = 0.0

    def scan_sum(i: int, logw: float) -> None:
        nonlocal total_weight
        if i == t:
            weight = math.exp(logw - max_logw)
            total_weight += weight
            for j in range(t):
                marginal[j, z[j]] += weight
            return
        d, w = doc_of[i], word_of[i]
        for topic in range(k):
            inc = (
                log(n_dk[d, topic] + alpha)
                + log(n_kv[topic, w] + eta)
                - log(n_k[topic] + veta)
            )
            n_dk[d, topic] += 1
            n_kv[topic, w] += 1
            n_k[topic] += 1
            z[i] = topic
            scan_sum(i + 1, logw + inc)
            n_dk[d, topic] -= 1
            n_kv[topic, w] -= 1
            n_k[topic] -= 1

    scan_sum(0, 0.0)
    return marginal / total_weight


def topic_top_words(model: LdaModel, n: int = 30) -> list[list[tuple[str, float]]]:
    """Per topic, the n highest-probability terms with ties alphabetical."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if model.terms is None:
        raise ValueError("model was fit without a vocabulary; no term strings")
    out = []
    for k in range(model.n_topics):
        probs = model.phi_hat[k]
        order = sorted(range(model.n_terms), key=lambda v: (-probs[v], model.terms[v]))
        out.append([(model.terms[v], float(probs[v])) for v in order[:n]])
    return out


FOLD_IN_SWEEPS = 20


def perplexity(model: LdaModel, matrix: DocTermMatrix, sweeps: int = FOLD_IN_SWEEPS) -> float:
    """Held-out perplexity under the model's frozen topic-word estimates.

    Each document is folded in by Gibbs-sampling its own topic counts
    against phi_hat, then scored at the smoothed document-topic point
    estimate. A model whose rows are uniform over n_terms scores exactly
    n_terms.
    """
    if matrix.n_terms != model.n_terms:
        raise VocabMismatch(
            "matrix has %d terms, model expects %d" % (matrix.n_terms, model.n_terms)
        )
    _require_count_matrix(matrix)
    if matrix.n_docs == 0 or matrix.total_tokens == 0:
        raise EmptyMatrix("no held-out tokens to score")
    k = model.n_topics
    total_ll = 0.0
    for d, row in enumerate(matrix.rows):
        counts = row.values.astype(np.int64)
        words = np.repeat(row.indices, counts)
        if words.size == 0:
            continue
        state = np.array([derive_seed(model.seed, "foldin", d)], dtype=np.uint64)
        ndk = _gibbs.fold_in_doc(words, model.phi_hat, model.alpha, sweeps, state)
        theta = (ndk + model.alpha) / (words.size + k * model.alpha)
        token_prob = theta @ model.phi_hat[:, row.indices]
        total_ll += float(np.dot(counts, np.log(token_prob)))
    return math.exp(-total_ll / matrix.total_tokens)


@dataclass(frozen=True)
class SyntheticSpec:
    """Generative recipe for a planted-topics corpus.

    doc_length is the Poisson mean of the per-document token count;
    zero-length draws are rejected and redrawn.
    """

    n_docs: int
    doc_length: float
    n_topics: int
    n_terms: int
    doc_topic_alpha: float
    topic_word: np.ndarray = field(repr=False)
    seed: int = 0

    def __post_init__(self):
        if self.n_docs < 1 or self.doc_length <= 0:
            raise InvalidSpec("n_docs must be >= 1 and doc_length positive")
        if self.n_topics < 1 or self.n_terms < 1:
            raise InvalidSpec("n_topics and n_terms must be >= 1")
        if self.doc_topic_alpha <= 0.0:
            raise InvalidSpec("doc_topic_alpha must be positive")
        tw = np.asarray(self.topic_word, dtype=np.float64)
        if tw.shape != (self.n_topics, self.n_terms):
            raise InvalidSpec("topic_word must be n_topics x n_terms")
        if np.any(tw < 0.0):
            raise InvalidSpec("topic_word entries must be non-negative")
        if np.max(np.abs(tw.sum(axis=1) - 1.0)) > 1e-9:
            raise InvalidSpec("topic_word rows must sum to one")
        object.__setattr__(self, "topic_word", tw)


def synthetic_term_name(v: int, n_terms: int) -> str:
    width = len(str(n_terms - 1))
    return "w%0*d" % (width, v)


def generate_synthetic_corpus(
    spec: SyntheticSpec,
) -> tuple[Corpus, list[np.ndarray], np.ndarray]:
    """Sample a corpus from the generative model, keeping ground truth.

    Returns (corpus, per-document token topic assignments, document-
    topic proportions). Document lengths are Poisson(doc_length) with
    zero redrawn. Term v renders as a zero-padded word so alphabetical
    vocabulary order matches term-id order.
    """
    rng = np.random.default_rng(derive_seed(spec.seed, "synthetic"))
    thetas = rng.dirichlet(
        np.full(spec.n_topics, spec.doc_topic_alpha), size=spec.n_docs
    )
    id_width = len(str(spec.n_docs - 1))
    docs = []
    assignments = []
    for d in range(spec.n_docs):
        n = 0
        while n == 0:
            n = int(rng.poisson(spec.doc_length))
        zs = rng.choice(spec.n_topics, size=n, p=thetas[d])
        words = np.empty(n, dtype=np.int64)
        for k in range(spec.n_topics):
            mask = zs == k
            hits = int(mask.sum())
            if hits:
                words[mask] = rng.choice(spec.n_terms, size=hits, p=spec.topic_word[k])
        text = " ".join(synthetic_term_name(int(w), spec.n_terms) for w in words)
        docs.append(
            Document(
                doc_id="synth-%0*d" % (id_width, d),
                text=text,
                label=None,
                source=Source.SYNTHETIC,
            )
        )
        assignments.append(zs.astype(np.int64))
    return Corpus(docs), assignments, thetas


def select_k(
    matrix: DocTermMatrix,
    candidates,
    split_frac: float = 0.8,
    alpha: float | None = None,
    eta: float | None = None,
    config: GibbsConfig | None = None,
) -> tuple[int, dict[int, float]]:
    """Pick the topic count with the lowest held-out perplexity.

    The matrix is split once into fit and held-out documents; every
    candidate trains on the same split. Ties go to the smallest
    candidate. Returns (best_k, {k: perplexity}).
    """
    cands = sorted(set(int(c) for c in candidates))
    if not cands:
        raise InvalidHyperparameter("need at least one candidate topic count")
    if any(c < 1 for c in cands):
        raise InvalidHyperparameter("candidate topic counts must be >= 1")
    if not 0.0 < split_frac < 1.0:
        raise InvalidHyperparameter("split_frac must be in (0, 1)")
    if config is None:
        config = GibbsConfig()

    m = matrix.n_docs
    n_fit = int(round(split_frac * m))
    if n_fit < 1 or m - n_fit < 1:
        raise InsufficientDocuments(
            "split of %d documents leaves an empty side" % m
        )
    rng = np.random.default_rng(derive_seed(config.seed, "selectk-split"))
    perm = rng.permutation(m)
    fit_matrix = matrix.subset(sorted(perm[:n_fit].tolist()))
    held_matrix = matrix.subset(sorted(perm[n_fit:].tolist()))

    scores: dict[int, float] = {}
    best_k, best_perp = None, math.inf
    for k in cands:
        cfg = replace(config, seed=derive_seed(config.seed, "selectk-fit", k))
        model = fit_gibbs(fit_matrix, k, alpha, eta, cfg)
        perp = perplexity(model, held_matrix)
        scores[k] = perp
        if perp < best_perp:
            best_k, best_perp = k, perp
    return best_k, scores
