"""
Recovering planted topics with collapsed Gibbs sampling
=======================================================

A synthetic corpus with three known, nearly disjoint topics is the
cleanest way to see the sampler work: fit at the true topic count,
inspect the top words, then let held-out perplexity pick the topic
count from a candidate list.
"""

import numpy as np

from trolltext.lda import (
    GibbsConfig,
    SyntheticSpec,
    fit_gibbs,
    generate_synthetic_corpus,
    select_k,
    topic_top_words,
)
from trolltext.textprep import build_vocabulary, vectorize

# --- plant three topics over a 30-term vocabulary --------------------

n_topics, n_terms = 3, 30
topic_word = np.zeros((n_topics, n_terms))
for k in range(n_topics):
    topic_word[k, 10 * k : 10 * (k + 1)] = 0.1  # uniform over its block

spec = SyntheticSpec(
    n_docs=200,
    doc_length=50.0,  # Poisson mean tokens per document
    n_topics=n_topics,
    n_terms=n_terms,
    doc_topic_alpha=0.3,
    topic_word=topic_word,
    seed=0,
)
corpus, true_assignments, true_thetas = generate_synthetic_corpus(spec)
print("generated %d documents" % len(corpus))

vocab = build_vocabulary(corpus)
matrix = vectorize(corpus, vocab)

# --- fit at the true K and look at the recovered topics --------------

chain = GibbsConfig(iterations=400, burn_in=200, sample_lag=2, seed=1)
model = fit_gibbs(matrix, n_topics, alpha=0.5, eta=0.05, config=chain, vocab=vocab)
print("kept %d thinned samples after burn-in" % model.n_samples)

for k, ranked in enumerate(topic_top_words(model, 5)):
    words = ", ".join("%s %.2f" % (term, p) for term, p in ranked)
    print("topic %d: %s" % (k + 1, words))

# --- pick K by held-out perplexity ------------------------------------

chain = GibbsConfig(iterations=200, burn_in=100, sample_lag=5, seed=2)
best_k, scores = select_k(
    matrix, [2, 3, 4, 6], split_frac=0.8, alpha=0.5, eta=0.05, config=chain
)
print("\nheld-out perplexity by candidate topic count:")
for k in sorted(scores):
    marker = "  <- selected" if k == best_k else ""
    print("  k=%d  %.2f%s" % (k, scores[k], marker))
