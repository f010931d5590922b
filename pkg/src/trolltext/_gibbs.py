"""Compiled inner loops for the collapsed Gibbs sampler.

Randomness comes from a hand-rolled splitmix64 stream held in a
one-element uint64 array, so identical seeds give identical chains on
any platform numba supports. All kernels mutate their count arrays in
place and stay allocation-free inside the sweep loops.
"""

import numpy as np
from numba import njit

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_INV53 = 1.0 / float(1 << 53)


@njit(cache=True)
def _rand_unit(state):
    """Uniform draw in [0, 1) from a splitmix64 state array."""
    state[0] += _GOLDEN
    z = state[0]
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    z = z ^ (z >> _S31)
    return float(z >> _S11) * _INV53


@njit(cache=True)
def init_assignments(doc_of, word_of, n_topics, state, z, n_dk, n_kv, n_k):
    for i in range(doc_of.shape[0]):
        k = int(_rand_unit(state) * n_topics)
        if k >= n_topics:
            k = n_topics - 1
        z[i] = k
        n_dk[doc_of[i], k] += 1
        n_kv[k, word_of[i]] += 1
        n_k[k] += 1


@njit(cache=True)
def run_sweeps(
    doc_of,
    word_of,
    z,
    n_dk,
    n_kv,
    n_k,
    doc_len,
    alpha,
    eta,
    iterations,
    burn_in,
    sample_lag,
    state,
    theta_acc,
    phi_acc,
    token_acc,
):
    """Run full Gibbs sweeps, accumulating thinned post-burn-in samples.

    Returns the number of samples taken. theta_acc, phi_acc and
    token_acc accumulate the smoothed estimates and the per-token topic
    indicators; callers divide by the sample count afterwards.
    """
    n_tokens = doc_of.shape[0]
    n_docs, n_topics = n_dk.shape
    n_terms = n_kv.shape[1]
    p = np.empty(n_topics, np.float64)
    n_samples = 0
    for sweep in range(iterations):
        for i in range(n_tokens):
            d = doc_of[i]
            v = word_of[i]
            old = z[i]
            n_dk[d, old] -= 1
            n_kv[old, v] -= 1
            n_k[old] -= 1
            total = 0.0
            for k in range(n_topics):
                w = (
                    (n_dk[d, k] + alpha)
                    * (n_kv[k, v] + eta)
                    / (n_k[k] + n_terms * eta)
                )
                p[k] = w
                total += w
            u = _rand_unit(state) * total
            acc = 0.0
            new = n_topics - 1
            for k in range(n_topics):
                acc += p[k]
                if u < acc:
                    new = k
                    break
            z[i] = new
            n_dk[d, new] += 1
            n_kv[new, v] += 1
            n_k[new] += 1
        if sweep >= burn_in and (sweep - burn_in) % sample_lag == 0:
            n_samples += 1
            for i in range(n_tokens):
                token_acc[i, z[i]] += 1.0
            for d in range(n_docs):
                den = doc_len[d] + n_topics * alpha
                for k in range(n_topics):
                    theta_acc[d, k] += (n_dk[d, k] + alpha) / den
            for k in range(n_topics):
                den = n_k[k] + n_terms * eta
                for v2 in range(n_terms):
                    phi_acc[k, v2] += (n_kv[k, v2] + eta) / den
    return n_samples


@njit(cache=True)
def fold_in_doc(word_of, phi, alpha, sweeps, state):
    """Sample topic assignments for one held-out document.

    The topic-word distributions stay frozen; only the document's own
    topic counts evolve. Returns the final per-topic counts.
    """
    n_tokens = word_of.shape[0]
    n_topics = phi.shape[0]
    ndk = np.zeros(n_topics, np.float64)
    zloc = np.empty(n_tokens, np.int64)
    for i in range(n_tokens):
        k = int(_rand_unit(state) * n_topics)
        if k >= n_topics:
            k = n_topics - 1
        zloc[i] = k
        ndk[k] += 1.0
    p = np.empty(n_topics, np.float64)
    for _ in range(sweeps):
        for i in range(n_tokens):
            v = word_of[i]
            old = zloc[i]
            ndk[old] -= 1.0
            total = 0.0
            for k in range(n_topics):
                w = (ndk[k] + alpha) * phi[k, v]
                p[k] = w
                total += w
            u = _rand_unit(state) * total
            acc = 0.0
            new = n_topics - 1
            for k in range(n_topics):
                acc += p[k]
                if u < acc:
                    new = k
                    break
            zloc[i] = new
            ndk[new] += 1.0
    return ndk
