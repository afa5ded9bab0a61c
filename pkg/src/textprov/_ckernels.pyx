# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled packing/hashing kernels. Mirrors _pykernels exactly."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef cnp.uint64_t NGRAM_HASH_MULT = 116049371


def concat_with_eot(flat, lengths, eot_id):
    """Join token-id sequences into one stream, appending eot after each."""
    cdef cnp.uint32_t[::1] f = np.ascontiguousarray(flat, dtype=np.uint32)
    cdef cnp.int64_t[::1] ls = np.ascontiguousarray(lengths, dtype=np.int64)
    cdef Py_ssize_t n_seq = ls.shape[0]
    cdef Py_ssize_t total = 0
    cdef Py_ssize_t i, j, pos
    for i in range(n_seq):
        total += ls[i]
    if f.shape[0] != total:
        raise ValueError(f"lengths sum to {total} but flat has {f.shape[0]} ids")
    out = np.empty(total + n_seq, dtype=np.uint32)
    cdef cnp.uint32_t[::1] o = out
    cdef cnp.uint32_t eot = <cnp.uint32_t> eot_id
    pos = 0
    cdef Py_ssize_t src = 0
    for i in range(n_seq):
        for j in range(ls[i]):
            o[pos] = f[src]
            pos += 1
            src += 1
        o[pos] = eot
        pos += 1
    return out


def ngram_bucket_ids(ids, order, n_buckets):
    """Hash each length-``order`` window of ``ids`` into ``n_buckets`` buckets."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if n_buckets < 1:
        raise ValueError("n_buckets must be >= 1")
    cdef cnp.int64_t[::1] x = np.ascontiguousarray(ids, dtype=np.int64)
    cdef Py_ssize_t k = order
    cdef Py_ssize_t n = x.shape[0] - k + 1
    if n <= 0:
        return np.empty(0, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    cdef cnp.uint64_t h, buckets = <cnp.uint64_t> n_buckets
    cdef Py_ssize_t i, j
    for i in range(n):
        h = <cnp.uint64_t> x[i]
        for j in range(1, k):
            h = h * NGRAM_HASH_MULT + (<cnp.uint64_t> x[i + j])
        o[i] = <cnp.int64_t> (h % buckets)
    return out
