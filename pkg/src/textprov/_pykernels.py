"""Pure (numpy) implementations of the packing/hashing kernels.

These are the fallback used when the compiled extension is unavailable.
Both implementations must agree bit for bit; see tests/test_kernels.py.
"""

from __future__ import annotations

import numpy as np

# Multiplier used to combine token ids into an n-gram hash (fastText's choice).
NGRAM_HASH_MULT = np.uint64(116049371)


def concat_with_eot(flat: np.ndarray, lengths: np.ndarray, eot_id: int) -> np.ndarray:
    """Join token-id sequences into one stream, appending eot after each.

    ``flat`` holds the sequences back to back; ``lengths`` gives their sizes.
    """
    flat = np.ascontiguousarray(flat, dtype=np.uint32)
    lengths = np.ascontiguousarray(lengths, dtype=np.int64)
    n_seq = lengths.shape[0]
    total = int(lengths.sum())
    if flat.shape[0] != total:
        raise ValueError(f"lengths sum to {total} but flat has {flat.shape[0]} ids")
    out = np.empty(total + n_seq, dtype=np.uint32)
    eot_pos = np.cumsum(lengths + 1) - 1
    mask = np.ones(total + n_seq, dtype=bool)
    mask[eot_pos] = False
    out[eot_pos] = np.uint32(eot_id)
    out[mask] = flat
    return out


def ngram_bucket_ids(ids: np.ndarray, order: int, n_buckets: int) -> np.ndarray:
    """Hash each length-``order`` window of ``ids`` into ``n_buckets`` buckets.

    Rolling hash h = ((id0 * M) + id1) * M + ... over uint64 with wraparound.
    Returns an int64 array of length max(len(ids) - order + 1, 0).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if n_buckets < 1:
        raise ValueError("n_buckets must be >= 1")
    ids = np.ascontiguousarray(ids, dtype=np.int64)
    n = ids.shape[0] - order + 1
    if n <= 0:
        return np.empty(0, dtype=np.int64)
    with np.errstate(over="ignore"):
        h = ids[:n].astype(np.uint64)
        for j in range(1, order):
            h = h * NGRAM_HASH_MULT + ids[j : j + n].astype(np.uint64)
    return (h % np.uint64(n_buckets)).astype(np.int64)
