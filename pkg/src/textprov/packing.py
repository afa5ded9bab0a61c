"""Tokenize-and-pack pipeline and the bit-exact shard file format.

Training rows are non-overlapping blocks of ``context_length + 1`` token ids
cut from an eot-joined stream of same-label sequences. LM pretraining reads
inputs = row[:-1], targets = row[1:]; classification reads inputs = row[:-1]
with the row's label at every position.

Shard wire format (little-endian):

    magic   4 bytes  b"TPSH"
    version u16
    context_length u32
    vocab_size u32
    label u16
    row_count u32
    payload row_count * (context_length + 1) u32 token ids
    checksum u64  (blake2b-64 of all preceding bytes)
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from textprov import kernels
from textprov.errors import ShardError

MAGIC = b"TPSH"
VERSION = 1
ROWS_PER_SHARD = 8192
_HEADER = struct.Struct("<4sHIIHI")


class PackedRow(NamedTuple):
    tokens: np.ndarray  # length context_length + 1
    label: int


@dataclass
class PackResult:
    rows: np.ndarray  # (n_rows, context_length + 1) uint32
    dropped: int  # trailing tokens that did not fill a full row
    label: int


def pack_stream(
    sequences: Iterable[Sequence[int] | np.ndarray],
    context_length: int,
    eot_id: int,
    *,
    label: int,
    vocab_size: int | None = None,
) -> PackResult:
    """Concatenate same-label token streams (eot after each) and cut rows."""
    arrays = [np.asarray(s, dtype=np.uint32) for s in sequences]
    lengths = np.array([a.shape[0] for a in arrays], dtype=np.int64)
    flat = np.concatenate(arrays) if arrays else np.empty(0, dtype=np.uint32)
    if vocab_size is not None:
        if flat.size and int(flat.max()) >= vocab_size:
            raise ShardError(f"token id {int(flat.max())} out of range (vocab {vocab_size})")
        if eot_id >= vocab_size:
            raise ShardError(f"eot id {eot_id} out of range (vocab {vocab_size})")
    stream = kernels.concat_with_eot(flat, lengths, eot_id)
    row_len = context_length + 1
    n_rows = stream.shape[0] // row_len
    dropped = int(stream.shape[0] - n_rows * row_len)
    rows = stream[: n_rows * row_len].reshape(n_rows, row_len).copy()
    return PackResult(rows=rows, dropped=dropped, label=label)


@dataclass
class Shard:
    rows: np.ndarray  # (row_count, context_length + 1) uint32
    context_length: int
    vocab_size: int
    label: int
    version: int = VERSION
    checksum: int = 0

    @property
    def row_count(self) -> int:
        return int(self.rows.shape[0])

    @property
    def partial(self) -> bool:
        return self.row_count != ROWS_PER_SHARD

    def iter_rows(self) -> Iterator[PackedRow]:
        for r in self.rows:
            yield PackedRow(tokens=r, label=self.label)


def _digest(data: bytes) -> int:
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "little")


def write_shard(
    rows: np.ndarray,
    path: str | Path,
    *,
    context_length: int,
    vocab_size: int,
    label: int,
) -> int:
    """Write one shard file; returns its checksum. Partial shards (fewer than
    ROWS_PER_SHARD rows) are permitted; the header's row count flags them."""
    rows = np.ascontiguousarray(rows, dtype=np.uint32)
    if rows.ndim != 2 or rows.shape[1] != context_length + 1:
        raise ShardError(f"rows must be (n, {context_length + 1}), got {rows.shape}")
    if rows.shape[0] == 0 or rows.shape[0] > ROWS_PER_SHARD:
        raise ShardError(f"row count must be in [1, {ROWS_PER_SHARD}], got {rows.shape[0]}")
    if rows.size and int(rows.max()) >= vocab_size:
        raise ShardError(f"token id {int(rows.max())} out of range (vocab {vocab_size})")
    if not 0 <= label < 2**16:
        raise ShardError(f"label must fit in u16, got {label}")
    header = _HEADER.pack(MAGIC, VERSION, context_length, vocab_size, label, rows.shape[0])
    payload = rows.astype("<u4").tobytes()
    checksum = _digest(header + payload)
    with Path(path).open("wb") as f:
        f.write(header)
        f.write(payload)
        f.write(struct.pack("<Q", checksum))
    return checksum


def read_shard(path: str | Path) -> Shard:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size + 8:
        raise ShardError(f"{path}: file too short to be a shard")
    magic, version, context_length, vocab_size, label, row_count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ShardError(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise ShardError(f"{path}: version mismatch (file {version}, reader {VERSION})")
    row_len = context_length + 1
    expected = _HEADER.size + row_count * row_len * 4 + 8
    if len(data) != expected:
        raise ShardError(f"{path}: size {len(data)} does not match header (expected {expected})")
    (stored,) = struct.unpack_from("<Q", data, len(data) - 8)
    actual = _digest(data[:-8])
    if stored != actual:
        raise ShardError(f"{path}: checksum mismatch")
    rows = (
        np.frombuffer(data, dtype="<u4", count=row_count * row_len, offset=_HEADER.size)
        .reshape(row_count, row_len)
        .copy()
    )
    return Shard(
        rows=rows,
        context_length=context_length,
        vocab_size=vocab_size,
        label=label,
        version=version,
        checksum=stored,
    )


def write_shard_files(
    pack: PackResult,
    out_dir: str | Path,
    *,
    base_name: str,
    context_length: int,
    vocab_size: int,
) -> list[Path]:
    """Split packed rows into full shards plus one trailing partial shard."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, start in enumerate(range(0, pack.rows.shape[0], ROWS_PER_SHARD)):
        chunk = pack.rows[start : start + ROWS_PER_SHARD]
        path = out_dir / f"{base_name}-{i:05d}.shard"
        write_shard(
            chunk,
            path,
            context_length=context_length,
            vocab_size=vocab_size,
            label=pack.label,
        )
        paths.append(path)
    return paths


def prepare_test_sequence(tokenizer, text: str, context_length: int) -> list[int]:
    """Encode and truncate to the context length; no concatenation, no eot."""
    if not text.strip():
        raise ShardError("cannot prepare an empty test sequence")
    return tokenizer.encode(text)[:context_length]
