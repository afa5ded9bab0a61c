"""Corpora: labeled text sequences plus loading, sampling, and length stats."""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Iterator

import numpy as np

from textprov.errors import CorpusError

if TYPE_CHECKING:
    from textprov.tokenizer import WordTokenizer

log = logging.getLogger(__name__)

# Sentinel label for corpora that carry no provenance claim (e.g. LM output).
UNLABELED = -1

FORMATS = ("jsonl-text-field", "one-doc-per-file", "plain-lines")


@dataclass(frozen=True)
class TextSequence:
    text: str
    label: int
    source_id: str = ""


@dataclass
class Corpus:
    name: str
    sequences: list[TextSequence] = field(default_factory=list)
    skipped: int = 0  # empty or malformed records dropped at load time

    @property
    def manifest(self) -> dict[int, int]:
        """Counts per label; computed, so it cannot drift from the contents."""
        return dict(Counter(s.label for s in self.sequences))

    def __len__(self) -> int:
        return len(self.sequences)

    def __iter__(self) -> Iterator[TextSequence]:
        return iter(self.sequences)

    def texts(self) -> list[str]:
        return [s.text for s in self.sequences]

    def labels(self) -> np.ndarray:
        return np.array([s.label for s in self.sequences], dtype=np.int64)


class LabelRegistry:
    """Stable name <-> small-integer mapping for dataset labels."""

    def __init__(self, names: Iterable[str] = ()):
        self._names: list[str] = []
        self._ids: dict[str, int] = {}
        for n in names:
            self.register(n)

    def register(self, name: str) -> int:
        if name in self._ids:
            return self._ids[name]
        label = len(self._names)
        self._names.append(name)
        self._ids[name] = label
        return label

    def id_of(self, name: str) -> int:
        try:
            return self._ids[name]
        except KeyError:
            raise CorpusError(f"label not registered: {name!r}") from None

    def name_of(self, label: int) -> str:
        if 0 <= label < len(self._names):
            return self._names[label]
        if label == UNLABELED:
            return "<unlabeled>"
        raise CorpusError(f"label id not registered: {label}")

    def names(self) -> list[str]:
        return list(self._names)

    def __len__(self) -> int:
        return len(self._names)


def load_corpus(path: str | Path, format: str, label: int, name: str | None = None) -> Corpus:
    """Load a corpus from disk; every non-empty document becomes one sequence.

    Empty documents are skipped and counted; malformed jsonl records are
    logged with their line number and counted, and the load continues.
    """
    path = Path(path)
    if format not in FORMATS:
        raise CorpusError(f"unknown format {format!r}; expected one of {FORMATS}")
    if not path.exists():
        raise CorpusError(f"no such path: {path}")
    corpus = Corpus(name=name or path.stem)

    def add(text: str, source_id: str) -> None:
        if text.strip():
            corpus.sequences.append(TextSequence(text=text, label=label, source_id=source_id))
        else:
            corpus.skipped += 1

    if format == "jsonl-text-field":
        with path.open(encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    text = record["text"]
                    if not isinstance(text, str):
                        raise TypeError("'text' is not a string")
                except (json.JSONDecodeError, KeyError, TypeError) as e:
                    log.warning("%s:%d: skipping malformed record (%s)", path, lineno, e)
                    corpus.skipped += 1
                    continue
                add(text, source_id=f"{path.name}:{lineno}")
    elif format == "one-doc-per-file":
        if not path.is_dir():
            raise CorpusError(f"one-doc-per-file expects a directory: {path}")
        for p in sorted(path.iterdir()):
            if p.is_file():
                try:
                    add(p.read_text(encoding="utf-8"), source_id=p.name)
                except (OSError, UnicodeDecodeError) as e:
                    log.warning("%s: skipping unreadable file (%s)", p, e)
                    corpus.skipped += 1
    else:  # plain-lines
        with path.open(encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                add(line.rstrip("\n"), source_id=f"{path.name}:{lineno}")
    return corpus


def save_corpus_jsonl(corpus: Corpus, path: str | Path, metadata: dict | None = None) -> None:
    """Write one {"text": ...} record per line; optional sidecar metadata file."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as f:
        for seq in corpus.sequences:
            record = {"text": seq.text}
            if seq.source_id:
                record["source_id"] = seq.source_id
            f.write(json.dumps(record, ensure_ascii=False) + "\n")
    if metadata is not None:
        meta_path = path.with_suffix(path.suffix + ".meta.json")
        meta_path.write_text(json.dumps(metadata, indent=2, sort_keys=True) + "\n")


def sample_sequences(corpus: Corpus, n: int, seed: int) -> Corpus:
    """Uniform sample without replacement; pure function of (corpus, n, seed)."""
    if n > len(corpus):
        raise CorpusError(f"cannot sample {n} from corpus of size {len(corpus)}")
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(corpus), size=n, replace=False)
    return Corpus(
        name=f"{corpus.name}[sample:{n}:{seed}]",
        sequences=[corpus.sequences[i] for i in idx],
    )


@dataclass(frozen=True)
class LengthStats:
    mean: float
    std_dev: float
    mode: int
    median: float
    range: int
    min: int
    max: int
    n_samples: int


def compute_length_stats(corpus: Corpus, tokenizer: "WordTokenizer") -> LengthStats:
    """Token-length statistics; population std; mode ties go to the smaller length."""
    if len(corpus) == 0:
        raise CorpusError("cannot compute length stats of an empty corpus")
    lengths = np.array([len(tokenizer.encode(s.text)) for s in corpus.sequences], dtype=np.int64)
    values, counts = np.unique(lengths, return_counts=True)
    mode = int(values[np.argmax(counts)])  # np.argmax takes the first max: smaller length wins
    return LengthStats(
        mean=float(lengths.mean()),
        std_dev=float(lengths.std()),  # population form (divide by n)
        mode=mode,
        median=float(np.median(lengths)),
        range=int(lengths.max() - lengths.min()),
        min=int(lengths.min()),
        max=int(lengths.max()),
        n_samples=len(lengths),
    )


@dataclass(frozen=True)
class LengthHistogram:
    bucket_width: int
    cap: int
    counts: dict[int, int]  # bucket k covers [k*width, (k+1)*width)
    omitted: int  # lengths strictly above cap
    n_samples: int


def emit_histogram(
    corpus: Corpus, tokenizer: "WordTokenizer", bucket_width: int, cap: int
) -> LengthHistogram:
    if bucket_width <= 0:
        raise CorpusError("bucket_width must be positive")
    counts: Counter[int] = Counter()
    omitted = 0
    for seq in corpus.sequences:
        n = len(tokenizer.encode(seq.text))
        if n > cap:
            omitted += 1
        else:
            counts[n // bucket_width] += 1
    return LengthHistogram(
        bucket_width=bucket_width,
        cap=cap,
        counts=dict(sorted(counts.items())),
        omitted=omitted,
        n_samples=len(corpus),
    )


def stats_table(rows: dict[str, LengthStats]) -> str:
    """Plain-text table with the reference columns."""
    header = f"{'Dataset':<20} {'Mean':>8} {'St. Deviation':>14} {'Mode':>6} {'Median':>8} {'Range':>8}"
    lines = [header, "-" * len(header)]
    for name, s in rows.items():
        lines.append(
            f"{name:<20} {s.mean:>8.1f} {s.std_dev:>14.1f} {s.mode:>6d} {s.median:>8.1f} {s.range:>8d}"
        )
    return "\n".join(lines)


def histogram_table(hist: LengthHistogram, width: int = 50) -> str:
    """ASCII bar rendering of a length histogram."""
    if not hist.counts:
        return "(empty histogram)"
    peak = max(hist.counts.values())
    lines = []
    for k, c in hist.counts.items():
        bar = "#" * max(1, round(width * c / peak))
        lo, hi = k * hist.bucket_width, (k + 1) * hist.bucket_width
        lines.append(f"[{lo:>6d},{hi:>6d}) {c:>8d} {bar}")
    lines.append(f"omitted (> {hist.cap}): {hist.omitted}")
    return "\n".join(lines)
