"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive and kept independent of the package's
implementation paths: plain Counter loops, no numpy vectorization tricks, no
shared helpers with src/.
"""

from __future__ import annotations

import math
from collections import Counter


def brute_force_length_stats(lengths):
    """One-pass recomputation of mean/std/mode/median/range (population std,
    mode ties to the smaller value)."""
    n = len(lengths)
    mean = sum(lengths) / n
    var = sum((x - mean) ** 2 for x in lengths) / n
    counts = Counter(lengths)
    best = max(counts.values())
    mode = min(x for x, c in counts.items() if c == best)
    s = sorted(lengths)
    median = s[n // 2] if n % 2 else (s[n // 2 - 1] + s[n // 2]) / 2
    return {
        "mean": mean,
        "std_dev": math.sqrt(var),
        "mode": mode,
        "median": median,
        "range": max(lengths) - min(lengths),
    }


class UnigramBayes:
    """Naive Bayes over word frequencies, fit by counting. Used as the
    separable-domain accuracy oracle and as the near-perfect classifier for
    mixture estimation."""

    def __init__(self, alpha: float = 0.1):
        self.alpha = alpha
        self.counts: list[Counter] = []
        self.totals: list[int] = []
        self.vocab: set[str] = set()
        self.n_classes = 0

    def fit(self, texts_by_class: list[list[str]]):
        self.n_classes = len(texts_by_class)
        self.counts = [Counter() for _ in texts_by_class]
        self.totals = [0] * len(texts_by_class)
        for k, texts in enumerate(texts_by_class):
            for t in texts:
                words = t.split()
                self.counts[k].update(words)
                self.totals[k] += len(words)
                self.vocab.update(words)
        return self

    def _log_prob(self, k: int, word: str) -> float:
        num = self.counts[k][word] + self.alpha
        den = self.totals[k] + self.alpha * len(self.vocab)
        return math.log(num / den)

    def predict_one(self, text: str) -> int:
        scores = [
            sum(self._log_prob(k, w) for w in text.split() if w in self.vocab)
            for k in range(self.n_classes)
        ]
        return max(range(self.n_classes), key=lambda k: scores[k])

    def predict(self, texts) -> list[int]:
        return [self.predict_one(t) for t in texts]


def accuracy(predictions, labels) -> float:
    hits = sum(1 for p, y in zip(predictions, labels) if p == y)
    return hits / len(labels)
