from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from textprov.synthetic import generate_synthetic_corpus, separable_specs
from textprov.tokenizer import WordTokenizer


@pytest.fixture(scope="session")
def separable3():
    """Three disjoint-vocabulary domains: train/test corpora plus their specs."""
    specs = separable_specs(3, seed=7)
    train = [generate_synthetic_corpus(s, 400) for s in specs]
    from dataclasses import replace

    test = [generate_synthetic_corpus(replace(s, seed=s.seed + 500), 120) for s in specs]
    return specs, train, test


@pytest.fixture(scope="session")
def desk_tokenizer(separable3):
    specs, _, _ = separable3
    words = [w for s in specs for w in s.words] + [".", "•"]
    return WordTokenizer.desk(words)
