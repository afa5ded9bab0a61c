"""textprov: dataset-provenance classification toolkit.

Ingest text corpora, pack them into training shards, train provenance
classifiers (causal transformer, bag-of-words, shallow embedding), run the
evaluation battery, apply text transforms, and estimate pretraining-mixture
proportions from generated sequences.
"""

__version__ = "0.1.0"
