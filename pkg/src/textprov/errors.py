"""Exception types shared across the package."""


class TextprovError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(TextprovError):
    """Unreadable input, malformed records, or an invalid corpus operation."""


class TokenizerError(TextprovError):
    """Invalid vocabulary table or undecodable token ids."""


class ShardError(TextprovError):
    """Shard format violations: bad magic, version or checksum mismatch."""


class ModelError(TextprovError):
    """Invalid model configuration or head mode."""


class TrainError(TextprovError):
    """Training-time contract violations (shard/config mismatch, bad labels)."""


class EndpointError(TextprovError):
    """Chat endpoint failure after all retries."""


class ConfigError(TextprovError):
    """Invalid run configuration."""
