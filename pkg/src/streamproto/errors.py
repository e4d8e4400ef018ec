"""Exception types shared across the package."""


class StreamProtoError(Exception):
    """Base class for all streamproto errors."""


class ParameterError(StreamProtoError):
    """An argument or spec field violates its constraints."""


class ConfigError(StreamProtoError):
    """Config file failed validation; message carries the key path."""


class IngestError(StreamProtoError):
    """A stream file record could not be parsed or is inconsistent."""


class DegeneracyError(StreamProtoError):
    """Numerically degenerate input (rank-deficient seeds, zero weights)."""


class ScoreError(StreamProtoError):
    """An embedding cannot be scored (zero norm)."""


class UpsertError(StreamProtoError):
    """An index upsert batch was rejected; index state is unchanged."""


class InternalStateError(StreamProtoError):
    """An invariant that must be unreachable was violated."""


class EvalError(StreamProtoError):
    """A metric or statistical test received degenerate input."""
