"""Small shared helpers: normalization, seeded RNG streams, logging."""

from __future__ import annotations

import logging
import os

import numpy as np

from .errors import ScoreError

# Named substreams derived from one run seed. The fixed ordering is part of
# the determinism contract: the same seed must yield the same run bit-for-bit.
_STREAM_KEYS = ("stream", "init", "hh", "query", "misc")


def unit(v: np.ndarray) -> np.ndarray:
    """Return v / ||v||, raising ScoreError on zero norm."""
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise ScoreError("zero-norm vector cannot be normalized")
    return v / n


def unit_rows(m: np.ndarray) -> np.ndarray:
    """Row-normalize a 2-D array in place-safe fashion (zero rows rejected)."""
    norms = np.linalg.norm(m, axis=1)
    if np.any(norms == 0.0):
        raise ScoreError("zero-norm row cannot be normalized")
    return m / norms[:, None]


def spawn_rngs(seed: int) -> dict[str, np.random.Generator]:
    """Derive the named per-subsystem RNG streams from one seed."""
    root = np.random.SeedSequence(seed)
    children = root.spawn(len(_STREAM_KEYS))
    return {k: np.random.default_rng(s) for k, s in zip(_STREAM_KEYS, children)}


def get_logger(name: str) -> logging.Logger:
    """Package logger; level comes from the STREAMPROTO_LOG env var."""
    logger = logging.getLogger(name)
    level = os.environ.get("STREAMPROTO_LOG", "").upper()
    if level and logger.level == logging.NOTSET:
        logger.setLevel(getattr(logging, level, logging.WARNING))
    return logger
