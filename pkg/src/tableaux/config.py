"""Size limits for the exhaustive enumerations.

Everything in this package is verified by exhaustion over n! words or over
all tableaux with n boxes, so every enumeration entry point carries a cap.
Limits can be raised per call (``limit=``), or process-wide through the
``TABLEAUX_LIMIT_N`` environment variable, but never past ``HARD_CEILING``:
9! = 362880 words is the edge of desk scale, and the Duflo poset is refused
above n = 8 because its construction keeps a reachability bitset per word.
"""

import os

from .errors import LimitError

ENV_LIMIT = "TABLEAUX_LIMIT_N"

HARD_CEILING = 9
WORD_ENUM_DEFAULT = 8
TABLEAU_ENUM_DEFAULT = 8
CELL_DEFAULT = 7
DUFLO_DEFAULT = 7
DUFLO_CEILING = 8
CHAIN_DEFAULT = 8


def effective_limit(limit: int | None, default: int, ceiling: int = HARD_CEILING) -> int:
    """Resolve a size cap from the explicit argument, the environment, or the default."""
    if limit is None:
        env = os.environ.get(ENV_LIMIT)
        if env is not None:
            try:
                limit = int(env)
            except ValueError:
                raise LimitError(f"{ENV_LIMIT} must be an integer, got {env!r}") from None
        else:
            limit = default
    return min(limit, ceiling)


def check_limit(n: int, what: str, limit: int | None, default: int,
                ceiling: int = HARD_CEILING) -> None:
    """Raise LimitError when ``n`` exceeds the resolved cap for ``what``."""
    cap = effective_limit(limit, default, ceiling)
    if n > cap:
        raise LimitError(f"{what} at n={n} exceeds the limit {cap}")
    if n < 0:
        raise LimitError(f"{what} needs n >= 0, got {n}")
