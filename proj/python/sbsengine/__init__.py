"""Concept importance scoring over word co-occurrence networks."""

try:
    from ._core import (  # noqa: F401
        ConfigError,
        StageError,
        __version__,
        preprocess,
        relative_shares,
        run,
        standardize,
        stem,
        validate_share_grid,
    )
except ImportError:  # build-tree layout: extension sits next to the package on sys.path
    from _core import (  # noqa: F401
        ConfigError,
        StageError,
        __version__,
        preprocess,
        relative_shares,
        run,
        standardize,
        stem,
        validate_share_grid,
    )

__all__ = [
    "ConfigError",
    "StageError",
    "__version__",
    "preprocess",
    "relative_shares",
    "run",
    "standardize",
    "stem",
    "validate_share_grid",
]
