"""Kernel selection: compiled extension if built, pure Python otherwise.

Set ``INVLAT_FORCE_PYTHON=1`` to skip the compiled module even when it is
available (useful for benchmarking and for exercising the fallback).
"""

import os

HAVE_COMPILED = False

if not os.environ.get("INVLAT_FORCE_PYTHON"):
    try:
        from invlat._kernels import (  # type: ignore[attr-defined]
            IMPLEMENTATION,
            chromatic_coeffs,
            ryser_permanent,
        )

        HAVE_COMPILED = True
    except ImportError:  # pragma: no cover - depends on the build
        pass

if not HAVE_COMPILED:
    from invlat._kernels_py import (  # noqa: F811
        IMPLEMENTATION,
        chromatic_coeffs,
        ryser_permanent,
    )

__all__ = [
    "HAVE_COMPILED",
    "IMPLEMENTATION",
    "chromatic_coeffs",
    "ryser_permanent",
]
