"""Kernel dispatch: compiled extension when built, pure fallback otherwise.

Set TEXTPROV_NO_EXT=1 to force the fallback (used by the parity tests and
the kernel benchmark).
"""

from __future__ import annotations

import os

from textprov import _pykernels

if os.environ.get("TEXTPROV_NO_EXT"):
    _impl = _pykernels
    HAVE_EXT = False
else:
    try:
        from textprov import _ckernels as _impl  # type: ignore[no-redef]

        HAVE_EXT = True
    except ImportError:
        _impl = _pykernels
        HAVE_EXT = False

concat_with_eot = _impl.concat_with_eot
ngram_bucket_ids = _impl.ngram_bucket_ids

__all__ = ["HAVE_EXT", "concat_with_eot", "ngram_bucket_ids"]
