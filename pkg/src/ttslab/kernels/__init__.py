"""Dynamic-programming kernels with a compiled core and a pure-numpy fallback.

The compiled Cython extension is preferred when it was built; set
``TTSLAB_NO_EXT=1`` to force the fallback (useful for benchmarking and
debugging). ``BACKEND`` reports which implementation is active.
"""

import os

from . import _fallback

if os.environ.get("TTSLAB_NO_EXT"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _core as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

viterbi_path = _impl.viterbi_path
dtw_path = _impl.dtw_path
levenshtein = _impl.levenshtein

__all__ = ["BACKEND", "viterbi_path", "dtw_path", "levenshtein"]
