"""Backend selector for the integer kernels.

Prefers the compiled extension when it is importable, falls back to the
pure-Python twin otherwise.  Set STRESSMATROID_PURE=1 to force the fallback
(used by the parity tests and the benchmark).
"""

import os

if os.environ.get("STRESSMATROID_PURE"):
    from . import _exactla_py as _impl
else:
    try:
        from . import _exactla as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _exactla_py as _impl

BACKEND = "compiled" if _impl.__name__.endswith("._exactla") else "pure"

det_int = _impl.det_int
rank_int = _impl.rank_int
nullvector_minors = _impl.nullvector_minors
sign_circuits = _impl.sign_circuits
