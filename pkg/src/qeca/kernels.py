"""Backend selection for the bulk stepping kernels.

The compiled extension is preferred when it was built; the numpy fallback is
always available. Set ``QECA_BACKEND=numpy`` or ``QECA_BACKEND=compiled`` to
force one (forcing ``compiled`` raises if the extension is missing, which
keeps benchmarks honest).
"""

from __future__ import annotations

import os

_requested = os.environ.get("QECA_BACKEND", "").strip().lower()

if _requested == "numpy":
    from . import _kernels_py as _impl
elif _requested == "compiled":
    from . import _kernels_c as _impl  # type: ignore[no-redef]
elif _requested == "":
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl
else:
    raise ValueError(
        f"QECA_BACKEND={_requested!r} not recognized (use 'numpy' or 'compiled')"
    )

BACKEND: str = _impl.BACKEND
rule_outputs = _impl.rule_outputs
check_reversible = _impl.check_reversible
scan_rules = _impl.scan_rules
