"""Backend selection for the subset-sampling kernel.

The hot loop of group ranking draws many fixed-size subsets from a group's
h-index multiset and accumulates the h-index of each subset.  Two
interchangeable implementations exist:

* ``_subset_ext`` -- Cython, compiled at install time;
* ``_subset_py``  -- pure Python fallback.

Both follow the same sampling contract bit for bit, so results never depend
on which backend happens to be installed:

* per-sample states are derived from ``(seed, key, j)`` with splitmix64
  mixing, making every sample independent of evaluation order;
* draws use ``u mod m`` bounded reduction and a partial Fisher-Yates pass
  that is un-swapped afterwards, so each sample starts from the identity
  permutation;
* the per-subset h-index is accumulated as an exact integer sum.

Set ``ALPHAINDEX_BACKEND=python`` or ``ALPHAINDEX_BACKEND=ext`` to force a
backend (the default prefers the compiled one).
"""

import os

from . import _subset_py

_FORCED = os.environ.get("ALPHAINDEX_BACKEND")

if _FORCED == "python":
    _impl = _subset_py
elif _FORCED == "ext":
    from . import _subset_ext as _impl
else:
    try:
        from . import _subset_ext as _impl
    except ImportError:
        _impl = _subset_py

subset_hindex_sum = _impl.subset_hindex_sum


def backend_name() -> str:
    """Name of the active kernel backend: ``"ext"`` or ``"python"``."""
    return "python" if _impl is _subset_py else "ext"
