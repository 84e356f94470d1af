"""Kernel backend selection.

The compiled extension ``_ckernels`` is used when it was built; otherwise
the pure-Python versions in ``_pykernels`` are used.  Setting the
environment variable ``RANKCODE_PURE_PYTHON=1`` forces the fallback.
"""

import os

from rankcode import _pykernels

if os.environ.get("RANKCODE_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from rankcode import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

gf2_rank = _impl.gf2_rank
gf2_rref = _impl.gf2_rref
modq_rref = _impl.modq_rref
modq_rank = _impl.modq_rank
gf2m_dot = _impl.gf2m_dot
gf2m_combine = _impl.gf2m_combine
gf2_select_xor = _impl.gf2_select_xor
gf2m_lin_eval = _impl.gf2m_lin_eval

_table_cache: dict = {}


def field_tables(F):
    """Log/exp tables of a binary field in the backend's preferred form, or None."""
    if F.q != 2 or F._log is None:
        return None
    key = (F.m, F.modulus)
    tab = _table_cache.get(key)
    if tab is None:
        tab = _table_cache[key] = _impl.tables(F._exp, F._log)
    return tab


__all__ = [
    "BACKEND",
    "gf2_rank",
    "gf2_rref",
    "modq_rref",
    "modq_rank",
    "gf2m_dot",
    "gf2m_combine",
    "gf2_select_xor",
    "gf2m_lin_eval",
    "field_tables",
]
