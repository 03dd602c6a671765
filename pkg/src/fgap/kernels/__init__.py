"""Kernel backend selection.

Prefers the compiled extension (_ck) when it imported cleanly; falls back to
the pure-Python twin.  Set FGAP_PURE=1 to force the fallback (used by the
parity tests and the benchmark).
"""

import os

from . import _pure

if os.environ.get("FGAP_PURE"):
    _impl = _pure
else:
    try:
        from . import _ck as _impl
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND

normalize = _impl.normalize
int_content = _impl.int_content
poly_mul = _impl.poly_mul
pseudo_rem = _impl.pseudo_rem
eval_qnum = _impl.eval_qnum
sign_variations = _impl.sign_variations
sturm_chain = _impl.sturm_chain
varcount_at = _impl.varcount_at
varcount_inf = _impl.varcount_inf
resultant = _impl.resultant
