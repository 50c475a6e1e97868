"""Backend selection for the polynomial kernels.

The compiled extension is used when it imports; setting the environment
variable ``TORUS_ZETA_PURE=1`` forces the pure-Python fallback.  Both
backends expose identical classes, so the rest of the package never
branches on which one is active.
"""

import os

from . import _pykernels

_compiled = None
if not os.environ.get("TORUS_ZETA_PURE"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_COMPILED_PRIME_LIMIT = 2**31


def prime_arith(p):
    if _compiled is not None and p < _COMPILED_PRIME_LIMIT:
        return _compiled.PrimeArith(p)
    return _pykernels.PrimeArith(p)


def table_arith(p, q, exp_table, log_table, zech_table):
    impl = _compiled if _compiled is not None else _pykernels
    return impl.TableArith(p, q, exp_table, log_table, zech_table)


def generic_arith(eadd, eneg, emul, einv):
    return _pykernels.GenericArith(eadd, eneg, emul, einv)
