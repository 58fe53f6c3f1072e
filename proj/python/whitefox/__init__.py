"""Exact algebra for cyclic-by-infinite group rings.

Thin convenience layer over the compiled module: JSON-string interfaces are
decoded into dicts/lists, everything else passes through unchanged.
"""

import json as _json

from _whitefox import (  # noqa: F401
    WhitefoxError,
    __version__,
    canonical,
    check_cinf_squared,
    ext3_class,
    fox_derivative,
    invert_unit,
    is_cocycle,
    is_unit,
    toolchain,
    unit_multiplier,
)
import _whitefox as _core


def _loads(text):
    return _json.loads(text)


def matrix(ring, entries):
    """Build the matrix JSON document used by all matrix-valued operations.

    `ring` is one of: {"type": "laurent", "coeff": "Zn", "mod": 4},
    {"type": "group_ring", "n": 5}, {"type": "norm_quotient", "n": 5}.
    """
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    return {"ring": ring, "rows": rows, "cols": cols, "entries": entries}


def zn_laurent(n):
    return {"type": "laurent", "coeff": "Zn", "mod": n}


def fp_laurent(p):
    return {"type": "laurent", "coeff": "Fp", "mod": p}


def factor_det_one(mat, n):
    return _loads(_core.factor_det_one(_json.dumps(mat), n))


def snf(mat):
    return _loads(_core.snf(_json.dumps(mat)))


def reduce_to_alpha_block(mat, alpha, n):
    return _loads(_core.reduce_to_alpha_block(_json.dumps(mat), alpha, n))


def decide_scalar_stable_equiv(alpha, mat, n):
    return _loads(_core.decide_scalar_stable_equiv(alpha, _json.dumps(mat), n))


def build_m_module(mat):
    return _loads(_core.build_m_module(_json.dumps(mat)))


def build_swan_module(n, mat):
    return _loads(_core.build_swan_module(n, _json.dumps(mat)))


def verify_swan_freeness(n, a_mat, d_mat):
    return _core.verify_swan_freeness(n, _json.dumps(a_mat), _json.dumps(d_mat))


def build_complex(presentation):
    return _loads(_core.build_complex(presentation))


def verify_complex(complex_doc):
    return _core.verify_complex(_json.dumps(complex_doc))


def realize_unit(n, w):
    return _loads(_core.realize_unit(n, w))


def max_ideal_candidates(n):
    return _loads(_core.max_ideal_candidates(n))


def verify_certificate(cert):
    if not isinstance(cert, str):
        cert = _json.dumps(cert)
    return _core.verify_certificate(cert)
