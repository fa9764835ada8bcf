"""Echelons of power series: exact division, standard-basis enlargement, and
the Gabrielov counterexample.

Thin JSON-based convenience layer over the C++ core. All rationals are exact
strings ("1/12"), exponents are lists of non-negative integers in variable
order, and every function accepts/returns plain Python dicts mirroring the
documented JSON wire formats.
"""

import json as _json

try:
    from . import _core
except ImportError:  # plain cmake build puts _core next to us, not inside
    import _core  # type: ignore

__all__ = [
    "divide",
    "enlarge",
    "member",
    "relations",
    "gabrielov_echelon",
    "gabrielov_gk",
    "gabrielov_q",
    "gabrielov_e",
]


def divide(echelon, series):
    return _json.loads(_core.divide(_json.dumps(echelon), _json.dumps(series)))


def enlarge(echelon, target, reduce=False, max_rounds=10000):
    return _json.loads(
        _core.enlarge(_json.dumps(echelon), _json.dumps(target), reduce, max_rounds)
    )


def member(echelon, series, degree, oracle=False, max_rounds=10000):
    return _json.loads(
        _core.member(_json.dumps(echelon), _json.dumps(series), degree, oracle, max_rounds)
    )


def relations(echelon, degree):
    return _json.loads(_core.relations(_json.dumps(echelon), degree))


def gabrielov_echelon(prec):
    return _json.loads(_core.gabrielov_echelon(prec))


def gabrielov_gk(k, prec, algorithmic=False):
    return _json.loads(_core.gabrielov_gk(k, prec, algorithmic))


def gabrielov_q(i, k):
    return _core.gabrielov_q(i, k)


def gabrielov_e(kmax, prec, original=False):
    return _json.loads(_core.gabrielov_e(kmax, prec, original))
