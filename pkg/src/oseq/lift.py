"""The difference map D and the orientable sequences built from its preimage."""
from __future__ import annotations

import math

import numpy as np

from .alphabet import InvariantError, check_cap, check_tuple, digits, encode_rows
from .graph import EdgeSet, NotEulerianError, Sequence, build_X, eulerian_circuit


def lempel_D(t, k: int, beta: int = 1) -> tuple[int, ...]:
    """Consecutive differences ``beta * (t[i+1] - t[i]) mod k``."""
    if len(t) < 2:
        raise ValueError("need a tuple of length at least 2")
    check_tuple(t, k)
    return tuple((beta * (t[i + 1] - t[i])) % k for i in range(len(t) - 1))


def lift_edges(es: EdgeSet, beta: int = 1) -> EdgeSet:
    """All (m+1)-tuples ``a`` with ``D_beta(a)`` in ``es``; exactly ``k * |es|`` of them.

    Each source edge ``b`` yields ``k`` preimages, the partial sums of
    ``beta^-1 * b`` started from each symbol.
    """
    k, m = es.k, es.m
    if math.gcd(beta, k) != 1:
        raise ValueError("beta must be a unit mod k")
    check_cap(k, m + 1)
    inv = pow(beta, -1, k)
    b = digits(es.ranks(), k, m)
    sums = np.zeros((b.shape[0], m + 1), dtype=np.int64)
    np.cumsum(b * inv, axis=1, out=sums[:, 1:])
    occ = np.zeros(k ** (m + 1), dtype=bool)
    for c in range(k):
        occ[encode_rows((sums + c) % k, k)] = True
    lifted = EdgeSet(k, m + 1, occ)
    if lifted.cardinality != k * es.cardinality:
        raise InvariantError("lift lost edges")
    return lifted


def os_from_X(k: int, n: int, check: bool = True) -> Sequence:
    """Orientable sequence of order ``n+1`` and period ``k * |X_k(n-1)|``."""
    from . import verify

    check_cap(k, n + 1)
    lifted = lift_edges(build_X(k, n))
    try:
        seq = eulerian_circuit(lifted)
    except NotEulerianError as exc:
        raise InvariantError(f"lift of X_{k}({n - 1}) is not Eulerian: {exc}") from exc
    if check:
        if not verify.window_multiset_equals(seq, lifted, n + 1):
            raise InvariantError("sequence windows differ from the lifted edge set")
        if not verify.is_orientable(seq, n + 1):
            raise InvariantError("sequence is not orientable")
    return seq
