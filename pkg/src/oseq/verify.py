"""Certification of window properties of periodic sequences.

Works on anything with ``symbols`` and ``k`` attributes.  Window checks compare
sorted rank vectors, so results are deterministic and independent of how the
sequence was built.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .alphabet import encode


class Violation(NamedTuple):
    i: int
    j: int
    transform: str  # "identity", "reverse" or "reverse-negate"


def _sym(s) -> tuple[np.ndarray, int]:
    sym = np.asarray(s.symbols, dtype=np.int64)
    return sym, int(s.k)


def _check_width(k: int, n: int) -> None:
    if n < 1:
        raise ValueError("window length must be positive")
    if k**n >= 2**62:
        raise ValueError("window ranks would not fit in 64 bits")


def window_ranks(s, n: int) -> np.ndarray:
    """Rank of the cyclic n-window starting at each position."""
    sym, k = _sym(s)
    _check_width(k, n)
    out = np.zeros(sym.size, dtype=np.int64)
    for j in range(n):
        out = out * k + np.roll(sym, -j)
    return out


def _transformed_ranks(s, n: int, negate: bool) -> np.ndarray:
    sym, k = _sym(s)
    _check_width(k, n)
    if negate:
        sym = (-sym) % k
    out = np.zeros(sym.size, dtype=np.int64)
    for j in range(n - 1, -1, -1):
        out = out * k + np.roll(sym, -j)
    return out


def windows(s, n: int) -> list[tuple[int, ...]]:
    sym, _ = _sym(s)
    p = sym.size
    return [tuple(int(sym[(i + j) % p]) for j in range(n)) for i in range(p)]


def _first_duplicate(w: np.ndarray) -> Violation | None:
    order = np.argsort(w, kind="stable")
    sw = w[order]
    dup = np.flatnonzero(sw[1:] == sw[:-1])
    if dup.size == 0:
        return None
    pairs = sorted((int(order[d]), int(order[d + 1])) for d in dup)
    i, j = min(pairs, key=lambda ij: (ij[1], ij[0]))
    return Violation(i, j, "identity")


def _first_hit(w: np.ndarray, t: np.ndarray, transform: str) -> Violation | None:
    order = np.argsort(w, kind="stable")
    sw = w[order]
    pos = np.searchsorted(sw, t)
    pos[pos == sw.size] = 0
    hit = np.flatnonzero(sw[pos] == t)
    if hit.size == 0:
        return None
    i = int(hit[0])
    return Violation(i, int(order[pos[i]]), transform)


def find_violation(s, n: int, mode: str) -> Violation | None:
    """First obstruction to ``mode`` ("window", "os" or "nos") at order ``n``.

    Transform collisions are reported before repeated windows, so a palindromic
    or negasymmetric window shows up as ``i == j``.

    For "os", ``(i, j, "reverse")`` means window j equals the reverse of window i;
    for "nos", window j equals the negated reverse of window i.
    """
    if mode not in ("window", "os", "nos"):
        raise ValueError(f"unknown mode {mode!r}")
    w = window_ranks(s, n)
    if mode == "window":
        return _first_duplicate(w)
    if mode == "os":
        v = _first_hit(w, _transformed_ranks(s, n, negate=False), "reverse")
    else:
        v = _first_hit(w, _transformed_ranks(s, n, negate=True), "reverse-negate")
    return v if v is not None else _first_duplicate(w)


def is_n_window_seq(s, n: int) -> bool:
    return find_violation(s, n, "window") is None


def is_orientable(s, n: int) -> bool:
    return find_violation(s, n, "os") is None


def is_negative_orientable(s, n: int) -> bool:
    return find_violation(s, n, "nos") is None


def minimal_period(s) -> int:
    sym, _ = _sym(s)
    p = sym.size
    for d in range(1, p + 1):
        if p % d == 0 and np.array_equal(sym, np.roll(sym, -d)):
            return d
    return p


def window_multiset_equals(s, es, n: int) -> bool:
    """True iff the cyclic n-windows of ``s`` are exactly the edges of ``es``, each once.

    ``es`` is either an edge set exposing ``ranks()`` or an iterable of tuples.
    """
    _, k = _sym(s)
    if hasattr(es, "ranks"):
        if getattr(es, "m", n) != n:
            return False
        expected = np.sort(np.asarray(es.ranks(), dtype=np.int64))
    else:
        expected = np.sort(np.array([encode(t, k) for t in es], dtype=np.int64))
    got = np.sort(window_ranks(s, n))
    return bool(np.array_equal(got, expected))
