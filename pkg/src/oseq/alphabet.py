"""Tuple algebra over Z_k.

Tuples are plain Python tuples of ints.  Ranks are base-k integers with the
first symbol as the most significant digit, so rank order is lexicographic
order.  Pseudoweights are kept doubled (``2 * w*``) so odd ``k`` never yields
half-integers.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

HARD_RANK_LIMIT = 2**31
DEFAULT_MAX_RANK = 2**24


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


def max_rank() -> int:
    """Materialization cap on the number of ranks (``k**m``) of any edge set.

    ``OSEQ_MAX_RANK`` overrides the default; values above ``2**31`` are clamped.
    """
    raw = os.environ.get("OSEQ_MAX_RANK")
    if raw is None:
        return DEFAULT_MAX_RANK
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"OSEQ_MAX_RANK must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("OSEQ_MAX_RANK must be positive")
    return min(cap, HARD_RANK_LIMIT)


def within_cap(k: int, m: int) -> bool:
    return k**m <= max_rank()


def check_cap(k: int, m: int) -> None:
    if not within_cap(k, m):
        raise ValueError(
            f"k^m = {k}^{m} = {k**m} exceeds the materialization cap {max_rank()}"
        )


@dataclass(frozen=True)
class Params:
    k: int
    n: int
    delta: int = field(init=False)

    def __post_init__(self):
        check_params(self.k, self.n)
        object.__setattr__(self, "delta", 1 if self.k % 2 else 2)


def check_params(k: int, n: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 3:
        raise ValueError("k must be ≥ 3")
    if not isinstance(n, (int, np.integer)) or n < 3:
        raise ValueError("n must be ≥ 3")


def delta(k: int) -> int:
    return 1 if k % 2 else 2


def check_tuple(t: Sequence[int], k: int) -> None:
    if len(t) == 0:
        raise ValueError("tuple must be non-empty")
    for s in t:
        if not 0 <= s < k:
            raise ValueError(f"symbol {s} not in Z_{k}")


def symbol_weight2(s: int, k: int) -> int:
    return k if s == 0 else 2 * s


def pseudoweight2(t: Sequence[int], k: int) -> int:
    """Twice the pseudoweight: symbol sum with every zero counted as ``k/2``."""
    return sum(k if s == 0 else 2 * s for s in t)


def negate(t: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple((-s) % k for s in t)


def reverse(t: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(t))


def reverse_negate(t: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple((-s) % k for s in reversed(t))


def is_negasymmetric(t: Sequence[int], k: int) -> bool:
    m = len(t)
    return all((t[i] + t[m - 1 - i]) % k == 0 for i in range((m + 1) // 2))


def rotate(t: Sequence[int], j: int) -> tuple[int, ...]:
    j %= len(t)
    return tuple(t[j:]) + tuple(t[:j])


def encode(t: Sequence[int], k: int) -> int:
    r = 0
    for s in t:
        r = r * k + s
    return r


def decode(r: int, k: int, m: int) -> tuple[int, ...]:
    out = [0] * m
    for i in range(m - 1, -1, -1):
        r, out[i] = divmod(r, k)
    return tuple(out)


# Array forms over rank vectors.  Digit ``i`` of a rank is symbol ``t[i]``.

def digits(ranks: np.ndarray, k: int, m: int) -> np.ndarray:
    """Decode a rank vector into an ``(len(ranks), m)`` symbol matrix."""
    ranks = np.asarray(ranks, dtype=np.int64)
    out = np.empty((ranks.size, m), dtype=np.int64)
    rest = ranks.copy()
    for i in range(m - 1, -1, -1):
        out[:, i] = rest % k
        rest //= k
    return out


def encode_rows(symbols: np.ndarray, k: int) -> np.ndarray:
    symbols = np.asarray(symbols, dtype=np.int64)
    r = np.zeros(symbols.shape[0], dtype=np.int64)
    for i in range(symbols.shape[1]):
        r = r * k + symbols[:, i]
    return r


def pseudoweight2_all(k: int, m: int) -> np.ndarray:
    """Doubled pseudoweight of every m-tuple, indexed by rank."""
    size = k**m
    dtype = np.int16 if 2 * m * k < 2**15 else np.int32
    w = np.zeros(size, dtype=dtype)
    ranks = np.arange(size, dtype=np.int64)
    for _ in range(m):
        d = ranks % k
        w += np.where(d == 0, k, 2 * d).astype(dtype)
        ranks //= k
    return w


def reverse_negate_ranks(ranks: np.ndarray, k: int, m: int) -> np.ndarray:
    ranks = np.asarray(ranks, dtype=np.int64)
    out = np.zeros_like(ranks)
    rest = ranks.copy()
    # the least significant digit of ``rest`` becomes the most significant of ``out``
    for _ in range(m):
        out = out * k + (-(rest % k)) % k
        rest //= k
    return out


def all_tuples(k: int, m: int) -> Iterable[tuple[int, ...]]:
    for r in range(k**m):
        yield decode(r, k, m)
