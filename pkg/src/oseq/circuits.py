"""Rotation circuits of the middle weight shell and their classification.

The middle shell is the set of n-tuples with doubled pseudoweight exactly
``k*n``.  Each tuple lies in exactly one rotation class (a circuit); a circuit
is identified by its least rotation, which is also its least rank.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .alphabet import (
    check_cap,
    check_params,
    decode,
    encode,
    is_negasymmetric,
    pseudoweight2_all,
    reverse_negate,
    reverse_negate_ranks,
    rotate,
)


@dataclass(frozen=True)
class Circuit:
    canonical: tuple[int, ...]
    period: int

    @property
    def n(self) -> int:
        return len(self.canonical)

    @cached_property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(rotate(self.canonical, j) for j in range(self.period))

    def __str__(self) -> str:
        sep = "" if max(self.canonical) < 10 else ","
        return "[" + sep.join(map(str, self.canonical)) + "]"


@dataclass(frozen=True)
class CircuitClass:
    circuit: Circuit
    negasymmetric: bool
    nega_window_count: int
    partner_canonical: tuple[int, ...]


def circuit_of(t, k: int) -> Circuit:
    t = tuple(t)
    n = len(t)
    period = next(c for c in range(1, n + 1) if n % c == 0 and rotate(t, c) == t)
    return Circuit(min(rotate(t, j) for j in range(period)), period)


def middle_ranks(k: int, n: int) -> np.ndarray:
    """Sorted ranks of the n-tuples with doubled pseudoweight ``k*n``."""
    check_params(k, n)
    check_cap(k, n)
    return np.flatnonzero(pseudoweight2_all(k, n) == k * n)


def rotation_ranks(ranks: np.ndarray, k: int, n: int) -> np.ndarray:
    """``out[j]`` holds the ranks of every tuple rotated left by ``j``."""
    ranks = np.asarray(ranks, dtype=np.int64)
    high = k ** (n - 1)
    out = np.empty((n, ranks.size), dtype=np.int64)
    out[0] = ranks
    for j in range(1, n):
        prev = out[j - 1]
        out[j] = (prev % high) * k + prev // high
    return out


def canonical_ranks(ranks: np.ndarray, k: int, n: int) -> np.ndarray:
    return rotation_ranks(ranks, k, n).min(axis=0)


def partition_H(k: int, n: int) -> list[Circuit]:
    """Partition the middle shell into rotation circuits, sorted by canonical rank."""
    h = middle_ranks(k, n)
    rot = rotation_ranks(h, k, n)
    canon = rot.min(axis=0)
    # a tuple is canonical iff it is its own least rotation
    heads = np.flatnonzero(canon == h)
    fixed = rot[:, heads] == h[heads]
    fixed[0] = False
    # first j >= 1 with rotation fixing the tuple; rotating by n always does
    periods = np.where(fixed.any(axis=0), fixed.argmax(axis=0), n)
    return [
        Circuit(decode(int(r), k, n), int(p)) for r, p in zip(h[heads], periods)
    ]


def circuit_is_negasymmetric(c: Circuit, k: int) -> bool:
    image = reverse_negate(c.canonical, k)
    return any(rotate(c.canonical, j) == image for j in range(c.n))


def nega_window_count(c: Circuit, k: int) -> int:
    return sum(is_negasymmetric(e, k) for e in c.edges)


def classify(c: Circuit, k: int) -> CircuitClass:
    nega = circuit_is_negasymmetric(c, k)
    partner = c.canonical if nega else circuit_of(reverse_negate(c.canonical, k), k).canonical
    return CircuitClass(c, nega, nega_window_count(c, k), partner)


def classify_all(k: int, n: int) -> list[CircuitClass]:
    return [classify(c, k) for c in partition_H(k, n)]


def n_i_counts_enumerated(k: int, n: int) -> tuple[int, int, int]:
    tally = [0, 0, 0]
    for cc in classify_all(k, n):
        if cc.negasymmetric:
            tally[cc.nega_window_count] += 1
    return tally[0], tally[1], tally[2]


def reverse_complementary_pairs(k: int, n: int) -> list[tuple[Circuit, Circuit]]:
    """Non-negasymmetric circuits paired with their reverse-negated image, smaller first."""
    by_canon = {}
    for cc in classify_all(k, n):
        if not cc.negasymmetric:
            by_canon[cc.circuit.canonical] = cc
    pairs = []
    for canon, cc in by_canon.items():
        if canon < cc.partner_canonical:
            pairs.append((cc.circuit, by_canon[cc.partner_canonical].circuit))
    return pairs


def select_addable_circuits(k: int, n: int) -> list[Circuit]:
    """One circuit from each reverse-complementary pair: the lexicographically smaller."""
    return [a for a, _ in reverse_complementary_pairs(k, n)]


def addable_ranks(k: int, n: int) -> np.ndarray:
    """Sorted ranks of all edges in the selected circuits.

    Array form of :func:`select_addable_circuits`: a middle-shell edge is kept
    iff its circuit's canonical rank is below that of its reverse-negated image.
    Negasymmetric circuits map to themselves and are never kept.
    """
    h = middle_ranks(k, n)
    own = canonical_ranks(h, k, n)
    image = canonical_ranks(reverse_negate_ranks(h, k, n), k, n)
    return h[own < image]


def circuit_ranks(c: Circuit, k: int) -> list[int]:
    return [encode(e, k) for e in c.edges]
