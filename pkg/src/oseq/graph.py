"""Edge sets of B_k(m-1), Eulerian circuits, and the negative orientable construction.

An edge is an m-tuple, identified by its rank.  Edge ``r`` runs from vertex
``r // k`` to vertex ``r % k**(m-1)``, so the out-edges of vertex ``v`` are
``v*k + c`` for ``c`` in ``range(k)``.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .alphabet import (
    InvariantError,
    Params,
    check_cap,
    decode,
    encode,
    pseudoweight2_all,
)
from .circuits import addable_ranks


class NotEulerianError(ValueError):
    pass


class EmptyEdgeSetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class EdgeSet:
    """Occupancy over all ``k**m`` edge ranks of B_k(m-1)."""

    k: int
    m: int
    occupancy: np.ndarray = field(repr=False)
    cardinality: int = field(init=False)

    def __post_init__(self):
        occ = np.asarray(self.occupancy, dtype=bool)
        if occ.shape != (self.k**self.m,):
            raise ValueError("occupancy must cover every rank exactly once")
        occ.setflags(write=False)
        object.__setattr__(self, "occupancy", occ)
        object.__setattr__(self, "cardinality", int(np.count_nonzero(occ)))

    @classmethod
    def from_ranks(cls, k: int, m: int, ranks: Iterable[int]) -> "EdgeSet":
        check_cap(k, m)
        occ = np.zeros(k**m, dtype=bool)
        occ[np.fromiter(ranks, dtype=np.int64)] = True
        return cls(k, m, occ)

    @classmethod
    def from_tuples(cls, k: int, tuples: Iterable[tuple[int, ...]]) -> "EdgeSet":
        tuples = [tuple(t) for t in tuples]
        if not tuples:
            raise ValueError("cannot infer tuple length from an empty collection")
        m = len(tuples[0])
        return cls.from_ranks(k, m, (encode(t, k) for t in tuples))

    def __len__(self) -> int:
        return self.cardinality

    def __contains__(self, item) -> bool:
        r = item if isinstance(item, (int, np.integer)) else encode(item, self.k)
        return 0 <= r < self.occupancy.size and bool(self.occupancy[r])

    def ranks(self) -> np.ndarray:
        return np.flatnonzero(self.occupancy)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranks().tolist())

    def tuples(self) -> list[tuple[int, ...]]:
        return [decode(r, self.k, self.m) for r in self]

    def union(self, other: "EdgeSet") -> "EdgeSet":
        if (self.k, self.m) != (other.k, other.m):
            raise ValueError("edge sets live in different graphs")
        return EdgeSet(self.k, self.m, self.occupancy | other.occupancy)


@dataclass(frozen=True, eq=False)
class Sequence:
    """One period of a periodic k-ary sequence."""

    symbols: np.ndarray = field(repr=False)
    k: int
    order: int
    claimed_period: int = field(init=False)

    def __post_init__(self):
        sym = np.asarray(self.symbols, dtype=np.uint8 if self.k <= 256 else np.int64)
        if sym.ndim != 1 or sym.size == 0:
            raise ValueError("a sequence needs at least one symbol")
        if sym.min() < 0 or sym.max() >= self.k:
            raise ValueError(f"symbols must lie in Z_{self.k}")
        sym.setflags(write=False)
        object.__setattr__(self, "symbols", sym)
        object.__setattr__(self, "claimed_period", int(sym.size))

    def __len__(self) -> int:
        return self.claimed_period

    def to_text(self) -> str:
        if self.k <= 10:
            return "".join(map(str, self.symbols.tolist()))
        return ",".join(map(str, self.symbols.tolist()))


def build_E(k: int, n: int) -> EdgeSet:
    """Edges of B_k(n-1) with pseudoweight below ``k*n/2``."""
    Params(k, n)
    check_cap(k, n)
    return EdgeSet(k, n, pseudoweight2_all(k, n) < k * n)


def build_X(k: int, n: int) -> EdgeSet:
    """E_k(n-1) enlarged by one circuit from each reverse-complementary pair."""
    e = build_E(k, n)
    occ = e.occupancy.copy()
    occ[addable_ranks(k, n)] = True
    return EdgeSet(k, n, occ)


def degrees(es: EdgeSet) -> tuple[np.ndarray, np.ndarray]:
    """``(out_degree, in_degree)`` of every vertex, indexed by vertex rank."""
    nv = es.k ** (es.m - 1)
    occ = es.occupancy.astype(np.int32)
    out_deg = occ.reshape(nv, es.k).sum(axis=1)
    in_deg = occ.reshape(es.k, nv).sum(axis=0)
    return out_deg, in_deg


def check_balanced(es: EdgeSet) -> bool:
    out_deg, in_deg = degrees(es)
    return bool(np.array_equal(out_deg, in_deg))


def check_connected(es: EdgeSet) -> bool:
    """True iff the vertices touched by ``es`` form one weakly connected component."""
    if es.cardinality == 0:
        return False
    nv = es.k ** (es.m - 1)
    r = es.ranks()
    src, dst = r // es.k, r % nv
    g = coo_matrix((np.ones(r.size, dtype=np.int8), (src, dst)), shape=(nv, nv))
    _, labels = connected_components(g, directed=True, connection="weak")
    touched = np.union1d(src, dst)
    return bool(np.unique(labels[touched]).size == 1)


def eulerian_circuit(es: EdgeSet, order: int | None = None) -> Sequence:
    """Sequence whose cyclic m-windows are exactly the edges of ``es``, each once.

    Iterative circuit merging; out-edges are taken in increasing final symbol
    from the least-rank vertex with an out-edge.  The result is rotated to its
    least rotation, which starts at the least edge because windows are distinct.
    """
    if es.cardinality == 0:
        raise EmptyEdgeSetError("edge set is empty")
    if not check_balanced(es):
        raise NotEulerianError("some vertex has in-degree != out-degree")
    if not check_connected(es):
        raise NotEulerianError("edge set is not connected")
    k = es.k
    nv = k ** (es.m - 1)
    occ = es.occupancy.tobytes()
    nxt = bytearray(nv) if k < 256 else [0] * nv
    first = int(es.ranks()[0])
    start = first // k

    stack = array("q", [start])
    path = array("q")
    push, pop, emit = stack.append, stack.pop, path.append
    while stack:
        v = stack[-1]
        c = nxt[v]
        base = v * k
        while c < k and not occ[base + c]:
            c += 1
        if c < k:
            nxt[v] = c + 1
            push((base + c) % nv)
        else:
            nxt[v] = k
            emit(pop())
    if len(path) != es.cardinality + 1:
        raise InvariantError("traversal did not consume every edge")

    verts = np.frombuffer(path, dtype=np.int64)[::-1]
    # edge i runs verts[i] -> verts[i+1]; its rank is verts[i]*k + last symbol
    last = verts[1:] % k
    edge_ranks = verts[:-1] * k + last
    # window starting at edge i's first symbol is edge i; first symbol = top digit
    symbols = edge_ranks // nv
    i0 = int(np.flatnonzero(edge_ranks == first)[0])
    return Sequence(np.roll(symbols, -i0), k, order if order is not None else es.m)


def nos_from_X(k: int, n: int, check: bool = True) -> Sequence:
    """Negative orientable sequence of order ``n`` and period ``|X_k(n-1)|``."""
    from . import verify

    x = build_X(k, n)
    try:
        seq = eulerian_circuit(x)
    except NotEulerianError as exc:
        raise InvariantError(f"X_{k}({n - 1}) is not Eulerian: {exc}") from exc
    if check:
        if not verify.window_multiset_equals(seq, x, n):
            raise InvariantError("sequence windows differ from X")
        if not verify.is_negative_orientable(seq, n):
            raise InvariantError("sequence is not negative orientable")
    return seq
