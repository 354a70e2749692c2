"""Exact counts: weight-shell sizes, negasymmetric circuit tallies, period bounds.

All arithmetic is on Python ints, so nothing can overflow; every division
that must be exact is checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .alphabet import InvariantError, Params, check_params, delta


def _exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise InvariantError(f"inexact division {num}/{den}")
    return q


def odd_part(n: int) -> tuple[int, int]:
    """Return ``(t, m)`` with ``n == 2**t * m`` and ``m`` odd."""
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    return t, n


@lru_cache(maxsize=None)
def weight_distribution(k: int, n: int) -> tuple[int, ...]:
    """``dist[s2]`` is the number of n-tuples whose doubled pseudoweight is ``s2``."""
    step = [k] + [2 * i for i in range(1, k)]
    top = 2 * n * (k - 1)
    dist = [0] * (top + 1)
    dist[0] = 1
    for pos in range(n):
        nxt = [0] * (top + 1)
        for s, c in enumerate(dist):
            if c:
                for w in step:
                    nxt[s + w] += c
        dist = nxt
    return tuple(dist)


def r_count(k: int, n: int, s2: int) -> int:
    """Number of k-ary n-tuples with doubled pseudoweight exactly ``s2``."""
    dist = weight_distribution(k, n)
    if not 0 <= s2 < len(dist):
        return 0
    return dist[s2]


def r_middle(k: int, n: int) -> int:
    return r_count(k, n, k * n)


def nega_tuple_count(k: int, n: int) -> int:
    if k % 2 == 0 and n % 2 == 1:
        return 2 * k ** (n // 2)
    return k ** (n // 2)


def e_size(k: int, n: int) -> int:
    return _exact_div(k**n - r_middle(k, n), 2)


def n_i_counts_formula(k: int, n: int) -> tuple[int, int, int]:
    """Closed-form ``(N_0, N_1, N_2)``: negasymmetric circuits by window count."""
    check_params(k, n)
    d = delta(k)
    if n % 2:
        return 0, d * k ** ((n - 1) // 2), 0
    _, m = odd_part(n)
    km = k ** ((m - 1) // 2)
    n0 = _exact_div(d * (d * k ** ((n - 2) // 2) - km), 2)
    n1 = d * km
    n2 = _exact_div(k ** (n // 2) - d * km, 2)
    return n0, n1, n2


def s_value(k: int, n: int) -> int:
    """``s_k(n-1)`` from the circuit partition: ``(k^n - n(N0+N2) - m(N1-d) - d)/2``."""
    d = delta(k)
    _, m = odd_part(n)
    n0, n1, n2 = n_i_counts_formula(k, n)
    return _exact_div(k**n - n * (n0 + n2) - m * (n1 - d) - d, 2)


def s_closed_form(k: int, n: int) -> int:
    """The single-expression form of ``s_k(n-1)``, transcribed as printed.

    For even ``n`` it agrees with :func:`s_value`.  For odd ``n`` the printed
    expression exceeds :func:`s_value` by exactly ``delta``; it is kept only as
    a cross-check and never used as a bound.
    """
    check_params(k, n)
    d = delta(k)
    if n % 2:
        return _exact_div(k**n - d * (n * (k ** ((n - 1) // 2) - 1) - 1), 2)
    _, m = odd_part(n)
    km = k ** ((m - 1) // 2)
    # n*k^((n-2)/2)/2 is an integer because n is even
    num = k**n - (n // 2) * k ** ((n - 2) // 2) * (d * d + k) + n * d * km - m * d * (km - 1) - d
    return _exact_div(num, 2)


def s_lower_bound(k: int, n: int) -> int:
    """Guaranteed size of the enlarged edge set: ``max(|E|, s_k(n-1))``."""
    return max(e_size(k, n), s_value(k, n))


def nos_upper_bound(k: int, n: int) -> int:
    if n % 2:
        return _exact_div(k**n - delta(k) * k ** ((n - 1) // 2), 2)
    return _exact_div(k**n - k ** (n // 2), 2)


def os_upper_bound(k: int, n: int) -> int:
    if n % 2:
        return _exact_div(k**n - k ** ((n + 1) // 2), 2)
    return _exact_div(k**n - k ** (n // 2), 2)


@dataclass(frozen=True)
class CountReport:
    params: Params
    r_middle: int
    e_size: int
    nega_tuples: int
    n_counts: tuple[int, int, int]
    s_value: int
    s_bound: int
    nos_ub: int
    os_ub_next: int
    m_odd_part: int

    def as_dict(self) -> dict:
        return {
            "k": self.params.k,
            "n": self.params.n,
            "delta": self.params.delta,
            "r_middle": self.r_middle,
            "e_size": self.e_size,
            "nega_tuples": self.nega_tuples,
            "n_counts": list(self.n_counts),
            "s_value": self.s_value,
            "s_bound": self.s_bound,
            "nos_ub": self.nos_ub,
            "os_ub_next": self.os_ub_next,
            "m_odd_part": self.m_odd_part,
        }


def count_report(k: int, n: int) -> CountReport:
    p = Params(k, n)
    rep = CountReport(
        params=p,
        r_middle=r_middle(k, n),
        e_size=e_size(k, n),
        nega_tuples=nega_tuple_count(k, n),
        n_counts=n_i_counts_formula(k, n),
        s_value=s_value(k, n),
        s_bound=s_lower_bound(k, n),
        nos_ub=nos_upper_bound(k, n),
        os_ub_next=os_upper_bound(k, n + 1),
        m_odd_part=odd_part(n)[1],
    )
    if rep.s_bound < rep.e_size:
        raise InvariantError("s_bound below |E|")
    return rep
