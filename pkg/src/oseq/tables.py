"""Grid computations behind the ``table`` subcommand.

Cells whose edge sets exceed the materialization cap carry formula values
only and are flagged ``in_cap=False``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from . import counting
from .alphabet import within_cap
from .circuits import n_i_counts_enumerated
from .graph import build_E, build_X


@dataclass
class NiCell:
    n: int
    k: int
    formula: tuple[int, int, int]
    enumerated: tuple[int, int, int] | None
    in_cap: bool


@dataclass
class XBoundCell:
    n: int
    k: int
    s_value: int
    e_size: int
    e_built: int | None
    in_cap: bool


@dataclass
class OSPeriodCell:
    n: int  # order of the orientable sequence; built from X_k(n-2)
    k: int
    bound: int
    achieved: int | None
    in_cap: bool


def n_i_table(ks, ns) -> list[NiCell]:
    cells = []
    for n in ns:
        for k in ks:
            ok = within_cap(k, n)
            cells.append(NiCell(
                n, k, counting.n_i_counts_formula(k, n),
                n_i_counts_enumerated(k, n) if ok else None, ok,
            ))
    return cells


def xbound_table(ks, ns) -> list[XBoundCell]:
    cells = []
    for n in ns:
        for k in ks:
            ok = within_cap(k, n)
            cells.append(XBoundCell(
                n, k, counting.s_value(k, n), counting.e_size(k, n),
                len(build_E(k, n)) if ok else None, ok,
            ))
    return cells


def os_periods_table(ks, ns) -> list[OSPeriodCell]:
    cells = []
    for n in ns:
        if n < 4:
            raise ValueError("orientable sequence orders start at 4")
        for k in ks:
            ok = within_cap(k, n)
            cells.append(OSPeriodCell(
                n, k, k * counting.s_value(k, n - 1),
                k * len(build_X(k, n - 1)) if ok else None, ok,
            ))
    return cells


TABLES = {"n_i": n_i_table, "xbound": xbound_table, "os_periods": os_periods_table}


def _top(cell) -> str:
    if isinstance(cell, NiCell):
        return "({},{},{})".format(*cell.formula)
    if isinstance(cell, XBoundCell):
        return str(cell.s_value)
    return str(cell.bound)


def _bottom(cell) -> str:
    if isinstance(cell, NiCell):
        if cell.enumerated is None:
            return "*"
        return "ok" if cell.enumerated == cell.formula else "({},{},{})!".format(*cell.enumerated)
    if isinstance(cell, XBoundCell):
        mark = "*" if not cell.in_cap else ("" if cell.e_built == cell.e_size else "!")
        return f"({cell.e_size}){mark}"
    return "*" if cell.achieved is None else f"[{cell.achieved}]"


def render(cells: list, ks, ns) -> str:
    """Rows indexed by n, columns by k; second line per row holds checks.

    ``*`` flags a formula-only cell, ``!`` a disagreement with enumeration.
    """
    grid = {(c.n, c.k): c for c in cells}
    rows = [["n"] + [f"k={k}" for k in ks]]
    for n in ns:
        rows.append([str(n)] + [_top(grid[n, k]) for k in ks])
        rows.append([""] + [_bottom(grid[n, k]) for k in ks])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in rows
    )


def to_records(cells: list) -> list[dict]:
    return [asdict(c) for c in cells]
