"""Recompute the N_i, |X|-bound and OS-period tables and diff them against the
published grids stored with the test suite."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from oseq import tables

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
import golden  # noqa: E402


@dataclass
class TableConfig:
    ks_n_i: range = field(default_factory=lambda: range(3, 7))
    ns_n_i: range = field(default_factory=lambda: range(3, 9))
    ks_xbound: range = field(default_factory=lambda: range(3, 11))
    ns_xbound: range = field(default_factory=lambda: range(3, 10))
    ks_os: range = field(default_factory=lambda: range(3, 9))
    ns_os: range = field(default_factory=lambda: range(4, 9))


def compare(cfg: TableConfig) -> dict:
    out = {}
    cells = tables.n_i_table(cfg.ks_n_i, cfg.ns_n_i)
    out["n_i"] = [
        asdict(c) for c in cells
        if c.formula != golden.N_I_TABLE[c.n, c.k] or c.enumerated not in (None, c.formula)
    ]
    cells = tables.xbound_table(cfg.ks_xbound, cfg.ns_xbound)
    out["xbound"] = [
        asdict(c) for c in cells
        if (c.s_value, c.e_size) != (golden.S_TABLE[c.n, c.k], golden.E_TABLE[c.n, c.k])
        or c.e_built not in (None, c.e_size)
    ]
    cells = tables.os_periods_table(cfg.ks_os, cfg.ns_os)
    out["os_periods"] = [
        asdict(c) for c in cells
        if c.bound != golden.OS_TABLE[c.n, c.k] or (c.achieved is not None and c.achieved < c.bound)
    ]
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--print", action="store_true", help="also render each table")
    args = ap.parse_args()
    cfg = TableConfig()
    if args.print:
        for name, ks, ns in (("n_i", cfg.ks_n_i, cfg.ns_n_i),
                             ("xbound", cfg.ks_xbound, cfg.ns_xbound),
                             ("os_periods", cfg.ks_os, cfg.ns_os)):
            print(f"== {name}")
            print(tables.render(tables.TABLES[name](ks, ns), ks, ns))
    diffs = compare(cfg)
    print(json.dumps({name: len(d) for name, d in diffs.items()}))
    for name, d in diffs.items():
        for rec in d:
            print(f"mismatch in {name}: {rec}")
    return 1 if any(diffs.values()) else 0


if __name__ == "__main__":
    sys.exit(main())
