"""Period / upper-bound ratios of the constructed sequences over a (k, n) grid."""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from oseq import counting
from oseq.alphabet import within_cap
from oseq.graph import nos_from_X
from oseq.lift import os_from_X


@dataclass
class RatioConfig:
    k_min: int = 3
    k_max: int = 6
    n_min: int = 3
    n_max: int = 8
    with_os: bool = True


def rows(cfg: RatioConfig):
    for k in range(cfg.k_min, cfg.k_max + 1):
        for n in range(cfg.n_min, cfg.n_max + 1):
            if not within_cap(k, n):
                continue
            t0 = time.perf_counter()
            nos = nos_from_X(k, n).claimed_period
            ub = counting.nos_upper_bound(k, n)
            row = {"k": k, "n": n, "nos_period": nos, "nos_ub": ub, "nos_ratio": round(nos / ub, 6)}
            if cfg.with_os and within_cap(k, n + 1):
                per = os_from_X(k, n).claimed_period
                ub = counting.os_upper_bound(k, n + 1)
                row.update(os_period=per, os_ub=ub, os_ratio=round(per / ub, 6))
            row["seconds"] = round(time.perf_counter() - t0, 2)
            yield row


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs=2, default=(3, 6), metavar=("MIN", "MAX"))
    ap.add_argument("--n", type=int, nargs=2, default=(3, 8), metavar=("MIN", "MAX"))
    ap.add_argument("--no-os", action="store_true", help="skip the orientable lift")
    args = ap.parse_args()
    cfg = RatioConfig(args.k[0], args.k[1], args.n[0], args.n[1], not args.no_os)
    fields = ["k", "n", "nos_period", "nos_ub", "nos_ratio", "os_period", "os_ub", "os_ratio", "seconds"]
    w = csv.DictWriter(sys.stdout, fieldnames=fields)
    w.writeheader()
    for row in rows(cfg):
        w.writerow(row)
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
