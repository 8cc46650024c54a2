"""HOMFLYPT polynomials and P_N specializations for a set of braid closures."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from tqft1d.skein import braid_closure, homfly, specialize

DEFAULT_BRAIDS = {
    "trefoil": "1,1,1",
    "figure-eight": "1,-2,1,-2",
    "cinquefoil": "1,1,1,1,1",
    "hopf": "1,1",
    "T(3,4)": "1,2,1,2,1,2,1,2",
    "borromean": "1,-2,1,-2,1,-2",
}


@dataclass
class Config:
    ns: list[int] = field(default_factory=lambda: [1, 2, 3])
    braids: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_BRAIDS))
    seed: int | None = None


def run(cfg: Config) -> list[dict]:
    rows = []
    for name, word in cfg.braids.items():
        d = braid_closure([int(x) for x in word.split(",")])
        t0 = time.perf_counter()
        p = homfly(d, seed=cfg.seed)
        dt = time.perf_counter() - t0
        row = {"name": name, "crossings": len(d), "components": d.components(), "homfly": str(p),
               "seconds": round(dt, 4)}
        row.update({f"P{n}": str(specialize(p, n)) for n in cfg.ns})
        rows.append(row)
        print(f"{name} ({len(d)} crossings, {d.components()} components, {dt:.3f}s)")
        print(f"  P = {p}")
        for n in cfg.ns:
            print(f"  P_{n} = {row[f'P{n}']}")
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, action="append", help="specialization to print (repeatable)")
    ap.add_argument("--braid", action="append", metavar="NAME=WORD", help="extra braid, e.g. knot=1,1,-2")
    ap.add_argument("--seed", type=int)
    ns = ap.parse_args()
    cfg = Config(seed=ns.seed)
    if ns.n:
        cfg.ns = ns.n
    for spec in ns.braid or []:
        name, _, word = spec.partition("=")
        cfg.braids[name] = word
    run(cfg)
