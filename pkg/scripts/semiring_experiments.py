"""Same automaton graph, three semirings: acceptance, path counts, shortest weights."""

from __future__ import annotations

import argparse
import math
import random
from dataclasses import dataclass

from tqft1d.semiring import get_semiring
from tqft1d.tqft import floating_values, from_generic


@dataclass
class Config:
    states: int = 3
    max_len: int = 3
    seed: int = 4
    max_weight: int = 5


def run(cfg: Config) -> dict:
    rng = random.Random(cfg.seed)
    n = cfg.states
    edges = [(i, a, j) for i in range(n) for a in "ab" for j in range(n) if rng.random() < 0.4]
    weight = {e: rng.randint(0, cfg.max_weight) for e in edges}
    init, final = [0], [n - 1]

    def build(name, present, absent, w):
        maps = {a: [[absent] * n for _ in range(n)] for a in "ab"}
        for (i, a, j) in edges:
            maps[a][j][i] = w(i, a, j)
        v0 = [present if i in init else absent for i in range(n)]
        vs = [present if i in final else absent for i in range(n)]
        return from_generic(name, n, maps, v0, vs)

    tables = {
        "boolean": floating_values(build("boolean", True, False, lambda *e: True), cfg.max_len),
        "integer": floating_values(build("integer", 1, 0, lambda *e: 1), cfg.max_len),
        "tropical": floating_values(build("tropical", 0, math.inf, lambda *e: weight[e]), cfg.max_len),
    }
    print(f"edges: {sorted(edges)}")
    print(f"{'word':6} {'boolean':>8} {'integer':>8} {'tropical':>9}")
    for w in tables["boolean"]:
        cells = [get_semiring(k).to_text(tables[k][w]) for k in ("boolean", "integer", "tropical")]
        print(f"{w or 'ε':6} {cells[0]:>8} {cells[1]:>8} {cells[2]:>9}")
    return tables


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--states", type=int, default=Config.states)
    ap.add_argument("--max-len", type=int, default=Config.max_len)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ns = ap.parse_args()
    run(Config(ns.states, ns.max_len, ns.seed))
