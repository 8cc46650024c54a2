"""Walk through the three-state example automaton.

Prints its transition matrices, the floating-interval and circle values of
short words, and the correspondence report.
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from tqft1d.automaton import Nfa
from tqft1d.regex import compile_regex, parse_regex
from tqft1d.tqft import check_correspondence, circle_values, floating_values, from_automaton


@dataclass
class Config:
    max_len: int = 4
    check_len: int = 10


EDGES = [
    ("q1", "a", "q1"), ("q1", "b", "q2"),
    ("q2", "b", "q2"), ("q2", "a", "q3"), ("q2", "b", "q3"),
    ("q3", "a", "q1"), ("q3", "b", "q2"),
]


def run(cfg: Config) -> dict:
    nfa = Nfa.build(["q1", "q2", "q3"], ["a", "b"], EDGES, ["q1"], ["q3"])
    data = from_automaton(nfa)
    for a, m in data.maps.items():
        print(f"m_{a} =\n{m.format()}")
    fl = floating_values(data, cfg.max_len)
    ci = circle_values(data, cfg.max_len)
    print("\nword   floating  circle")
    for w in fl:
        print(f"{w or 'ε':6} {int(fl[w]):^8}  {int(ci[w]):^6}")
    report = check_correspondence(nfa, cfg.check_len)
    from_regex = check_correspondence(compile_regex(parse_regex("(a+b)*b(a+b)")), cfg.check_len)
    out = {"config": asdict(cfg), "three_state": report, "regex": from_regex}
    print(json.dumps(out, indent=2))
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-len", type=int, default=Config.max_len)
    ap.add_argument("--check-len", type=int, default=Config.check_len)
    ns = ap.parse_args()
    run(Config(ns.max_len, ns.check_len))
