"""Formal ladder-web expansions of a crossing between strands of thickness a and b.

Nothing here evaluates webs.  Each term is a ladder: two vertical sides
joined by a bottom rung and a top rung.  Labels, for ``k`` in
``max(0, a-b) .. a``::

            a           b          (top boundary)
            |           |
    TL  ----+--- b+k-a -+----  TR
            |           |
          b+k          a-k        (sides)
            |           |
    BL  ----+---- k ----+----  BR
            |           |
            b           a          (bottom boundary)

Bottom rung flows right to left and top rung left to right.  A rung or side
of label 0 is absent from the picture.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..poly import LaurentPoly

__all__ = ["LadderWeb", "WebTerm", "WebResolution", "resolve_crossing_general", "flow_violations"]


@dataclass(frozen=True)
class LadderWeb:
    a: int
    b: int
    k: int

    @property
    def edges(self) -> dict[str, int]:
        a, b, k = self.a, self.b, self.k
        return {
            "bottom_left": b,
            "bottom_right": a,
            "top_left": a,
            "top_right": b,
            "bottom_rung": k,
            "top_rung": b + k - a,
            "left_side": b + k,
            "right_side": a - k,
        }

    @property
    def vertices(self) -> dict[str, tuple[tuple[str, ...], tuple[str, ...]]]:
        """``name -> (incoming edges, outgoing edges)``, flowing upward."""
        return {
            "BR": (("bottom_right",), ("right_side", "bottom_rung")),
            "BL": (("bottom_left", "bottom_rung"), ("left_side",)),
            "TL": (("left_side",), ("top_left", "top_rung")),
            "TR": (("right_side", "top_rung"), ("top_right",)),
        }

    def describe(self) -> str:
        e = self.edges
        if e["bottom_rung"] == 0 and e["top_rung"] == 0:
            return "identity"
        return f"ladder(rungs {e['bottom_rung']}/{e['top_rung']}, sides {e['left_side']}/{e['right_side']})"

    def to_json(self) -> dict:
        return {"k": self.k, "edges": self.edges, "shape": self.describe()}


def flow_violations(web: LadderWeb) -> list[str]:
    """Vertices where incoming and outgoing thickness disagree, plus negative labels."""
    e = web.edges
    out = [f"edge {name} has negative label {v}" for name, v in e.items() if v < 0]
    for v, (ins, outs) in web.vertices.items():
        si, so = sum(e[x] for x in ins), sum(e[x] for x in outs)
        if si != so:
            out.append(f"vertex {v}: in {si} != out {so}")
    return out


@dataclass(frozen=True)
class WebTerm:
    k: int
    coefficient: LaurentPoly
    web: LadderWeb


@dataclass(frozen=True)
class WebResolution:
    a: int
    b: int
    sign: int
    terms: tuple[WebTerm, ...]

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "sign": "+" if self.sign > 0 else "-",
            "terms": [{"coefficient": str(t.coefficient), **t.web.to_json()} for t in self.terms],
        }


def resolve_crossing_general(a: int, b: int, sign: int | str) -> WebResolution:
    if isinstance(sign, str):
        if sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {sign!r}")
        sign = 1 if sign == "+" else -1
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if a < 1 or b < 1:
        raise ValueError(f"thicknesses must be positive, got a={a}, b={b}")
    terms = []
    for k in range(max(0, a - b), a + 1):
        if sign < 0:
            coef = LaurentPoly.monomial(k - a, (-1) ** (a - k))
        else:
            coef = LaurentPoly.monomial(a - k, (-1) ** (a - k))
        terms.append(WebTerm(k, coef, LadderWeb(a, b, k)))
    return WebResolution(a, b, sign, tuple(terms))
