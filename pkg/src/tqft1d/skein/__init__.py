"""Link diagrams, Reidemeister moves and HOMFLYPT skein recursion."""

from .diagram import Crossing, LinkDiagram, PDParseError, braid_closure, disjoint_union, parse_pd, unknot, unlink
from .homfly import SkeinBudgetExceeded, homfly, specialize
from .webs import WebResolution, flow_violations, resolve_crossing_general

__all__ = [
    "Crossing",
    "LinkDiagram",
    "PDParseError",
    "braid_closure",
    "disjoint_union",
    "parse_pd",
    "unknot",
    "unlink",
    "SkeinBudgetExceeded",
    "homfly",
    "specialize",
    "WebResolution",
    "flow_violations",
    "resolve_crossing_general",
]
