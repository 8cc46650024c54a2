"""One-dimensional TQFTs with defects, automata over semirings, and HOMFLYPT skein recursion."""

__version__ = "0.1.0"
