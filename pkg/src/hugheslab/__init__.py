"""Hughes subgroups H_p, H_n and H_pi of finite permutation groups."""

from .algebra import ALL, PrimeSet, SubgroupHandle
from .group import EnumerationCapExceeded, PermGroup
from .hughes import PiCase, classify_pi, hughes_intersection, hughes_n, hughes_p, hughes_pi
from .perm import Permutation, compose, element_order, format_cycles, inverse, parse_cycles

__all__ = [
    "ALL",
    "PrimeSet",
    "SubgroupHandle",
    "EnumerationCapExceeded",
    "PermGroup",
    "PiCase",
    "classify_pi",
    "hughes_intersection",
    "hughes_n",
    "hughes_p",
    "hughes_pi",
    "Permutation",
    "compose",
    "element_order",
    "format_cycles",
    "inverse",
    "parse_cycles",
]

__version__ = "0.1.0"
