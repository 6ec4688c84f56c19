"""Finite generalized topologies, generalized topological groups and a theorem checker."""

from .errors import WorkbenchError
from .group import FiniteGroup, catalog
from .setfam import GenTopology, union_closure, validate_topology
from .space import GTMap, GTSpace
from .topgroup import GTopGroup, certify, check_gtop_group

__all__ = [
    "FiniteGroup", "GTMap", "GTSpace", "GTopGroup", "GenTopology", "WorkbenchError",
    "catalog", "certify", "check_gtop_group", "union_closure", "validate_topology",
]
__version__ = "0.1.0"
