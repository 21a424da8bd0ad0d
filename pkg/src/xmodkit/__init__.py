"""Induced crossed modules of finite groups and their third cohomology classes."""

from .cohomology import cohomology_class, cyclic_resolution, h3_cyclic, lift_cocycle
from .copower import copower_peiffer_presentation, order_word
from .errors import (CokernelNotCyclic, CosetLimitExceeded, InternalAssertion, ParseError,
                     PreconditionFailed, ResourceLimit, XModError)
from .fp import todd_coxeter
from .induce import induce, mapping_cone_invariants
from .perm import GroupHom, Perm, PermGroup, Transversal
from .xmod import CrossedModule, ModuleStructure, check_axioms

__all__ = [
    "CokernelNotCyclic", "CosetLimitExceeded", "CrossedModule", "GroupHom", "InternalAssertion",
    "ModuleStructure", "ParseError", "Perm", "PermGroup", "PreconditionFailed", "ResourceLimit",
    "Transversal", "XModError", "check_axioms", "cohomology_class", "copower_peiffer_presentation",
    "cyclic_resolution", "h3_cyclic", "induce", "lift_cocycle", "mapping_cone_invariants",
    "order_word", "todd_coxeter",
]
__version__ = "0.1.0"
