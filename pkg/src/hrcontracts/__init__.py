"""Assume/guarantee contracts over finite alphabets of ports.

Assertions are sets of runs stored as bitsets over the enumerated universe;
contracts, their algebra, the profiled (controlled / local) layer and rich
components are built on top.  The hot set kernels come from a compiled
extension when available, with a pure-Python fallback.
"""
from ._backend import BACKEND
from .alphabet import BOOL, Alphabet, PortDecl, Run, Universe, build_alphabet, enumerate_universe
from .assertion import (
    Assertion,
    complement,
    exists_eliminate,
    forall_eliminate,
    intersect,
    is_receptive,
    is_subset,
    lift,
    projection,
    union,
)
from .components import RichComponent, check_component, check_system
from .config import limits
from .contracts import (
    Contract,
    canonicalize,
    complement_contract,
    compose,
    dominates,
    eliminate,
    equivalent,
    fuse,
    join,
    make_contract,
    max_implementation,
    meet,
    refines,
    satisfies,
)
from .errors import (
    AlphabetError,
    AlphabetMismatch,
    CompositionError,
    ContractError,
    FusionError,
    ProfileError,
    ReceptivenessError,
    SpecError,
    UniverseTooLarge,
)
from .profiled import (
    Profile,
    ProfiledContract,
    ProfiledImplementation,
    are_compatible,
    is_compatible_single,
    is_consistent,
    make_profile,
    p_compose,
    p_dominates,
    p_eliminate,
    p_fuse,
    p_meet,
    p_join,
    p_complement,
    p_refines,
    p_satisfies,
)

__version__ = "0.1.0"
