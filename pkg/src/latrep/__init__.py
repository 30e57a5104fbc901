"""Finite lattices, their filters, and the set-of-sets representation
``a -> {X in F(L) : a in X}`` with machine-checked identities."""
from .core import ElementSet, Lattice, build_lattice, chain, is_distributive, join, meet, principal_filter
from .errors import (CycleError, DuplicateName, FamilyMismatch, IndexOutOfRange, KindUnsupported,
                     LatticeError, NotAFilter, NotALattice, NotDistributive, SizeTooLarge, UnknownName)
from .filters import (FamilyKind, Filter, FilterFamily, all_filters, custom_family, is_filter,
                      is_prime_filter, is_separating, prime_filters, principal_filters,
                      union_closure_witness, unseparated_pair)
from .generate import EnumerationCensus, are_isomorphic, census, enumerate_lattices, random_lattice
from .representation import (MeetVariant, Representation, SetLatticeElement, VerificationReport,
                             build_representation, check_coincidence, check_symmetry, join_star,
                             join_star2, meet_star, meet_star_symmetric, point_map, veestar2_prime_gap,
                             verify_iso, verify_prop1, verify_prop2)

__version__ = "0.1.0"
