"""Filters of a finite lattice and the families built from them."""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .core import ElementSet, Lattice, _bits
from .errors import FamilyMismatch, NotAFilter

#: above this size all_filters trusts the principal-filter shortcut
BRUTE_FORCE_LIMIT = 20


class FamilyKind(enum.Enum):
    ALL = "all"
    PRINCIPAL = "principal"
    PRIME = "prime"
    CUSTOM = "custom"


@dataclass(frozen=True, eq=False)
class Filter:
    lattice: Lattice
    members: ElementSet

    @property
    def mask(self) -> int:
        return self.members.mask

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Filter):
            return NotImplemented
        return self.lattice is other.lattice and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def names(self) -> list:
        return [self.lattice.names[x] for x in self.members]

    def __repr__(self) -> str:
        return "Filter{" + ", ".join(self.names()) + "}"


def _as_mask(L: Lattice, S) -> int:
    if isinstance(S, (ElementSet, Filter)):
        return S.mask
    if isinstance(S, int):
        return ElementSet(S, L.size).mask
    return ElementSet.of(L.size, S).mask


def filter_defect(L: Lattice, S) -> Optional[str]:
    """Explain why ``S`` is not a filter of ``L``, or return None if it is."""
    mask = _as_mask(L, S)
    if not mask:
        return "empty set"
    names = L.names
    for x in _bits(mask):
        missing = L.up[x] & ~mask
        if missing:
            y = next(_bits(missing))
            return f"missing {names[y]} (above {names[x]})"
    for x in _bits(mask):
        for y in _bits(mask):
            if y > x and not mask >> L.meet_table[x][y] & 1:
                return f"missing {names[x]}∧{names[y]}"
    return None


def is_filter(L: Lattice, S) -> bool:
    return filter_defect(L, S) is None


def is_prime_filter(L: Lattice, S) -> bool:
    """A proper filter such that ``a v b in S`` forces ``a in S`` or ``b in S``."""
    mask = _as_mask(L, S)
    if mask == L.full_mask or not is_filter(L, mask):
        return False
    j = L.join_table
    for a in L.elements:
        if mask >> a & 1:
            continue
        for b in L.elements:
            if not mask >> b & 1 and mask >> j[a][b] & 1:
                return False
    return True


def _sort_key(f: Filter) -> tuple:
    return f.members.sort_key()


@dataclass(frozen=True, eq=False)
class FilterFamily:
    """An ordered, duplicate-free tuple of filters of one lattice.

    Filters are kept in canonical order (cardinality, then member indices)
    so that family indices are stable.
    """

    lattice: Lattice
    filters: tuple
    kind: FamilyKind
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        uniq = {f.mask: f for f in self.filters}
        ordered = tuple(sorted(uniq.values(), key=_sort_key))
        for f in ordered:
            if f.lattice is not self.lattice:
                raise FamilyMismatch("filter belongs to a different lattice")
        object.__setattr__(self, "filters", ordered)
        object.__setattr__(self, "_index", {f.mask: i for i, f in enumerate(ordered)})

    def __len__(self) -> int:
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)

    def __getitem__(self, i: int) -> Filter:
        return self.filters[i]

    def index_of(self, S) -> Optional[int]:
        return self._index.get(_as_mask(self.lattice, S))

    def masks(self) -> tuple:
        return tuple(f.mask for f in self.filters)

    def as_sets(self) -> set:
        return {frozenset(f.members) for f in self.filters}

    @cached_property
    def containing(self) -> tuple:
        """``containing[a]`` = bitmask over family indices of filters holding ``a``."""
        out = [0] * self.lattice.size
        for i, f in enumerate(self.filters):
            for a in f.members:
                out[a] |= 1 << i
        return tuple(out)

    @cached_property
    def full(self) -> int:
        return (1 << len(self.filters)) - 1

    def __repr__(self) -> str:
        return f"FilterFamily({self.kind.value}, {list(self.filters)!r})"


def _filter(L: Lattice, mask: int) -> Filter:
    return Filter(L, ElementSet(mask, L.size))


def search_filters(L: Lattice) -> list:
    """Filters found by a subset search, without using that they are principal.

    Elements are decided top-down.  Excluding ``x`` excludes everything below
    it (up-closure); including ``x`` requires its meets with every included
    element (meet-closure).  A branch dies when an element is both required
    and excluded.  Returns bitmasks.
    """
    order = L.linear_order[::-1]
    n = len(order)
    m = L.meet_table
    found = []

    def walk(i, chosen, required, forbidden):
        if required & forbidden:
            return
        if i == n:
            if chosen:
                found.append(chosen)
            return
        x = order[i]
        bit = 1 << x
        if not required & bit:
            walk(i + 1, chosen, required, forbidden | L.down[x])
        if not forbidden & bit:
            need = required
            for y in _bits(chosen):
                need |= L.up[m[x][y]]
            walk(i + 1, chosen | bit, need | L.up[x], forbidden)

    walk(0, 0, 0, 0)
    return found


def principal_filters(L: Lattice) -> FilterFamily:
    return FilterFamily(L, tuple(_filter(L, L.up[a]) for a in L.elements), FamilyKind.PRINCIPAL)


def all_filters(L: Lattice) -> FilterFamily:
    """Every filter of ``L``.

    Up to ``BRUTE_FORCE_LIMIT`` elements the filters come from
    ``search_filters`` and are cross-checked against the principal filters.
    Larger lattices use the principal filters directly, with a warning.
    """
    if L.size > BRUTE_FORCE_LIMIT:
        warnings.warn(
            f"lattice has {L.size} elements; all_filters uses principal filters unchecked",
            stacklevel=2,
        )
        return FilterFamily(L, principal_filters(L).filters, FamilyKind.ALL)
    found = tuple(_filter(L, s) for s in search_filters(L))
    fam = FilterFamily(L, found, FamilyKind.ALL)
    if fam.masks() != principal_filters(L).masks():
        raise AssertionError("all_filters and principal_filters disagree on a finite lattice")
    return fam


def prime_filters(L: Lattice) -> FilterFamily:
    fam = all_filters(L)
    return FilterFamily(L, tuple(f for f in fam if is_prime_filter(L, f)), FamilyKind.PRIME)


def custom_family(L: Lattice, sets: Iterable) -> FilterFamily:
    """Wrap arbitrary element sets as a family; raises NotAFilter on the first bad one."""
    filters = []
    for S in sets:
        mask = _as_mask(L, S)
        defect = filter_defect(L, mask)
        if defect is not None:
            raise NotAFilter(defect)
        filters.append(_filter(L, mask))
    return FilterFamily(L, tuple(filters), FamilyKind.CUSTOM)


def unseparated_pair(L: Lattice, F: FilterFamily) -> Optional[tuple]:
    """First pair ``a < b`` (by index) that no filter in ``F`` tells apart."""
    if F.lattice is not L:
        raise FamilyMismatch("family belongs to a different lattice")
    masks = F.masks()
    for a in L.elements:
        for b in range(a + 1, L.size):
            if not any((m >> a & 1) != (m >> b & 1) for m in masks):
                return (a, b)
    return None


def is_separating(L: Lattice, F: FilterFamily) -> bool:
    return unseparated_pair(L, F) is None


def union_closure_witness(L: Lattice, F: FilterFamily) -> Optional[tuple]:
    """Two members of ``F`` whose union is not a filter, or None."""
    if F.lattice is not L:
        raise FamilyMismatch("family belongs to a different lattice")
    for i, X in enumerate(F.filters):
        for Y in F.filters[i + 1:]:
            u = X.mask | Y.mask
            if F.index_of(u) is None and not is_filter(L, u):
                return (X, Y)
    return None
