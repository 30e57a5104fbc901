"""Finite lattices over dense element indices.

Elements are the integers ``0..n-1``; display names only matter at I/O
boundaries.  Order relations and element sets are stored as Python int
bitmasks, so that subset tests and intersections are single operations.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, DuplicateName, IndexOutOfRange, LatticeError, NotALattice, UnknownName


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class ElementSet:
    """An immutable subset of ``{0..size-1}`` backed by a bitmask.

    Iteration is always in ascending index order.
    """

    __slots__ = ("mask", "size")

    def __init__(self, mask: int, size: int):
        if mask < 0 or mask >> size:
            raise IndexOutOfRange(f"mask {mask:#x} has members outside 0..{size - 1}")
        self.mask = mask
        self.size = size

    @classmethod
    def of(cls, size: int, members: Iterable[int]) -> "ElementSet":
        mask = 0
        for m in members:
            if not 0 <= m < size:
                raise IndexOutOfRange(f"element {m} outside 0..{size - 1}")
            mask |= 1 << m
        return cls(mask, size)

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.size and bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.mask == other.mask and self.size == other.size

    def __hash__(self) -> int:
        return hash((self.mask, self.size))

    def __le__(self, other: "ElementSet") -> bool:
        return self.mask & ~other.mask == 0

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask & other.mask, self.size)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask | other.mask, self.size)

    def sort_key(self) -> tuple:
        return (len(self), tuple(self))

    def __repr__(self) -> str:
        return "ElementSet({" + ", ".join(map(str, self)) + "})"


class Lattice:
    """A finite lattice given by its order relation.

    ``up[a]`` is the bitmask of all ``b`` with ``a <= b`` and ``down[a]`` the
    mask of all ``b <= a``.  Meet and join tables are computed eagerly by
    brute-force glb/lub search; a poset that is not a lattice is rejected
    here, never later.
    """

    def __init__(self, names: Sequence[str], up: Sequence[int]):
        n = len(names)
        if n == 0:
            raise LatticeError("a lattice needs at least one element")
        if len(set(names)) != n:
            dup = next(x for x in names if list(names).count(x) > 1)
            raise DuplicateName(f"duplicate element name: {dup}")
        if len(up) != n:
            raise LatticeError("order relation does not match the element count")
        self.names = tuple(str(x) for x in names)
        self.size = n
        self.up = tuple(up)
        down = [0] * n
        for a in range(n):
            if not self.up[a] >> a & 1:
                raise LatticeError(f"order is not reflexive at {self.names[a]}")
            for b in _bits(self.up[a]):
                down[b] |= 1 << a
        self.down = tuple(down)
        for a in range(n):
            for b in _bits(self.up[a]):
                if b != a and self.up[b] >> a & 1:
                    raise CycleError([self.names[a], self.names[b]])
                if self.up[b] & ~self.up[a]:
                    raise LatticeError("order relation is not transitive")
        self.meet_table = self._bound_table(self.down, "meet")
        self.join_table = self._bound_table(self.up, "join")
        full = (1 << n) - 1
        bottoms = [a for a in range(n) if self.up[a] == full]
        tops = [a for a in range(n) if self.down[a] == full]
        # a lattice with all binary meets/joins always has both bounds
        assert len(bottoms) == 1 and len(tops) == 1
        self.bottom = bottoms[0]
        self.top = tops[0]

    def _bound_table(self, cones: Sequence[int], which: str) -> tuple:
        n = self.size
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                common = cones[a] & cones[b]
                best = [g for g in _bits(common) if cones[g] == common]
                if not best:
                    raise NotALattice((self.names[a], self.names[b]), which)
                table[a][b] = table[b][a] = best[0]
        return tuple(tuple(row) for row in table)

    @classmethod
    def from_leq(cls, names: Sequence[str], leq: Sequence[Sequence[bool]]) -> "Lattice":
        n = len(names)
        up = [sum(1 << b for b in range(n) if leq[a][b]) for a in range(n)]
        return cls(names, up)

    def leq(self, a: int, b: int) -> bool:
        self._check(a)
        self._check(b)
        return bool(self.up[a] >> b & 1)

    def _check(self, a: int) -> None:
        if not (isinstance(a, int) and 0 <= a < self.size):
            raise IndexOutOfRange(f"element index {a!r} outside 0..{self.size - 1}")

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownName(f"unknown element: {name}") from None

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def element_set(self, members: Iterable[int]) -> ElementSet:
        return ElementSet.of(self.size, members)

    @cached_property
    def depth(self) -> tuple:
        """Length of the longest chain from bottom to each element."""
        d = [0] * self.size
        for a in sorted(self.elements, key=lambda x: len(list(_bits(self.down[x])))):
            below = self.down[a] & ~(1 << a)
            d[a] = 1 + max((d[b] for b in _bits(below)), default=-1)
        return tuple(d)

    @cached_property
    def linear_order(self) -> tuple:
        """A fixed linear extension: by depth, then index."""
        return tuple(sorted(self.elements, key=lambda a: (self.depth[a], a)))

    @cached_property
    def covers(self) -> tuple:
        """Cover pairs ``(lower, upper)``, i.e. the Hasse diagram edges."""
        out = []
        for a in self.elements:
            strictly_above = self.up[a] & ~(1 << a)
            for b in _bits(strictly_above):
                between = strictly_above & self.down[b] & ~(1 << b)
                if not between:
                    out.append((a, b))
        return tuple(out)

    def __repr__(self) -> str:
        return f"Lattice({list(self.names)!r}, covers={len(self.covers)})"


def build_lattice(names: Sequence, covers: Iterable[tuple]) -> Lattice:
    """Build a lattice from element names and ``(lower, upper)`` cover pairs.

    The order is the reflexive-transitive closure of the covers.  Raises
    ``DuplicateName``, ``UnknownName``, ``CycleError`` or ``NotALattice``.
    """
    names = [str(x) for x in names]
    if not names:
        raise LatticeError("a lattice needs at least one element")
    seen = set()
    for x in names:
        if x in seen:
            raise DuplicateName(f"duplicate element name: {x}")
        seen.add(x)
    pos = {x: i for i, x in enumerate(names)}
    n = len(names)
    up = [1 << i for i in range(n)]
    for lo, hi in covers:
        lo, hi = str(lo), str(hi)
        for x in (lo, hi):
            if x not in pos:
                raise UnknownName(f"cover references undeclared element: {x}")
        if lo == hi:
            raise CycleError([lo])
        up[pos[lo]] |= 1 << pos[hi]
    # Warshall closure on bitmask rows
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    for a in range(n):
        for b in _bits(up[a] & ~(1 << a)):
            if up[b] >> a & 1:
                cyc = [names[c] for c in range(n) if up[a] >> c & 1 and up[c] >> a & 1]
                raise CycleError(cyc)
    return Lattice(names, up)


def meet(L: Lattice, a: int, b: int) -> int:
    L._check(a)
    L._check(b)
    return L.meet_table[a][b]


def join(L: Lattice, a: int, b: int) -> int:
    L._check(a)
    L._check(b)
    return L.join_table[a][b]


def is_distributive(L: Lattice) -> bool:
    m, j = L.meet_table, L.join_table
    r = L.elements
    return all(m[a][j[b][c]] == j[m[a][b]][m[a][c]] for a in r for b in r for c in r)


def principal_filter(L: Lattice, a: int):
    """The principal filter ``[a) = {b : a <= b}``."""
    from .filters import Filter

    L._check(a)
    return Filter(L, ElementSet(L.up[a], L.size))


def chain(n: int) -> Lattice:
    names = [str(i) for i in range(n)]
    return build_lattice(names, [(names[i], names[i + 1]) for i in range(n - 1)])
