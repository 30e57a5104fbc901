"""Test-instance supply: small lattices up to isomorphism, random lattices
from closure systems, and an exact isomorphism check."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .core import Lattice, _bits, is_distributive
from .errors import LatticeError, SizeTooLarge

MAX_ENUM_SIZE = 8
MAX_ISO_SIZE = 10


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _invariants(L: Lattice) -> tuple:
    """Per-element labels preserved by every order isomorphism."""
    return tuple(
        (L.depth[a], _popcount(L.down[a]), _popcount(L.up[a]),
         sum(1 for lo, hi in L.covers if hi == a), sum(1 for lo, hi in L.covers if lo == a))
        for a in L.elements
    )


def _mappings(L1: Lattice, L2: Lattice) -> Iterator[list]:
    """Backtracking over bijections that respect the element invariants and
    the order relation built so far."""
    n = L1.size
    inv1, inv2 = _invariants(L1), _invariants(L2)
    order = sorted(range(n), key=lambda a: (inv1[a], a))
    image = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            yield image
            return
        a = order[k]
        for b in range(n):
            if used[b] or inv2[b] != inv1[a]:
                continue
            ok = True
            for prev in order[:k]:
                pb = image[prev]
                if bool(L1.up[a] >> prev & 1) != bool(L2.up[b] >> pb & 1) or \
                        bool(L1.up[prev] >> a & 1) != bool(L2.up[pb] >> b & 1):
                    ok = False
                    break
            if ok:
                image[a] = b
                used[b] = True
                yield from extend(k + 1)
                used[b] = False
                image[a] = -1

    yield from extend(0)


def are_isomorphic(L1: Lattice, L2: Lattice) -> bool:
    if max(L1.size, L2.size) > MAX_ISO_SIZE:
        raise SizeTooLarge(f"isomorphism check is exact only up to {MAX_ISO_SIZE} elements")
    if L1.size != L2.size or sorted(_invariants(L1)) != sorted(_invariants(L2)):
        return False
    return next(_mappings(L1, L2), None) is not None


def canonical_certificate(L: Lattice) -> tuple:
    """Lexicographically least order matrix over invariant-respecting relabelings.

    Two lattices have equal certificates iff they are isomorphic.
    """
    if L.size > MAX_ISO_SIZE:
        raise SizeTooLarge(f"certificates are exact only up to {MAX_ISO_SIZE} elements")
    inv = _invariants(L)
    classes = {}
    for a in L.elements:
        classes.setdefault(inv[a], []).append(a)
    keys = sorted(classes)
    best = None
    for perms in itertools.product(*(itertools.permutations(classes[k]) for k in keys)):
        seq = [a for p in perms for a in p]
        rows = tuple(tuple(int(L.up[x] >> y & 1) for y in seq) for x in seq)
        if best is None or rows < best:
            best = rows
    return (tuple(sorted(inv)), best)


def _lattice_from_downsets(downs: list) -> Optional[Lattice]:
    """Bottom, the given interior elements (strict down-sets over interior
    indices), and a top; None unless all meets and joins exist."""
    m = len(downs)
    n = m + 2
    top = n - 1
    up = [0] * n
    up[0] = (1 << n) - 1
    for i in range(m):
        row = 1 << (i + 1) | 1 << top
        for j in range(m):
            if downs[j] >> i & 1:
                row |= 1 << (j + 1)
        up[i + 1] = row
    up[top] = 1 << top
    names = [str(i) for i in range(n)]
    try:
        return Lattice(names, up)
    except LatticeError:
        return None


def _natural_posets(m: int) -> Iterator[list]:
    """Posets on ``0..m-1`` where ``i < j`` in the order implies ``i < j`` as
    integers; each is given by strict down-sets.  Built one element at a
    time, the new element taking any down-closed set of the earlier ones."""

    def downclosed(downs, k):
        # down-closed subsets of {0..k-1}, deciding from k-1 downward
        def walk(i, chosen):
            if i < 0:
                yield chosen
                return
            yield from walk(i - 1, chosen)
            yield from walk(i - 1, chosen | 1 << i | downs[i])
        seen = set()
        for s in walk(k - 1, 0):
            if s not in seen:
                seen.add(s)
                yield s

    def grow(downs):
        k = len(downs)
        if k == m:
            yield list(downs)
            return
        for d in downclosed(downs, k):
            downs.append(d)
            yield from grow(downs)
            downs.pop()

    yield from grow([])


def enumerate_lattices(n: int) -> list:
    """One representative per isomorphism class of ``n``-element lattices,
    sorted by canonical certificate."""
    if n < 1:
        raise LatticeError("lattice size must be at least 1")
    if n > MAX_ENUM_SIZE:
        raise SizeTooLarge(f"enumeration is bounded at {MAX_ENUM_SIZE} elements")
    if n == 1:
        return [Lattice(["0"], [1])]
    buckets: dict = {}
    for downs in _natural_posets(n - 2):
        L = _lattice_from_downsets(downs)
        if L is None:
            continue
        key = tuple(sorted(_invariants(L)))
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(L, R) for R in bucket):
            bucket.append(L)
    reps = [L for bucket in buckets.values() for L in bucket]
    return sorted(reps, key=canonical_certificate)


@dataclass
class EnumerationCensus:
    counts: dict = field(default_factory=dict)
    distributive: dict = field(default_factory=dict)


def census(max_size: int) -> EnumerationCensus:
    out = EnumerationCensus()
    for n in range(1, max_size + 1):
        lats = enumerate_lattices(n)
        out.counts[n] = len(lats)
        out.distributive[n] = sum(is_distributive(L) for L in lats)
    return out


def random_lattice(points: int, density: float, seed: int) -> Lattice:
    """A lattice of closed sets over ``points`` ground points.

    ``points`` subsets are sampled (each point kept with probability
    ``density``), closed under pairwise intersection, and the full set is
    added.  Ordered by inclusion this is always a lattice.  Element names
    are the closed sets written as ``{0,2}``.
    """
    if not 1 <= points <= 16:
        raise LatticeError("points must be between 1 and 16")
    if not 0 < density < 1:
        raise LatticeError("density must lie strictly between 0 and 1")
    rng = random.Random(seed)
    full = (1 << points) - 1
    system = {full}
    for _ in range(points):
        system.add(sum(1 << p for p in range(points) if rng.random() < density))
    frontier = set(system)
    while frontier:
        new = {x & y for x in frontier for y in system} - system
        system |= new
        frontier = new
    sets = sorted(system, key=lambda s: (_popcount(s), s))
    names = ["{" + ",".join(str(p) for p in _bits(s)) + "}" for s in sets]
    up = [sum(1 << j for j, t in enumerate(sets) if s & ~t == 0) for s in sets]
    return Lattice(names, up)
