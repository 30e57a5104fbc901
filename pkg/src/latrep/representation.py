"""Set-of-sets representation of a lattice and checks of its identities.

Each element ``a`` maps to ``f(a)``, the set of family filters containing
it.  Meet of images is intersection.  The join is

    A v* B  = A | B | {Z : X in A, Y in B, X & Y <= Z}
    A v** B =         {Z : X in A, Y in B, X & Y <= Z}

with ``Z`` ranging over the whole family.  The symmetric meets replace
``X & Y`` by ``X | Y``.
"""
from __future__ import annotations

import enum
import weakref
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .core import Lattice, _bits, is_distributive
from .errors import FamilyMismatch, KindUnsupported, NotDistributive
from .filters import FamilyKind, FilterFamily, prime_filters, unseparated_pair


@dataclass(frozen=True, eq=False)
class SetLatticeElement:
    """A subset of a filter family, stored as a bitmask over family indices."""

    family: FilterFamily
    mask: int

    @property
    def members(self) -> tuple:
        return tuple(_bits(self.mask))

    def filters(self) -> list:
        return [self.family[i] for i in _bits(self.mask)]

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __iter__(self):
        return _bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetLatticeElement):
            return NotImplemented
        return self.family is other.family and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self.members)) + "}"


class MeetVariant(enum.Enum):
    FULL = "full"
    BARE = "bare"


def _same_family(F: Optional[FilterFamily], *xs: SetLatticeElement) -> FilterFamily:
    fam = F if F is not None else xs[0].family
    for x in xs:
        if x.family is not fam:
            raise FamilyMismatch("operands belong to different filter families")
    return fam


class _Hulls:
    """Per-family tables: for filters i, j the mask of all Z containing
    ``X_i & X_j`` (``cap``) or ``X_i | X_j`` (``cup``)."""

    def __init__(self, F: FilterFamily):
        masks = F.masks()
        k = len(masks)

        def above(s):
            return sum(1 << z for z in range(k) if s & ~masks[z] == 0)

        self.cap = tuple(tuple(above(masks[i] & masks[j]) for j in range(k)) for i in range(k))
        self.cup = tuple(tuple(above(masks[i] | masks[j]) for j in range(k)) for i in range(k))


_HULLS: "weakref.WeakKeyDictionary[FilterFamily, _Hulls]" = weakref.WeakKeyDictionary()


def _hulls(F: FilterFamily) -> _Hulls:
    h = _HULLS.get(F)
    if h is None:
        h = _HULLS[F] = _Hulls(F)
    return h


def _exists(table, A: int, B: int) -> int:
    out = 0
    for i in _bits(A):
        row = table[i]
        for j in _bits(B):
            out |= row[j]
    return out


def point_map(L: Lattice, F: FilterFamily, a: int) -> SetLatticeElement:
    if F.lattice is not L:
        raise FamilyMismatch("family belongs to a different lattice")
    L._check(a)
    return SetLatticeElement(F, F.containing[a])


def meet_star(A: SetLatticeElement, B: SetLatticeElement) -> SetLatticeElement:
    fam = _same_family(None, A, B)
    return SetLatticeElement(fam, A.mask & B.mask)


def join_star(F: FilterFamily, A: SetLatticeElement, B: SetLatticeElement) -> SetLatticeElement:
    fam = _same_family(F, A, B)
    return SetLatticeElement(fam, A.mask | B.mask | _exists(_hulls(fam).cap, A.mask, B.mask))


def join_star2(F: FilterFamily, A: SetLatticeElement, B: SetLatticeElement) -> SetLatticeElement:
    fam = _same_family(F, A, B)
    return SetLatticeElement(fam, _exists(_hulls(fam).cap, A.mask, B.mask))


def meet_star_symmetric(
    F: FilterFamily,
    A: SetLatticeElement,
    B: SetLatticeElement,
    variant: MeetVariant = MeetVariant.FULL,
) -> SetLatticeElement:
    fam = _same_family(F, A, B)
    bare = _exists(_hulls(fam).cup, A.mask, B.mask)
    if MeetVariant(variant) is MeetVariant.FULL:
        return SetLatticeElement(fam, A.mask & B.mask & bare)
    return SetLatticeElement(fam, bare)


@dataclass(frozen=True, eq=False)
class Representation:
    lattice: Lattice
    family: FilterFamily
    image: tuple

    def f(self, a: int) -> SetLatticeElement:
        self.lattice._check(a)
        return self.image[a]

    @cached_property
    def carrier(self) -> frozenset:
        """The image set ``D*``."""
        return frozenset(x.mask for x in self.image)

    def is_injective(self) -> bool:
        return len(self.carrier) == self.lattice.size


def build_representation(L: Lattice, F: FilterFamily) -> Representation:
    return Representation(L, F, tuple(point_map(L, F, a) for a in L.elements))


@dataclass(frozen=True)
class Counterexample:
    a: int
    b: int
    a_name: str
    b_name: str
    left: tuple
    right: tuple
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "a": self.a_name,
            "b": self.b_name,
            "left": list(self.left),
            "right": list(self.right),
            "note": self.note,
        }


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    holds: bool
    pairs_checked: int
    counterexample: Optional[Counterexample] = None
    detail: str = ""

    def __post_init__(self):
        assert self.holds == (self.counterexample is None)

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "holds": self.holds,
            "pairs_checked": self.pairs_checked,
            "counterexample": self.counterexample.as_dict() if self.counterexample else None,
            "detail": self.detail,
        }


def canonical_pairs(L: Lattice):
    """All ordered pairs ``(a, b)``: ``b`` rising and ``a`` falling through
    the lattice's linear extension.  Counterexamples are always the first
    failing pair in this order."""
    order = L.linear_order
    for b in order:
        for a in reversed(order):
            yield a, b


def _check_pairs(L, claim, lhs, rhs, note="") -> VerificationReport:
    n = L.size
    for a, b in canonical_pairs(L):
        left, right = lhs(a, b), rhs(a, b)
        if left.mask != right.mask:
            cx = Counterexample(a, b, L.names[a], L.names[b], left.members, right.members, note)
            return VerificationReport(claim, False, n * n, cx)
    return VerificationReport(claim, True, n * n)


def verify_prop1(L: Lattice, F: FilterFamily) -> tuple:
    """Check ``f(a) ^* f(b) = f(a ^ b)`` and ``f(a) v* f(b) = f(a v b)`` on all pairs.

    For the All and Principal families both must hold; for Custom families
    the reports are informative only.
    """
    rep = build_representation(L, F)
    f = rep.image
    m, j = L.meet_table, L.join_table
    meets = _check_pairs(L, "prop1.meet", lambda a, b: meet_star(f[a], f[b]), lambda a, b: f[m[a][b]])
    joins = _check_pairs(L, "prop1.join", lambda a, b: join_star(F, f[a], f[b]), lambda a, b: f[j[a][b]])
    if F.kind in (FamilyKind.ALL, FamilyKind.PRINCIPAL):
        assert meets.holds and joins.holds, "library defect: point map must preserve meet and join for this family"
    return meets, joins


def verify_iso(L: Lattice, F: FilterFamily) -> VerificationReport:
    """Is ``a -> f(a)`` a lattice isomorphism onto its image?"""
    rep = build_representation(L, F)
    pair = unseparated_pair(L, F)
    assert rep.is_injective() == (pair is None)
    n = L.size
    if pair is not None:
        a, b = pair
        note = "f not injective"
        if len(F) == 0:
            note += f"; {F.kind.value} family empty"
        cx = Counterexample(a, b, L.names[a], L.names[b], rep.image[a].members, rep.image[b].members, note)
        return VerificationReport("iso", False, n * n, cx)
    meets, joins = verify_prop1(L, F)
    for r in (meets, joins):
        if not r.holds:
            return VerificationReport("iso", False, n * n, r.counterexample, detail=r.claim)
    return VerificationReport("iso", True, n * n)


def verify_prop2(L: Lattice) -> VerificationReport:
    """Over prime filters of a distributive lattice, ``v*`` is plain union."""
    if not is_distributive(L):
        raise NotDistributive("prime-filter collapse applies to distributive lattices only")
    F = prime_filters(L)
    f = build_representation(L, F).image
    return _check_pairs(
        L,
        "prop2",
        lambda a, b: join_star(F, f[a], f[b]),
        lambda a, b: SetLatticeElement(F, f[a].mask | f[b].mask),
    )


def veestar2_prime_gap(L: Lattice) -> Optional[tuple]:
    """Find ``(a, b, Z)`` with ``Z`` in ``f(a v b)`` but not in ``f(a) v** f(b)``.

    The family is the prime filters.  Pairs are scanned in
    ``canonical_pairs`` order, so the first hit pairs a high ``a`` with a
    low ``b``.
    """
    if not is_distributive(L):
        raise NotDistributive("the v** gap is studied on distributive lattices")
    F = prime_filters(L)
    f = build_representation(L, F).image
    for a, b in canonical_pairs(L):
        gap = f[L.join_table[a][b]].mask & ~join_star2(F, f[a], f[b]).mask
        if gap:
            return (a, b, F[next(_bits(gap))])
    return None


def check_coincidence(L: Lattice, F: FilterFamily, force: bool = False) -> VerificationReport:
    """``v*`` and ``v**`` agree on the image of ``f``."""
    if F.kind not in (FamilyKind.ALL, FamilyKind.PRINCIPAL) and not force:
        raise KindUnsupported(f"coincidence is only claimed for all/principal families, not {F.kind.value}")
    f = build_representation(L, F).image
    return _check_pairs(
        L, "coincidence",
        lambda a, b: join_star(F, f[a], f[b]),
        lambda a, b: join_star2(F, f[a], f[b]),
    )


def check_symmetry(L: Lattice, F: FilterFamily) -> tuple:
    """Both symmetric meets equal ``f(a) & f(b)`` on image pairs."""
    f = build_representation(L, F).image
    return tuple(
        _check_pairs(
            L, f"symmetry.{v.value}",
            lambda a, b, v=v: meet_star_symmetric(F, f[a], f[b], v),
            lambda a, b: meet_star(f[a], f[b]),
        )
        for v in MeetVariant
    )


def replay(L: Lattice, F: FilterFamily, report: VerificationReport) -> bool:
    """Recompute both sides of a report's counterexample; True iff they
    still witness a failure of the claim."""
    cx = report.counterexample
    if cx is None:
        return False
    a, b = L.index(cx.a_name), L.index(cx.b_name)
    f = build_representation(L, F).image
    claim = report.claim if report.claim != "iso" or not report.detail else report.detail
    if claim == "iso":
        return a != b and f[a].mask == f[b].mask
    lhs = {
        "prop1.meet": lambda: meet_star(f[a], f[b]),
        "prop1.join": lambda: join_star(F, f[a], f[b]),
        "prop2": lambda: join_star(F, f[a], f[b]),
        "coincidence": lambda: join_star(F, f[a], f[b]),
        "symmetry.full": lambda: meet_star_symmetric(F, f[a], f[b], MeetVariant.FULL),
        "symmetry.bare": lambda: meet_star_symmetric(F, f[a], f[b], MeetVariant.BARE),
    }[claim]()
    rhs = {
        "prop1.meet": lambda: f[L.meet_table[a][b]],
        "prop1.join": lambda: f[L.join_table[a][b]],
        "prop2": lambda: SetLatticeElement(F, f[a].mask | f[b].mask),
        "coincidence": lambda: join_star2(F, f[a], f[b]),
        "symmetry.full": lambda: meet_star(f[a], f[b]),
        "symmetry.bare": lambda: meet_star(f[a], f[b]),
    }[claim]()
    return lhs.members == cx.left and rhs.members == cx.right and lhs.mask != rhs.mask
