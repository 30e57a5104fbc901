"""Run every claim on one lattice and tally the outcomes over a census."""
from __future__ import annotations

from .core import Lattice, is_distributive
from .filters import (all_filters, is_filter, is_separating, prime_filters, principal_filters,
                      union_closure_witness)
from .generate import MAX_ENUM_SIZE, enumerate_lattices
from .errors import SizeTooLarge
from .representation import check_coincidence, check_symmetry, verify_iso, verify_prop1, verify_prop2

CLAIMS = (
    "collapse",
    "prop1.all",
    "prop1.principal",
    "iso.all",
    "coincidence.all",
    "coincidence.principal",
    "symmetry.all",
    "symmetry.principal",
    "prop2",
    "stone_boundary",
    "union_witness_replays",
)


def audit_lattice(L: Lattice) -> dict:
    """Claim name -> True / False, or None where the claim does not apply."""
    A, P, primes = all_filters(L), principal_filters(L), prime_filters(L)
    out = {"collapse": A.masks() == P.masks()}
    for label, F in (("all", A), ("principal", P)):
        try:
            out[f"prop1.{label}"] = all(verify_prop1(L, F))
        except AssertionError:
            out[f"prop1.{label}"] = False
        out[f"coincidence.{label}"] = check_coincidence(L, F).holds
        out[f"symmetry.{label}"] = all(check_symmetry(L, F))
    try:
        out["iso.all"] = verify_iso(L, A).holds
    except AssertionError:
        out["iso.all"] = False
    distributive = is_distributive(L)
    out["prop2"] = verify_prop2(L).holds if distributive else None
    out["stone_boundary"] = distributive == is_separating(L, primes)
    w = union_closure_witness(L, A)
    out["union_witness_replays"] = w is None or not is_filter(L, w[0].mask | w[1].mask)
    return out


def census_report(max_size: int) -> dict:
    if max_size > MAX_ENUM_SIZE:
        raise SizeTooLarge(f"census is bounded at {MAX_ENUM_SIZE} elements")
    sizes = []
    for n in range(1, max_size + 1):
        lats = enumerate_lattices(n)
        tally = {c: {"pass": 0, "fail": 0, "skipped": 0} for c in CLAIMS}
        for L in lats:
            for claim, ok in audit_lattice(L).items():
                tally[claim]["skipped" if ok is None else "pass" if ok else "fail"] += 1
        sizes.append({
            "size": n,
            "lattices": len(lats),
            "distributive": sum(is_distributive(L) for L in lats),
            "claims": tally,
        })
    return {"max_size": max_size, "sizes": sizes}
