"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
pytest terminal summary under "acceptance criteria"."""
import itertools
import json
import time
import warnings
from pathlib import Path

import pytest

from latrep import (MeetVariant, SetLatticeElement, all_filters, build_representation, check_coincidence,
                    check_symmetry, enumerate_lattices, is_distributive, is_filter, is_separating, join_star,
                    join_star2, meet_star, meet_star_symmetric, point_map, prime_filters, principal_filters,
                    random_lattice, union_closure_witness, veestar2_prime_gap, verify_iso, verify_prop1,
                    verify_prop2)
from latrep import fixtures as fx
from latrep.filters import search_filters

import oracles

ORACLE = json.loads((Path(__file__).parent / "fixtures" / "census_oracle.json").read_text())
SOAK_SEEDS = range(1000)
SOAK_DENSITIES = (0.3, 0.5, 0.7)


@pytest.fixture(scope="module")
def classes():
    """The 78 classes, each size checked against the oracle fixture before use."""
    start = time.perf_counter()
    out = []
    for row in ORACLE["sizes"]:
        lats = enumerate_lattices(row["size"])
        assert len(lats) == row["lattices"], f"enumerator disagrees with oracle at n={row['size']}"
        out.extend(lats)
    assert len(out) == 78
    return out, time.perf_counter() - start


def test_criterion_1_meet_join_preserved_exhaustive(classes, acceptance_line):
    lats, setup = classes
    start = time.perf_counter()
    failures = 0
    pairs = 0
    for L in lats:
        for F in (all_filters(L), principal_filters(L)):
            meets, joins = verify_prop1(L, F)
            failures += (not meets.holds) + (not joins.holds)
            pairs += meets.pairs_checked
    elapsed = setup + time.perf_counter() - start
    ok = failures == 0 and elapsed < 120
    acceptance_line(1, ok, f"meet/join preservation on 78 classes x {{all, principal}}: {pairs} pairs, "
                           f"{failures} failures, {elapsed:.1f}s (< 120s)")
    assert failures == 0
    assert elapsed < 120


def test_criterion_2_isomorphism(classes, acceptance_line):
    lats, _ = classes
    failed = [L for L in lats if not verify_iso(L, all_filters(L)).holds]
    acceptance_line(2, not failed, f"verify_iso with all filters: {len(lats) - len(failed)}/{len(lats)} hold")
    assert not failed


def test_criterion_3_prime_join_is_union(classes, acceptance_line):
    lats, _ = classes
    dist = [L for L in lats if is_distributive(L)]
    failures = 0
    for L in dist:
        P = prime_filters(L)
        f = build_representation(L, P).image
        failures += not verify_prop2(L).holds
        for a, b in itertools.product(L.elements, repeat=2):
            extra = join_star2(P, f[a], f[b]).mask & ~(f[a].mask | f[b].mask)
            failures += join_star(P, f[a], f[b]).mask != f[a].mask | f[b].mask
            failures += extra != 0
    acceptance_line(3, failures == 0, f"prime-filter join = union on {len(dist)} distributive classes: {failures} failures")
    assert failures == 0


def test_criterion_4_stone_boundary(classes, acceptance_line):
    lats, _ = classes
    nondist = [L for L in lats if not is_distributive(L)]
    exceptions = [L for L in nondist if is_separating(L, prime_filters(L))]
    m3 = fx.m3()
    m3_empty = len(prime_filters(m3)) == 0
    injective = [L for L in nondist if build_representation(L, prime_filters(L)).is_injective()]
    ok = not exceptions and not injective and m3_empty
    acceptance_line(4, ok, f"census: {len(nondist)} nondistributive classes, {len(exceptions)} with separating "
                           f"prime filters; M3 prime family empty: {m3_empty}")
    assert ok


def test_criterion_5_gap(acceptance_line):
    L = fx.chain2()
    a, b, Z = veestar2_prime_gap(L)
    P = prime_filters(L)
    z = P.index_of(Z)
    replays = (z in point_map(L, P, L.join_table[a][b])
               and z not in join_star2(P, point_map(L, P, a), point_map(L, P, b)))
    ok = (a, b) == (L.top, L.bottom) and replays
    acceptance_line(5, ok, f"CHAIN2 gap witness (a={L.names[a]}, b={L.names[b]}, Z={Z.names()}), replays: {replays}")
    assert ok


def test_criterion_6_coincidence_symmetry(classes, acceptance_line):
    lats, _ = classes
    failures = 0
    for L in lats:
        for F in (all_filters(L), principal_filters(L)):
            failures += not check_coincidence(L, F).holds
            failures += sum(not r.holds for r in check_symmetry(L, F))
    acceptance_line(6, failures == 0, f"coincidence + both symmetric meets, 78 classes x 2 families: {failures} failures")
    assert failures == 0


def test_criterion_7_union_non_closure(classes, acceptance_line):
    lats, _ = classes
    b2, chain3 = fx.b2(), fx.chain3()
    on_b2 = union_closure_witness(b2, all_filters(b2)) is not None
    on_chain3 = union_closure_witness(chain3, all_filters(chain3)) is None
    found = bad = 0
    for L in lats:
        w = union_closure_witness(L, all_filters(L))
        if w is not None:
            found += 1
            bad += is_filter(L, w[0].mask | w[1].mask)
    ok = on_b2 and on_chain3 and bad == 0
    acceptance_line(7, ok, f"B2 witness: {on_b2}; CHAIN3 none: {on_chain3}; {found} witnesses over 78 classes, "
                           f"{bad} fail to replay")
    assert ok


def _core_invariants(L):
    m, j, r = L.meet_table, L.join_table, L.elements
    for a in r:
        if not (L.leq(L.bottom, a) and L.leq(a, L.top) and m[a][a] == a and j[a][a] == a):
            return False
        for b in r:
            if m[a][b] != m[b][a] or j[a][b] != j[b][a]:
                return False
            if m[a][j[a][b]] != a or j[a][m[a][b]] != a:
                return False
            if L.leq(a, b) != (m[a][b] == a) or L.leq(a, b) != (j[a][b] == b):
                return False
            for c in r:
                if m[m[a][b]][c] != m[a][m[b][c]] or j[j[a][b]][c] != j[a][j[b][c]]:
                    return False
    return True


def _soak(seed):
    L = random_lattice(1 + seed % 8, SOAK_DENSITIES[seed % 3], seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        A, P = all_filters(L), principal_filters(L)
        collapse = sorted(search_filters(L)) == sorted(P.masks()) and A.masks() == P.masks()
        prop1 = all(all(verify_prop1(L, F)) for F in (A, P))
        coinc = all(check_coincidence(L, F).holds for F in (A, P))
    return (L.size, L.names, _core_invariants(L), collapse, prop1, coinc)


def test_criterion_8_random_soak(acceptance_line):
    results = [_soak(s) for s in SOAK_SEEDS]
    failures = [s for s, r in zip(SOAK_SEEDS, results) if not all(r[2:])]
    deterministic = [_soak(s) for s in SOAK_SEEDS[:50]] == results[:50]
    nondist = sum(not is_distributive(random_lattice(1 + s % 8, SOAK_DENSITIES[s % 3], s)) for s in SOAK_SEEDS)
    ok = not failures and deterministic
    acceptance_line(8, ok, f"1000 random lattices (k<=8, max size {max(r[0] for r in results)}, "
                           f"{nondist} nondistributive): {len(failures)} failures; deterministic: {deterministic}")
    assert ok


def test_criterion_9_oracle_equivalence(acceptance_line):
    checked = mismatches = 0
    for name in ("CHAIN2", "CHAIN3", "B2", "M3", "N5"):
        L = fx.NAMED[name]()
        for F in (all_filters(L), principal_filters(L), prime_filters(L)):
            fam = [frozenset(X) for X in F]

            def sets(x):
                return {fam[i] for i in x}

            elems = [SetLatticeElement(F, m) for m in range(1 << len(F))]
            for A, B in itertools.product(elems, repeat=2):
                sa, sb = sets(A), sets(B)
                pairs = (
                    (join_star(F, A, B), oracles.naive_join_star(fam, sa, sb)),
                    (join_star2(F, A, B), oracles.naive_join_star2(fam, sa, sb)),
                    (meet_star_symmetric(F, A, B, MeetVariant.FULL), oracles.naive_meet_full(fam, sa, sb)),
                    (meet_star_symmetric(F, A, B, MeetVariant.BARE), oracles.naive_meet_bare(fam, sa, sb)),
                    (meet_star(A, B), sa & sb),
                )
                for fast, slow in pairs:
                    checked += 1
                    mismatches += sets(fast) != slow
            for a in L.elements:
                mismatches += sets(point_map(L, F, a)) != oracles.naive_point_map(fam, a)
    acceptance_line(9, mismatches == 0, f"naive triple-loop oracle vs optimized on 5 fixtures: "
                                        f"{checked} comparisons, {mismatches} mismatches")
    assert mismatches == 0
