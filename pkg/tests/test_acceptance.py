"""Acceptance criteria 1 to 11.

Each check returns ``(ok, detail)``; the tests record a PASS/FAIL line per
criterion.  Run this file directly to print only those lines.
"""

import random
import time
from itertools import combinations

from simplicial_torsion.collapse import collapse_step, free_faces, greedy_collapse
from simplicial_torsion.complex import close_downward, closed_star, full_simplex, intersect, simplex_boundary
from simplicial_torsion.corpus import (
    random_complex,
    random_connected_complex,
    random_expansion,
    random_labeling,
    random_map,
    random_surjective_map,
    random_two_piece_cover,
    rp2,
)
from simplicial_torsion.cover import twisted_chain_complex
from simplicial_torsion.errors import NotAPiHomologyEquivalence
from simplicial_torsion.groupring import WhiteheadClass, inverse, parse_element, wh_equal
from simplicial_torsion.homology import cone_of_map, reduced_homology
from simplicial_torsion.localprofile import check_composition_formula, check_sum_formula, is_locally_acyclic
from simplicial_torsion.simpmap import SimplicialMap, compose, identity, inclusion, last_vertex_map
from simplicial_torsion.torsion import (
    BasedAcyclicComplex,
    chain_contraction_rational,
    mapping_cone_zg,
    perturb_contraction,
    random_eta,
    torsion_of_based_acyclic,
    two_term_complex,
    whitehead_torsion,
)

SEED = 20240611
KITE = close_downward([[0, 1, 2], [2, 3]])


def _nontrivial(groups):
    return {i: str(H) for i, H in groups.items() if not H.is_trivial()}


def check_1(seed=SEED):
    start = time.perf_counter()
    ok = True
    for d in range(6):
        ok &= _nontrivial(reduced_homology(simplex_boundary(range(d + 2)))) == {d: "Z"}
    H = reduced_homology(rp2())
    ok &= str(H[1]) == "Z/2" and H[2].is_trivial()
    elapsed = time.perf_counter() - start
    return ok and elapsed < 5, f"spheres d<=5 and RP2 exact, {elapsed:.2f}s"


def check_2(n_complexes=100, seed=SEED):
    rng = random.Random(seed)
    tried = differ = nonempty = 0
    for _ in range(n_complexes):
        K = random_complex(rng, rng.randint(3, 9), rng.randint(2, 5), 3)
        simplices = sorted(K.simplices)
        stars = {s: closed_star(K, s) for s in simplices}
        for r in (2, 3):
            for group in combinations(simplices, r):
                tried += 1
                common = intersect(*(stars[s] for s in group))
                top = tuple(sorted(set().union(*group)))
                predicted = stars[top] if top in K.simplices else None
                if predicted is not None:
                    differ += common.simplices != predicted.simplices
                else:
                    nonempty += not common.is_empty()
    circle = simplex_boundary(range(3))
    triple = intersect(*(closed_star(circle, (v,)) for v in range(3)))
    detail = (f"{differ + nonempty}/{tried} intersections off ({differ} differ from Star(union), "
              f"{nonempty} nonempty where the union is no simplex); "
              f"the vertex stars of the triangle boundary meet in {sorted(triple.simplices)}")
    return differ + nonempty == 0, detail


def check_3(n_complexes=100, seed=SEED):
    rng = random.Random(seed + 3)
    bad = 0
    for _ in range(n_complexes):
        K = random_connected_complex(rng, rng.randint(3, 7), rng.randint(2, 6), 3)
        n = rng.randint(1, 8)
        if twisted_chain_complex(random_labeling(rng, K, n)).boundary_squared_defects():
            bad += 1
    return bad == 0, f"{n_complexes} labeled complexes, {bad} with d^2 != 0"


def check_4(seed=SEED):
    u = parse_element("t + t^4 - 1", 5)
    v = parse_element("t^2 + t^3 - 1", 5)
    one = parse_element("1", 5)
    ok = u * v == one and inverse(u) == v and inverse(v) == u and not wh_equal(u, one)
    return ok, "(t+t^4-1)(t^2+t^3-1) = 1, inverse recovers it, class nontrivial"


def check_5(n_expansions=20, seed=SEED):
    start = time.perf_counter()
    rng = random.Random(seed + 5)
    ok = True
    for n in (1, 2, 3, 5, 6):
        K = random_connected_complex(rng, 5, 4, 2)
        ok &= whitehead_torsion(identity(K), random_labeling(rng, K, n)).is_trivial()
    for _ in range(n_expansions):
        K = random_connected_complex(rng, 5, 3, 2)
        _, inc, _ = random_expansion(rng, K)
        ok &= whitehead_torsion(inc).is_trivial()
    u = parse_element("t + t^4 - 1", 5)
    tau = torsion_of_based_acyclic(two_term_complex(u))
    ok &= tau in (WhiteheadClass(u), WhiteheadClass(inverse(u)))
    elapsed = time.perf_counter() - start
    return ok and elapsed < 10, f"identities, {n_expansions} expansions, two-term class; {elapsed:.2f}s"


def _accepted_cones(rng):
    for n in (1, 2, 3, 5):
        K = random_connected_complex(rng, 5, 3, 2)
        yield mapping_cone_zg(identity(K), random_labeling(rng, K, n))
    for K in (full_simplex(range(3)), KITE):
        yield mapping_cone_zg(last_vertex_map(K), n=3)
    K = random_connected_complex(rng, 4, 3, 2)
    L, inc, _ = random_expansion(rng, K)
    yield mapping_cone_zg(inc, random_labeling(rng, L, 4))
    yield two_term_complex(parse_element("t + t^4 - 1", 5))


def check_6(n_eta=10, seed=SEED):
    rng = random.Random(seed + 6)
    cones = list(_accepted_cones(rng))
    bad = 0
    for C in cones:
        base = chain_contraction_rational(C)
        expected = torsion_of_based_acyclic(C, base)
        for _ in range(n_eta):
            if torsion_of_based_acyclic(C, perturb_contraction(C, base, random_eta(C, rng))) != expected:
                bad += 1
    return bad == 0, f"{len(cones)} cones x {n_eta} perturbations, {bad} disagreements"


def check_7(seed=SEED):
    ok = True
    for K in (full_simplex(range(3)), simplex_boundary(range(4)), KITE):
        f = last_vertex_map(K)
        ok &= bool(is_locally_acyclic(f)) and whitehead_torsion(f).is_trivial()
    u, v = 10, 11
    squash = SimplicialMap(simplex_boundary(range(3)), full_simplex([u, v]), {0: u, 1: v, 2: v})
    verdict = is_locally_acyclic(squash)
    ok &= not verdict and verdict.witness == (u, v)
    return ok, f"last-vertex maps locally acyclic with trivial torsion; squash witness {verdict.witness}"


def check_8(n_instances=100, seed=SEED):
    rng = random.Random(seed + 8)
    exact_fail = euler_fail = 0
    for k in range(n_instances):
        X = random_connected_complex(rng, rng.randint(3, 6), rng.randint(2, 5), 2)
        f = random_surjective_map(rng, X, 3, 3, 2) if k % 2 else random_map(rng, X, 6, 5, 2)
        rep = check_sum_formula(f, *random_two_piece_cover(rng, X))
        exact_fail += not (rep.chain_maps_ok and all(d.exact for d in rep.degrees))
        euler_fail += not rep.euler_ok
    return exact_fail == euler_fail == 0, f"{n_instances} instances, {exact_fail} inexact, {euler_fail} Euler failures"


def check_9(n_pairs=50, seed=SEED):
    rng = random.Random(seed + 9)
    bad = 0
    for _ in range(n_pairs):
        X = random_connected_complex(rng, rng.randint(3, 5), 3, 2)
        f = random_map(rng, X, 5, 4, 2)
        g = random_map(rng, f.source, 5, 4, 2)
        chi = {h: cone_of_map(m).euler_characteristic() for h, m in (("f", f), ("g", g))}
        bad += cone_of_map(compose(g, f)).euler_characteristic() != chi["f"] + chi["g"]
        bad += not check_composition_formula(g, f).ok
    return bad == 0, f"{n_pairs} composable pairs, {bad} failures"


def check_10(n_complexes=60, seed=SEED):
    ok = True
    for n in range(6):
        final, seq = greedy_collapse(full_simplex(range(n + 1)))
        ok &= len(final) == 1 and len(seq) == (2 ** (n + 1) - 2) // 2
    ok &= free_faces(simplex_boundary(range(3))) == []
    rng = random.Random(seed + 10)
    moves = bad = 0
    for _ in range(n_complexes):
        K = random_complex(rng, rng.randint(3, 7), rng.randint(2, 5), 3)
        expected = _nontrivial(reduced_homology(K))
        cur = K
        for sigma, tau in greedy_collapse(K)[1]:
            cur = collapse_step(cur, sigma, tau)
            moves += 1
            bad += _nontrivial(reduced_homology(cur)) != expected
    return ok and bad == 0, f"simplex move counts exact, {moves} corpus moves, {bad} changed homology"


def check_11(n_maps=100, seed=SEED):
    rng = random.Random(seed + 11)
    accepted = rejected = bad = 0
    for k in range(n_maps):
        X = random_connected_complex(rng, rng.randint(2, 5), 3, 2)
        if k % 4 == 0:
            f = last_vertex_map(X)
        elif k % 4 == 1:
            f = random_surjective_map(rng, X, 2, 2, 2)
        elif k % 4 == 2:
            f = random_map(rng, X, 5, 4, 2)
        else:
            # the 1-skeleton misses every triangle, so its cone has homology
            f = inclusion(X.skeleton(1), X)
        if not f.source.is_connected():
            continue
        n = rng.randint(1, 4)
        C = mapping_cone_zg(f, random_labeling(rng, X, n))
        try:
            BasedAcyclicComplex(C)
        except NotAPiHomologyEquivalence as exc:
            rejected += 1
            bad += exc.group is None or exc.group.is_trivial()
        else:
            accepted += 1
            odd, even = C.odd_even_ranks()
            bad += odd != even
    return bad == 0 and accepted and rejected, f"{accepted} accepted, {rejected} rejected, {bad} violations"


CHECKS = {i: globals()[f"check_{i}"] for i in range(1, 12)}


def _run(verdict, i, seed):
    ok, detail = CHECKS[i](seed=seed)
    verdict(i, ok, detail)
    assert ok, detail


def test_criterion_1(verdict, seed):
    _run(verdict, 1, seed)


def test_criterion_2(verdict, seed):
    _run(verdict, 2, seed)


def test_criterion_3(verdict, seed):
    _run(verdict, 3, seed)


def test_criterion_4(verdict, seed):
    _run(verdict, 4, seed)


def test_criterion_5(verdict, seed):
    _run(verdict, 5, seed)


def test_criterion_6(verdict, seed):
    _run(verdict, 6, seed)


def test_criterion_7(verdict, seed):
    _run(verdict, 7, seed)


def test_criterion_8(verdict, seed):
    _run(verdict, 8, seed)


def test_criterion_9(verdict, seed):
    _run(verdict, 9, seed)


def test_criterion_10(verdict, seed):
    _run(verdict, 10, seed)


def test_criterion_11(verdict, seed):
    _run(verdict, 11, seed)


if __name__ == "__main__":
    for i, check in CHECKS.items():
        ok, detail = check()
        print(f"criterion {i:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
