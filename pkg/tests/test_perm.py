import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidrack import groups as G
from braidrack import perm as P
from braidrack.errors import PreconditionError, ResourceError


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


@st.composite
def perm_pair(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return draw(perms(n)), draw(perms(n))


# -- arithmetic ----------------------------------------------------------


@given(perm_pair())
def test_compose_is_right_action(pq):
    p, q = pq
    r = P.compose(p, q)
    assert all(r[i] == q[p[i]] for i in range(len(p)))


@given(perm_pair())
def test_inverse_and_sign_homomorphism(pq):
    p, q = pq
    assert P.is_identity(P.compose(p, P.inverse(p)))
    assert P.sign(P.compose(p, q)) == P.sign(p) * P.sign(q)


@given(perm_pair())
def test_cycles_round_trip(pq):
    p, _ = pq
    assert P.from_cycles(P.cycles(p), len(p)) == p
    assert sum(P.cycle_type(p)) == len(p)
    assert P.order(p) == math.lcm(*P.cycle_type(p))


def test_parse_cycles_is_one_based():
    assert P.parse_cycles("(1 2 3)", 4) == (1, 2, 0, 3)
    assert P.format_cycles((1, 2, 0, 3)) == "(1 2 3)"
    assert P.parse_cycles("()", 3) == (0, 1, 2)
    assert P.parse_perm_list("(1 2);(1 2 3)", 3) == [(1, 0, 2), (1, 2, 0)]
    with pytest.raises(PreconditionError):
        P.parse_cycles("(0 1)")
    with pytest.raises(PreconditionError):
        P.parse_cycles("1 2")


# -- Schreier-Sims -----------------------------------------------------------


def test_bsgs_examples():
    assert P.PermGroup([P.from_cycles([(0, 1)], 3), P.from_cycles([(0, 1, 2)], 3)], 3).order == 6
    assert P.PermGroup([], 4).order == 1
    assert P.PermGroup([P.from_cycles([(0, 1, 2, 3, 4)], 5)]).order == 5


def test_bsgs_rejects_mixed_degrees():
    with pytest.raises(PreconditionError):
        P.PermGroup([(1, 0), (1, 2, 0)])


def test_bsgs_order_matches_closure_200_random_sets():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(1, 7)
        gens = []
        for _ in range(rng.randint(0, 3)):
            pts = list(range(n))
            rng.shuffle(pts)
            gens.append(tuple(pts))
        g = P.PermGroup(gens, n)
        assert g.order == len(P.brute_force_closure(gens, n))


@pytest.mark.parametrize("seed", range(12))
def test_bsgs_order_matches_closure_degree_8_9(seed):
    # sparse generators keep the closure small enough to enumerate
    rng = random.Random(seed)
    n = 8 + seed % 2
    gens = []
    for _ in range(2):
        a, b, c = rng.sample(range(n), 3)
        gens.append(P.from_cycles([(a, b, c)] if rng.random() < 0.5 else [(a, b)], n))
    g = P.PermGroup(gens, n)
    assert g.order == len(P.brute_force_closure(gens, n))


def test_order_is_product_of_basic_orbits():
    g = P.symmetric_group(7)
    assert g.order == math.prod(g.basic_orbit_lengths()) == 5040
    assert all(g.contains(s) for s in g.generators)


def test_order_beyond_64_bits():
    assert P.symmetric_group(30).order == math.factorial(30)


def test_contains_examples():
    a4 = P.alternating_group(4)
    assert a4.contains(P.from_cycles([(0, 1, 2)], 4))
    assert not a4.contains(P.from_cycles([(0, 1)], 4))
    assert P.PermGroup([], 3).contains(P.identity(3))
    with pytest.raises(PreconditionError):
        a4.contains(P.identity(5))


def test_contains_agrees_with_closure():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 8)
        gens = [P.from_cycles([tuple(rng.sample(range(n), rng.randint(2, min(n, 4))))], n)
                for _ in range(rng.randint(1, 2))]
        g = P.PermGroup(gens, n)
        closure = P.brute_force_closure(gens, n)
        for _ in range(30):
            pts = list(range(n))
            rng.shuffle(pts)
            assert g.contains(tuple(pts)) == (tuple(pts) in closure)
        assert set(g.elements()) == closure


# -- classification in block products --------------------------------------------


def test_classify_examples():
    blocks = P.BlockStructure.consecutive([3, 2])
    s3s2 = P.PermGroup([P.from_cycles([(0, 1)], 5), P.from_cycles([(0, 1, 2)], 5),
                        P.from_cycles([(3, 4)], 5)], 5)
    c = P.classify_in_product(s3s2, blocks)
    assert c.is_full_product and c.sign_image_rank == 2

    c = P.classify_in_product(P.alternating_group(5), P.BlockStructure.consecutive([5]))
    assert c.contains_alt_product and not c.is_full_product and c.inside_even_part

    h = P.PermGroup([P.from_cycles([(0, 1), (2, 3)], 4)], 4)
    c = P.classify_in_product(h, P.BlockStructure.consecutive([2, 2]))
    assert c.respects_blocks and c.sign_image_rank == 1


def test_classify_degree_mismatch():
    with pytest.raises(PreconditionError):
        P.classify_in_product(P.symmetric_group(4), P.BlockStructure.consecutive([2, 3]))


def test_classify_implications_on_random_subgroups():
    rng = random.Random(3)
    blocks = P.BlockStructure.consecutive([3, 3])
    for _ in range(100):
        gens = []
        for _ in range(rng.randint(1, 3)):
            a, b = list(range(3)), list(range(3))
            rng.shuffle(a)
            rng.shuffle(b)
            gens.append(tuple(a) + tuple(3 + v for v in b))
        h = P.PermGroup(gens, 6)
        c = P.classify_in_product(h, blocks)   # asserts the implications itself
        if c.is_full_product:
            assert c.contains_alt_product
        if c.contains_alt_product:
            assert c.order * 4 >= 36


# -- homogeneity ---------------------------------------------------------------


def _naive_homogeneous(h, k):
    n = h.degree
    subsets = {frozenset(s) for s in itertools.combinations(range(n), k)}
    start = frozenset(range(k))
    orbit = {frozenset(g[i] for i in start) for g in h.elements()}
    return orbit == subsets


def test_k_homogeneous_examples():
    assert P.k_homogeneous(P.symmetric_group(6), 3)
    assert P.k_homogeneous(P.alternating_group(4), 2)
    assert not P.k_homogeneous(P.cyclic_group(4), 2)
    with pytest.raises(PreconditionError):
        P.k_homogeneous(P.cyclic_group(4), 5)


def test_k_homogeneous_against_naive_and_transitivity():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 6)
        gens = []
        for _ in range(rng.randint(1, 2)):
            pts = list(range(n))
            rng.shuffle(pts)
            gens.append(tuple(pts))
        h = P.PermGroup(gens, n)
        for k in range(0, n + 1):
            hom = P.k_homogeneous(h, k)
            assert hom == _naive_homogeneous(h, k)
            if hom and 1 <= k < n:
                assert P.k_homogeneous(h, 1)


def test_homogeneity_dichotomy_examples():
    v = P.check_homogeneity_dichotomy(P.symmetric_group(6))
    assert v.homogeneous and v.is_symmetric and v.consistent
    v = P.check_homogeneity_dichotomy(P.cyclic_group(5))
    assert not v.homogeneous and v.consistent
    v = P.check_homogeneity_dichotomy(P.alternating_group(7))
    assert v.k == 3 and v.homogeneous and v.is_alternating and v.consistent


def test_affine_group_of_degree_five_breaks_the_dichotomy():
    """AGL(1,5) is sharply 2-transitive, so 2-homogeneous, yet of order 20."""
    agl = P.PermGroup([(1, 2, 3, 4, 0), (0, 2, 4, 1, 3)], 5)
    v = P.check_homogeneity_dichotomy(agl)
    assert agl.order == 20
    assert v.homogeneous and not v.is_an_or_sn and not v.consistent


# -- invariable generation ------------------------------------------------------


def test_invariable_generation_examples():
    s3 = [P.from_cycles([(0, 1)], 5), P.from_cycles([(0, 1, 2)], 5)]
    c5 = [P.from_cycles([(0, 1, 2, 3, 4)], 5)]
    assert P.invariably_generates([s3, c5])
    assert not P.invariably_generates([[P.from_cycles([(0, 1)], 4)], [P.from_cycles([(2, 3)], 4)]])
    assert P.invariably_generates([P.symmetric_group(5).generators])


def test_invariable_generation_sampled_is_seeded():
    s3 = [P.from_cycles([(0, 1)], 5), P.from_cycles([(0, 1, 2)], 5)]
    c5 = [P.from_cycles([(0, 1, 2, 3, 4)], 5)]
    assert P.invariably_generates([s3, c5], mode="sampled", samples=50, seed=1)
    bad = [[P.from_cycles([(0, 1)], 4)], [P.from_cycles([(2, 3)], 4)]]
    assert not P.invariably_generates(bad, mode="sampled", samples=200, seed=5)


def test_invariable_generation_budget():
    with pytest.raises(ResourceError):
        P.invariably_generates([[P.identity(9)], [P.identity(9)]])


def test_invariable_generation_against_naive_degree_4():
    """Compare with conjugating both subgroups independently over all of S_4."""
    rng = random.Random(0)
    allp = list(itertools.permutations(range(4)))
    for _ in range(15):
        a = [tuple(rng.sample(range(4), 4))]
        b = [tuple(rng.sample(range(4), 4))]
        naive = all(
            P.PermGroup([P.conjugate(a[0], g), P.conjugate(b[0], h)], 4).order == 24
            for g in allp for h in allp)
        assert P.invariably_generates([a, b]) == naive


# -- product criterion ----------------------------------------------------------


def test_product_criterion_examples():
    a5 = G.alternating(5)
    diag = [(g, g) for g in range(a5.order)]
    v = P.product_criterion(diag, [a5, a5])
    assert v.projects_onto_factors and not v.projects_onto_isomorphic_pairs
    assert not v.is_full_product and v.consistent

    s3, s4 = G.symmetric(3), G.symmetric(4)
    gens = [(g, s4.identity) for g in range(6)] + [(s3.identity, g) for g in range(24)]
    v = P.product_criterion(gens, [s3, s4])
    assert v.conditions_hold and v.is_full_product and v.consistent

    sgn = [P.sign(s3.labels[g]) for g in range(6)]
    kernel = [(a, b) for a in range(6) for b in range(6) if sgn[a] * sgn[b] == 1]
    v = P.product_criterion(kernel, [s3, s3])
    assert v.order == 18 and not v.abelianization_surjective and v.consistent


def test_product_criterion_consistent_on_random_subgroups():
    rng = random.Random(9)
    s3, c2 = G.symmetric(3), G.cyclic(2)
    for factors in ([s3, s3], [s3, c2], [s3, s3, c2]):
        for _ in range(25):
            gens = [tuple(rng.randrange(f.order) for f in factors) for _ in range(rng.randint(1, 3))]
            assert P.product_criterion(gens, factors).consistent


def test_product_criterion_rejects_non_group():
    with pytest.raises(PreconditionError):
        P.product_criterion([(0,)], [[[0, 1], [1, 0]]])


# -- cycle-type frequencies -----------------------------------------------------


def test_cycle_type_frequencies_against_enumeration():
    h = P.symmetric_group(4)
    freq = P.cycle_type_frequencies(h)
    counts = {}
    for g in itertools.permutations(range(4)):
        key = (P.cycle_type(g),)
        counts[key] = counts.get(key, 0) + 1
    assert freq == {k: Fraction(v, 24) for k, v in counts.items()}
    assert sum(freq.values()) == 1
