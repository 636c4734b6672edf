import functools
import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrack import braid as B
from braidrack import groups as G
from braidrack import nielsen as N
from braidrack import perm as P
from braidrack.errors import PreconditionError, ResourceError

from conftest import naive_stabilizer_image


def test_d_normal_examples():
    assert N.d_normal(G.symmetric(3)) == 1
    assert N.d_normal(G.by_name("V4")) == 2
    assert N.d_normal(G.alternating(5)) == 1
    assert N.d_normal(G.cyclic(6)) == 1
    c2 = G.cyclic(2)
    assert N.d_normal(G.direct_product(G.direct_product(c2, c2), c2)) == 3


# -- enumeration -------------------------------------------------------------------


def test_enumerate_examples():
    s3 = G.symmetric(3)
    t = G.element_index(s3, "(1 2)")
    assert list(N.enumerate_nielsen(s3, [t], [2])) == []
    four = list(N.enumerate_nielsen(s3, [t], [4]))
    assert four and len(four) == N.count_nielsen_brute(s3, [t], [4])
    assert all(s3.prod(u) == s3.identity and s3.generates(u) for u in four)
    c2 = G.cyclic(2)
    for n in (1, 3, 5, 7):
        assert list(N.enumerate_nielsen(c2, [1], [n])) == []
    assert len(list(N.enumerate_nielsen(c2, [1], [4]))) == 1


def test_enumerate_yields_distinct_valid_tuples():
    s4 = G.symmetric(4)
    seeds = [G.element_index(s4, "(1 2)"), G.element_index(s4, "(1 2 3)")]
    classes = N.classes_from_seeds(s4, seeds)
    out = list(N.enumerate_nielsen(s4, seeds, [2, 2]))
    assert len(out) == len(set(out)) > 0
    for u in out:
        assert [sum(v in c for v in u) for c in classes] == [2, 2]
        assert s4.prod(u) == s4.identity and s4.generates(u)


CASES = [
    ("S3", ["(1 2)"], [3]), ("S3", ["(1 2)"], [4]), ("S3", ["(1 2)"], [5]),
    ("S3", ["(1 2)", "(1 2 3)"], [2, 1]), ("S3", ["(1 2)", "(1 2 3)"], [2, 2]),
    ("S4", ["(1 2)"], [4]), ("S4", ["(1 2)", "(1 2 3)"], [1, 2]),
    ("A4", ["(1 2 3)"], [3]), ("A4", ["(1 2 3)", "(1 3 2)"], [2, 2]),
    ("D8", ["(1 3)"], [4]), ("V4", [1, 2], [2, 2]),
]


def _group(name):
    return G.alternating(4) if name == "A4" else G.by_name(name)


@pytest.mark.parametrize("name,seeds,n_vec", CASES)
@pytest.mark.parametrize("product_one", [True, False])
def test_enumerate_matches_brute_force(name, seeds, n_vec, product_one):
    g = _group(name)
    idx = [s if isinstance(s, int) else G.element_index(g, s) for s in seeds]
    pool = sum(len(g.conjugacy_class(i)) for i in idx)
    assert pool ** sum(n_vec) <= 10 ** 6
    plain = list(N.enumerate_nielsen(g, idx, n_vec, product_one=product_one))
    assert len(plain) == N.count_nielsen_brute(g, idx, n_vec, product_one=product_one)
    quot = list(N.enumerate_nielsen(g, idx, n_vec, product_one=product_one, up_to_conj=True))
    assert len(quot) == N.count_nielsen_brute(g, idx, n_vec, product_one=product_one, up_to_conj=True)
    assert len(quot) * g.order >= len(plain)
    free = all(N.centralizer_size(g, u) == 1 for u in plain)
    assert (len(quot) * g.order == len(plain)) == free
    assert {N.conj_canonical(g, u) for u in plain} == set(quot)


def test_enumerate_rejects_bad_input():
    s3 = G.symmetric(3)
    t = G.element_index(s3, "(1 2)")
    with pytest.raises(PreconditionError):
        list(N.enumerate_nielsen(s3, [t, G.element_index(s3, "(1 3)")], [1, 1]))
    with pytest.raises(PreconditionError):
        list(N.enumerate_nielsen(s3, [t], [1, 1]))
    with pytest.raises(ResourceError):
        list(N.enumerate_nielsen(G.symmetric(4), [G.element_index(G.symmetric(4), "(1 2)")], [8],
                                 budget=100))


# -- braid action on group tuples -----------------------------------------------


def test_apply_generator_examples():
    s3 = G.symmetric(3)
    a, b = G.element_index(s3, "(1 2)"), G.element_index(s3, "(2 3)")
    assert N.apply_generator(s3, (a, b), 1) == (b, G.element_index(s3, "(1 3)"))
    assert N.apply_generator(s3, N.apply_generator(s3, (a, b), 1), 1, -1) == (a, b)
    with pytest.raises(PreconditionError):
        N.apply_generator(s3, (a,), 1)


def _words(n, max_len=8):
    return st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from([1, -1])), max_size=max_len).map(
        lambda letters: B.BraidWord(tuple(letters), n))


@st.composite
def tuple_word_conj(draw):
    g = G.symmetric(4)
    n = draw(st.integers(2, 6))
    t = tuple(draw(st.lists(st.integers(0, g.order - 1), min_size=n, max_size=n)))
    return g, t, draw(_words(n)), draw(st.integers(0, g.order - 1))


@settings(max_examples=150, deadline=None)
@given(tuple_word_conj())
def test_conjugation_commutes_with_braid_action(args):
    g, t, w, h = args
    left = N.apply_word(g, N.conjugate_tuple(g, t, h), w)
    right = N.conjugate_tuple(g, N.apply_word(g, t, w), h)
    assert left == right
    assert N.conj_canonical(g, left) == N.conj_canonical(g, N.apply_word(g, t, w))


@settings(max_examples=150, deadline=None)
@given(tuple_word_conj())
def test_product_is_braid_invariant(args):
    g, t, w, _ = args
    assert g.prod(N.apply_word(g, t, w)) == g.prod(t)
    for i in range(1, len(t)):
        assert g.prod(N.apply_generator(g, t, i, -1)) == g.prod(t)


def test_conj_canonical_is_minimal():
    g = G.symmetric(4)
    rng = random.Random(3)
    for _ in range(50):
        t = tuple(rng.randrange(g.order) for _ in range(rng.randint(1, 5)))
        conjugates = {N.conjugate_tuple(g, t, h) for h in range(g.order)}
        assert N.conj_canonical(g, t) == min(conjugates)
        assert N.ConjClassOfTuples.of(g, t).rep == min(conjugates)


# -- cyclic shift and abundance ---------------------------------------------------------


def test_cyclic_shift_examples():
    s4 = G.symmetric(4)
    assert N.cyclic_shift_check(s4, (5,))
    assert N.cyclic_shift_check(s4, ())
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(2, 6)
        assert N.cyclic_shift_check(s4, [rng.randrange(24) for _ in range(n)])


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["S3", "D8", "A4", "C6"]), st.data())
def test_cyclic_shift_holds_identically(name, data):
    g = _group(name)
    n = data.draw(st.integers(1, 7))
    t = data.draw(st.lists(st.integers(0, g.order - 1), min_size=n, max_size=n))
    assert N.cyclic_shift_check(g, t)


def _naive_abundant(g, x):
    perms = g.labels
    n = len(perms[0])
    full = P.brute_force_closure(perms, n)
    found = []
    for y in range(g.order):
        conj = {x}
        cur = x
        for _ in range(g.order):
            cur = g.conj(cur, y)
            conj.add(cur)
        if P.brute_force_closure([perms[c] for c in conj], n) == full:
            found.append(y)
    return found


def test_find_abundant_examples():
    s3 = G.symmetric(3)
    x = G.element_index(s3, "(1 2)")
    y = N.find_abundant(s3, x)
    assert y is not None and s3.generates(N.cyclic_conjugates(s3, x, y))
    # (1 2 3) is a witness: its conjugates of (1 2) are all three transpositions
    assert sorted(N.cyclic_conjugates(s3, x, G.element_index(s3, "(1 2 3)"))) == sorted(
        s3.conjugacy_class(x))
    v4 = G.by_name("V4")
    assert all(N.find_abundant(v4, x) is None for x in range(v4.order))
    a4 = G.alternating(4)
    for x in range(a4.order):
        naive = _naive_abundant(a4, x)
        got = N.find_abundant(a4, x)
        assert got == (naive[0] if naive else None)


def test_cyclic_group_of_order_two_is_abundant():
    # {x} already generates Z/2 when x is the nonidentity element
    c2 = G.cyclic(2)
    assert N.find_abundant(c2, 1) is not None
    assert N.find_abundant(c2, c2.identity) is None
    assert N.abundant_ncycle_certificate(c2, 1, 0, 4).verified
    with pytest.raises(PreconditionError):
        N.abundant_ncycle_certificate(c2, c2.identity, 0, 4)


def test_certificate_s3():
    s3 = G.symmetric(3)
    x, y = G.element_index(s3, "(1 2)"), G.element_index(s3, "(1 2 3)")
    c = N.abundant_ncycle_certificate(s3, x, y, 36)
    assert c.verified and c.n == 36
    d = c.as_dict()
    assert d["word_applied"] == "sigma_{n-1}..sigma_1" and d["verified"] is True
    # the certificate's claim checked independently: the n-cycle fixes the class of s
    s = N.abundant_seed_tuple(s3, x, y, 36)
    w = B.cyclic_shift_word(36)
    assert len(w.letters) == 35
    assert N.conj_canonical(s3, N.apply_word(s3, s, w)) == N.conj_canonical(s3, s)
    assert P.cycle_type(B.braid_to_perm(w)) == (36,)


def test_certificate_preconditions():
    s3 = G.symmetric(3)
    x, y = G.element_index(s3, "(1 2)"), G.element_index(s3, "(1 2 3)")
    with pytest.raises(PreconditionError):
        N.abundant_ncycle_certificate(s3, x, y, 12)
    assert N.abundant_ncycle_certificate(s3, x, y, 12, strict=False).product_one
    with pytest.raises(PreconditionError):
        N.abundant_ncycle_certificate(s3, x, s3.identity, 36)


def test_certificate_a5():
    a5 = G.alternating(5)
    x = G.element_index(a5, "(1 2 3)")
    y = N.find_abundant(a5, x)
    assert y is not None
    assert N.abundant_ncycle_certificate(a5, x, y, 3600).verified


# -- orbits modulo conjugation ------------------------------------------------------------


def test_quotient_orbit_divides_plain_orbit():
    rng = random.Random(5)
    s3 = G.symmetric(3)
    s4 = G.symmetric(4)
    tried = 0
    for g in (s3, s4):
        for _ in range(15):
            n = rng.randint(2, 4)
            t = tuple(rng.randrange(g.order) for _ in range(n))
            if not g.generates(t):
                continue
            q = N.quotient_orbit_and_image(g, t)
            plain = N.plain_orbit(g, t)
            assert (len(plain) * g.order) % q.orbit_size == 0
            assert len(plain) % q.orbit_size == 0
            assert {N.conj_canonical(g, u) for u in plain.tuples()} == set(q.graph.tuples())
            tried += 1
    assert tried > 10


def test_quotient_image_matches_naive():
    s3 = G.symmetric(3)
    t0 = G.element_index(s3, "(1 2)")
    op = [list(r) for r in s3.conj_table]
    canon = functools.partial(N.conj_canonical, s3)
    classes = list(N.enumerate_nielsen(s3, [t0], [4], up_to_conj=True))
    assert classes
    for t in classes:
        rep = N.quotient_orbit_and_image(s3, t)
        naive = naive_stabilizer_image(op, t, canon)
        assert rep.image.order == len(naive)
        assert all(rep.image.contains(p) for p in naive)


def test_quotient_image_contains_the_shift_cycle_from_abundance():
    # s = (x, x^y, x^{y^2}) twice over S_3 with x=(1 2), y=(1 2 3): shifting
    # right and conjugating by y^-1 returns s, so the 6-cycle fixes its class
    s3 = G.symmetric(3)
    x, y = G.element_index(s3, "(1 2)"), G.element_index(s3, "(1 2 3)")
    s = N.abundant_seed_tuple(s3, x, y, 6)
    assert N.is_product_one(s3, s)
    rep = N.quotient_orbit_and_image(s3, s)
    assert rep.image.contains(B.braid_to_perm(B.cyclic_shift_word(6)))


def test_quotient_orbit_rejects_non_generating():
    s3 = G.symmetric(3)
    t = G.element_index(s3, "(1 2)")
    with pytest.raises(PreconditionError):
        N.quotient_orbit_and_image(s3, (t, t))


def test_tuple_helpers():
    s3 = G.symmetric(3)
    t = N.tuple_from_cycles(s3, ["(1 2)", "(1 2)"])
    assert N.is_product_one(s3, t)
    assert N.centralizer_size(s3, t) == 2
    assert N.centralizer_size(s3, N.tuple_from_cycles(s3, ["(1 2)", "(2 3)"])) == 1
    assert len(list(itertools.islice(N.enumerate_nielsen(s3, [t[0]], [6]), 3))) == 3
