"""Nielsen tuples: generating tuples of group elements from prescribed
conjugacy classes, optionally with product one, and their braid orbits
modulo simultaneous conjugation.

Tuples are sequences of group-element indices of a
:class:`~braidrack.groups.FiniteGroupTable`. Homomorphisms F_n -> G are
identified with their tuple of generator images throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import braid as B
from . import perm as P
from .errors import PreconditionError, ResourceError
from .groups import FiniteGroupTable, abelian_rank

DEFAULT_BUDGET = 10_000_000


def d_normal(g: FiniteGroupTable) -> int:
    """Least number of conjugacy classes generating G: max(d(G^ab), 1)."""
    return max(abelian_rank(g), 1)


# ---------------------------------------------------------------------------
# conjugation


def conjugate_tuple(g: FiniteGroupTable, t: Sequence[int], h: int) -> tuple[int, ...]:
    """Entrywise h t h^-1, the left action of h."""
    hinv = g.inv[h]
    rows = g.rows
    return tuple(rows[rows[h][x]][hinv] for x in t)


def conj_canonical(g: FiniteGroupTable, t: Sequence[int]) -> tuple[int, ...]:
    """Lexicographic minimum of t over all |G| simultaneous conjugates."""
    ct = g.conj_table
    best = tuple(t)
    for h in range(g.order):
        c = tuple(ct[x][h] for x in t)
        if c < best:
            best = c
    return best


def _conj_canonical_packed(g: FiniteGroupTable):
    ct = g.conj_table
    cols = [bytes(ct[x][h] for x in range(g.order)) for h in range(g.order)]
    tables = [bytes(col) + bytes(range(g.order, 256)) for col in cols]

    def canon(t: bytes) -> bytes:
        return min(t.translate(tab) for tab in tables)

    return canon


@dataclass(frozen=True)
class ConjClassOfTuples:
    group: FiniteGroupTable
    rep: tuple[int, ...]

    @classmethod
    def of(cls, g: FiniteGroupTable, t: Sequence[int]) -> "ConjClassOfTuples":
        return cls(g, conj_canonical(g, t))

    @property
    def n(self) -> int:
        return len(self.rep)


# ---------------------------------------------------------------------------
# braid action on group tuples


def apply_generator(g: FiniteGroupTable, t: Sequence[int], i: int, sign: int = 1) -> tuple[int, ...]:
    """(.., g_i, g_{i+1}, ..)^{sigma_i} = (.., g_{i+1}, g_i^{g_{i+1}}, ..)."""
    t = list(t)
    if not 1 <= i <= len(t) - 1:
        raise PreconditionError(f"generator index {i} out of range for n={len(t)}")
    a, b = t[i - 1], t[i]
    if sign == 1:
        t[i - 1], t[i] = b, g.conj(a, b)
    else:
        # (u, a) with u^a = b, so u = a b a^-1
        t[i - 1], t[i] = g.conj(b, g.inv[a]), a
    return tuple(t)


def apply_word(g: FiniteGroupTable, t: Sequence[int], word: B.BraidWord) -> tuple[int, ...]:
    t = list(t)
    if word.n != len(t):
        raise PreconditionError("word length and tuple length disagree")
    ct = g.conj_table
    inv = g.inv
    for i, s in word.letters:
        a, b = t[i - 1], t[i]
        if s == 1:
            t[i - 1], t[i] = b, ct[a][b]
        else:
            t[i - 1], t[i] = ct[b][inv[a]], a
    return tuple(t)


def _inverse_conj_rows(g: FiniteGroupTable):
    # inv_rows[z][y] = x with x^y = z, i.e. x = y z y^-1
    ct = g.conj_table
    return tuple(tuple(ct[z][g.inv[y]] for y in range(g.order)) for z in range(g.order))


# ---------------------------------------------------------------------------
# enumeration


def classes_from_seeds(g: FiniteGroupTable, class_seeds: Sequence[int]) -> list[list[int]]:
    out = []
    for s in class_seeds:
        if not 0 <= s < g.order:
            raise PreconditionError(f"seed {s} out of range")
        c = g.conjugacy_class(s)
        if any(set(c) == set(d) for d in out):
            raise PreconditionError(f"seed {s} repeats a class")
        out.append(c)
    return out


def _product_sets(g: FiniteGroupTable, classes: list[list[int]], n_vec: Sequence[int]):
    """reach[r] = set of products of sequences using r_j elements of C_j, any order."""
    reach = {tuple([0] * len(classes)): frozenset([g.identity])}
    for total in range(1, sum(n_vec) + 1):
        for r in itertools.product(*[range(v + 1) for v in n_vec]):
            if sum(r) != total:
                continue
            acc = set()
            for j, c in enumerate(classes):
                if r[j] == 0:
                    continue
                prev = reach[r[:j] + (r[j] - 1,) + r[j + 1:]]
                for a in c:
                    acc.update(g.rows[a][p] for p in prev)
            reach[r] = frozenset(acc)
    return reach


def enumerate_nielsen(g: FiniteGroupTable, class_seeds: Sequence[int], n_vec: Sequence[int],
                      product_one: bool = True, up_to_conj: bool = False,
                      budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, ...]]:
    """Generating tuples with n_j entries from the class of seed j.

    Backtracking prunes on the remaining colour quota and, when
    ``product_one`` is set, on whether the partial product can still be
    completed to 1 by the remaining entries. ``budget`` bounds the number of
    search nodes. With ``up_to_conj`` only conjugation-canonical tuples are
    yielded.
    """
    classes = classes_from_seeds(g, class_seeds)
    n_vec = tuple(int(v) for v in n_vec)
    if len(n_vec) != len(classes):
        raise PreconditionError("one count per class seed is required")
    if any(v < 0 for v in n_vec):
        raise PreconditionError("counts must be nonnegative")
    n = sum(n_vec)
    member = {}
    for j, c in enumerate(classes):
        for a in c:
            member[a] = j
    candidates = sorted(member)
    reach = _product_sets(g, classes, n_vec) if product_one else None
    rows, inv, e = g.rows, g.inv, g.identity
    nodes = 0
    quota = list(n_vec)
    prefix: list[int] = []

    def rec(prod):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceError(f"Nielsen enumeration exceeded budget of {budget} nodes")
        if len(prefix) == n:
            if product_one and prod != e:
                return
            t = tuple(prefix)
            if not g.generates(t):
                return
            if up_to_conj and conj_canonical(g, t) != t:
                return
            yield t
            return
        for a in candidates:
            j = member[a]
            if quota[j] == 0:
                continue
            quota[j] -= 1
            nprod = rows[prod][a]
            if reach is None or inv[nprod] in reach[tuple(quota)]:
                prefix.append(a)
                yield from rec(nprod)
                prefix.pop()
            quota[j] += 1

    if n == 0:
        return
    yield from rec(e)


def count_nielsen_brute(g: FiniteGroupTable, class_seeds: Sequence[int], n_vec: Sequence[int],
                        product_one: bool = True, up_to_conj: bool = False) -> int:
    """Plain enumeration over all of C^n. Test oracle."""
    classes = classes_from_seeds(g, class_seeds)
    pool = sorted(x for c in classes for x in c)
    n = sum(n_vec)
    count = 0
    for t in itertools.product(pool, repeat=n):
        cnt = [sum(1 for x in t if x in c) for c in classes]
        if tuple(cnt) != tuple(n_vec):
            continue
        if product_one and g.prod(t) != g.identity:
            continue
        if not g.generates(t):
            continue
        if up_to_conj and conj_canonical(g, t) != t:
            continue
        count += 1
    return count


# ---------------------------------------------------------------------------
# cyclic shifts and abundance


def cyclic_shift_check(g: FiniteGroupTable, t: Sequence[int]) -> bool:
    """Does sigma_{n-1}...sigma_1 send the class of t to that of its right shift?"""
    t = tuple(t)
    n = len(t)
    if n <= 1:
        return True
    moved = apply_word(g, t, B.cyclic_shift_word(n))
    shifted = (t[-1],) + t[:-1]
    return conj_canonical(g, moved) == conj_canonical(g, shifted)


def cyclic_conjugates(g: FiniteGroupTable, x: int, y: int) -> list[int]:
    """x, x^y, x^{y^2}, ... for one full period of y (listed |G| times is not needed)."""
    out, cur = [x], g.conj(x, y)
    while cur != x:
        out.append(cur)
        cur = g.conj(cur, y)
    return out


def find_abundant(g: FiniteGroupTable, x: int) -> int | None:
    """Least y such that {x^{y^r}} generates G, or None."""
    for y in range(g.order):
        if g.generates(cyclic_conjugates(g, x, y)):
            return y
    return None


@dataclass(frozen=True)
class Certificate:
    group: str
    x: int
    y: int
    n: int
    product_one: bool
    generates: bool
    shift_fixes_class: bool
    image_perm_is_n_cycle: bool

    @property
    def verified(self) -> bool:
        return (self.product_one and self.generates and self.shift_fixes_class
                and self.image_perm_is_n_cycle)

    def as_dict(self) -> dict:
        return {"group": self.group, "x": self.x, "y": self.y, "n": self.n,
                "word_applied": "sigma_{n-1}..sigma_1",
                "product_one": self.product_one, "generates": self.generates,
                "shift_fixes_class": self.shift_fixes_class,
                "image_perm_is_n_cycle": self.image_perm_is_n_cycle,
                "verified": self.verified}


def abundant_seed_tuple(g: FiniteGroupTable, x: int, y: int, n: int) -> tuple[int, ...]:
    s0 = [x]
    for _ in range(g.order - 1):
        s0.append(g.conj(s0[-1], y))
    return tuple(s0) * (n // g.order)


def abundant_ncycle_certificate(g: FiniteGroupTable, x: int, y: int, n: int,
                                strict: bool = True) -> Certificate:
    """Check that sigma_{n-1}...sigma_1 stabilises the class of the
    n/|G|-fold concatenation of (x, x^y, ..., x^{y^{|G|-1}}).

    ``strict`` demands |G|^2 | n; otherwise |G| | n is enough and the
    result is simply reported.
    """
    m = g.order
    step = m * m if strict else m
    if n <= 0 or n % step:
        raise PreconditionError(f"n={n} must be a positive multiple of {step}")
    if not g.generates(cyclic_conjugates(g, x, y)):
        raise PreconditionError("the conjugates of x under <y> do not generate G")
    s = abundant_seed_tuple(g, x, y, n)
    moved = apply_word(g, s, B.cyclic_shift_word(n))
    # moved = {}^{g_n^-1}(right shift); conjugating the shift by y^-1 returns s
    shifted = (s[-1],) + s[:-1]
    back = conjugate_tuple(g, moved, s[-1])
    fixes = back == shifted and conjugate_tuple(g, shifted, g.inv[y]) == s
    image = B.braid_to_perm(B.cyclic_shift_word(n))
    is_cycle = P.cycle_type(image) == (n,)
    name = g.name or f"group of order {m}"
    return Certificate(name, x, y, n, g.prod(s) == g.identity, g.generates(s), fixes, is_cycle)


# ---------------------------------------------------------------------------
# orbits modulo conjugation


@dataclass(frozen=True)
class QuotientOrbitReport:
    orbit_size: int
    image: P.PermGroup
    graph: B.OrbitGraph


def quotient_orbit(g: FiniteGroupTable, t: Sequence[int], cap: int = B.DEFAULT_CAP) -> B.OrbitGraph:
    """Orbit of the conjugation class of t under B_n, on canonical forms."""
    t = tuple(int(v) for v in t)
    if g.order > 256:
        raise PreconditionError("quotient orbits support groups of order <= 256")
    canon = _conj_canonical_packed(g)
    return B._bfs(t, len(t), g.conj_table, _inverse_conj_rows(g), g.order, cap, canon=canon)


def plain_orbit(g: FiniteGroupTable, t: Sequence[int], cap: int = B.DEFAULT_CAP) -> B.OrbitGraph:
    """Orbit of t itself (no quotient) under B_n."""
    t = tuple(int(v) for v in t)
    return B._bfs(t, len(t), g.conj_table, _inverse_conj_rows(g), g.order, cap)


def quotient_orbit_and_image(g: FiniteGroupTable, t: Sequence[int],
                             cap: int = B.DEFAULT_CAP) -> QuotientOrbitReport:
    """Orbit size and stabilizer image for the class of t in G\\Sur(F_n, G)."""
    t = tuple(int(v) for v in t)
    if not g.generates(t):
        raise PreconditionError("tuple does not generate the group")
    o = quotient_orbit(g, t, cap)
    return QuotientOrbitReport(len(o), B.stabilizer_image(o), o)


def tuple_from_cycles(g: FiniteGroupTable, texts: Sequence[str]) -> tuple[int, ...]:
    from .groups import element_index

    return tuple(element_index(g, s) for s in texts)


def is_product_one(g: FiniteGroupTable, t: Sequence[int]) -> bool:
    return g.prod(t) == g.identity


def centralizer_size(g: FiniteGroupTable, t: Sequence[int]) -> int:
    return sum(1 for h in range(g.order) if conjugate_tuple(g, t, h) == tuple(t))

