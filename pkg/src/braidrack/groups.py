"""Finite groups given by a full multiplication table.

These host the conjugation racks and the Nielsen-tuple machinery. Elements
are dense indices 0..m-1; the table is row-major, ``mul[g][h] = gh``.
Groups built from permutations keep the permutations as ``labels`` so that
results can be printed in cycle notation.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import perm as P
from .errors import PreconditionError, StructureError


class FiniteGroupTable:
    """A finite group as a Cayley table over element indices."""

    def __init__(self, mul, labels=None, name: str | None = None, check: bool = True):
        table = np.asarray(mul, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise StructureError(f"multiplication table must be square and nonempty, got shape {table.shape}")
        m = table.shape[0]
        if table.min() < 0 or table.max() >= m:
            raise StructureError("multiplication table entry out of range")
        table.setflags(write=False)
        self.table = table
        self.order = m
        self.rows = [tuple(int(v) for v in r) for r in table]
        self.labels = list(labels) if labels is not None else None
        self.name = name
        self.identity = self._find_identity()
        if check:
            self.validate()
        inv = [0] * m
        for g in range(m):
            row = self.rows[g]
            for h in range(m):
                if row[h] == self.identity:
                    inv[g] = h
                    break
        self.inv = tuple(inv)

    def _find_identity(self) -> int:
        ar = np.arange(self.order)
        for e in range(self.order):
            if np.array_equal(self.table[e], ar) and np.array_equal(self.table[:, e], ar):
                return e
        raise StructureError("table has no two-sided identity")

    def validate(self) -> None:
        t = self.table
        m = self.order
        # each row and column a permutation gives inverses in a finite associative table
        full = np.arange(m)
        if not all(np.array_equal(np.sort(t[g]), full) for g in range(m)):
            raise StructureError("a row of the table is not a permutation")
        if not all(np.array_equal(np.sort(t[:, g]), full) for g in range(m)):
            raise StructureError("a column of the table is not a permutation")
        # (gh)k == g(hk) for all triples, one row of g at a time
        for g in range(m):
            left = t[t[g]]            # left[h, k] = (gh)k
            right = t[g][t]           # right[h, k] = g(hk)
            if not np.array_equal(left, right):
                raise StructureError("table is not associative")

    # -- arithmetic -------------------------------------------------------

    def mul(self, g: int, h: int) -> int:
        return self.rows[g][h]

    def prod(self, elems: Iterable[int]) -> int:
        out = self.identity
        rows = self.rows
        for g in elems:
            out = rows[out][g]
        return out

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        out = self.identity
        for _ in range(k):
            out = self.rows[out][g]
        return out

    def conj(self, x: int, y: int) -> int:
        """x^y = y^-1 x y."""
        return self.rows[self.rows[self.inv[y]][x]][y]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.rows[x][g]
            k += 1
        return k

    @cached_property
    def conj_table(self) -> tuple[tuple[int, ...], ...]:
        """conj_table[x][y] = x^y over the whole group."""
        return tuple(tuple(self.conj(x, y) for y in range(self.order)) for x in range(self.order))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    # -- subsets ----------------------------------------------------------

    def conjugacy_class(self, x: int) -> list[int]:
        return sorted({self.conj(x, y) for y in range(self.order)})

    def conjugacy_classes(self) -> list[list[int]]:
        done: set[int] = set()
        out = []
        for x in range(self.order):
            if x not in done:
                c = self.conjugacy_class(x)
                done.update(c)
                out.append(c)
        return out

    def subgroup(self, gens: Iterable[int]) -> frozenset[int]:
        gens = [int(g) for g in gens]
        seen = {self.identity}
        queue = [self.identity]
        rows = self.rows
        for x in queue:
            for g in gens:
                y = rows[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def generates(self, gens: Iterable[int]) -> bool:
        return len(self.subgroup(gens)) == self.order

    def normal_closure(self, gens: Iterable[int]) -> frozenset[int]:
        conj = {self.conj(g, y) for g in gens for y in range(self.order)}
        return self.subgroup(conj)

    @cached_property
    def commutator_subgroup(self) -> frozenset[int]:
        comms = set()
        for g in range(self.order):
            for h in range(self.order):
                comms.add(self.prod([self.inv[g], self.inv[h], g, h]))
        return self.subgroup(comms)

    def cosets(self, normal: frozenset[int]) -> list[int]:
        """Label of the coset gN for every g, numbered by first appearance."""
        label = [-1] * self.order
        k = 0
        for g in range(self.order):
            if label[g] < 0:
                for n in normal:
                    label[self.rows[g][n]] = k
                k += 1
        return label

    def quotient(self, normal: frozenset[int]) -> "FiniteGroupTable":
        label = self.cosets(normal)
        k = max(label) + 1
        rep = [0] * k
        for g in reversed(range(self.order)):
            rep[label[g]] = g
        table = [[label[self.rows[rep[a]][rep[b]]] for b in range(k)] for a in range(k)]
        return FiniteGroupTable(table, check=False)

    def normal_subgroups(self) -> list[frozenset[int]]:
        """All normal subgroups, as joins of normal closures of elements."""
        closures = {self.normal_closure([g]) for g in range(self.order)}
        found = {frozenset([self.identity])}
        frontier = list(found)
        while frontier:
            nxt = []
            for n in frontier:
                for c in closures:
                    j = self.subgroup(n | c)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def nonabelian_simple_quotients(self) -> list["FiniteGroupTable"]:
        normals = self.normal_subgroups()
        out = []
        for n in normals:
            if len(n) == self.order:
                continue
            # G/N simple iff N is maximal among proper normal subgroups
            if any(len(m) > len(n) and n < m and len(m) < self.order for m in normals):
                continue
            q = self.quotient(n)
            if not q.is_abelian():
                out.append(q)
        return out

    def is_isomorphic(self, other: "FiniteGroupTable") -> bool:
        return find_isomorphism(self, other) is not None

    def as_perms(self) -> list[tuple[int, ...]]:
        """Right regular representation: g -> (x -> xg)."""
        return [tuple(self.rows[x][g] for x in range(self.order)) for g in range(self.order)]

    def label(self, g: int) -> str:
        if self.labels is not None:
            lab = self.labels[g]
            if isinstance(lab, tuple):
                return P.format_cycles(lab)
            return str(lab)
        return str(g)

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<FiniteGroupTable{nm} order={self.order}>"


def _small_generating_set(g: FiniteGroupTable) -> list[int]:
    gens: list[int] = []
    current = frozenset([g.identity])
    # greedy by decreasing element order keeps the set short
    for x in sorted(range(g.order), key=lambda x: (-g.element_order(x), x)):
        if x not in current:
            gens.append(x)
            current = g.subgroup(gens)
            if len(current) == g.order:
                break
    return gens


def find_isomorphism(g: FiniteGroupTable, h: FiniteGroupTable) -> list[int] | None:
    """An isomorphism g -> h as an image list, or None. Brute force on generators."""
    if g.order != h.order:
        return None
    if sorted(g.element_order(x) for x in range(g.order)) != sorted(
            h.element_order(x) for x in range(h.order)):
        return None
    gens = _small_generating_set(g)
    if not gens:
        return [h.identity]
    # words: express every element of g as (parent, generator) from a BFS tree
    parent = {g.identity: None}
    order_seen = [g.identity]
    for x in order_seen:
        for i, s in enumerate(gens):
            y = g.mul(x, s)
            if y not in parent:
                parent[y] = (x, i)
                order_seen.append(y)
    candidates = [[y for y in range(h.order) if h.element_order(y) == g.element_order(s)] for s in gens]
    for images in itertools.product(*candidates):
        phi = [-1] * g.order
        phi[g.identity] = h.identity
        for y in order_seen[1:]:
            x, i = parent[y]
            phi[y] = h.mul(phi[x], images[i])
        if len(set(phi)) != g.order:
            continue
        if all(phi[g.rows[a][b]] == h.rows[phi[a]][phi[b]] for a in range(g.order) for b in gens):
            # checking on generators suffices once phi is defined along the BFS tree
            if all(phi[g.rows[a][b]] == h.rows[phi[a]][phi[b]]
                   for a in range(g.order) for b in range(g.order)):
                return phi
    return None


# ---------------------------------------------------------------------------
# constructors


def from_permutations(generators: Sequence[Sequence[int]], degree: int | None = None,
                      name: str | None = None) -> FiniteGroupTable:
    """The table of the permutation group generated by ``generators``.

    Elements are sorted lexicographically, so the identity is element 0.
    """
    gens = [P.check_perm(g) for g in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 1
    elems = sorted(P.brute_force_closure(gens, degree))
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[P.compose(a, b)] for b in elems] for a in elems]
    return FiniteGroupTable(table, labels=elems, name=name, check=False)


def symmetric(m: int) -> FiniteGroupTable:
    return from_permutations(P.symmetric_group(m).generators or [P.identity(m)], m, name=f"S{m}")


def alternating(m: int) -> FiniteGroupTable:
    return from_permutations(P.alternating_group(m).generators or [P.identity(m)], m, name=f"A{m}")


def cyclic(m: int) -> FiniteGroupTable:
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    return FiniteGroupTable(table, labels=list(range(m)), name=f"C{m}", check=False)


def direct_product(g: FiniteGroupTable, h: FiniteGroupTable) -> FiniteGroupTable:
    """Element (a, b) gets index a * |h| + b."""
    m, k = g.order, h.order
    table = [[g.rows[a1][a2] * k + h.rows[b1][b2] for a2 in range(m) for b2 in range(k)]
             for a1 in range(m) for b1 in range(k)]
    labels = [(a, b) for a in range(m) for b in range(k)]
    name = f"{g.name}x{h.name}" if g.name and h.name else None
    out = FiniteGroupTable(table, check=False, name=name)
    out.labels = [f"({g.label(a)},{h.label(b)})" for a, b in labels]
    return out


def by_name(name: str) -> FiniteGroupTable:
    """``S4``, ``A5``, ``C6``, ``D8`` (dihedral of order 8), ``V4``."""
    s = name.strip().upper()
    try:
        if s == "V4":
            return direct_product(cyclic(2), cyclic(2))
        kind, arg = s[0], int(s[1:])
    except (ValueError, IndexError):
        raise PreconditionError(f"unknown group name {name!r}") from None
    if arg < 1:
        raise PreconditionError(f"bad group size in {name!r}")
    if kind == "S":
        return symmetric(arg)
    if kind == "A":
        return alternating(arg)
    if kind == "C":
        return cyclic(arg)
    if kind == "D" and arg % 2 == 0 and arg >= 4:
        k = arg // 2
        rot = tuple((i + 1) % k for i in range(k))
        ref = tuple((-i) % k for i in range(k))
        return from_permutations([rot, ref], k, name=f"D{arg}")
    raise PreconditionError(f"unknown group name {name!r}")


def element_index(g: FiniteGroupTable, cycle_text: str) -> int:
    """Index of a permutation group element written in 1-based cycles."""
    if g.labels is None or not g.labels or not isinstance(g.labels[0], tuple):
        raise PreconditionError("group has no permutation labels")
    p = P.parse_cycles(cycle_text, len(g.labels[0]))
    try:
        return g.labels.index(p)
    except ValueError:
        raise PreconditionError(f"{cycle_text} is not an element of the group") from None


def abelianization_order(g: FiniteGroupTable) -> int:
    return g.order // len(g.commutator_subgroup)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def abelian_rank(g: FiniteGroupTable) -> int:
    """d(G^ab): the largest p-rank of the abelianization over primes p."""
    comm = g.commutator_subgroup
    label = g.cosets(comm)
    size = max(label) + 1
    best = 0
    for p in _prime_factors(size):
        p_multiples = {label[g.power(x, p)] for x in range(g.order)}
        quotient = size // len(p_multiples)          # |A / pA| = p^rank
        rank = 0
        while quotient > 1:
            quotient //= p
            rank += 1
        best = max(best, rank)
    return best
