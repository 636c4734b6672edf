"""Finite braided sets, racks and quandles.

A rack on {0..k-1} is stored as its operation table ``op[x, y] = x^y``.
A braided set is stored as the table of R, ``r[x, y] = (a, b)``.
Racks correspond to the self-distributive braided sets via
R(x, y) = (y, x^y), and quandles to the squarefree ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import perm as P
from .errors import PreconditionError, StructureError
from .groups import FiniteGroupTable


# ---------------------------------------------------------------------------
# braided sets


class BraidedSet:
    """A finite set with a map R on pairs, given as a (k, k, 2) table."""

    def __init__(self, r_table, name: str | None = None):
        r = np.asarray(r_table, dtype=np.int64)
        if r.ndim != 3 or r.shape[0] != r.shape[1] or r.shape[2] != 2 or r.shape[0] == 0:
            raise StructureError(f"braided-set table must have shape (k, k, 2), got {r.shape}")
        k = r.shape[0]
        if r.min() < 0 or r.max() >= k:
            raise StructureError("braided-set table entry out of range")
        r.setflags(write=False)
        self.size = k
        self.r = r
        self.name = name

    @classmethod
    def trivial(cls, k: int) -> "BraidedSet":
        x, y = np.meshgrid(np.arange(k), np.arange(k), indexing="ij")
        return cls(np.stack([y, x], axis=-1), name=f"T{k}")


@dataclass(frozen=True)
class ValidationReport:
    is_bijective: bool
    is_braided: bool
    is_nondegenerate: bool
    is_self_distributive: bool
    is_squarefree: bool

    def as_dict(self) -> dict:
        return {
            "is_bijective": self.is_bijective,
            "is_braided": self.is_braided,
            "is_nondegenerate": self.is_nondegenerate,
            "is_self_distributive": self.is_self_distributive,
            "is_squarefree": self.is_squarefree,
        }


def _yang_baxter(r: np.ndarray) -> bool:
    """(R x id)(id x R)(R x id) == (id x R)(R x id)(id x R) on all triples."""
    k = r.shape[0]
    a, b, c = np.meshgrid(np.arange(k), np.arange(k), np.arange(k), indexing="ij")

    def left(a, b, c):
        r1 = r[a, b]
        a, b = r1[..., 0], r1[..., 1]
        r2 = r[b, c]
        b, c = r2[..., 0], r2[..., 1]
        r3 = r[a, b]
        return r3[..., 0], r3[..., 1], c

    def right(a, b, c):
        r1 = r[b, c]
        b, c = r1[..., 0], r1[..., 1]
        r2 = r[a, b]
        a, b = r2[..., 0], r2[..., 1]
        r3 = r[b, c]
        return a, r3[..., 0], r3[..., 1]

    return all(np.array_equal(u, v) for u, v in zip(left(a, b, c), right(a, b, c)))


def validate_braided_set(b: BraidedSet) -> ValidationReport:
    """Exhaustively test the braided-set axioms and the extra properties."""
    r = b.r
    k = b.size
    codes = r[..., 0] * k + r[..., 1]
    bijective = len(np.unique(codes)) == k * k
    braided = bool(bijective and _yang_baxter(r))
    full = np.arange(k)
    # pi_1 R is a bijection in y for fixed x; pi_2 R a bijection in x for fixed y
    nondeg = all(np.array_equal(np.sort(r[x, :, 0]), full) for x in range(k)) and all(
        np.array_equal(np.sort(r[:, y, 1]), full) for y in range(k))
    first_is_y = bool(np.all(r[..., 0] == full[None, :]))
    selfdist = braided and first_is_y
    diag = r[full, full]
    squarefree = bool(np.all(diag[:, 0] == full) and np.all(diag[:, 1] == full))
    return ValidationReport(bool(bijective), braided, bool(nondeg), selfdist, squarefree)


# ---------------------------------------------------------------------------
# racks


class Rack:
    """A finite rack with operation table ``op[x, y] = x^y``.

    Construction checks the rack axioms exhaustively (``check=False`` skips
    that for tables produced by trusted constructors). Instances are
    immutable.
    """

    def __init__(self, op_table, name: str | None = None, check: bool = True):
        op = np.asarray(op_table, dtype=np.int64)
        if op.ndim != 2 or op.shape[0] != op.shape[1] or op.shape[0] == 0:
            raise StructureError(f"rack table must be square and nonempty, got shape {op.shape}")
        k = op.shape[0]
        if op.min() < 0 or op.max() >= k:
            raise StructureError("rack table entry out of range")
        op.setflags(write=False)
        self.size = k
        self.op = op
        self.name = name
        if check:
            problem = rack_axiom_violation(op)
            if problem:
                raise PreconditionError(f"not a rack: {problem}")
        self.rows = tuple(tuple(int(v) for v in row) for row in op)
        inv = np.empty_like(op)
        for y in range(k):
            inv[op[:, y], y] = np.arange(k)
        inv.setflags(write=False)
        # inv_op[z, y] = the unique x with x^y = z
        self.inv_op = inv
        self.inv_rows = tuple(tuple(int(v) for v in row) for row in inv)
        self.quandle = bool(np.all(op[np.arange(k), np.arange(k)] == np.arange(k)))

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<Rack{nm} size={self.size} quandle={self.quandle}>"

    def __eq__(self, other):
        return isinstance(other, Rack) and np.array_equal(self.op, other.op)

    def __hash__(self):
        return hash(self.op.tobytes())

    def column(self, y: int) -> P.Perm:
        """The permutation x -> x^y."""
        return tuple(int(v) for v in self.op[:, y])

    def to_braided_set(self) -> BraidedSet:
        k = self.size
        y = np.broadcast_to(np.arange(k)[None, :], (k, k))
        return BraidedSet(np.stack([y, self.op], axis=-1), name=self.name)

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return components(self).labels


def rack_axiom_violation(op: np.ndarray) -> str | None:
    """Describe the first failed rack axiom, or None for a valid rack."""
    k = op.shape[0]
    full = np.arange(k)
    for y in range(k):
        if not np.array_equal(np.sort(op[:, y]), full):
            return f"column of y={y} is not a bijection"
    # (z^x)^y == (z^y)^(x^y) for all x, y, z; indices [z, x, y]
    z = full[:, None, None]
    x = full[None, :, None]
    y = full[None, None, :]
    lhs = op[op[z, x], y]
    rhs = op[op[z, y], op[x, y]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        zz, xx, yy = (int(v) for v in bad[0])
        return f"self-distributivity fails at z={zz}, x={xx}, y={yy}"
    return None


def rack_from_braided_set(b: BraidedSet) -> Rack:
    rep = validate_braided_set(b)
    if not rep.is_self_distributive:
        raise PreconditionError("braided set is not self-distributive")
    return Rack(b.r[..., 1], name=b.name)


def trivial_rack(k: int) -> Rack:
    return Rack(np.tile(np.arange(k)[:, None], (1, k)), name=f"T{k}", check=False)


def n_rack() -> Rack:
    """The two-element rack {eta, xi}: every column is the swap."""
    return Rack([[1, 1], [0, 0]], name="N", check=False)


def cyclic_rack(k: int) -> Rack:
    """x^y = x + 1 mod k (a permutation rack; not a quandle for k > 1)."""
    return Rack([[(x + 1) % k] * k for x in range(k)], name=f"Cyc{k}", check=False)


def dihedral_quandle(k: int) -> Rack:
    """x^y = 2y - x mod k."""
    return Rack([[(2 * y - x) % k for y in range(k)] for x in range(k)], name=f"R{k}", check=False)


def transposition_rack(m: int) -> tuple[Rack, list[P.Perm]]:
    """The quandle of transpositions in S_m, with the transpositions used.

    Elements are ordered lexicographically by the 0-based pair (i, j), i < j.
    """
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    perms = [P.transposition(i, j, m) for i, j in pairs]
    index = {p: a for a, p in enumerate(perms)}
    op = [[index[P.conjugate(x, y)] for y in perms] for x in perms]
    return Rack(op, name=f"S{m}-transpositions", check=False), perms


def conjugation_rack(g: FiniteGroupTable, class_seeds: Iterable[int],
                     allow_identity: bool = False) -> tuple[Rack, list[int]]:
    """The union of the conjugacy classes of the seeds, under x^y = y^-1 x y.

    Returns the rack and the embedding (rack index -> group index). Rack
    elements are ordered by group index.
    """
    seeds = [int(s) for s in class_seeds]
    if not seeds:
        raise PreconditionError("at least one class seed is required")
    for s in seeds:
        if not 0 <= s < g.order:
            raise PreconditionError(f"seed {s} out of range for a group of order {g.order}")
        if s == g.identity and not allow_identity:
            raise PreconditionError("identity seed given without allow_identity")
    elems = sorted({c for s in seeds for c in g.conjugacy_class(s)})
    index = {e: i for i, e in enumerate(elems)}
    op = [[index[g.conj(x, y)] for y in elems] for x in elems]
    name = f"{g.name}-classes" if g.name else None
    return Rack(op, name=name, check=False), elems


def product_rack(x: Rack, y: Rack) -> Rack:
    """(a, b)^(c, d) = (a^c, b^d); the pair (a, b) has index a * |Y| + b."""
    ky = y.size
    op = x.op[:, None, :, None] * ky + y.op[None, :, None, :]
    name = f"{x.name}x{y.name}" if x.name and y.name else None
    return Rack(op.reshape(x.size * ky, x.size * ky), name=name, check=False)


def is_isomorphic_relabel(x: Rack, y: Rack, mapping: Sequence[int]) -> bool:
    """Does ``mapping`` (x index -> y index) carry the operation of x to y?"""
    m = np.asarray(mapping)
    return bool(np.array_equal(m[x.op], y.op[m[:, None], m[None, :]]))


# ---------------------------------------------------------------------------
# structure


@dataclass(frozen=True)
class ComponentLabeling:
    labels: tuple[int, ...]
    k: int
    component_sizes: tuple[int, ...]
    trivialization: Rack

    def members(self, j: int) -> list[int]:
        return [x for x, lab in enumerate(self.labels) if lab == j]


def components(x: Rack) -> ComponentLabeling:
    """Weakly connected components of the graph with edges (x, x^y).

    Labels are numbered in order of their smallest element.
    """
    parent = list(range(x.size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(x.size):
        for b in x.rows[a]:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    roots: dict[int, int] = {}
    labels = []
    for a in range(x.size):
        labels.append(roots.setdefault(find(a), len(roots)))
    k = len(roots)
    sizes = tuple(labels.count(j) for j in range(k))
    return ComponentLabeling(tuple(labels), k, sizes, trivial_rack(k))


def inner_group(x: Rack) -> P.PermGroup:
    """Inn(X): generated by the columns x -> x^y, acting on the right."""
    return P.PermGroup([x.column(y) for y in range(x.size)], x.size)


def element_inn_order(x: Rack, e: int) -> int:
    if not 0 <= e < x.size:
        raise PreconditionError(f"element {e} out of range")
    return P.order(x.column(e))


def central_word_z(x: Rack) -> tuple[int, ...]:
    """Each element e repeated m_e times, elements in increasing order."""
    out: list[int] = []
    for e in range(x.size):
        out.extend([e] * element_inn_order(x, e))
    return tuple(out)


def subrack_closure(x: Rack, subset: Iterable[int]) -> frozenset[int]:
    cur = set(int(s) for s in subset)
    for s in cur:
        if not 0 <= s < x.size:
            raise PreconditionError(f"element {s} out of range")
    changed = True
    while changed:
        changed = False
        members = sorted(cur)
        for a in members:
            for b in members:
                for c in (x.rows[a][b], x.inv_rows[a][b]):
                    if c not in cur:
                        cur.add(c)
                        changed = True
    return frozenset(cur)


def generates(x: Rack, subset: Iterable[int]) -> bool:
    """Does the subset generate X as a rack? The empty set never does."""
    subset = list(subset)
    if not subset:
        return False
    return len(subrack_closure(x, subset)) == x.size


def enumerate_racks(k: int) -> list[Rack]:
    """Every rack table on {0..k-1} (not up to isomorphism). Small k only."""
    import itertools

    if k > 3:
        raise PreconditionError("exhaustive rack enumeration is limited to size <= 3")
    perms = list(itertools.permutations(range(k)))
    out = []
    for cols in itertools.product(perms, repeat=k):
        op = np.array(cols, dtype=np.int64).T
        if rack_axiom_violation(op) is None:
            out.append(Rack(op, check=False))
    return out


def random_rack(k: int, rng) -> Rack:
    """A random rack of size k: a disjoint union of random small building
    blocks (conjugation classes of S_3/S_4, dihedral quandles, cyclic and
    trivial racks, N), randomly relabelled. Deterministic given ``rng``.
    """
    from . import groups as G

    def block(room):
        choices = ["trivial", "cyclic"]
        if room >= 2:
            choices.append("N")
        if room >= 3:
            choices += ["dihedral", "classes"]
        kind = rng.choice(choices)
        if kind == "N":
            return n_rack()
        if kind == "dihedral":
            return dihedral_quandle(rng.choice([j for j in (3, 5) if j <= room]))
        if kind == "classes":
            m = 4 if room >= 6 and rng.random() < 0.5 else 3
            sg = G.symmetric(m)
            options = [c for c in sg.conjugacy_classes() if 1 < len(c) <= room]
            if options:
                return conjugation_rack(sg, [rng.choice(options)[0]])[0]
        size = rng.randint(1, room)
        return cyclic_rack(size) if kind == "cyclic" else trivial_rack(size)

    out = block(k)
    while out.size < k:
        out = _disjoint_union(out, block(k - out.size))
    perm = list(range(k))
    rng.shuffle(perm)
    return relabel(out, perm)


def _disjoint_union(a: Rack, b: Rack) -> Rack:
    """Disjoint union where elements of different parts act trivially."""
    ka, kb = a.size, b.size
    op = np.zeros((ka + kb, ka + kb), dtype=np.int64)
    op[:ka, :ka] = a.op
    op[ka:, ka:] = b.op + ka
    op[:ka, ka:] = np.arange(ka)[:, None]
    op[ka:, :ka] = np.arange(ka, ka + kb)[:, None]
    return Rack(op)


def relabel(x: Rack, perm: Sequence[int]) -> Rack:
    """Transport the structure along the bijection old index i -> perm[i]."""
    p = np.asarray(perm)
    op = np.empty_like(x.op)
    op[p[:, None], p[None, :]] = p[x.op]
    return Rack(op, name=x.name, check=False)
