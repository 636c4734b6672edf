"""The Hurwitz action of the braid group B_n on n-tuples over a finite rack,
orbit enumeration and the image in S_n of tuple stabilizers.

Conventions. Braid generators are 1-based, ``(i, +1)`` is sigma_i and
``(i, -1)`` its inverse. Tuples act on the right:

    (..., c_i, c_{i+1}, ...)^{sigma_i} = (..., c_{i+1}, c_i^{c_{i+1}}, ...)

and sigma_i maps to the transposition of positions i-1 and i (0-based) in
S_n. Permutations compose left to right (see :mod:`braidrack.perm`), so the
map from braid words to S_n is a homomorphism without reversal.

Orbit members are packed into ``bytes`` (one byte per entry) whenever the
rack has at most 256 elements; the visited set is keyed on those bytes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import perm as P
from .errors import PreconditionError, ResourceError
from .rack import Rack, components, generates

DEFAULT_CAP = 50_000_000

Letter = tuple  # (i, sign)


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[Letter, ...]
    n: int

    def __post_init__(self):
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.n - 1 or s not in (1, -1):
                raise PreconditionError(f"letter sigma_{i}^{s} out of range for B_{self.n}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise PreconditionError("braid words on different numbers of strands")
        return BraidWord(self.letters + other.letters, self.n)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((i, -s) for i, s in reversed(self.letters)), self.n)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(base.letters * abs(k), self.n)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in self.letters)


def cyclic_shift_word(n: int) -> BraidWord:
    """sigma_{n-1} sigma_{n-2} ... sigma_1 (empty for n = 1)."""
    return BraidWord(tuple((i, 1) for i in range(n - 1, 0, -1)), max(n, 1))


def transposition_word(alpha: int, beta: int, n: int, power: int = 1) -> BraidWord:
    """sigma_{b-1} ... sigma_{a+1} sigma_a^power sigma_{a+1}^-1 ... sigma_{b-1}^-1.

    Positions are 1-based. For ``power`` odd the image in S_n is the
    transposition (alpha beta); ``power=3`` gives the cubed variant used for
    transposition quandles.
    """
    if not 1 <= alpha < beta <= n:
        raise PreconditionError(f"need 1 <= alpha < beta <= n, got {alpha}, {beta}, {n}")
    up = [(i, 1) for i in range(beta - 1, alpha, -1)]
    down = [(i, -1) for i in range(alpha + 1, beta)]
    mid = [(alpha, 1 if power >= 0 else -1)] * abs(power)
    return BraidWord(tuple(up + mid + down), n)


def _check_tuple(x: Rack, t: Sequence[int]) -> tuple[int, ...]:
    t = tuple(int(v) for v in t)
    for v in t:
        if not 0 <= v < x.size:
            raise PreconditionError(f"tuple entry {v} outside a rack of size {x.size}")
    return t


def apply_generator(x: Rack, t: Sequence[int], i: int, sign: int = 1) -> tuple[int, ...]:
    """Act on ``t`` by sigma_i^sign (1-based i)."""
    n = len(t)
    if not 1 <= i <= n - 1:
        raise PreconditionError(f"generator index {i} out of range for n={n}")
    t = list(t)
    a, b = t[i - 1], t[i]
    if sign == 1:
        t[i - 1], t[i] = b, x.rows[a][b]
    elif sign == -1:
        # (u, a) with u^a = b
        t[i - 1], t[i] = x.inv_rows[b][a], a
    else:
        raise PreconditionError(f"sign must be +1 or -1, got {sign}")
    return tuple(t)


def apply_word(x: Rack, t: Sequence[int], word: BraidWord) -> tuple[int, ...]:
    t = list(_check_tuple(x, t))
    if word.n != len(t):
        raise PreconditionError(f"word on {word.n} strands applied to a {len(t)}-tuple")
    rows, inv = x.rows, x.inv_rows
    for i, s in word.letters:
        a, b = t[i - 1], t[i]
        if s == 1:
            t[i - 1], t[i] = b, rows[a][b]
        else:
            t[i - 1], t[i] = inv[b][a], a
    return tuple(t)


def braid_to_perm(word: BraidWord, n: int | None = None) -> P.Perm:
    """Image of a braid word in S_n (sigma_i -> transposition of i-1, i)."""
    n = word.n if n is None else n
    if n != word.n:
        raise PreconditionError("word and degree disagree")
    img = list(range(n))
    # right action: compose with each transposition in turn
    for i, _ in word.letters:
        a, b = i - 1, i
        img = [b if v == a else a if v == b else v for v in img]
    return tuple(img)


# ---------------------------------------------------------------------------
# orbit enumeration


def _swap_table(i: int) -> bytes:
    t = bytearray(range(256))
    t[i - 1], t[i] = i, i - 1
    return bytes(t)


def _inverse_table(p: bytes) -> bytes:
    t = bytearray(range(256))
    for a, b in enumerate(p):
        t[b] = a
    return bytes(t)


@dataclass
class OrbitGraph:
    """The orbit of ``seed`` under B_n, numbered in BFS order.

    ``edges[g][m]`` is the member reached from member m by generator g, where
    g = 0..n-2 are sigma_1..sigma_{n-1} and g = n-1..2n-3 their inverses;
    -1 marks a move leaving a colored block. ``access[m]`` is the image in
    S_n of the braid word along the BFS tree from the seed to member m.
    """

    seed: tuple[int, ...]
    members: list
    access: list
    edges: list
    colored: bool = False
    complete: bool = True
    full: "OrbitGraph | None" = None
    _image: P.PermGroup | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.members)

    @property
    def n(self) -> int:
        return len(self.seed)

    def tuple_at(self, m: int) -> tuple[int, ...]:
        return tuple(self.members[m])

    def access_perm(self, m: int) -> P.Perm:
        return tuple(self.access[m])

    def index(self, t: Sequence[int]) -> int:
        key = _pack(t, self.members)
        return self._lookup()[key]

    def _lookup(self):
        lut = getattr(self, "_lut", None)
        if lut is None:
            lut = {m: i for i, m in enumerate(self.members)}
            self._lut = lut
        return lut

    def tuples(self):
        for m in self.members:
            yield tuple(m)

    def canonical(self) -> tuple[int, ...]:
        """The lexicographically least member."""
        return tuple(min(self.members))


def _pack(t, like):
    if like and isinstance(like[0], bytes):
        return bytes(t)
    return tuple(t)


def _bfs(seed: tuple, n: int, rows, inv_rows, size: int, cap: int,
         canon: Callable | None = None) -> OrbitGraph:
    """Generic orbit BFS over tuples with a rack-like operation table.

    ``canon``, when given, maps every reached tuple to a representative of
    its class (used for quotients by simultaneous conjugation).
    """
    if n > 256:
        raise PreconditionError("orbit enumeration supports at most 256 strands")
    packed = size <= 256
    mk = bytes if packed else tuple
    start = mk(seed)
    if canon is not None:
        start = mk(canon(start))
    index = {start: 0}
    members = [start]
    access = [bytes(range(n))]
    ngen = 2 * (n - 1)
    edges = [[] for _ in range(ngen)]
    swaps = [_swap_table(i) for i in range(1, n)]
    pos = 0
    while pos < len(members):
        t = members[pos]
        acc = access[pos]
        for g in range(ngen):
            if g < n - 1:
                i = g
                a, b = t[i], t[i + 1]
                u = t[:i] + mk((b, rows[a][b])) + t[i + 2:]
            else:
                i = g - (n - 1)
                a, b = t[i], t[i + 1]
                u = t[:i] + mk((inv_rows[b][a], a)) + t[i + 2:]
            if canon is not None:
                u = mk(canon(u))
            j = index.get(u)
            if j is None:
                j = len(members)
                if j >= cap:
                    raise ResourceError(
                        f"orbit exceeds cap of {cap} members (frontier {len(members) - pos})",
                        frontier=len(members) - pos)
                index[u] = j
                members.append(u)
                access.append(acc.translate(swaps[i]))
            edges[g].append(j)
        pos += 1
    graph = OrbitGraph(tuple(seed), members, access, edges)
    graph._lut = index
    return graph


def orbit(x: Rack, seed: Sequence[int], colored: bool = False, cap: int = DEFAULT_CAP) -> OrbitGraph:
    """BFS orbit of ``seed`` under B_n (or under the colored braid group).

    The colored orbit is the full orbit intersected with the block of tuples
    carrying the seed's component pattern; the full graph is kept in
    ``.full`` because stabilizer images are read off the full orbit.
    """
    seed = _check_tuple(x, seed)
    if not seed:
        raise PreconditionError("empty tuple")
    full = _bfs(seed, len(seed), x.rows, x.inv_rows, x.size, cap)
    if not colored:
        return full
    labels = components(x).labels
    pattern = [labels[v] for v in seed]
    keep = [m for m, t in enumerate(full.members) if all(labels[v] == c for v, c in zip(t, pattern))]
    renum = {m: i for i, m in enumerate(keep)}
    edges = [[renum.get(row[m], -1) for m in keep] for row in full.edges]
    return OrbitGraph(seed, [full.members[m] for m in keep], [full.access[m] for m in keep],
                      edges, colored=True, full=full)


def schreier_images(o: OrbitGraph) -> Iterable[P.Perm]:
    """Distinct non-identity images access[t] * pi(g) * access[t^g]^-1 over
    forward generators; these generate the stabilizer image."""
    g_full = o.full if o.full is not None else o
    n = g_full.n
    seen = set()
    swaps = [_swap_table(i) for i in range(1, n)]
    members_access = g_full.access
    for i in range(n - 1):
        row = g_full.edges[i]
        sw = swaps[i]
        for m, u in enumerate(row):
            moved = members_access[m].translate(sw)
            target = members_access[u]
            if moved == target:
                continue
            s = moved.translate(_inverse_table(target))
            if s not in seen:
                seen.add(s)
                yield tuple(s)


def stabilizer_image(o: OrbitGraph, upper_bound: int | None = None) -> P.PermGroup:
    """The image in S_n of the stabilizer of the seed.

    ``upper_bound`` (an order the image cannot exceed, e.g. the order of the
    block product) lets the Schreier-generator scan stop early once reached.
    """
    if not o.complete:
        raise PreconditionError("stabilizer image needs a complete orbit")
    if o._image is not None:
        return o._image
    n = o.n
    group = P.PermGroup([], n)
    if upper_bound is None:
        upper_bound = math.factorial(n)
    pending = []
    for s in schreier_images(o):
        if group.order >= upper_bound:
            break
        if group.contains(s):
            continue
        pending.append(s)
        group = group.extended(pending)
        pending = []
    o._image = group
    return group


def block_structure_of(x: Rack, t: Sequence[int]) -> P.BlockStructure:
    labels = components(x).labels
    return P.BlockStructure.from_labels([labels[v] for v in t])


def block_product_order(blocks: P.BlockStructure) -> int:
    return math.prod(math.factorial(s) for s in blocks.sizes)


@dataclass(frozen=True)
class MonodromyReport:
    seed: tuple[int, ...]
    component_counts: tuple[int, ...]
    generates: bool
    orbit_size: int
    colored_orbit_size: int
    image: P.PermGroup
    classification: P.Classification

    @property
    def image_order(self) -> int:
        return self.image.order

    def as_dict(self) -> dict:
        return {
            "seed": list(self.seed),
            "component_counts": list(self.component_counts),
            "generates": self.generates,
            "orbit_size": self.orbit_size,
            "colored_orbit_size": self.colored_orbit_size,
            "image_order": str(self.image.order),
            "image_generators": [list(g) for g in self.image.generators],
            "classification": self.classification.as_dict(),
        }


def classify_monodromy(x: Rack, seed: Sequence[int], cap: int = DEFAULT_CAP) -> MonodromyReport:
    """components -> orbit -> stabilizer image -> position in the block product."""
    seed = _check_tuple(x, seed)
    comp = components(x)
    counts = [0] * comp.k
    for v in seed:
        counts[comp.labels[v]] += 1
    col = orbit(x, seed, colored=True, cap=cap)
    blocks = block_structure_of(x, seed)
    image = stabilizer_image(col.full, upper_bound=block_product_order(blocks))
    cls = P.classify_in_product(image, blocks)
    return MonodromyReport(seed, tuple(counts), generates(x, seed), len(col.full), len(col),
                           image, cls)


# ---------------------------------------------------------------------------
# braid relations, checked on all tuples at once


def all_tuples(k: int, n: int) -> np.ndarray:
    """Every element of {0..k-1}^n, lexicographic, as an (k^n, n) array."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*([np.arange(k)] * n), indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1)


def _act(op: np.ndarray, T: np.ndarray, i: int) -> np.ndarray:
    out = T.copy()
    out[:, i - 1] = T[:, i]
    out[:, i] = op[T[:, i - 1], T[:, i]]
    return out


def braid_relation_violations(x: Rack, n: int) -> int:
    """Number of (tuple, relation) pairs on which a braid relation fails."""
    T = all_tuples(x.size, n)
    bad = 0
    for i in range(1, n - 1):
        a = _act(x.op, _act(x.op, _act(x.op, T, i), i + 1), i)
        b = _act(x.op, _act(x.op, _act(x.op, T, i + 1), i), i + 1)
        bad += int(np.any(a != b, axis=1).sum())
    for i in range(1, n):
        for j in range(i + 2, n):
            a = _act(x.op, _act(x.op, T, i), j)
            b = _act(x.op, _act(x.op, T, j), i)
            bad += int(np.any(a != b, axis=1).sum())
    return bad


def orbit_partition(x: Rack, tuples: Iterable[Sequence[int]], cap: int = DEFAULT_CAP):
    """Yield one full OrbitGraph per distinct B_n-orbit met by ``tuples``."""
    done: set = set()
    for t in tuples:
        key = bytes(t) if x.size <= 256 else tuple(t)
        if key in done:
            continue
        o = orbit(x, t, cap=cap)
        done.update(o.members)
        yield o


def block_tuples(x: Rack, n_vec: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """C_1^{n_1} x ... x C_k^{n_k} in lexicographic order."""
    comp = components(x)
    if len(n_vec) != comp.k:
        raise PreconditionError(f"need {comp.k} component counts, got {len(n_vec)}")
    factors = []
    for j, nj in enumerate(n_vec):
        if nj < 0:
            raise PreconditionError("component counts must be nonnegative")
        factors.extend([comp.members(j)] * nj)
    return itertools.product(*factors)
