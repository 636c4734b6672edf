"""Permutations and permutation groups on {0, ..., n-1}.

Permutations are plain tuples of images: point ``p`` is sent to ``perm[p]``.
Everything acts on the right, so ``compose(p, q)`` means "apply p, then q".
This is the convention used for the braid action on tuples, which keeps the
map sigma_i -> (i, i+1) a homomorphism without any inversion tricks.

``PermGroup`` is built by a deterministic Schreier-Sims and exposes the exact
order (a Python int) and membership by sifting.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InvariantError, PreconditionError, ResourceError, StructureError

Perm = tuple


# ---------------------------------------------------------------------------
# elementary permutation arithmetic


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def check_perm(p: Sequence[int]) -> Perm:
    """Return ``p`` as a tuple, raising if it is not a bijection of range(n)."""
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(len(p))):
        raise PreconditionError(f"not a permutation: {p!r}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """The product p*q under the right action: apply p first, then q."""
    return tuple([q[i] for i in p])


def compose_all(perms: Iterable[Perm], n: int) -> Perm:
    out = identity(n)
    for p in perms:
        out = compose(out, p)
    return out


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def conjugate(p: Perm, g: Perm) -> Perm:
    """p^g = g^-1 p g."""
    return compose(compose(inverse(g), p), g)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    out = identity(len(p))
    base = p
    while k:
        if k & 1:
            out = compose(out, base)
        base = compose(base, base)
        k >>= 1
    return out


def cycles(p: Perm, include_fixed: bool = False) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        if len(cyc) > 1 or include_fixed:
            out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths in non-increasing order, fixed points included."""
    return tuple(sorted((len(c) for c in cycles(p, include_fixed=True)), reverse=True))


def order(p: Perm) -> int:
    return math.lcm(*cycle_type(p)) if len(p) else 1


def sign(p: Perm) -> int:
    """+1 for even permutations, -1 for odd ones."""
    parity = sum(len(c) - 1 for c in cycles(p)) & 1
    return -1 if parity else 1


def is_even(p: Perm) -> bool:
    return sign(p) == 1


def from_cycles(cyc: Iterable[Sequence[int]], n: int) -> Perm:
    """Build a permutation of degree n from 0-based cycles."""
    img = list(range(n))
    seen = set()
    for c in cyc:
        c = [int(x) for x in c]
        for x in c:
            if not 0 <= x < n:
                raise PreconditionError(f"point {x} out of range for degree {n}")
            if x in seen:
                raise PreconditionError(f"point {x} appears twice in cycle notation")
            seen.add(x)
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


def transposition(a: int, b: int, n: int) -> Perm:
    img = list(range(n))
    img[a], img[b] = b, a
    return tuple(img)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse 1-based cycle notation such as ``"(1 2)(3 4 5)"``.

    Text input is 1-based (as people write it); the result is 0-based.
    ``"()"`` is the identity. The degree defaults to the largest point used.
    """
    body = text.strip()
    if not body:
        raise PreconditionError("empty permutation text")
    leftover = _CYCLE.sub("", body).strip()
    if leftover:
        raise PreconditionError(f"could not parse permutation {text!r}")
    cyc = []
    for m in _CYCLE.finditer(body):
        pts = [int(x) - 1 for x in re.split(r"[\s,]+", m.group(1).strip()) if x]
        if any(x < 0 for x in pts):
            raise PreconditionError(f"points are 1-based in {text!r}")
        if pts:
            cyc.append(pts)
    top = max((max(c) + 1 for c in cyc), default=0)
    if n is None:
        n = top
    elif top > n:
        raise PreconditionError(f"{text!r} moves points beyond degree {n}")
    return from_cycles(cyc, n)


def format_cycles(p: Perm) -> str:
    """1-based cycle notation, the inverse of :func:`parse_cycles`."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cs)


def parse_perm_list(text: str, n: int | None = None) -> list[Perm]:
    """List of 1-based cycle expressions separated by commas or semicolons."""
    parts = [s for s in re.split(r"[,;](?![^()]*\))", text) if s.strip()]
    if n is None:
        n = max((len(parse_cycles(s)) for s in parts), default=0)
    return [parse_cycles(s, n) for s in parts]


# ---------------------------------------------------------------------------
# Schreier-Sims


@dataclass
class _Level:
    point: int
    gens: list
    transversal: dict = field(default_factory=dict)

    def rebuild(self, n):
        trans = {self.point: identity(n)}
        queue = [self.point]
        for pt in queue:
            u = trans[pt]
            for s in self.gens:
                im = s[pt]
                if im not in trans:
                    trans[im] = compose(u, s)
                    queue.append(im)
        self.transversal = trans


def _first_moved(p: Perm) -> int:
    for i, x in enumerate(p):
        if i != x:
            return i
    return -1


class PermGroup:
    """A permutation group given by generators, with a base and strong
    generating set computed eagerly.

    Instances are immutable once constructed and safe to share between
    threads.
    """

    __slots__ = ("degree", "generators", "_levels", "_order")

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None):
        gens = [check_perm(g) for g in generators]
        if degree is None:
            if not gens:
                raise PreconditionError("degree is required for an empty generator list")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise PreconditionError(
                    f"generator of degree {len(g)} in a group of degree {degree}")
        self.degree = degree
        self.generators = tuple(dict.fromkeys(g for g in gens if not is_identity(g)))
        self._levels = _schreier_sims(list(self.generators), degree)
        self._order = math.prod(len(lv.transversal) for lv in self._levels)

    # -- basic data -------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lv.point for lv in self._levels)

    @property
    def strong_generators(self) -> tuple[Perm, ...]:
        seen = {}
        for lv in self._levels:
            for g in lv.gens:
                seen[g] = None
        return tuple(seen)

    def basic_orbit_lengths(self) -> tuple[int, ...]:
        return tuple(len(lv.transversal) for lv in self._levels)

    def __len__(self):
        return self._order

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self._order})"

    # -- membership -------------------------------------------------------

    def sift(self, p: Perm) -> tuple[Perm, int]:
        """Strip ``p`` through the stabilizer chain.

        Returns the residue and the level at which stripping stopped
        (``len(base)`` when every level was passed).
        """
        for i, lv in enumerate(self._levels):
            u = lv.transversal.get(p[lv.point])
            if u is None:
                return p, i
            p = compose(p, inverse(u))
        return p, len(self._levels)

    def contains(self, p: Sequence[int]) -> bool:
        p = tuple(p)
        if len(p) != self.degree:
            raise PreconditionError(f"degree mismatch: {len(p)} vs {self.degree}")
        residue, _ = self.sift(p)
        return is_identity(residue)

    __contains__ = contains

    # -- enumeration ------------------------------------------------------

    def elements(self) -> Iterator[Perm]:
        """Every element exactly once, in a deterministic order."""
        n = self.degree
        if not self._levels:
            yield identity(n)
            return
        trans = [list(lv.transversal.values()) for lv in reversed(self._levels)]
        for combo in itertools.product(*trans):
            yield compose_all(combo, n)

    def random_element(self, rng: random.Random) -> Perm:
        """A uniformly distributed element (one transversal pick per level)."""
        out = identity(self.degree)
        for lv in reversed(self._levels):
            reps = list(lv.transversal.values())
            out = compose(out, reps[rng.randrange(len(reps))])
        return out

    def orbit(self, point: int) -> list[int]:
        seen = {point: None}
        queue = [point]
        for pt in queue:
            for g in self.generators:
                im = g[pt]
                if im not in seen:
                    seen[im] = None
                    queue.append(im)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        done = set()
        out = []
        for p in range(self.degree):
            if p not in done:
                orb = self.orbit(p)
                done.update(orb)
                out.append(orb)
        return out

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def extended(self, extra: Iterable[Perm]) -> "PermGroup":
        return PermGroup(list(self.strong_generators) + list(extra), self.degree)


def _schreier_sims(gens: list, n: int) -> list[_Level]:
    """Deterministic Schreier-Sims (restarting variant, Holt's layout)."""
    levels: list[_Level] = []

    def fixes_base(g):
        return all(g[lv.point] == lv.point for lv in levels)

    for g in gens:
        if fixes_base(g):
            levels.append(_Level(_first_moved(g), []))
    for i, lv in enumerate(levels):
        lv.gens = [g for g in gens if all(g[levels[j].point] == levels[j].point for j in range(i))]
        lv.rebuild(n)

    def strip(h, start):
        for j in range(start, len(levels)):
            lv = levels[j]
            u = lv.transversal.get(h[lv.point])
            if u is None:
                return h, j
            h = compose(h, inverse(u))
        return h, len(levels)

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        restart = False
        for beta, u_beta in list(lv.transversal.items()):
            for s in lv.gens:
                h = compose(compose(u_beta, s), inverse(lv.transversal[s[beta]]))
                if is_identity(h):
                    continue
                residue, j = strip(h, i + 1)
                if j == len(levels):
                    if is_identity(residue):
                        continue
                    levels.append(_Level(_first_moved(residue), []))
                for l in range(i + 1, j + 1):
                    levels[l].gens.append(residue)
                    levels[l].rebuild(n)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    return levels


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        gens.append(transposition(0, 1, n))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(gens, n)


def alternating_group(n: int) -> PermGroup:
    gens = [from_cycles([(0, 1, i)], n) for i in range(2, n)]
    return PermGroup(gens, n)


def cyclic_group(n: int) -> PermGroup:
    return PermGroup([tuple(list(range(1, n)) + [0])] if n > 1 else [], n)


def brute_force_closure(generators: Iterable[Perm], n: int) -> set[Perm]:
    """All elements of the generated group by plain BFS. Test oracle."""
    gens = [tuple(g) for g in generators]
    e = identity(n)
    seen = {e}
    queue = [e]
    for x in queue:
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


# ---------------------------------------------------------------------------
# block structures and subgroup criteria


@dataclass(frozen=True)
class BlockStructure:
    """A partition of {0..n-1} into blocks D_1..D_k."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(x) for x in b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        pts = [x for b in blocks for x in b]
        if sorted(pts) != list(range(len(pts))):
            raise PreconditionError("blocks must partition {0..n-1}")
        if any(not b for b in blocks):
            raise PreconditionError("blocks must be nonempty")

    @classmethod
    def consecutive(cls, sizes: Sequence[int]) -> "BlockStructure":
        out, start = [], 0
        for s in sizes:
            out.append(tuple(range(start, start + s)))
            start += s
        return cls(tuple(out))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "BlockStructure":
        groups: dict[int, list[int]] = {}
        for pos, lab in enumerate(labels):
            groups.setdefault(lab, []).append(pos)
        return cls(tuple(tuple(groups[k]) for k in sorted(groups)))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def degree(self) -> int:
        return sum(self.sizes)

    def label_of(self) -> list[int]:
        lab = [0] * self.degree
        for j, b in enumerate(self.blocks):
            for x in b:
                lab[x] = j
        return lab

    def restrict(self, p: Perm, j: int) -> Perm:
        """The permutation induced on block j, relabelled to 0..n_j-1."""
        b = self.blocks[j]
        pos = {x: i for i, x in enumerate(b)}
        return tuple(pos[p[x]] for x in b)


def respects_blocks(p: Perm, blocks: BlockStructure) -> bool:
    lab = blocks.label_of()
    return all(lab[p[x]] == lab[x] for x in range(len(p)))


def _gf2_rank(rows: list[int]) -> int:
    rank = 0
    rows = list(rows)
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
    return rank


@dataclass(frozen=True)
class Classification:
    respects_blocks: bool
    is_full_product: bool
    contains_alt_product: bool
    inside_even_part: bool
    sign_image_rank: int | None
    order: int
    block_sizes: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "respects_blocks": self.respects_blocks,
            "is_full_product": self.is_full_product,
            "contains_alt_product": self.contains_alt_product,
            "inside_even_part": self.inside_even_part,
            "sign_image_rank": self.sign_image_rank,
            "order": str(self.order),
            "block_sizes": list(self.block_sizes),
        }


def classify_in_product(h: PermGroup, blocks: BlockStructure) -> Classification:
    """Where does ``h`` sit relative to S_{n_1} x ... x S_{n_k}?"""
    if blocks.degree != h.degree:
        raise PreconditionError(f"blocks cover {blocks.degree} points, group has degree {h.degree}")
    sizes = blocks.sizes
    resp = all(respects_blocks(g, blocks) for g in h.generators)
    full_order = math.prod(math.factorial(s) for s in sizes)
    is_full = resp and h.order == full_order
    contains_alt = True
    for b in blocks.blocks:
        for i in range(2, len(b)):
            if not h.contains(from_cycles([(b[0], b[1], b[i])], h.degree)):
                contains_alt = False
                break
        if not contains_alt:
            break
    even = all(is_even(g) for g in h.generators)
    rank = None
    if resp:
        rows = []
        for g in h.generators:
            v = 0
            for j in range(len(sizes)):
                if sign(blocks.restrict(g, j)) == -1:
                    v |= 1 << j
            rows.append(v)
        rank = _gf2_rank(rows)

    # is_full => contains_alt => order >= prod(n_j!) / 2^k
    if is_full and not contains_alt:
        raise InvariantError("full product group failed the alternating-product test")
    if contains_alt and resp and h.order * 2 ** len(sizes) < full_order:
        raise InvariantError("alternating product contained but order too small")
    return Classification(resp, is_full, contains_alt, even, rank, h.order, sizes)


def k_homogeneous(h: PermGroup, k: int) -> bool:
    """Is ``h`` transitive on k-element subsets of {0..n-1}?"""
    n = h.degree
    if not 0 <= k <= n:
        raise PreconditionError(f"k={k} out of range for degree {n}")
    start = (1 << k) - 1
    gens = h.generators
    seen = {start}
    queue = [start]
    for mask in queue:
        for g in gens:
            img = 0
            m = mask
            while m:
                low = m & -m
                img |= 1 << g[low.bit_length() - 1]
                m ^= low
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen) == math.comb(n, k)


@dataclass(frozen=True)
class HomogeneityVerdict:
    degree: int
    k: int
    homogeneous: bool
    is_alternating: bool
    is_symmetric: bool

    @property
    def is_an_or_sn(self) -> bool:
        return self.is_alternating or self.is_symmetric

    @property
    def consistent(self) -> bool:
        return (not self.homogeneous) or self.is_an_or_sn


def is_symmetric_group(h: PermGroup) -> bool:
    return h.order == math.factorial(h.degree)


def is_alternating_group(h: PermGroup) -> bool:
    n = h.degree
    if n < 2:
        return True
    return h.order * 2 == math.factorial(n) and all(is_even(g) for g in h.generators)


def check_homogeneity_dichotomy(h: PermGroup) -> HomogeneityVerdict:
    """Floor(n/2)-homogeneity versus membership in {A_n, S_n} for one group."""
    n = h.degree
    k = n // 2
    return HomogeneityVerdict(n, k, k_homogeneous(h, k), is_alternating_group(h),
                              is_symmetric_group(h))


def invariably_generates(subgroup_gens: Sequence[Sequence[Perm]], mode: str = "exhaustive",
                         samples: int = 1000, seed: int = 0, max_degree: int = 8) -> bool:
    """Do the given subgroups invariably generate S_n?

    The first subgroup is never conjugated: conjugating every subgroup by a
    common element does not change whether they generate S_n. In exhaustive
    mode every other subgroup runs over all n! conjugators, which is refused
    above ``max_degree``. Sampled mode draws ``samples`` conjugator tuples
    from a generator seeded with ``seed``.
    """
    groups = [[check_perm(g) for g in gens] for gens in subgroup_gens]
    degrees = {len(g) for gens in groups for g in gens}
    if len(degrees) > 1:
        raise PreconditionError(f"mixed degrees {sorted(degrees)}")
    if not degrees:
        raise PreconditionError("no generators given; degree unknown")
    n = degrees.pop()
    target = math.factorial(n)
    fixed, movable = groups[0], groups[1:]

    def generates(conjugators):
        gens = list(fixed)
        for sub, c in zip(movable, conjugators):
            gens.extend(conjugate(g, c) for g in sub)
        return PermGroup(gens, n).order == target

    if mode == "exhaustive":
        if n > max_degree:
            raise ResourceError(f"exhaustive invariable generation refused at degree {n} > {max_degree}")
        # conjugates only matter through the conjugated generator sets
        options = []
        for sub in movable:
            seen = {}
            for c in itertools.permutations(range(n)):
                key = tuple(conjugate(g, c) for g in sub)
                seen.setdefault(key, c)
            options.append(list(seen.values()))
        return all(generates(combo) for combo in itertools.product(*options))
    if mode == "sampled":
        rng = random.Random(seed)
        pts = list(range(n))
        for _ in range(samples):
            combo = []
            for _sub in movable:
                rng.shuffle(pts)
                combo.append(tuple(pts))
            if not generates(combo):
                return False
        return True
    raise PreconditionError(f"unknown mode {mode!r}")


def cycle_type_frequencies(h: PermGroup, blocks: BlockStructure | None = None) -> dict:
    """Exact distribution of (per-block) cycle types over the elements of h."""
    if blocks is None:
        blocks = BlockStructure.consecutive([h.degree])
    counts: dict = {}
    for g in h.elements():
        key = tuple(cycle_type(blocks.restrict(g, j)) for j in range(len(blocks.blocks)))
        counts[key] = counts.get(key, 0) + 1
    return {k: Fraction(v, h.order) for k, v in counts.items()}


# ---------------------------------------------------------------------------
# subgroups of direct products


@dataclass(frozen=True)
class ProductVerdict:
    order: int
    product_order: int
    abelianization_surjective: bool
    projects_onto_factors: bool
    projects_onto_isomorphic_pairs: bool
    hypothesis_holds: bool
    is_full_product: bool

    @property
    def conditions_hold(self) -> bool:
        return (self.abelianization_surjective and self.projects_onto_factors
                and self.projects_onto_isomorphic_pairs)

    @property
    def consistent(self) -> bool:
        if self.hypothesis_holds and self.conditions_hold:
            return self.is_full_product
        return True

    def as_dict(self) -> dict:
        return {
            "order": str(self.order),
            "product_order": str(self.product_order),
            "abelianization_surjective": self.abelianization_surjective,
            "projects_onto_factors": self.projects_onto_factors,
            "projects_onto_isomorphic_pairs": self.projects_onto_isomorphic_pairs,
            "hypothesis_holds": self.hypothesis_holds,
            "is_full_product": self.is_full_product,
            "consistent": self.consistent,
        }


def product_criterion(h_gens: Sequence[Sequence[int]], factors: Sequence,
                      budget: int = 2_000_000) -> ProductVerdict:
    """Test the three-condition criterion for H = G_1 x ... x G_r on one instance.

    ``h_gens`` are tuples of element indices, one per factor (each factor a
    ``FiniteGroupTable``). H is enumerated by closure, so the product order
    must stay within ``budget``. ``hypothesis_holds`` records whether every
    pair of factors is either isomorphic or shares no nonabelian simple
    quotient, which is what makes the criterion applicable.
    """
    from . import groups as G

    factors = list(factors)
    for f in factors:
        if not isinstance(f, G.FiniteGroupTable):
            raise StructureError("factors must be FiniteGroupTable instances")
        f.validate()
    r = len(factors)
    gens = [tuple(int(v) for v in g) for g in h_gens]
    for g in gens:
        if len(g) != r or any(not 0 <= v < f.order for v, f in zip(g, factors)):
            raise PreconditionError(f"generator {g} is not an element of the product")
    product_order = math.prod(f.order for f in factors)
    if product_order > budget:
        raise ResourceError(f"product order {product_order} exceeds the budget {budget}")

    ident = tuple(f.identity for f in factors)
    elems = {ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for g in gens:
            y = tuple(f.rows[a][b] for f, a, b in zip(factors, x, g))
            if y not in elems:
                elems.add(y)
                queue.append(y)

    ab_labels = [f.cosets(f.commutator_subgroup) for f in factors]
    ab_sizes = [max(lab) + 1 for lab in ab_labels]
    ab_image = {tuple(lab[v] for lab, v in zip(ab_labels, x)) for x in elems}
    ab_surj = len(ab_image) == math.prod(ab_sizes)

    onto = all(len({x[i] for x in elems}) == f.order for i, f in enumerate(factors))

    pairs_ok = True
    hypothesis = True
    for i, j in itertools.combinations(range(r), 2):
        if factors[i].is_isomorphic(factors[j]):
            if len({(x[i], x[j]) for x in elems}) != factors[i].order * factors[j].order:
                pairs_ok = False
        else:
            qi = factors[i].nonabelian_simple_quotients()
            qj = factors[j].nonabelian_simple_quotients()
            if any(a.is_isomorphic(b) for a in qi for b in qj):
                hypothesis = False
    return ProductVerdict(len(elems), product_order, ab_surj, onto, pairs_ok, hypothesis,
                          len(elems) == product_order)
