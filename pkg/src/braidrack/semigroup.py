"""Finite experiments in the structure semigroup S_X of a rack.

An element of S_X of length n is a B_n-orbit in X^n; it is represented by
the lexicographically least tuple of the orbit. Multiplication is
concatenation of representatives. Orbit lookups are memoised per rack.
"""

from __future__ import annotations

import csv
import io
import itertools
import threading
import weakref
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import braid as B
from .errors import PreconditionError
from .rack import Rack, central_word_z, components, generates


class ClassCache:
    """tuple -> canonical representative, filled one whole orbit at a time."""

    def __init__(self, rack: Rack, cap: int = B.DEFAULT_CAP):
        self.rack = rack
        self.cap = cap
        self._canon: dict = {}
        self._sizes: dict = {}
        self._lock = threading.Lock()

    def _key(self, t):
        return bytes(t) if self.rack.size <= 256 else tuple(t)

    def canonical(self, t: Sequence[int]) -> tuple[int, ...]:
        key = self._key(t)
        with self._lock:
            hit = self._canon.get(key)
        if hit is not None:
            return tuple(hit)
        o = B.orbit(self.rack, t, cap=self.cap)
        rep = min(o.members)
        with self._lock:
            for m in o.members:
                self._canon[m] = rep
            self._sizes[rep] = len(o.members)
        return tuple(rep)

    def orbit_size(self, t: Sequence[int]) -> int:
        rep = self._key(self.canonical(t))
        return self._sizes[rep]

    def __len__(self):
        return len(self._canon)


_CACHES: "weakref.WeakKeyDictionary[Rack, ClassCache]" = weakref.WeakKeyDictionary()
_CACHES_LOCK = threading.Lock()


def cache_for(x: Rack) -> ClassCache:
    with _CACHES_LOCK:
        c = _CACHES.get(x)
        if c is None:
            c = _CACHES[x] = ClassCache(x)
        return c


@dataclass(frozen=True)
class OrbitClass:
    rack: Rack
    rep: tuple[int, ...]
    components: tuple[int, ...]
    generating: bool

    @property
    def n(self) -> int:
        return len(self.rep)

    def __eq__(self, other):
        return isinstance(other, OrbitClass) and self.rack == other.rack and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __mul__(self, other: "OrbitClass") -> "OrbitClass":
        return concat(self, other)

    def __repr__(self):
        return f"OrbitClass({self.rep})"


def component_vector(x: Rack, t: Sequence[int]) -> tuple[int, ...]:
    comp = components(x)
    counts = [0] * comp.k
    for v in t:
        counts[comp.labels[v]] += 1
    return tuple(counts)


def orbit_class(x: Rack, t: Sequence[int]) -> OrbitClass:
    t = tuple(int(v) for v in t)
    if not t:
        raise PreconditionError("S_X has no empty word; tuples must be nonempty")
    rep = cache_for(x).canonical(t)
    return OrbitClass(x, rep, component_vector(x, rep), generates(x, rep))


def concat(u: OrbitClass, v: OrbitClass) -> OrbitClass:
    if u.rack != v.rack:
        raise PreconditionError("classes over different racks")
    return orbit_class(u.rack, u.rep + v.rep)


def alternate_representatives(c: OrbitClass, count: int, rng) -> list[tuple[int, ...]]:
    """Up to ``count`` random members of the orbit behind class c."""
    o = B.orbit(c.rack, c.rep, cap=cache_for(c.rack).cap)
    picks = [rng.randrange(len(o)) for _ in range(count)]
    return [o.tuple_at(i) for i in picks]


def z_class(x: Rack) -> OrbitClass:
    return orbit_class(x, central_word_z(x))


# ---------------------------------------------------------------------------
# counting classes


def classes(x: Rack, n_vec: Sequence[int], generating_only: bool = False) -> list[OrbitClass]:
    """The B_n-orbits on X(n_1, ..., n_k) (or on X^*), sorted by representative.

    Every orbit meets C_1^{n_1} x ... x C_k^{n_k}, so only that block is scanned.
    """
    n_vec = tuple(int(v) for v in n_vec)
    if sum(n_vec) == 0:
        raise PreconditionError("total length must be positive")
    cache = cache_for(x)
    reps = {}
    for t in B.block_tuples(x, n_vec):
        rep = cache.canonical(t)
        if rep not in reps:
            reps[rep] = None
    out = []
    for rep in sorted(reps):
        gen = generates(x, rep)
        if gen or not generating_only:
            out.append(OrbitClass(x, rep, n_vec, gen))
    return out


def count_classes(x: Rack, n_vec: Sequence[int], generating_only: bool = False) -> int:
    return len(classes(x, n_vec, generating_only))


@dataclass(frozen=True)
class MultMapReport:
    w: tuple[int, ...]
    n_vec: tuple[int, ...]
    surjective: bool
    injective: bool
    domain_size: int
    codomain_size: int

    def as_dict(self) -> dict:
        return {"w": list(self.w), "n_vec": list(self.n_vec), "surjective": self.surjective,
                "injective": self.injective, "domain_size": self.domain_size,
                "codomain_size": self.codomain_size}


def mult_map_check(x: Rack, w: Sequence[int], n_vec: Sequence[int]) -> MultMapReport:
    """Left multiplication by w from X^*(n_vec)/B_n to X^*(n_vec + deg w)/B_{n+m}."""
    w = tuple(int(v) for v in w)
    if not w:
        raise PreconditionError("w must be a nonempty word")
    n_vec = tuple(int(v) for v in n_vec)
    shift = component_vector(x, w)
    target = tuple(a + b for a, b in zip(n_vec, shift))
    domain = classes(x, n_vec, generating_only=True)
    codomain = {c.rep for c in classes(x, target, generating_only=True)}
    cache = cache_for(x)
    image = {cache.canonical(w + c.rep) for c in domain}
    if not image <= codomain:
        raise PreconditionError("image left the generating locus; is w inside X?")
    return MultMapReport(w, n_vec, image == codomain, len(image) == len(domain),
                         len(domain), len(codomain))


@dataclass(frozen=True)
class StabilizationRow:
    n_vec: tuple[int, ...]
    classes: int
    generating_classes: int
    stable: bool


@dataclass(frozen=True)
class StabilizationTable:
    rack_name: str | None
    rows: tuple[StabilizationRow, ...]
    thresholds: tuple[int | None, ...]

    def to_csv(self) -> str:
        k = len(self.rows[0].n_vec) if self.rows else 0
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow([f"n_{j + 1}" for j in range(k)] + ["classes", "generating_classes"])
        for r in self.rows:
            wr.writerow(list(r.n_vec) + [r.classes, r.generating_classes])
        return buf.getvalue()

    def as_dict(self) -> dict:
        return {
            "rack": self.rack_name,
            "thresholds": list(self.thresholds),
            "rows": [{"n_vec": list(r.n_vec), "classes": r.classes,
                      "generating_classes": r.generating_classes, "stable": r.stable}
                     for r in self.rows],
        }

    def generating_counts(self) -> dict:
        return {r.n_vec: r.generating_classes for r in self.rows}


def stabilization_table(x: Rack, ranges: Sequence[Iterable[int]]) -> StabilizationTable:
    """Class counts over a box of component vectors.

    ``thresholds[j]`` is the least value along coordinate j from which the
    generating-class count no longer changes within the window (None if it
    changes at the last step).
    """
    comp = components(x)
    ranges = [sorted(set(int(v) for v in r)) for r in ranges]
    if len(ranges) != comp.k:
        raise PreconditionError(f"need {comp.k} ranges, got {len(ranges)}")
    counts = {}
    for n_vec in itertools.product(*ranges):
        if sum(n_vec) == 0:
            continue
        all_cls = classes(x, n_vec)
        counts[n_vec] = (len(all_cls), sum(c.generating for c in all_cls))

    thresholds: list[int | None] = []
    for j, values in enumerate(ranges):
        best = None
        for start in reversed(range(len(values))):
            ok = True
            for n_vec, (_, g) in counts.items():
                if n_vec[j] >= values[start] and n_vec[j] != values[-1]:
                    nxt = values[values.index(n_vec[j]) + 1]
                    other = n_vec[:j] + (nxt,) + n_vec[j + 1:]
                    if other in counts and counts[other][1] != g:
                        ok = False
                        break
            if not ok:
                break
            best = values[start]
        if best == values[-1]:
            best = None
        thresholds.append(best)

    rows = tuple(
        StabilizationRow(n_vec, c, g, all(t is not None and v >= t for v, t in zip(n_vec, thresholds)))
        for n_vec, (c, g) in sorted(counts.items()))
    return StabilizationTable(x.name, rows, tuple(thresholds))
