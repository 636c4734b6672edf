"""Factorization statistics for polynomials over prime fields F_p.

Polynomials are tuples of coefficients in increasing degree, reduced mod p,
with no trailing zeros (the zero polynomial is the empty tuple). All counts,
frequencies and character values are exact integers or Fractions.

The G = Z/2 oracle rests on the following correspondence, for p odd. A
Z/2-extension K of F_p(T) that is split at infinity and tamely ramified is
F_p(T, sqrt(c f)) with f monic squarefree; the place at infinity splits
exactly when deg f is even and the leading coefficient c is a square, and
the twist by a nonsquare constant gives the constant field extension, which
is not geometric. Hence such K with discriminant divisor of degree n
correspond one-to-one to monic squarefree f of even degree n, with the
ramified places being the irreducible factors of f. So the number of
ramified primes of K is the number of irreducible factors of D_K = f, and
mu(D_K) = (-1)^{#factors}.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import perm as P
from .errors import PreconditionError, ResourceError

DEFAULT_BUDGET = 5_000_000

Poly = tuple


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _check_prime(p: int) -> None:
    if not _is_prime(p):
        raise PreconditionError(f"q={p} must be prime (prime fields only)")


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p


def trim(a: Sequence[int], p: int) -> Poly:
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def degree(a: Poly) -> int:
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def divmod_poly(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1] * inv_lead % p
        q[shift] = c
        if c:
            for j, y in enumerate(b):
                a[shift + j] = (a[shift + j] - c * y) % p
    return trim(q, p), trim(a, p)


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_poly(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def derivative(a: Poly, p: int) -> Poly:
    return trim([i * c for i, c in enumerate(a)][1:], p)


def powmod(base: Poly, e: int, m: Poly, p: int) -> Poly:
    out: Poly = (1,)
    base = mod(base, m, p)
    while e:
        if e & 1:
            out = mod(mul(out, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return mod(out, m, p)


def is_squarefree(f: Poly, p: int) -> bool:
    return degree(gcd(f, derivative(f, p), p)) == 0


def format_poly(f: Poly) -> str:
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mon = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
        coef = str(c) if (c != 1 or i == 0) else ""
        terms.append(coef + mon)
    return " + ".join(terms) or "0"


# ---------------------------------------------------------------------------
# enumeration and factorization


def monic_polys(p: int, n: int) -> Iterator[Poly]:
    """All monic degree-n polynomials, lexicographic in low coefficients."""
    for low in itertools.product(range(p), repeat=n):
        yield tuple(low) + (1,)


def squarefree_polys(q: int, n: int, budget: int = DEFAULT_BUDGET) -> Iterator[Poly]:
    _check_prime(q)
    if n < 0:
        raise PreconditionError("degree must be nonnegative")
    if q ** n > budget:
        raise ResourceError(f"{q}^{n} polynomials exceed the budget of {budget}")
    for f in monic_polys(q, n):
        if n <= 1 or is_squarefree(f, q):
            yield f


def distinct_degree_factorization(f: Poly, p: int) -> list[tuple[int, Poly]]:
    """[(d, g_d)] with g_d the product of the degree-d irreducible factors of
    a monic squarefree f; only nontrivial g_d are listed."""
    out = []
    rest = f
    x: Poly = (0, 1)
    h = x
    d = 0
    while degree(rest) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, rest, p)
        g = gcd(rest, sub(h, x, p), p)
        if degree(g) > 0:
            out.append((d, g))
            rest = divmod_poly(rest, g, p)[0]
            h = mod(h, rest, p)
    if degree(rest) > 0:
        out.append((degree(rest), rest))
    return out


def factorization_type(f: Poly, q: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of a monic squarefree f, descending."""
    _check_prime(q)
    f = trim(f, q)
    if not f or f[-1] != 1:
        raise PreconditionError("polynomial must be monic")
    if degree(f) >= 2 and not is_squarefree(f, q):
        raise PreconditionError(f"{format_poly(f)} is not squarefree mod {q}")
    parts = []
    for d, g in distinct_degree_factorization(f, q):
        parts.extend([d] * (degree(g) // d))
    return tuple(sorted(parts, reverse=True))


def moebius_and_lambda(f: Poly, q: int) -> tuple[int, int]:
    """(mu(f), Lambda(f)) for monic squarefree f."""
    t = factorization_type(f, q)
    mu = -1 if len(t) % 2 else 1
    lam = degree(f) if len(t) == 1 else 0
    return mu, lam


def necklace_count(q: int, n: int) -> int:
    """Number of monic irreducible polynomials of degree n over F_q."""
    total = sum(_mobius_int(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def _mobius_int(d: int) -> int:
    out, k = 1, 2
    while k * k <= d:
        if d % k == 0:
            d //= k
            if d % k == 0:
                return 0
            out = -out
        k += 1
    return -out if d > 1 else out


def zeta_q(q: int, s: int) -> Fraction:
    """sum over monic f of |f|^-s = 1 / (1 - q^(1-s)), for integer s >= 2."""
    if q < 2:
        raise PreconditionError("q must be at least 2")
    if s <= 1:
        raise PreconditionError("the series converges only for s > 1")
    return 1 / (1 - Fraction(1, q ** (s - 1)))


# ---------------------------------------------------------------------------
# characters of exterior powers of the standard representation


def _poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def exterior_char_poly(cycle_type: Sequence[int]) -> list[int]:
    """Coefficients c_i = chi_{wedge^i std}(sigma), i = 0..n-1."""
    parts = [int(v) for v in cycle_type]
    if any(v < 1 for v in parts) or not parts:
        raise PreconditionError(f"bad cycle type {cycle_type!r}")
    # permutation representation: prod over cycles of (1 - (-t)^l)
    total = [1]
    for ell in parts:
        factor = [1] + [0] * (ell - 1) + [-((-1) ** ell)]
        total = _poly_mul_int(total, factor)
    # divide by (1 + t): synthetic division, remainder must vanish
    out = []
    carry = 0
    for c in total[:-1]:
        carry = c - carry
        out.append(carry)
    if total[-1] - carry != 0:
        raise AssertionError("permutation character not divisible by 1 + t")
    return out


def exterior_char(cycle_type: Sequence[int], i: int) -> int:
    coeffs = exterior_char_poly(cycle_type)
    if not 0 <= i < len(coeffs):
        raise PreconditionError(f"i={i} out of range 0..{len(coeffs) - 1}")
    return coeffs[i]


def alternating_exterior_sum(cycle_type: Sequence[int]) -> int:
    return sum((-1) ** i * c for i, c in enumerate(exterior_char_poly(cycle_type)))


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n, parts descending."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Chebotarev prediction


def format_type_key(key: Sequence[Sequence[int]]) -> str:
    """("3+2+1", "4+1") style key joined by '|'."""
    return "|".join("+".join(str(v) for v in part) for part in key)


@dataclass(frozen=True)
class Prediction:
    frequencies: dict
    exact: bool
    samples: int | None = None

    def as_json(self) -> dict:
        return {
            "exact": self.exact,
            "samples": self.samples,
            "frequencies": {format_type_key(k): str(v)
                            for k, v in sorted(self.frequencies.items(), key=lambda kv: format_type_key(kv[0]))},
        }

    def total(self) -> Fraction:
        return sum(self.frequencies.values(), Fraction(0))


def chebotarev_predict(h: P.PermGroup, blocks: P.BlockStructure | None = None,
                       budget: int = 1_000_000, sample: bool = False, samples: int = 10_000,
                       seed: int = 0) -> Prediction:
    """|Delta cap H| / |H| for every tuple of per-block cycle types Delta.

    Exact by enumerating H when |H| <= budget. Otherwise, with ``sample``,
    a seeded uniform sample is used and the result is flagged inexact.
    """
    if blocks is None:
        blocks = P.BlockStructure.consecutive([h.degree])
    if blocks.degree != h.degree:
        raise PreconditionError("blocks and group degree disagree")
    if not all(P.respects_blocks(g, blocks) for g in h.generators):
        raise PreconditionError("group does not respect the blocks")
    if h.order <= budget:
        return Prediction(P.cycle_type_frequencies(h, blocks), True)
    if not sample:
        raise ResourceError(f"|H| = {h.order} exceeds the enumeration budget {budget}")
    rng = random.Random(seed)
    counts: dict = {}
    k = len(blocks.blocks)
    for _ in range(samples):
        g = h.random_element(rng)
        key = tuple(P.cycle_type(blocks.restrict(g, j)) for j in range(k))
        counts[key] = counts.get(key, 0) + 1
    return Prediction({k_: Fraction(v, samples) for k_, v in counts.items()}, False, samples)


def product_of_symmetric(sizes: Sequence[int]) -> P.PermGroup:
    n = sum(sizes)
    gens, start = [], 0
    for s in sizes:
        if s >= 2:
            gens.append(P.transposition(start, start + 1, n))
        if s >= 3:
            cyc = list(range(n))
            for i in range(s):
                cyc[start + i] = start + (i + 1) % s
            gens.append(tuple(cyc))
        start += s
    return P.PermGroup(gens, n)


# ---------------------------------------------------------------------------
# the G = Z/2 oracle


@dataclass(frozen=True)
class Z2Stats:
    q: int
    n: int
    count: int
    sum_moebius: int
    count_irreducible: int

    def as_row(self) -> list[int]:
        return [self.q, self.n, self.count, self.sum_moebius, self.count_irreducible]


def _z2_slice(q: int, n: int, lead: int) -> tuple[int, int, int]:
    count = mu_sum = irred = 0
    for low in itertools.product(range(q), repeat=n - 1):
        f = (lead,) + tuple(low) + (1,)
        if not is_squarefree(f, q):
            continue
        mu, lam = moebius_and_lambda(f, q)
        count += 1
        mu_sum += mu
        irred += lam != 0
    return count, mu_sum, irred


def z2_extension_stats(q: int, n: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> Z2Stats:
    """Count, Moebius sum and irreducible count over monic squarefree f of
    degree n, i.e. over quadratic extensions split at infinity with
    discriminant of degree n (see the module docstring)."""
    _check_prime(q)
    if q == 2:
        raise PreconditionError("q must be odd (wild ramification at 2)")
    if n <= 0 or n % 2:
        raise PreconditionError("n must be a positive even integer")
    if q ** n > budget:
        raise ResourceError(f"{q}^{n} polynomials exceed the budget of {budget}")
    # slices by constant coefficient; summed in slice order
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(lambda c: _z2_slice(q, n, c), range(q)))
    else:
        parts = [_z2_slice(q, n, c) for c in range(q)]
    count = sum(p[0] for p in parts)
    mu_sum = sum(p[1] for p in parts)
    irred = sum(p[2] for p in parts)
    return Z2Stats(q, n, count, mu_sum, irred)


def irreducible_fraction_cubics(q: int) -> Fraction:
    """Share of irreducible polynomials among monic squarefree cubics."""
    total = irred = 0
    for f in squarefree_polys(q, 3):
        total += 1
        irred += factorization_type(f, q) == (3,)
    return Fraction(irred, total)
