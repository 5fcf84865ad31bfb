"""Finite groups with index-addressed elements and three storage backends.

Every group exposes its elements as the indices ``0 .. order-1`` with
index 0 the identity; the indexing per backend is frozen so reports are
reproducible bit for bit.  Backends:

* :class:`CayleyTableGroup` -- dense multiplication table (numpy), used
  for the cyclic, dihedral, generalized quaternion and direct-product
  families up to the materialization threshold;
* :class:`PermutationGroup` -- S_k for k <= 11, addressed by Lehmer rank
  in lexicographic one-line order.  Elements are decoded on demand and
  the group is never materialized, which is what makes scans over S_8
  and S_11 feasible;
* :class:`MetacyclicGroup` -- coordinate pairs (i, j) for the semidirect
  product of C_{p^a} by C_{q^b} acting as x -> x^r, with one modular
  multiplication per product.

Scans over large groups work on backend "words" (permutation tuples, or
plain indices where indices are already cheap) through the ``word_*``
methods; the index API is what the materialized analyses use.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator

import numpy as np

from .errors import ResourceLimitError, ScaleError
from .numtheory import factorize, is_prime

__all__ = [
    "CyclicSubgroup",
    "Group",
    "CayleyTableGroup",
    "PermutationGroup",
    "MetacyclicGroup",
    "cyclic_subgroup",
    "exponent_and_pi",
    "generated_subgroup_words",
    "is_maximal_element",
    "is_power_of",
    "make_cyclic",
    "make_dihedral",
    "make_direct_product",
    "make_generalized_quaternion",
    "make_metacyclic",
    "make_symmetric",
    "max_materialize",
    "maximal_cyclic_subgroups",
    "spot_check_axioms",
]

DEFAULT_MAX_MATERIALIZE = 4096


def max_materialize() -> int:
    """Materialization threshold; override with POWERCRIT_MAX_MATERIALIZE."""
    return int(os.environ.get("POWERCRIT_MAX_MATERIALIZE", DEFAULT_MAX_MATERIALIZE))


class Group(ABC):
    """Finite group on element indices 0 .. order-1, identity at index 0.

    Queries are logically pure; the per-element power memo is write-once
    idempotent, so instances can be shared freely across workers.
    """

    identity: int = 0

    def __init__(self, order: int, descriptor: str):
        self.order = order
        self.descriptor = descriptor
        self._powers_memo: dict[int, tuple[int, ...]] = {}
        self._members_memo: dict[int, frozenset[int]] = {}

    # -- index API ---------------------------------------------------------

    @abstractmethod
    def mul(self, a: int, b: int) -> int:
        """Product of two elements, by index."""

    @abstractmethod
    def inv(self, a: int) -> int:
        """Inverse of an element, by index."""

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = self.identity, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def element_order(self, a: int) -> int:
        return len(self.powers(a))

    def powers(self, a: int) -> tuple[int, ...]:
        """(1, a, a^2, ...): the cyclic subgroup generated by a, in power order."""
        got = self._powers_memo.get(a)
        if got is None:
            seq = [self.identity]
            x = a
            while x != self.identity:
                seq.append(x)
                x = self.mul(x, a)
            got = self._powers_memo.setdefault(a, tuple(seq))
        return got

    def members(self, a: int) -> frozenset[int]:
        """The cyclic subgroup generated by a, as a set of indices."""
        got = self._members_memo.get(a)
        if got is None:
            got = self._members_memo.setdefault(a, frozenset(self.powers(a)))
        return got

    def cyclic_generators(self, a: int) -> frozenset[int]:
        """All elements generating the same cyclic subgroup as a."""
        pw = self.powers(a)
        o = len(pw)
        return frozenset(pw[k] for k in range(o) if math.gcd(k, o) == 1) if o > 1 else frozenset({self.identity})

    def element_label(self, a: int) -> str:
        return str(a)

    def parse_element(self, text: str) -> int:
        try:
            a = int(text.strip())
        except ValueError:
            raise ValueError(f"element descriptor {text!r} is not an index") from None
        if not 0 <= a < self.order:
            raise ValueError(f"element index {a} out of range for order {self.order}")
        return a

    def is_cyclic(self) -> bool:
        """True iff some element generates the whole group."""
        return any(self.word_order(w) == self.order for _, w in self.scan())

    # -- word API (backend-internal element encodings) ----------------------

    # For index-addressed backends words *are* indices; PermutationGroup
    # overrides everything below with tuple words.

    def word_of(self, a: int):
        return a

    def index_of(self, w) -> int:
        return w

    def word_mul(self, u, v):
        return self.mul(u, v)

    def word_inv(self, u):
        return self.inv(u)

    def word_order(self, w) -> int:
        return self.element_order(w)

    def word_pow(self, w, k: int):
        if k < 0:
            w, k = self.word_inv(w), -k
        result, base = self.word_of(self.identity), w
        while k:
            if k & 1:
                result = self.word_mul(result, base)
            k >>= 1
            if k:
                base = self.word_mul(base, base)
        return result

    def word_powers(self, w) -> list:
        """Like :meth:`powers` but on words and unmemoized."""
        e = self.word_of(self.identity)
        seq, x = [e], w
        while x != e:
            seq.append(x)
            x = self.word_mul(x, w)
        return seq

    def scan(self, lo: int = 0, hi: int | None = None) -> Iterator[tuple[int, object]]:
        """Iterate (index, word) over the rank range [lo, hi)."""
        hi = self.order if hi is None else hi
        return ((i, i) for i in range(lo, hi))

    def scan_blocks(self, target: int) -> list[tuple[int, int]]:
        """Split [0, order) into roughly `target` contiguous rank ranges."""
        n = self.order
        target = max(1, min(target, n))
        step = (n + target - 1) // target
        return [(lo, min(lo + step, n)) for lo in range(0, n, step)]


# ---------------------------------------------------------------------------
# Cayley-table backend
# ---------------------------------------------------------------------------


class CayleyTableGroup(Group):
    """Dense multiplication table; O(1) products, O(n^2) memory."""

    def __init__(self, table: np.ndarray, descriptor: str):
        n = table.shape[0]
        if table.shape != (n, n):
            raise ValueError("Cayley table must be square")
        super().__init__(n, descriptor)
        self._table = table
        # identity fixed at index 0 by every constructor in this module
        inv = np.argmin(table != 0, axis=1)
        self._inv = inv

    def mul(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def inv(self, a: int) -> int:
        return int(self._inv[a])


def _check_table_scale(order: int, what: str) -> None:
    cap = max_materialize()
    if order > cap:
        raise ScaleError(
            f"{what} of order {order} exceeds the materialization threshold {cap} "
            "(raise POWERCRIT_MAX_MATERIALIZE to override)"
        )


def _table_dtype(n: int):
    return np.uint16 if n <= 0xFFFF else np.uint32


def make_cyclic(n: int) -> CayleyTableGroup:
    """Cyclic group of order n; index i is the i-th power of the generator."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    _check_table_scale(n, "cyclic group")
    idx = np.arange(n, dtype=np.int64)
    table = ((idx[:, None] + idx[None, :]) % n).astype(_table_dtype(n))
    return CayleyTableGroup(table, f"C:{n}")


def make_dihedral(n: int) -> CayleyTableGroup:
    """Dihedral group of order 2n: indices 0..n-1 rotations, n..2n-1 reflections."""
    if n < 1:
        raise ValueError(f"dihedral parameter must be >= 1, got {n}")
    _check_table_scale(2 * n, "dihedral group")
    idx = np.arange(2 * n, dtype=np.int64)
    r1, f1 = (idx % n)[:, None], (idx // n)[:, None]
    r2, f2 = (idx % n)[None, :], (idx // n)[None, :]
    rot = (r1 + (1 - 2 * f1) * r2) % n
    table = ((f1 ^ f2) * n + rot).astype(_table_dtype(2 * n))
    return CayleyTableGroup(table, f"D:{n}")


def make_generalized_quaternion(n: int) -> CayleyTableGroup:
    """Generalized quaternion group of order 2**n, n >= 3.

    Indices 0..m-1 are powers of the order-m rotation a (m = 2**(n-1));
    index m+i is a^i b, where b^2 = a^(m/2) and b a b^-1 = a^-1.
    """
    if n < 3:
        raise ValueError(f"generalized quaternion parameter must be >= 3, got {n}")
    order = 2**n
    _check_table_scale(order, "generalized quaternion group")
    m = order // 2
    idx = np.arange(order, dtype=np.int64)
    r1, f1 = (idx % m)[:, None], (idx // m)[:, None]
    r2, f2 = (idx % m)[None, :], (idx // m)[None, :]
    rot = (r1 + (1 - 2 * f1) * r2 + (f1 & f2) * (m // 2)) % m
    table = ((f1 ^ f2) * m + rot).astype(_table_dtype(order))
    return CayleyTableGroup(table, f"Q:{n}")


def make_direct_product(g: Group, h: Group) -> CayleyTableGroup:
    """Direct product, element index (a, b) -> a * |H| + b."""
    order = g.order * h.order
    _check_table_scale(order, "direct product")
    if isinstance(g, CayleyTableGroup) and isinstance(h, CayleyTableGroup):
        ng, nh = g.order, h.order
        tg = g._table.astype(np.int64)
        th = h._table.astype(np.int64)
        table = np.repeat(np.repeat(tg * nh, nh, axis=0), nh, axis=1) + np.tile(th, (ng, ng))
    else:
        nh = h.order
        table = np.empty((order, order), dtype=np.int64)
        for a1 in range(g.order):
            for b1 in range(nh):
                row = table[a1 * nh + b1]
                for a2 in range(g.order):
                    ga = g.mul(a1, a2) * nh
                    for b2 in range(nh):
                        row[a2 * nh + b2] = ga + h.mul(b1, b2)
    table = table.astype(_table_dtype(order))
    return CayleyTableGroup(table, f"{g.descriptor} x {h.descriptor}")


# ---------------------------------------------------------------------------
# Lazy permutation backend (S_k, k <= 11)
# ---------------------------------------------------------------------------

MAX_SYMMETRIC_DEGREE = 11


class PermutationGroup(Group):
    """S_k addressed by Lehmer rank; words are one-line tuples.

    Rank order is the lexicographic order of one-line notation, so rank 0
    is the identity and :mod:`itertools`' permutation stream enumerates
    the whole group in rank order at C speed.  Nothing of size k! is ever
    stored; index -> word decoding is cached only for small degrees.
    """

    def __init__(self, degree: int):
        if not 1 <= degree <= MAX_SYMMETRIC_DEGREE:
            raise ValueError(
                f"symmetric group degree must be in 1..{MAX_SYMMETRIC_DEGREE}, got {degree}"
            )
        super().__init__(factorial(degree), f"S:{degree}")
        self.degree = degree
        self._fact = [factorial(i) for i in range(degree + 1)]
        self._word_cache: dict[int, tuple[int, ...]] | None = {} if degree <= 8 else None

    # -- rank / unrank ------------------------------------------------------

    def word_of(self, a: int) -> tuple[int, ...]:
        if self._word_cache is not None:
            got = self._word_cache.get(a)
            if got is not None:
                return got
        if not 0 <= a < self.order:
            raise ValueError(f"rank {a} out of range for {self.descriptor}")
        syms = list(range(self.degree))
        out = []
        rest = a
        for i in range(self.degree - 1, -1, -1):
            d, rest = divmod(rest, self._fact[i])
            out.append(syms.pop(d))
        word = tuple(out)
        if self._word_cache is not None:
            self._word_cache[a] = word
        return word

    def index_of(self, w: tuple[int, ...]) -> int:
        rank = 0
        k = self.degree
        remaining = list(w)
        for i, v in enumerate(w):
            smaller = sum(1 for u in remaining if u < v)
            rank += smaller * self._fact[k - 1 - i]
            remaining.remove(v)
        return rank

    # -- word operations ------------------------------------------------------

    def word_mul(self, u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
        # (u * v)(i) = u(v(i)): apply v first.
        return tuple(u[x] for x in v)

    def word_inv(self, u: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * self.degree
        for i, v in enumerate(u):
            out[v] = i
        return tuple(out)

    def word_order(self, w: tuple[int, ...]) -> int:
        order = 1
        seen = 0
        for i in range(self.degree):
            if not (seen >> i) & 1:
                length = 1
                j = w[i]
                seen |= 1 << i
                while j != i:
                    seen |= 1 << j
                    j = w[j]
                    length += 1
                order = order * length // math.gcd(order, length)
        return order

    def word_pow(self, w: tuple[int, ...], k: int) -> tuple[int, ...]:
        out = [0] * self.degree
        seen = 0
        for i in range(self.degree):
            if not (seen >> i) & 1:
                cyc = [i]
                j = w[i]
                while j != i:
                    cyc.append(j)
                    j = w[j]
                length = len(cyc)
                shift = k % length
                for t, c in enumerate(cyc):
                    seen |= 1 << c
                    out[c] = cyc[(t + shift) % length]
        return tuple(out)

    def mul(self, a: int, b: int) -> int:
        return self.index_of(self.word_mul(self.word_of(a), self.word_of(b)))

    def inv(self, a: int) -> int:
        return self.index_of(self.word_inv(self.word_of(a)))

    def element_order(self, a: int) -> int:
        return self.word_order(self.word_of(a))

    def powers(self, a: int) -> tuple[int, ...]:
        got = self._powers_memo.get(a)
        if got is None:
            ws = self.word_powers(self.word_of(a))
            got = self._powers_memo.setdefault(a, tuple(self.index_of(w) for w in ws))
        return got

    def is_cyclic(self) -> bool:
        return self.degree <= 2

    # -- scanning -------------------------------------------------------------

    def scan(self, lo: int = 0, hi: int | None = None) -> Iterator[tuple[int, tuple[int, ...]]]:
        hi = self.order if hi is None else hi
        if lo == 0 and hi == self.order:
            return enumerate(itertools.permutations(range(self.degree)))
        return self._scan_range(lo, hi)

    def _scan_range(self, lo: int, hi: int) -> Iterator[tuple[int, tuple[int, ...]]]:
        k = self.degree
        block = self._fact[k - 1]
        for lead in range(k):
            b_lo, b_hi = lead * block, (lead + 1) * block
            if b_hi <= lo or b_lo >= hi:
                continue
            rest = [s for s in range(k) if s != lead]
            tails = itertools.permutations(rest)
            start, stop = max(lo, b_lo), min(hi, b_hi)
            if start > b_lo:
                tails = itertools.islice(tails, start - b_lo, None)
            rank = start
            for tail in tails:
                if rank >= stop:
                    break
                yield rank, (lead,) + tail
                rank += 1

    def scan_blocks(self, target: int) -> list[tuple[int, int]]:
        # Blocks aligned to leading-symbol boundaries resume cheaply.
        k = self.degree
        if target <= 1 or k == 1:
            return [(0, self.order)]
        block = self._fact[k - 1]
        return [(lead * block, (lead + 1) * block) for lead in range(k)]

    # -- cycle notation ---------------------------------------------------------

    def element_label(self, a: int) -> str:
        return self.word_label(self.word_of(a))

    def word_label(self, w: tuple[int, ...]) -> str:
        cycles = []
        seen = set()
        for i in range(self.degree):
            if i in seen or w[i] == i:
                seen.add(i)
                continue
            cyc = [i]
            j = w[i]
            while j != i:
                cyc.append(j)
                j = w[j]
            seen.update(cyc)
            cycles.append(cyc)
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(c + 1) for c in cyc) + ")" for cyc in cycles)

    def parse_element(self, text: str) -> int:
        return self.index_of(self.parse_word(text))

    def parse_word(self, text: str) -> tuple[int, ...]:
        """Parse cycle notation like "(1 2 3)(4 5)"; points are 1-based."""
        t = text.strip()
        if t in ("()", "e", "id", ""):
            return tuple(range(self.degree))
        depth = 0
        cycles: list[list[int]] = []
        current = ""
        for ch in t:
            if ch == "(":
                if depth:
                    raise ValueError(f"nested parenthesis in cycle notation: {text!r}")
                depth, current = 1, ""
            elif ch == ")":
                if not depth:
                    raise ValueError(f"unbalanced parenthesis in cycle notation: {text!r}")
                depth = 0
                pts = [int(x) for x in current.replace(",", " ").split()]
                if pts:
                    cycles.append(pts)
            elif depth:
                current += ch
            elif not ch.isspace():
                raise ValueError(f"unexpected character {ch!r} in cycle notation: {text!r}")
        if depth:
            raise ValueError(f"unbalanced parenthesis in cycle notation: {text!r}")
        word = list(range(self.degree))
        used: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= self.degree:
                    raise ValueError(f"point {p} out of range 1..{self.degree}")
                if p - 1 in used:
                    raise ValueError(f"point {p} repeated in cycle notation: {text!r}")
                used.add(p - 1)
            for i, p in enumerate(cyc):
                word[p - 1] = cyc[(i + 1) % len(cyc)] - 1
        return tuple(word)


def make_symmetric(k: int) -> PermutationGroup:
    """Symmetric group on k points, k <= 11."""
    return PermutationGroup(k)


# ---------------------------------------------------------------------------
# Metacyclic coordinate backend
# ---------------------------------------------------------------------------


class MetacyclicGroup(Group):
    """Semidirect product of C_{p^a} by C_{q^b} with x^y = x^r.

    Elements are coordinate pairs (i, j), i mod p^a and j mod q^b, stored
    as the index i * q^b + j.  Products cost one table lookup of r^j plus
    two modular reductions, so the backend works at any order without a
    table.
    """

    def __init__(self, p: int, a: int, q: int, b: int, r: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if not is_prime(q):
            raise ValueError(f"q = {q} is not prime")
        if p == q:
            raise ValueError(f"p and q must be distinct primes, both are {p}")
        if a < 1 or b < 1:
            raise ValueError(f"exponents must be >= 1, got a={a}, b={b}")
        pa, qb = p**a, q**b
        if not 2 <= r < pa:
            raise ValueError(f"r must satisfy 2 <= r < p^a = {pa}, got {r}")
        if r % p == 0:
            raise ValueError(f"p = {p} divides r = {r}")
        if pow(r, qb, pa) != 1:
            raise ValueError(
                f"presentation not well defined: r^(q^b) = {r}^{qb} != 1 (mod {pa})"
            )
        super().__init__(pa * qb, f"M:{p},{a},{q},{b},{r}")
        self.p, self.a, self.q, self.b, self.r = p, a, q, b, r
        self.pa, self.qb = pa, qb
        self._rpow = [pow(r, j, pa) for j in range(qb)]
        # conjugation acts as y^-1 x y = x^r, so commuting y^j past x^i
        # twists by r^(-j) = r^(q^b - j)
        self._act = [self._rpow[(qb - j) % qb] for j in range(qb)]

    @property
    def x(self) -> int:
        """Generator of the normal cyclic factor: the pair (1, 0)."""
        return self.qb

    @property
    def y(self) -> int:
        """Generator of the acting cyclic factor: the pair (0, 1)."""
        return 1

    def pair_of(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.qb)

    def index_of_pair(self, i: int, j: int) -> int:
        return (i % self.pa) * self.qb + (j % self.qb)

    def mul(self, u: int, v: int) -> int:
        i1, j1 = divmod(u, self.qb)
        i2, j2 = divmod(v, self.qb)
        return ((i1 + self._act[j1] * i2) % self.pa) * self.qb + (j1 + j2) % self.qb

    def inv(self, u: int) -> int:
        i, j = divmod(u, self.qb)
        return (-self._rpow[j] * i) % self.pa * self.qb + (self.qb - j) % self.qb

    def element_order(self, a: int) -> int:
        return self.word_order(a)

    def word_order(self, w: int) -> int:
        i, j = divmod(w, self.qb)
        t = self.qb // math.gcd(j, self.qb) if j else 1
        # (i, j)^t = (i * (1 + r^-j + ... + r^(-j(t-1))), 0)
        s = 0
        rj = self._act[j]
        acc = 1
        for _ in range(t):
            s = (s + acc) % self.pa
            acc = acc * rj % self.pa
        c = i * s % self.pa
        return t * (self.pa // math.gcd(c, self.pa))

    def is_cyclic(self) -> bool:
        # r >= 2 with r^(q^b) = 1 (mod p^a) forces a non-trivial action.
        return False

    def element_label(self, a: int) -> str:
        i, j = divmod(a, self.qb)
        return f"({i},{j})"

    def parse_element(self, text: str) -> int:
        t = text.strip()
        if t.startswith("(") and t.endswith(")"):
            parts = t[1:-1].split(",")
            if len(parts) != 2:
                raise ValueError(f"metacyclic element descriptor must be (i,j), got {text!r}")
            i, j = (int(x) for x in parts)
            if not (0 <= i < self.pa and 0 <= j < self.qb):
                raise ValueError(f"coordinates {text!r} out of range ({self.pa}, {self.qb})")
            return self.index_of_pair(i, j)
        return super().parse_element(text)


def make_metacyclic(p: int, a: int, q: int, b: int, r: int) -> MetacyclicGroup:
    """Metacyclic group on pairs (i, j) realizing x^y = x^r; order p^a * q^b."""
    return MetacyclicGroup(p, a, q, b, r)


# ---------------------------------------------------------------------------
# Shared group machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclicSubgroup:
    """A cyclic subgroup: its least generator, order and member set."""

    generator: int
    order: int
    members: frozenset[int]


def cyclic_subgroup(group: Group, g: int) -> CyclicSubgroup:
    """The cyclic subgroup generated by g, with its least generator."""
    mem = group.members(g)
    gens = group.cyclic_generators(g)
    return CyclicSubgroup(generator=min(gens), order=len(mem), members=mem)


def is_power_of(group: Group, g: int, h: int) -> bool:
    """True iff g lies in the cyclic subgroup generated by h.

    Short-circuits on order divisibility before touching any powers.
    """
    if g == h or g == group.identity:
        return True
    og = group.element_order(g)
    oh = group.element_order(h)
    if oh % og:
        return False
    return g in group.members(h)


def maximal_cyclic_subgroups(group: Group) -> list[CyclicSubgroup]:
    """All cyclic subgroups maximal under inclusion, deduplicated.

    Sorted by descending order then least generator.  Every element of the
    group lies in at least one of them.
    """
    cap = max_materialize()
    if group.order > cap:
        raise ScaleError(
            f"maximal cyclic subgroup enumeration unsupported at order {group.order} "
            f"(threshold {cap})"
        )
    distinct: dict[frozenset[int], int] = {}
    for g in range(group.order):
        mem = group.members(g)
        if mem not in distinct:
            distinct[mem] = min(group.cyclic_generators(g))
    subs = sorted(distinct, key=len, reverse=True)
    maximal = []
    for m in subs:
        if not any(m < t for t in subs if len(t) > len(m)):
            maximal.append(CyclicSubgroup(generator=distinct[m], order=len(m), members=m))
    maximal.sort(key=lambda s: (-s.order, s.generator))
    return maximal


def is_maximal_element(group: Group, x: int) -> bool:
    """True iff no element generates a strictly larger cyclic subgroup over x.

    One scan over the group; each candidate is screened by order
    divisibility before the membership lift.
    """
    ox = group.element_order(x)
    wx = group.word_of(x)
    gens = _word_generators(group, wx, ox)
    for _, w in group.scan():
        ow = group.word_order(w)
        if ow > ox and ow % ox == 0 and group.word_pow(w, ow // ox) in gens:
            return False
    return True


def _word_generators(group: Group, w, order: int) -> frozenset:
    pw = group.word_powers(w)
    if order == 1:
        return frozenset(pw)
    return frozenset(pw[k] for k in range(order) if math.gcd(k, order) == 1)


def exponent_and_pi(group: Group) -> tuple[frozenset[int], bool]:
    """(set of primes dividing the order, every-element-order-is-a-prime-power)."""
    pi = frozenset(p for p, _ in factorize(group.order))
    is_eppo = True
    for _, w in group.scan():
        o = group.word_order(w)
        f = factorize(o)
        if len(f) > 1:
            is_eppo = False
            break
    return pi, is_eppo


def generated_subgroup_words(group: Group, words: Iterable, cap: int = 100_000) -> frozenset:
    """Closure of the given words under multiplication, as a word set.

    In a finite group right-multiplication by the generators reaches the
    whole generated subgroup (inverses are positive powers).  Raises
    ResourceLimitError past `cap` elements.
    """
    gens = [w for w in words]
    e = group.word_of(group.identity)
    closed = {e}
    closed.update(gens)
    frontier = list(closed)
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                prod = group.word_mul(f, g)
                if prod not in closed:
                    closed.add(prod)
                    nxt.append(prod)
                    if len(closed) > cap:
                        raise ResourceLimitError(
                            f"subgroup closure exceeded {cap} elements in {group.descriptor}"
                        )
        frontier = nxt
    return frozenset(closed)


def generated_subgroup(group: Group, generators: Iterable[int], cap: int = 100_000) -> frozenset[int]:
    """Closure of the given element indices under multiplication."""
    words = [group.word_of(i) for i in generators]
    sub = generated_subgroup_words(group, words, cap=cap)
    return frozenset(group.index_of(w) for w in sub)


def spot_check_axioms(group: Group, triples: int = 1000, seed: int = 0) -> None:
    """Identity and inverse laws on all elements; associativity sampled.

    Associativity is exhaustive for order <= 64, else checked on `triples`
    seeded random triples.  Raises AssertionError on any violation.
    """
    n = group.order
    e = group.identity
    for g in range(n):
        assert group.mul(e, g) == g == group.mul(g, e), f"identity law fails at {g}"
        gi = group.inv(g)
        assert group.mul(g, gi) == e == group.mul(gi, g), f"inverse law fails at {g}"
    if n <= 64:
        triple_iter: Iterable[tuple[int, int, int]] = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triple_iter = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(triples))
    for a, b, c in triple_iter:
        assert group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c)), (
            f"associativity fails at ({a}, {b}, {c})"
        )
