"""The metacyclic Frobenius family: validation, recognition and census.

Parameter tuples (p, a, q, b, r) describe the semidirect product of
C_{p^a} by C_{q^b} acting as x -> x^r.  Flags are arithmetic:

* well_defined  -- the presentation gives a group of order p^a * q^b;
* eppo          -- q^b equals the multiplicative order of r mod p^a
                   (every element order is then a prime power);
* frobenius     -- q^b equals the multiplicative order of r mod p
                   (the action is fixed-point-free);
* critical      -- frobenius with a >= 2 and b >= 2.

The census enumerates all tuples up to a given group order and, on
request, rebuilds each group and compares the arithmetic critical flag
against the graph-computed group classification — in both truth values.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .criticality import classify_group
from .errors import ScaleError
from .groups import (
    CyclicSubgroup,
    Group,
    cyclic_subgroup,
    make_metacyclic,
    max_materialize,
)
from .numtheory import factorize, is_prime, multiplicative_order, primes_upto
from .partitions import Verdict
from .power_graph import PowerGraph

__all__ = [
    "CensusEntry",
    "FrobeniusStructure",
    "MetacyclicParams",
    "ParamFlags",
    "census",
    "eppo_metacyclic_equivalence_check",
    "exists_for",
    "recognize_critical_structure",
    "validate",
]


@dataclass(frozen=True)
class MetacyclicParams:
    p: int
    a: int
    q: int
    b: int
    r: int

    @property
    def order(self) -> int:
        return self.p**self.a * self.q**self.b


@dataclass(frozen=True)
class ParamFlags:
    well_defined: bool
    eppo: bool
    frobenius: bool
    critical: bool
    reason: str = ""


def validate(params: MetacyclicParams) -> ParamFlags:
    """All four flags for a parameter tuple; invalid input names its violation."""
    p, a, q, b, r = params.p, params.a, params.q, params.b, params.r

    def invalid(reason: str) -> ParamFlags:
        return ParamFlags(False, False, False, False, reason)

    if not is_prime(p):
        return invalid(f"p = {p} is not prime")
    if not is_prime(q):
        return invalid(f"q = {q} is not prime")
    if p == q:
        return invalid(f"p and q must be distinct, both are {p}")
    if a < 1 or b < 1:
        return invalid(f"exponents must be >= 1, got a={a}, b={b}")
    pa, qb = p**a, q**b
    if not 2 <= r < pa:
        return invalid(f"r must satisfy 2 <= r < p^a = {pa}, got {r}")
    if r % p == 0:
        return invalid(f"p = {p} divides r = {r}")
    if pow(r, qb, pa) != 1:
        return invalid(f"r^(q^b) = {r}^{qb} != 1 (mod {pa}); presentation not well defined")
    eppo = multiplicative_order(r, pa) == qb
    frob = multiplicative_order(r, p) == qb
    return ParamFlags(True, eppo, frob, frob and a >= 2 and b >= 2)


def exists_for(p: int, a: int, q: int, b: int) -> int | None:
    """Least r making (p, a, q, b, r) a Frobenius tuple, if one exists.

    Existence is equivalent to q^b dividing p - 1.  The search checks
    well-definedness mod p^a, not just the order mod p: an order-q^b
    residue mod p may fail to lift, in which case the next candidate is
    tried (the unit group mod p^a is cyclic, so some r always works).
    """
    if not is_prime(p) or not is_prime(q):
        raise ValueError(f"p = {p} and q = {q} must be prime")
    if p == q:
        raise ValueError(f"p and q must be distinct, both are {p}")
    if a < 1 or b < 1:
        raise ValueError(f"exponents must be >= 1, got a={a}, b={b}")
    qb = q**b
    if (p - 1) % qb:
        return None
    pa = p**a
    for r in range(2, pa):
        if r % p and pow(r, qb, pa) == 1 and multiplicative_order(r, p) == qb:
            return r
    return None


@dataclass(frozen=True)
class FrobeniusStructure:
    """Cyclic kernel of order p^a and cyclic complement of order q^b."""

    kernel: CyclicSubgroup
    complement: CyclicSubgroup
    p: int
    a: int
    q: int
    b: int


def recognize_critical_structure(group: Group) -> FrobeniusStructure | None:
    """Recognize a Frobenius group with cyclic Sylow kernel and complement.

    Succeeds iff the order is p^a * q^b with a, b >= 2, the kernel-prime
    Sylow subgroup is cyclic and normal (hence unique), some Sylow
    subgroup for the other prime is cyclic, and conjugation of the
    complement on the kernel is fixed-point-free.  Fixed-point-freeness is
    checked element by element.
    """
    if group.order > max_materialize():
        raise ScaleError(f"structure recognition unsupported at order {group.order}")
    fact = factorize(group.order)
    if len(fact) != 2:
        return None
    for (p, a), (q, b) in ((fact[0], fact[1]), (fact[1], fact[0])):
        if a < 2 or b < 2:
            continue
        found = _try_structure(group, p, a, q, b)
        if found is not None:
            return found
    return None


def _try_structure(group: Group, p: int, a: int, q: int, b: int) -> FrobeniusStructure | None:
    pa, qb = p**a, q**b
    kernel_gen = next((g for g in range(group.order) if group.element_order(g) == pa), None)
    if kernel_gen is None:
        return None
    kernel = group.members(kernel_gen)
    for t in range(group.order):
        if group.mul(group.mul(group.inv(t), kernel_gen), t) not in kernel:
            return None
    comp_gen = next((g for g in range(group.order) if group.element_order(g) == qb), None)
    if comp_gen is None:
        return None
    identity = group.identity
    for h in group.members(comp_gen):
        if h == identity:
            continue
        hi = group.inv(h)
        for k in kernel:
            if k != identity and group.mul(group.mul(hi, k), h) == k:
                return None
    return FrobeniusStructure(
        kernel=cyclic_subgroup(group, kernel_gen),
        complement=cyclic_subgroup(group, comp_gen),
        p=p,
        a=a,
        q=q,
        b=b,
    )


@dataclass(frozen=True)
class CensusEntry:
    params: MetacyclicParams
    flags: ParamFlags
    graph_is_critical: bool | None = None
    graph_agrees: bool | None = None


def census(max_order: int, verify_up_to: int = 0, all_r: bool = False) -> list[CensusEntry]:
    """Enumerate metacyclic parameter tuples with group order <= max_order.

    Per (p, a, q, b) the canonical entry carries the least well-defined r;
    with all_r every well-defined r is listed (distinct r can present
    isomorphic groups — entries are reported raw).  Orders up to
    verify_up_to are rebuilt and their graph-computed criticality compared
    with the arithmetic flag.  Output is sorted by ascending group order,
    then lexicographically by (p, a, q, b, r).
    """
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    entries: list[CensusEntry] = []
    primes = primes_upto(max_order // 2)
    for p in primes:
        pa, a = p, 1
        while pa * 2 <= max_order:
            for q in primes:
                if q == p:
                    continue
                qb, b = q, 1
                while pa * qb <= max_order:
                    rs = [r for r in range(2, pa) if pow(r, qb, pa) == 1]
                    for r in rs if all_r else rs[:1]:
                        params = MetacyclicParams(p, a, q, b, r)
                        entries.append(CensusEntry(params, validate(params)))
                    qb *= q
                    b += 1
            pa *= p
            a += 1
    entries.sort(key=lambda e: (e.params.order, e.params.p, e.params.a, e.params.q, e.params.b, e.params.r))
    if verify_up_to:
        verified = []
        for e in entries:
            if e.flags.well_defined and e.params.order <= verify_up_to:
                m = e.params
                group = make_metacyclic(m.p, m.a, m.q, m.b, m.r)
                is_crit = classify_group(PowerGraph(group)).is_critical_group
                e = dataclasses.replace(
                    e, graph_is_critical=is_crit, graph_agrees=is_crit == e.flags.critical
                )
            verified.append(e)
        entries = verified
    return entries


def eppo_metacyclic_equivalence_check(
    params: MetacyclicParams,
    group: Group | None = None,
    flags: ParamFlags | None = None,
) -> Verdict:
    """For EPPO tuples with a, b >= 2: frobenius flag iff graph-critical.

    `flags` may be supplied explicitly so harness self-tests can feed a
    deliberately wrong flag and watch the check fail.
    """
    flags = flags if flags is not None else validate(params)
    if not (flags.well_defined and flags.eppo and params.a >= 2 and params.b >= 2):
        return Verdict(False, None, "requires a well-defined EPPO tuple with a, b >= 2")
    if group is None:
        group = make_metacyclic(params.p, params.a, params.q, params.b, params.r)
    is_crit = classify_group(PowerGraph(group)).is_critical_group
    return Verdict(
        True,
        flags.frobenius == is_crit,
        f"frobenius flag {flags.frobenius}, graph-critical {is_crit}",
    )
