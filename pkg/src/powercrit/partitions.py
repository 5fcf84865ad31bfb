"""Cyclic partitions, the Hughes-Thompson subgroup and partition harnesses.

A partition of a non-trivial group is a set of non-trivial subgroups
covering it with pairwise trivial intersections.  When the components are
required to be cyclic the candidate set is forced: each maximal cyclic
subgroup M = <m> must equal the unique component containing m, so the
group admits a cyclic partition iff its maximal cyclic subgroups pairwise
intersect trivially.  Detection is therefore a closed computation and a
failure always comes with a concrete obstruction pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .criticality import classify_class, classify_group
from .groups import (
    CyclicSubgroup,
    Group,
    generated_subgroup,
    is_maximal_element,
    max_materialize,
    maximal_cyclic_subgroups,
)
from .errors import ScaleError
from .numtheory import PrimePower, as_prime_power, is_prime
from .power_graph import PowerGraph

__all__ = [
    "ComponentInfo",
    "PartitionResult",
    "Verdict",
    "check_main_corollary",
    "check_partition_implies_compound_critical",
    "check_plain_critical_maximal",
    "component_profile",
    "cyclic_partition",
    "hughes_thompson",
    "kegel_partitionable",
]


@dataclass(frozen=True)
class PartitionResult:
    """Either the (unique) cyclic partition or a certified obstruction.

    The obstruction is a pair of maximal cyclic subgroups together with a
    shared non-identity element.
    """

    components: tuple[CyclicSubgroup, ...] | None
    obstruction: tuple[CyclicSubgroup, CyclicSubgroup, int] | None

    @property
    def is_partition(self) -> bool:
        return self.components is not None

    @property
    def is_trivial(self) -> bool:
        return self.components is not None and len(self.components) == 1


@dataclass(frozen=True)
class ComponentInfo:
    order: int
    prime_power: PrimePower | None


def component_profile(result: PartitionResult) -> list[ComponentInfo]:
    """Order and prime-power decomposition of each partition component."""
    if result.components is None:
        raise ValueError("no partition to profile")
    return [ComponentInfo(c.order, as_prime_power(c.order)) for c in result.components]


def cyclic_partition(group: Group) -> PartitionResult:
    """Detect the cyclic partition of a group, or report an obstruction."""
    if group.order < 2:
        raise ValueError("partitions are defined for non-trivial groups")
    maxes = maximal_cyclic_subgroups(group)
    for i in range(len(maxes)):
        mi = maxes[i].members
        for j in range(i + 1, len(maxes)):
            shared = (mi & maxes[j].members) - {group.identity}
            if shared:
                return PartitionResult(None, (maxes[i], maxes[j], min(shared)))
    return PartitionResult(tuple(maxes), None)


def hughes_thompson(group: Group, p: int, within=None) -> frozenset[int]:
    """Subgroup generated by all elements whose order differs from p.

    `within` restricts the generating pool to a subgroup's member set
    (closure then stays inside it).  The breadth-first closure is capped,
    raising ResourceLimitError past 10^5 elements.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if within is None:
        if group.order > max_materialize():
            raise ScaleError(
                f"Hughes-Thompson subgroup over a full group of order {group.order} "
                "is unsupported; pass an explicit member pool"
            )
        pool = range(group.order)
    else:
        pool = sorted(within)
    seen: set[frozenset[int]] = set()
    gens: list[int] = []
    for x in pool:
        if group.element_order(x) != p:
            mem = group.members(x)
            if mem not in seen:
                seen.add(mem)
                gens.append(x)
    return generated_subgroup(group, gens)


def kegel_partitionable(pgroup: Group) -> bool:
    """Whether a p-group admits a non-trivial partition.

    By Kegel's criterion this happens iff the Hughes-Thompson subgroup is
    proper.  Groups of prime order are special-cased to False: they have
    no non-trivial proper subgroups, hence only the trivial partition,
    even though their Hughes-Thompson subgroup is trivial.
    """
    pp = as_prime_power(pgroup.order)
    if pp is None or not pp.is_proper:
        raise ValueError(f"order {pgroup.order} is not a proper prime power; p-group required")
    if pgroup.order == pp.p:
        return False
    return len(hughes_thompson(pgroup, pp.p)) != pgroup.order


@dataclass(frozen=True)
class Verdict:
    """Outcome of a hypothesis-conclusion harness on one group."""

    applicable: bool
    passed: bool | None
    detail: str = ""


def _graph(group: Group, graph: PowerGraph | None) -> PowerGraph:
    return graph if graph is not None else PowerGraph(group)


def _partition_with_exponent_two(group: Group) -> tuple[PartitionResult | None, str]:
    part = cyclic_partition(group)
    if not part.is_partition:
        a, b, shared = part.obstruction
        return None, (
            f"no cyclic partition: subgroups of orders {a.order} and {b.order} share "
            f"element {group.element_label(shared)}"
        )
    if part.is_trivial:
        return None, "only the trivial partition"
    for info in component_profile(part):
        if info.prime_power is None or info.prime_power.k < 2:
            return None, f"component of order {info.order} is not a prime power with exponent >= 2"
    return part, ""


def check_partition_implies_compound_critical(group: Group, graph: PowerGraph | None = None) -> Verdict:
    """Non-trivial cyclic partition with prime-power exponent >= 2 components
    must force a compound critical group."""
    part, why = _partition_with_exponent_two(group)
    if part is None:
        return Verdict(False, None, why)
    graph = _graph(group, graph)
    kind = classify_group(graph)
    if kind.is_critical_group and kind.is_compound_group:
        return Verdict(True, True, "compound critical as required")
    for members in graph.twin_partition().classes:
        if members == frozenset({group.identity}):
            continue
        rec = classify_class(graph, members)
        if not rec.is_critical or rec.kind != "compound":
            return Verdict(
                True,
                False,
                f"class of {group.element_label(rec.representative)} is {rec.kind}, "
                f"critical={rec.is_critical}",
            )
    return Verdict(True, False, "group flags disagree with per-class records")


def check_plain_critical_maximal(group: Group, graph: PowerGraph | None = None) -> Verdict:
    """In a group with a cyclic partition, plain critical elements must be maximal."""
    part = cyclic_partition(group)
    if not part.is_partition:
        a, b, shared = part.obstruction
        return Verdict(
            False,
            None,
            f"no cyclic partition: subgroups of orders {a.order} and {b.order} share "
            f"element {group.element_label(shared)}",
        )
    graph = _graph(group, graph)
    for members in graph.twin_partition().classes:
        if members == frozenset({group.identity}):
            continue
        rec = classify_class(graph, members)
        if rec.kind == "plain" and rec.is_critical:
            # all members of a plain class generate the same cyclic
            # subgroup, so the representative settles maximality
            if not is_maximal_element(group, rec.representative):
                return Verdict(
                    True,
                    False,
                    f"plain critical {group.element_label(rec.representative)} is not maximal",
                )
    return Verdict(True, True, "every plain critical element is maximal")


def check_main_corollary(group: Group, graph: PowerGraph | None = None) -> Verdict:
    """Non-trivial cyclic partition with prime-power exponent >= 2 components
    must exhibit a Frobenius structure with cyclic kernel C_{p^a} (p odd)
    and cyclic complement C_{q^b}, a, b >= 2."""
    from .frobenius import recognize_critical_structure

    part, why = _partition_with_exponent_two(group)
    if part is None:
        return Verdict(False, None, why)
    fs = recognize_critical_structure(group)
    if fs is None:
        return Verdict(True, False, "no Frobenius structure with cyclic prime-power kernel found")
    if fs.a < 2 or fs.b < 2 or fs.p % 2 == 0:
        return Verdict(
            True, False, f"structure (p,a,q,b)=({fs.p},{fs.a},{fs.q},{fs.b}) violates the conclusion"
        )
    return Verdict(True, True, f"Frobenius with (p,a,q,b)=({fs.p},{fs.a},{fs.q},{fs.b})")
