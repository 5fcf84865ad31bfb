"""Plain/compound typing and criticality of twin classes, elements, groups.

A twin class is *plain* when all its members generate the same cyclic
subgroup and *compound* when at least two such subgroups occur inside it.
A class C not containing the identity is *critical* when its
neighbourhood closure is exactly C plus the identity and has prime-power
size p^r with r >= 2.  Compound parameters (p, r, s) are recovered twice,
from the class size and from the order profile, and any disagreement is
raised rather than repaired.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError, ScaleError
from .groups import Group, generated_subgroup_words
from .numtheory import as_prime_power, euler_phi
from .power_graph import PowerGraph

__all__ = [
    "CompoundParams",
    "GroupKind",
    "NClassRecord",
    "class_records",
    "classify_class",
    "classify_element",
    "classify_group",
    "dihedral_plain_critical_profile",
    "noncyclic_overgroup_witnesses",
    "plain_critical_by_overgroups",
]


@dataclass(frozen=True)
class CompoundParams:
    """Parameters of a compound class: root order p^r, members of order >= p^(s+1)."""

    p: int
    r: int
    s: int
    root: int


@dataclass(frozen=True)
class NClassRecord:
    representative: int
    size: int
    kind: str  # "plain" | "compound"
    params: CompoundParams | None  # compound classes other than the star class
    is_critical: bool
    closure_size: int
    is_star_class: bool


@dataclass(frozen=True)
class GroupKind:
    is_critical_group: bool
    is_plain_group: bool
    is_compound_group: bool


def classify_class(
    graph: PowerGraph,
    members,
    _neighborhood: frozenset[int] | None = None,
) -> NClassRecord:
    """Type one twin class and decide whether it is critical.

    `members` must be a closed-twin class of the graph's group (checked
    against the twin partition in materialized mode).
    """
    g = graph.group
    members = frozenset(members)
    if not members:
        raise ValueError("a twin class is never empty")
    rep = min(members)
    if graph.materialized and graph.twin_partition().class_containing(rep) != members:
        raise ValueError(f"{sorted(members)} is not a closed-twin class of {g.descriptor}")
    star = g.identity in members

    distinct_subgroups: set[frozenset[int]] = set()
    for m in members:
        distinct_subgroups.add(g.members(m))
    kind = "plain" if len(distinct_subgroups) == 1 else "compound"

    if star and not graph.materialized:
        # N[s] = G for every star vertex, so the closure of the star class
        # is the star class itself; avoids scanning huge groups.
        closure = members
    else:
        closure = graph.closure(members, _candidates=_neighborhood)
        if star and closure != members:
            raise InternalConsistencyError(
                f"closure of the star class must be the star class, got {sorted(closure)}"
            )
    closure_size = len(closure)

    pp_closure = as_prime_power(closure_size)
    is_critical = (
        not star
        and closure == (members | {g.identity})
        and pp_closure is not None
        and pp_closure.k >= 2
    )

    params = None
    if kind == "compound" and not star:
        params = _compound_params(g, members, rep)
        if is_critical != (params.s == 0):
            raise InternalConsistencyError(
                f"compound class of {g.element_label(rep)}: closure test gives "
                f"critical={is_critical} but parameters give s={params.s}"
            )

    return NClassRecord(
        representative=rep,
        size=len(members),
        kind=kind,
        params=params,
        is_critical=is_critical,
        closure_size=closure_size,
        is_star_class=star,
    )


def _compound_params(g: Group, members: frozenset[int], rep: int) -> CompoundParams:
    orders = {m: g.element_order(m) for m in members}
    max_order = max(orders.values())
    root = min(m for m, o in orders.items() if o == max_order)
    pp = as_prime_power(max_order)
    if pp is None or pp.k < 2:
        raise InternalConsistencyError(
            f"compound class root {g.element_label(root)} has order {max_order}, "
            "which is not a prime power with exponent >= 2"
        )
    p, r = pp.p, pp.k
    assert p is not None
    # s from the class size: |C| = p^r - p^s
    residue = p**r - len(members)
    s_size: int | None = None
    if residue >= 1:
        rp = as_prime_power(residue)
        if rp is not None and (rp.is_one or rp.p == p):
            s_size = rp.k
    # s from the order profile: least member order is p^(s+1)
    mp = as_prime_power(min(orders.values()))
    s_prof = mp.k - 1 if mp is not None and not mp.is_one and mp.p == p else None
    if s_size is None or s_prof is None or s_size != s_prof or not 0 <= s_size <= r - 2:
        raise InternalConsistencyError(
            f"compound parameters disagree for class of {g.element_label(root)}: "
            f"size gives s={s_size}, order profile gives s={s_prof} (p={p}, r={r})"
        )
    expected = frozenset(z for z in g.powers(root) if g.element_order(z) >= p ** (s_size + 1))
    if expected != members:
        raise InternalConsistencyError(
            f"class of {g.element_label(root)} does not match its parameter formula"
        )
    return CompoundParams(p=p, r=r, s=s_size, root=root)


def classify_element(graph: PowerGraph, x: int) -> NClassRecord:
    """Classify the twin class of one element; works at lazy scale."""
    if graph.materialized:
        return classify_class(graph, graph.twin_partition().class_containing(x))
    g = graph.group
    if x == g.identity:
        return classify_class(graph, graph.star_vertices())
    nb = graph.closed_neighborhood(x)
    cls = graph.element_n_class(x, _neighborhood=nb)
    return classify_class(graph, cls, _neighborhood=nb)


def class_records(graph: PowerGraph) -> list[NClassRecord]:
    """All twin-class records, in deterministic class order (cached)."""
    cached = getattr(graph, "_class_records", None)
    if cached is None:
        records = [classify_class(graph, members) for members in graph.twin_partition().classes]
        graph._class_records = cached = records
    return cached


def classify_group(graph: PowerGraph) -> GroupKind:
    """Fold element classification over the whole group.

    The group is critical [plain, compound] when every non-identity
    element is.  Short-circuits as soon as all three flags are settled.
    """
    if not graph.materialized:
        raise ScaleError(
            f"group classification needs materialized mode (order {graph.group.order})"
        )
    g = graph.group
    if g.order == 1:
        return GroupKind(False, False, False)
    identity_only = frozenset({g.identity})
    cached = getattr(graph, "_class_records", None)
    crit = plain = compound = True
    for i, members in enumerate(graph.twin_partition().classes):
        if members == identity_only:
            continue
        rec = cached[i] if cached is not None else classify_class(graph, members)
        crit = crit and rec.is_critical
        plain = plain and rec.kind == "plain"
        compound = compound and rec.kind == "compound"
        if not (crit or plain or compound):
            break
    return GroupKind(crit, plain, compound)


def plain_critical_by_overgroups(graph: PowerGraph, x: int) -> bool | None:
    """Overgroup criterion for plain criticality, usable at lazy scale.

    Returns None when the criterion does not apply (the order of x is a
    prime power, x generates the whole group, or phi(o(x)) + 1 is not a
    prime power p^r with r >= 2).  Otherwise x is plain critical iff for
    every strict cyclic overgroup generator y there is another one
    outside N[y].  Vacuously true for maximal x.
    """
    g = graph.group
    ox = g.element_order(x)
    if as_prime_power(ox) is not None:
        return None
    if ox == g.order:
        return None
    pp = as_prime_power(euler_phi(ox) + 1)
    if pp is None or pp.k < 2:
        return None
    over = sorted(graph.strict_overgroups(x))
    for y in over:
        if all(graph.adjacent_or_equal(y, z) for z in over):
            return False
    return True


def noncyclic_overgroup_witnesses(
    graph: PowerGraph,
    x: int,
    overgroups=None,
) -> tuple[int, int]:
    """For a non-maximal plain critical x, two strict overgroup generators
    with a non-cyclic join.

    Built by the chain construction: pick y over x, find z over x outside
    N[y]; if their join is cyclic, replace y by a generator of the join
    (strictly higher) and repeat.  The chain is strictly increasing, so it
    terminates, and the returned pair is verified non-cyclic.  Raises
    ValueError when x is not plain critical or is maximal.
    """
    g = graph.group
    over = sorted(overgroups if overgroups is not None else graph.strict_overgroups(x))
    if not over:
        raise ValueError(
            f"{g.element_label(x)} is maximal in {g.descriptor}; precondition violated"
        )
    ox = g.element_order(x)
    applicable = (
        as_prime_power(ox) is None
        and ox != g.order
        and (pp := as_prime_power(euler_phi(ox) + 1)) is not None
        and pp.k >= 2
    )
    criterion = applicable and all(
        any(not graph.adjacent_or_equal(y, z) for z in over) for y in over
    )
    if not criterion:
        raise ValueError(
            f"{g.element_label(x)} is not plain critical in {g.descriptor}; precondition violated"
        )
    y = over[0]
    for _ in range(g.order):
        z = next(z for z in over if not graph.adjacent_or_equal(y, z))
        sub = generated_subgroup_words(g, [g.word_of(y), g.word_of(z)], cap=graph.enhanced_cap)
        size = len(sub)
        gen_words = [w for w in sub if g.word_order(w) == size]
        if not gen_words:
            return y, z
        y = min(g.index_of(w) for w in gen_words)
    raise InternalConsistencyError("overgroup chain failed to terminate")


def dihedral_plain_critical_profile(n: int) -> bool:
    """Whether the dihedral group of order 2n contains plain critical elements.

    Purely arithmetic: n must not be a prime power and phi(n) + 1 must be
    a prime power p^r with r >= 2.
    """
    if n < 2:
        raise ValueError(f"dihedral parameter must be >= 2, got {n}")
    if as_prime_power(n) is not None:
        return False
    pp = as_prime_power(euler_phi(n) + 1)
    return pp is not None and pp.k >= 2
