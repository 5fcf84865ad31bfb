"""Brute-force oracles shared across the test suite.

Everything here recomputes graph facts straight from the definitions by
enumerating powers with repeated multiplication, independently of the
production shortcuts (order divisibility, bitset rows, generator lifts).
"""

from __future__ import annotations

from powercrit import Group


def brute_powers(group: Group, x: int) -> list[int]:
    out = [group.identity]
    y = x
    while y != group.identity:
        out.append(y)
        y = group.mul(y, x)
    return out


def brute_adjacent_or_equal(group: Group, x: int, y: int) -> bool:
    return x == y or x in brute_powers(group, y) or y in brute_powers(group, x)


def brute_closed_neighborhood(group: Group, x: int) -> frozenset[int]:
    return frozenset(y for y in range(group.order) if brute_adjacent_or_equal(group, x, y))


def brute_twin_class(group: Group, x: int) -> frozenset[int]:
    nx = brute_closed_neighborhood(group, x)
    return frozenset(
        y for y in range(group.order) if brute_closed_neighborhood(group, y) == nx
    )


def brute_edge_count(group: Group) -> int:
    n = group.order
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if brute_adjacent_or_equal(group, i, j)
    )
