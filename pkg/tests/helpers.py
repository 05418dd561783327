"""Shared index generators for the test grids."""

from itertools import product

from fmpl.words import EMPTY, Index

I = Index.of


def compositions(total: int, parts: int):
    """All ways to write total as an ordered sum of `parts` positive ints."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def indices_with(weight: int, depth: int) -> list[Index]:
    return [Index(c) for c in compositions(weight, depth)]


def indices_up_to(max_weight: int, max_depth: int | None = None, include_empty: bool = True) -> list[Index]:
    """All indices with weight <= max_weight (and optionally depth <= max_depth)."""
    out = [EMPTY] if include_empty else []
    for w in range(1, max_weight + 1):
        top = w if max_depth is None else min(w, max_depth)
        for r in range(1, top + 1):
            out.extend(indices_with(w, r))
    return out


def index_triples_up_to(max_total_weight: int, max_each_depth: int) -> list[tuple[Index, Index, Index]]:
    """All index triples with bounded per-index depth and bounded total weight."""
    pool = indices_up_to(max_total_weight, max_each_depth)
    return [
        (a, b, c)
        for a, b, c in product(pool, repeat=3)
        if a.weight + b.weight + c.weight <= max_total_weight
    ]


def index_pairs_up_to(max_total_weight: int) -> list[tuple[Index, Index]]:
    """All index pairs with wt(k) + wt(k') <= max_total_weight."""
    pool = indices_up_to(max_total_weight)
    return [(a, b) for a, b in product(pool, repeat=2) if a.weight + b.weight <= max_total_weight]


def second_class_depth3(k1, k2, k3):
    """Expansion of the second band at depth 3 (six terms)."""
    return [
        I(k3, k1, k2),
        I(k1, k3, k2),
        I(k2, k3, k1),
        I(k2, k1, k3),
        I(k1 + k3, k2),
        I(k2, k1 + k3),
    ]


def second_class_depth4(k1, k2, k3, k4):
    """Expansion of the second band at depth 4 (twenty-one terms)."""
    return [
        I(k4, k1, k2, k3),
        I(k3, k4, k1, k2),
        I(k2, k3, k4, k1),
        I(k1, k4, k2, k3),
        I(k3, k1, k4, k2),
        I(k2, k3, k1, k4),
        I(k1, k2, k4, k3),
        I(k3, k1, k2, k4),
        I(k2, k1, k3, k4),
        I(k1, k3, k4, k2),
        I(k1, k3, k2, k4),
        I(k1 + k3, k2, k4),
        I(k2, k1 + k3, k4),
        I(k1 + k3, k4, k2),
        I(k1 + k4, k2, k3),
        I(k3, k1 + k4, k2),
        I(k2, k3, k1 + k4),
        I(k1, k2 + k4, k3),
        I(k3, k1, k2 + k4),
        I(k1, k3, k2 + k4),
        I(k1 + k3, k2 + k4),
    ]


def third_class_depth4(k1, k2, k3, k4):
    """Expansion of the third band at depth 4 (twenty-one terms)."""
    return [
        I(k3, k2, k1, k4),
        I(k2, k1, k4, k3),
        I(k1, k4, k3, k2),
        I(k3, k2, k4, k1),
        I(k2, k4, k1, k3),
        I(k4, k1, k3, k2),
        I(k3, k4, k2, k1),
        I(k4, k2, k1, k3),
        I(k4, k3, k1, k2),
        I(k2, k4, k3, k1),
        I(k4, k2, k3, k1),
        I(k4, k2, k1 + k3),
        I(k4, k1 + k3, k2),
        I(k2, k4, k1 + k3),
        I(k3, k2, k1 + k4),
        I(k2, k1 + k4, k3),
        I(k1 + k4, k3, k2),
        I(k3, k2 + k4, k1),
        I(k2 + k4, k1, k3),
        I(k2 + k4, k3, k1),
        I(k2 + k4, k1 + k3),
    ]
