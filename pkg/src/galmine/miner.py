"""Itemset mining: frequent, frequent closed, frequent generators,
equivalence classes and minimal rare itemsets.

Three interchangeable traversal strategies produce identical results:

* ``levelwise`` — breadth-first candidate generation with subset
  pruning; supports counted by horizontal row-containment tests.
* ``dfs`` — vertical depth-first tidset intersection (the bitset
  kernel's hot loop).
* ``hybrid`` — levelwise over generator candidates only, with closures
  computed per equivalence class, then expansion of each class into its
  member itemsets.

All outputs are canonically ordered (itemsets by size then id-lex,
classes by support descending then closed-set lex), so results are
byte-stable regardless of backend or scheduling.
"""

import math
from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations

from galmine import _kernel
from galmine._bitset import bits_of, mask_of
from galmine.context import BinaryContext, Itemset
from galmine.errors import ConstraintError

STRATEGIES = ("levelwise", "dfs", "hybrid")


@dataclass(frozen=True)
class MinedSet:
    """An itemset with its absolute support and structural flags."""

    items: Itemset
    support: int
    is_closed: bool
    is_generator: bool


@dataclass(frozen=True)
class EquivalenceClass:
    """All itemsets sharing one closure: the closed set, its minimal
    members (generators) and their common support.

    The generator list is the empty itemset ``()`` alone exactly when
    the class is the closure of the empty set and that closure is
    non-empty.
    """

    closed_set: Itemset
    generators: tuple[Itemset, ...]
    support: int


def resolve_minsup(threshold, n_objects: int) -> int:
    """Resolve a support threshold against a context size.

    An int is an absolute count (must be >= 1); a float is a relative
    fraction in (0, 1], resolved as ceil(f * N).  The resolved value
    must be >= 1.
    """
    if isinstance(threshold, bool) or not isinstance(threshold, (int, float)):
        raise ConstraintError(f"minsup must be an int count or a float fraction, got {threshold!r}")
    if isinstance(threshold, int):
        if threshold < 1:
            raise ConstraintError(f"absolute minsup must be >= 1, got {threshold}")
        return threshold
    if not 0.0 < threshold <= 1.0:
        raise ConstraintError(f"relative minsup must be in (0, 1], got {threshold}")
    resolved = math.ceil(threshold * n_objects)
    if resolved < 1:
        raise ConstraintError("resolved minsup is below 1 (relative threshold on an empty context)")
    return resolved


# -- support tables ---------------------------------------------------------


def _join_candidates(prev: list[Itemset]) -> list[Itemset]:
    """Apriori join + prune: size-(k+1) candidates from lex-sorted
    size-k sets; a candidate survives only if every size-k subset is in
    ``prev``."""
    prev_set = set(prev)
    out = []
    n = len(prev)
    for i in range(n):
        head = prev[i][:-1]
        for j in range(i + 1, n):
            if prev[j][:-1] != head:
                break
            cand = prev[i] + (prev[j][-1],)
            if all(cand[:x] + cand[x + 1 :] in prev_set for x in range(len(cand))):
                out.append(cand)
    return out


def _levelwise(ctx: BinaryContext, minsup: int):
    """Support table of all frequent non-empty itemsets, plus the
    minimal rare itemsets collected as the failing candidates."""
    table: dict[Itemset, int] = {}
    rare: list[tuple[Itemset, int]] = []
    if minsup > ctx.n_objects:
        return table, rare
    row_masks = ctx.row_masks
    m = ctx.n_attributes
    candidates: list[Itemset] = [(j,) for j in range(m)]
    while candidates:
        supports = _kernel.count_containing_rows(row_masks, [mask_of(c) for c in candidates], m)
        frequent = []
        for cand, s in zip(candidates, supports):
            if s >= minsup:
                table[cand] = s
                frequent.append(cand)
            else:
                rare.append((cand, s))
        candidates = _join_candidates(frequent)
    return table, rare


def _dfs(ctx: BinaryContext, minsup: int) -> dict[Itemset, int]:
    return dict(_kernel.mine_vertical(ctx.column_masks, ctx.n_objects, minsup))


def _mine_class_list(ctx: BinaryContext, minsup: int):
    """Frequent equivalence classes as (closed_items, support, generators).

    Generators are mined levelwise (they form an order ideal, so join +
    prune over the previous generator level is complete); each one's
    closure assigns it to a class.  Generator order within a class is
    (size asc, id-lex asc) by construction.
    """
    if minsup > ctx.n_objects:
        return []
    n, m = ctx.n_objects, ctx.n_attributes
    row_masks = ctx.row_masks
    gen_support: dict[Itemset, int] = {(): n}
    classes: dict[int, list] = {}

    c0 = ctx.closure_mask((1 << n) - 1 if n else 0)
    classes[c0] = [n, [()]]

    level: list[Itemset] = [(j,) for j in range(m)]
    while level:
        supports = _kernel.count_containing_rows(row_masks, [mask_of(c) for c in level], m)
        survivors = []
        for cand, s in zip(level, supports):
            if s < minsup:
                continue
            if all(gen_support[cand[:x] + cand[x + 1 :]] > s for x in range(len(cand))):
                gen_support[cand] = s
                survivors.append(cand)
                cmask = ctx.closure_mask(ctx.extent_mask(cand))
                entry = classes.setdefault(cmask, [s, []])
                entry[1].append(cand)
        level = _join_candidates(survivors)

    if 0 in classes:
        del classes[0]  # the empty closed set is never reported
    return [(bits_of(cmask), supp, gens) for cmask, (supp, gens) in classes.items()]


def _hybrid(ctx: BinaryContext, minsup: int) -> dict[Itemset, int]:
    """Expand every class into its member itemsets g ∪ s, s ⊆ closure\\g.

    Classes partition the frequent collection, so the union over
    classes is complete and classes never collide on a key."""
    table: dict[Itemset, int] = {}
    for closed_items, supp, gens in _mine_class_list(ctx, minsup):
        for g in gens:
            g_set = set(g)
            rest = tuple(a for a in closed_items if a not in g_set)
            for r in range(len(rest) + 1):
                for extra in combinations(rest, r):
                    table[tuple(sorted(g + extra))] = supp
    table.pop((), None)
    return table


_STRATEGY_TABLES = {"levelwise": lambda ctx, ms: _levelwise(ctx, ms)[0], "dfs": _dfs, "hybrid": _hybrid}


def frequent_support_table(ctx: BinaryContext, minsup, strategy: str = "levelwise") -> dict[Itemset, int]:
    """Supports of every frequent non-empty itemset, keyed by id tuple."""
    if strategy not in _STRATEGY_TABLES:
        raise ConstraintError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    return _STRATEGY_TABLES[strategy](ctx, resolve_minsup(minsup, ctx.n_objects))


# -- flags and public operations -------------------------------------------


def _with_item(items: Itemset, a: int) -> Itemset:
    i = bisect_left(items, a)
    return items[:i] + (a,) + items[i:]


def _flags(items: Itemset, supp: int, table: dict[Itemset, int], n_objects: int, m: int):
    item_set = set(items)
    closed = all(table.get(_with_item(items, a)) != supp for a in range(m) if a not in item_set)
    if len(items) == 1:
        generator = n_objects > supp
    else:
        generator = all(table[items[:x] + items[x + 1 :]] > supp for x in range(len(items)))
    return closed, generator


def _sorted_mined(table: dict[Itemset, int], ctx: BinaryContext) -> list[MinedSet]:
    n, m = ctx.n_objects, ctx.n_attributes
    out = []
    for items in sorted(table, key=lambda t: (len(t), t)):
        supp = table[items]
        closed, generator = _flags(items, supp, table, n, m)
        out.append(MinedSet(items, supp, closed, generator))
    return out


def mine_frequent(ctx: BinaryContext, minsup, strategy: str = "levelwise") -> list[MinedSet]:
    """All non-empty itemsets with support >= minsup, ordered by
    (size asc, id-lex asc).  A threshold above the object count yields
    an empty result."""
    return _sorted_mined(frequent_support_table(ctx, minsup, strategy), ctx)


def mine_closed(ctx: BinaryContext, minsup) -> list[MinedSet]:
    """The frequent closed itemsets (fixed points of closure), excluding
    the empty set."""
    classes = _mine_class_list(ctx, resolve_minsup(minsup, ctx.n_objects))
    out = [
        MinedSet(closed_items, supp, True, closed_items in gens)
        for closed_items, supp, gens in classes
    ]
    out.sort(key=lambda s: (len(s.items), s.items))
    return out


def mine_generators(ctx: BinaryContext, minsup) -> list[MinedSet]:
    """The frequent non-empty itemsets with no proper subset of equal
    support (the minimal members of their equivalence classes)."""
    classes = _mine_class_list(ctx, resolve_minsup(minsup, ctx.n_objects))
    out = [
        MinedSet(g, supp, g == closed_items, True)
        for closed_items, supp, gens in classes
        for g in gens
        if g
    ]
    out.sort(key=lambda s: (len(s.items), s.items))
    return out


def mine_equivalence_classes(ctx: BinaryContext, minsup) -> list[EquivalenceClass]:
    """One class per frequent closed set, ordered by (support desc,
    closed-set lex)."""
    classes = _mine_class_list(ctx, resolve_minsup(minsup, ctx.n_objects))
    out = [EquivalenceClass(closed_items, tuple(gens), supp) for closed_items, supp, gens in classes]
    out.sort(key=lambda c: (-c.support, c.closed_set))
    return out


def mine_minimal_rare(ctx: BinaryContext, minsup) -> list[MinedSet]:
    """Itemsets below the threshold whose proper subsets are all
    frequent: the minimal elements of the rare region, collected as the
    failing candidates of the levelwise run.  Zero-support sets qualify
    when their subsets are frequent."""
    ms = resolve_minsup(minsup, ctx.n_objects)
    table, rare = _levelwise(ctx, ms)
    n = ctx.n_objects
    out = []
    for items, supp in rare:
        closed = ctx.closure(items) == items
        if len(items) == 1:
            generator = n > supp
        else:
            generator = all(table[items[:x] + items[x + 1 :]] > supp for x in range(len(items)))
        out.append(MinedSet(items, supp, closed, generator))
    out.sort(key=lambda s: (len(s.items), s.items))
    return out


# -- serialization ----------------------------------------------------------


def render_itemsets_text(sets: list[MinedSet], attribute_labels) -> list[str]:
    """One line per itemset: labels space-separated, support in parens."""
    return [f"{' '.join(attribute_labels[j] for j in s.items)} ({s.support})" for s in sets]


def render_itemsets_jsonl(sets: list[MinedSet], attribute_labels) -> list[str]:
    import json

    return [
        json.dumps(
            {
                "items": [attribute_labels[j] for j in s.items],
                "support": s.support,
                "closed": s.is_closed,
                "generator": s.is_generator,
            }
        )
        for s in sets
    ]
