"""Association-rule families and implication bases.

Rules carry attribute labels (not ids) so that serialized rule streams
are self-contained for downstream filtering.  Items inside a rule keep
the context's attribute order; rule lists are ordered by
(support desc, confidence desc, premise lex, consequent lex) over the
label tuples.

Measures, for a rule X -> Y over N objects with xy = supp(X ∪ Y):

* confidence = xy / supp(X)
* lift       = xy * N / (supp(X) * supp(Y))
* conviction = (1 - supp(Y)/N) / (1 - confidence), +inf at confidence 1
"""

import json
import math
from dataclasses import dataclass
from itertools import combinations

from galmine._bitset import bits_of, mask_of
from galmine.context import BinaryContext, Itemset
from galmine.errors import ConstraintError, ParseError, ResourceError
from galmine.miner import (
    _levelwise,
    _mine_class_list,
    mine_minimal_rare,
    resolve_minsup,
)


@dataclass(frozen=True)
class AssociationRule:
    """premise -> consequent with the four interestingness measures.

    ``support`` is the absolute support of premise ∪ consequent.  The
    premise is empty only for implications produced by the
    Duquenne-Guigues basis.
    """

    premise: tuple[str, ...]
    consequent: tuple[str, ...]
    support: int
    confidence: float
    lift: float
    conviction: float

    def __post_init__(self):
        if not self.consequent:
            raise ConstraintError("rule consequent must be non-empty")
        if set(self.premise) & set(self.consequent):
            raise ConstraintError("rule premise and consequent must be disjoint")


def measures(n_objects: int, supp_xy: int, supp_x: int, supp_y: int):
    """(confidence, lift, conviction) from raw absolute supports."""
    if supp_x == 0:
        raise ConstraintError("rule premise must have non-zero support")
    confidence = supp_xy / supp_x
    lift = (supp_xy * n_objects) / (supp_x * supp_y) if supp_y else 0.0
    if supp_xy == supp_x:
        conviction = math.inf
    else:
        conviction = (1.0 - supp_y / n_objects) / (1.0 - confidence)
    return confidence, lift, conviction


def _check_minconf(minconf) -> None:
    if not isinstance(minconf, (int, float)) or isinstance(minconf, bool) or not 0.0 < minconf <= 1.0:
        raise ConstraintError(f"minconf must be in (0, 1], got {minconf!r}")


def _rule(ctx: BinaryContext, premise: Itemset, consequent: Itemset, supp_xy: int, supp_x: int) -> AssociationRule:
    supp_y = ctx.support(consequent)
    if supp_x == 0:
        # exact implication over an empty extent: vacuously confident
        conf, lift, conv = 1.0, 0.0, math.inf
    else:
        conf, lift, conv = measures(ctx.n_objects, supp_xy, supp_x, supp_y)
    return AssociationRule(
        premise=ctx.itemset_labels(premise),
        consequent=ctx.itemset_labels(consequent),
        support=supp_xy,
        confidence=conf,
        lift=lift,
        conviction=conv,
    )


def _sort_rules(rules: list[AssociationRule]) -> list[AssociationRule]:
    rules.sort(key=lambda r: (-r.support, -r.confidence, r.premise, r.consequent))
    return rules


def _diff(whole: Itemset, part: Itemset) -> Itemset:
    part_set = set(part)
    return tuple(a for a in whole if a not in part_set)


def all_rules(ctx: BinaryContext, minsup, minconf) -> list[AssociationRule]:
    """Every rule X -> Z\\X with Z frequent, X a non-empty proper subset,
    and confidence >= minconf."""
    _check_minconf(minconf)
    table, _ = _levelwise(ctx, resolve_minsup(minsup, ctx.n_objects))
    out = []
    for z, supp_z in table.items():
        if len(z) < 2:
            continue
        for size in range(1, len(z)):
            for premise in combinations(z, size):
                supp_x = table[premise]
                if supp_z / supp_x >= minconf:
                    out.append(_rule(ctx, premise, _diff(z, premise), supp_z, supp_x))
    return _sort_rules(out)


def generic_basis(ctx: BinaryContext, minsup) -> list[AssociationRule]:
    """Exact rules g -> closure(g)\\g for every frequent non-empty
    generator with a proper closure; confidence is always 1."""
    out = []
    for closed_items, supp, gens in _mine_class_list(ctx, resolve_minsup(minsup, ctx.n_objects)):
        for g in gens:
            if g and g != closed_items:
                out.append(_rule(ctx, g, _diff(closed_items, g), supp, supp))
    return _sort_rules(out)


def mnr_rules(ctx: BinaryContext, minsup, minconf, reduced: bool = False) -> list[AssociationRule]:
    """Minimal non-redundant rules: the generic basis plus approximate
    rules g -> f\\g from a generator g to a frequent closed set f
    strictly above closure(g).  With ``reduced`` set, f is restricted to
    the immediate successors (covers) of closure(g) in the closed-set
    containment order."""
    _check_minconf(minconf)
    classes = _mine_class_list(ctx, resolve_minsup(minsup, ctx.n_objects))
    closed_masks = [mask_of(c) for c, _, _ in classes]
    supports = [supp for _, supp, _ in classes]
    out = []
    for idx, (closed_items, supp, gens) in enumerate(classes):
        cmask = closed_masks[idx]
        for g in gens:
            if g and g != closed_items:
                out.append(_rule(ctx, g, _diff(closed_items, g), supp, supp))
        uppers = [k for k, fmask in enumerate(closed_masks) if cmask & ~fmask == 0 and fmask != cmask]
        if reduced:
            uppers = [
                k
                for k in uppers
                if not any(
                    closed_masks[w] & ~closed_masks[k] == 0 and closed_masks[w] != closed_masks[k]
                    for w in uppers
                )
            ]
        for k in uppers:
            supp_f = supports[k]
            if supp_f / supp >= minconf:
                f_items = classes[k][0]
                for g in gens:
                    if g:
                        out.append(_rule(ctx, g, _diff(f_items, g), supp_f, supp))
    return _sort_rules(out)


def rare_rules(ctx: BinaryContext, minsup) -> list[AssociationRule]:
    """Exact rules from the minimal rare itemsets that are supported
    generators with a proper closure; their support lies in [1, minsup)."""
    out = []
    for s in mine_minimal_rare(ctx, minsup):
        if s.support >= 1 and s.is_generator:
            closed = ctx.closure(s.items)
            if closed != s.items:
                out.append(_rule(ctx, s.items, _diff(closed, s.items), s.support, s.support))
    return _sort_rules(out)


def closed_rules(ctx: BinaryContext, minsup, minconf) -> list[AssociationRule]:
    """Rules X -> Y\\X between frequent closed sets X ⊊ Y, filtered by
    confidence."""
    _check_minconf(minconf)
    classes = _mine_class_list(ctx, resolve_minsup(minsup, ctx.n_objects))
    masks = [mask_of(c) for c, _, _ in classes]
    out = []
    for i, (x_items, supp_x, _) in enumerate(classes):
        for j, (y_items, supp_y, _) in enumerate(classes):
            if masks[i] & ~masks[j] == 0 and masks[i] != masks[j] and supp_y / supp_x >= minconf:
                out.append(_rule(ctx, x_items, _diff(y_items, x_items), supp_y, supp_x))
    return _sort_rules(out)


def duquenne_guigues(ctx: BinaryContext, max_attributes: int = 20) -> list[AssociationRule]:
    """The Duquenne-Guigues (stem) base: one exact implication
    P -> closure(P)\\P per pseudo-closed set P.

    Enumerates, in lectic order, the sets closed under saturation by the
    implications found so far (firing only on proper-subset premises);
    the non-closed ones among them are exactly the pseudo-closed sets.
    The threshold plays no role here.  Contexts wider than
    ``max_attributes`` are refused to bound the fixpoint computation.
    """
    m = ctx.n_attributes
    if m > max_attributes:
        raise ResourceError(
            f"context has {m} attributes, above the Duquenne-Guigues guard of {max_attributes}"
        )
    full = (1 << m) - 1
    implications: list[tuple[int, int]] = []

    def preclose(mask: int) -> int:
        changed = True
        while changed:
            changed = False
            for p, c in implications:
                if p & ~mask == 0 and p != mask and c & ~mask:
                    mask |= c
                    changed = True
        return mask

    def ctx_closure(mask: int) -> int:
        return ctx.closure_mask(ctx.extent_mask(bits_of(mask)))

    def next_preclosed(mask: int):
        for i in reversed(range(m)):
            bit = 1 << i
            if mask & bit:
                mask &= ~bit
            else:
                b = preclose(mask | bit)
                if not (b & ~mask) & (bit - 1):
                    return b
        return None

    found: list[tuple[int, int]] = []
    a = preclose(0)
    while True:
        c = ctx_closure(a)
        if c != a:
            implications.append((a, c))
            found.append((a, c))
        if a == full:
            break
        a = next_preclosed(a)
        if a is None:
            break

    found.sort(key=lambda pc: (pc[0].bit_count(), bits_of(pc[0])))
    out = []
    for p, c in found:
        p_items = bits_of(p)
        supp = ctx.extent_mask(p_items).bit_count()
        out.append(_rule(ctx, p_items, bits_of(c & ~p), supp, supp))
    return out


# -- serialization ----------------------------------------------------------


def render_rules_text(rules: list[AssociationRule]) -> list[str]:
    """One line per rule, measures at 4 decimal places, infinite
    conviction rendered as ``inf``.  An empty premise renders as ``{}``."""
    out = []
    for r in rules:
        left = " ".join(r.premise) if r.premise else "{}"
        conv = "inf" if math.isinf(r.conviction) else f"{r.conviction:.4f}"
        out.append(
            f"{left} => {' '.join(r.consequent)} "
            f"(supp={r.support}; conf={r.confidence:.4f}; lift={r.lift:.4f}; conv={conv})"
        )
    return out


def render_rules_jsonl(rules: list[AssociationRule]) -> list[str]:
    """JSON-lines records; infinite conviction is stored as null."""
    return [
        json.dumps(
            {
                "premise": list(r.premise),
                "consequent": list(r.consequent),
                "support": r.support,
                "confidence": r.confidence,
                "lift": r.lift,
                "conviction": None if math.isinf(r.conviction) else r.conviction,
            }
        )
        for r in rules
    ]


def parse_rules_jsonl(text: str) -> list[AssociationRule]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            conv = rec["conviction"]
            out.append(
                AssociationRule(
                    premise=tuple(rec["premise"]),
                    consequent=tuple(rec["consequent"]),
                    support=int(rec["support"]),
                    confidence=float(rec["confidence"]),
                    lift=float(rec["lift"]),
                    conviction=math.inf if conv is None else float(conv),
                )
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad rule record on line {lineno}: {exc}") from None
    return out
