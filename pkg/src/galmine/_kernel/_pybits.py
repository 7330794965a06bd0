"""Pure-Python bitset kernels.

Reference implementation of the two hot loops; the compiled twin in
``_bitcore`` must produce byte-identical results, including the order of
``mine_vertical`` output.
"""


def mine_vertical(col_masks, n_objects, minsup):
    """All (itemset, support) pairs with support >= minsup, by depth-first
    tidset intersection.

    ``col_masks[j]`` is the object bitmask of attribute j.  At each node
    every candidate extension is evaluated (and emitted if frequent) in
    ascending id order before the frequent ones are descended into, so
    the output order is deterministic.  Recursion depth equals the size
    of the largest frequent itemset.
    """
    out = []
    cols = list(col_masks)

    def visit(prefix, tid, candidates):
        kept = []
        for j in candidates:
            t = tid & cols[j]
            s = t.bit_count()
            if s >= minsup:
                items = prefix + (j,)
                out.append((items, s))
                kept.append((j, t))
        for idx, (j, t) in enumerate(kept):
            visit(prefix + (j,), t, [k for k, _ in kept[idx + 1 :]])

    visit((), (1 << n_objects) - 1, list(range(len(cols))))
    return out


def count_containing_rows(row_masks, candidate_masks, n_attributes):
    """For each candidate attribute mask, how many rows contain it."""
    return [sum(1 for r in row_masks if cand & r == cand) for cand in candidate_masks]
