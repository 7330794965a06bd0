"""Binary contexts: the objects-by-attributes boolean tables everything
else operates on.

A context is immutable after construction.  Rows (per-object attribute
sets) and columns (per-attribute object sets) are kept as int bitmasks,
so the derivation operators are a handful of big-int ANDs.  Itemsets and
tidsets appear in the public API as strictly ascending tuples of ids.

Two text formats are supported:

* TAB: one object per line, whitespace-separated attribute tokens, lines
  starting with ``#`` are comments, blank lines are skipped.  Objects are
  labelled ``o1``, ``o2``, ... in input order; attributes are labelled by
  their tokens, ordered by first appearance.
* CXT (Burmeister-style): header line ``B``, blank line, object count,
  attribute count, blank line, object names, attribute names, then one
  matrix line per object made of ``.`` and ``X``.
"""

from dataclasses import dataclass

from galmine._bitset import bits_of, mask_of
from galmine.errors import ConstraintError, ParseError, UnknownLabelError

Itemset = tuple[int, ...]
TidSet = tuple[int, ...]


@dataclass(frozen=True)
class ContextStats:
    n_objects: int
    n_attributes: int
    ones: int
    density: float
    attribute_supports: tuple[int, ...]


class BinaryContext:
    """An immutable objects-by-attributes boolean table with named axes."""

    __slots__ = ("_object_labels", "_attribute_labels", "_row_masks", "_col_masks")

    def __init__(self, object_labels, attribute_labels, rows):
        """Build a context from per-object attribute-id collections.

        ``rows[i]`` lists the attribute ids object i possesses; ids must
        be in ``range(len(attribute_labels))``.  Labels must be pairwise
        distinct on each axis.  Duplicate ids within a row collapse.
        """
        object_labels = tuple(object_labels)
        attribute_labels = tuple(attribute_labels)
        if len(set(object_labels)) != len(object_labels):
            raise ConstraintError("object labels must be pairwise distinct")
        if len(set(attribute_labels)) != len(attribute_labels):
            raise ConstraintError("attribute labels must be pairwise distinct")
        m = len(attribute_labels)
        row_masks = []
        for row in rows:
            mask = mask_of(row)
            if mask >> m:
                raise ConstraintError(f"attribute id out of range in row {len(row_masks)}")
            row_masks.append(mask)
        if len(row_masks) != len(object_labels):
            raise ConstraintError("one row per object label required")
        object.__setattr__(self, "_object_labels", object_labels)
        object.__setattr__(self, "_attribute_labels", attribute_labels)
        object.__setattr__(self, "_row_masks", tuple(row_masks))
        cols = [0] * m
        for i, mask in enumerate(row_masks):
            bit = 1 << i
            for j in bits_of(mask):
                cols[j] |= bit
        object.__setattr__(self, "_col_masks", tuple(cols))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryContext is immutable")

    @classmethod
    def _from_masks(cls, object_labels, attribute_labels, row_masks):
        ctx = cls.__new__(cls)
        object.__setattr__(ctx, "_object_labels", tuple(object_labels))
        object.__setattr__(ctx, "_attribute_labels", tuple(attribute_labels))
        object.__setattr__(ctx, "_row_masks", tuple(row_masks))
        m = len(attribute_labels)
        cols = [0] * m
        for i, mask in enumerate(row_masks):
            bit = 1 << i
            for j in bits_of(mask):
                cols[j] |= bit
        object.__setattr__(ctx, "_col_masks", tuple(cols))
        return ctx

    # -- basic shape ---------------------------------------------------

    @property
    def object_labels(self) -> tuple[str, ...]:
        return self._object_labels

    @property
    def attribute_labels(self) -> tuple[str, ...]:
        return self._attribute_labels

    @property
    def n_objects(self) -> int:
        return len(self._object_labels)

    @property
    def n_attributes(self) -> int:
        return len(self._attribute_labels)

    @property
    def rows(self) -> tuple[Itemset, ...]:
        """Per-object attribute ids, each strictly ascending."""
        return tuple(bits_of(m) for m in self._row_masks)

    @property
    def row_masks(self) -> tuple[int, ...]:
        """Per-object attribute bitmasks (bit j = attribute j)."""
        return self._row_masks

    @property
    def column_masks(self) -> tuple[int, ...]:
        """Per-attribute object bitmasks (bit i = object i)."""
        return self._col_masks

    def __eq__(self, other):
        if not isinstance(other, BinaryContext):
            return NotImplemented
        return (
            self._object_labels == other._object_labels
            and self._attribute_labels == other._attribute_labels
            and self._row_masks == other._row_masks
        )

    __hash__ = None

    def __repr__(self):
        return f"BinaryContext({self.n_objects}x{self.n_attributes})"

    def attribute_index(self, label: str) -> int:
        try:
            return self._attribute_labels.index(label)
        except ValueError:
            raise UnknownLabelError(f"unknown attribute label: {label!r}") from None

    def object_index(self, label: str) -> int:
        try:
            return self._object_labels.index(label)
        except ValueError:
            raise UnknownLabelError(f"unknown object label: {label!r}") from None

    def itemset_labels(self, items: Itemset) -> tuple[str, ...]:
        return tuple(self._attribute_labels[j] for j in items)

    # -- derivation operators -------------------------------------------

    def _check_items(self, items):
        for j in items:
            if not 0 <= j < self.n_attributes:
                raise ValueError(f"attribute id out of range: {j}")

    def extent_mask(self, items) -> int:
        self._check_items(items)
        mask = (1 << self.n_objects) - 1
        for j in items:
            mask &= self._col_masks[j]
        return mask

    def intent_mask(self, tids) -> int:
        mask = (1 << self.n_attributes) - 1
        for i in tids:
            if not 0 <= i < self.n_objects:
                raise ValueError(f"object id out of range: {i}")
            mask &= self._row_masks[i]
        return mask

    def extent(self, items) -> TidSet:
        """Objects possessing every listed attribute; all objects for the
        empty itemset."""
        return bits_of(self.extent_mask(items))

    def intent(self, tids) -> Itemset:
        """Attributes common to all listed objects; all attributes for
        the empty tidset."""
        return bits_of(self.intent_mask(tids))

    def closure(self, items) -> Itemset:
        """intent(extent(items)): the smallest closed superset.  For an
        itemset with empty extent this is the full attribute set."""
        return bits_of(self.closure_mask(self.extent_mask(items)))

    def closure_mask(self, extent_mask: int) -> int:
        mask = (1 << self.n_attributes) - 1
        while extent_mask:
            low = extent_mask & -extent_mask
            mask &= self._row_masks[low.bit_length() - 1]
            extent_mask ^= low
        return mask

    def support(self, items) -> int:
        """Number of objects whose row contains the itemset."""
        return self.extent_mask(items).bit_count()

    # -- structural transformations --------------------------------------

    def transpose(self) -> "BinaryContext":
        """Swap objects and attributes; cell (i, j) becomes cell (j, i)."""
        return BinaryContext._from_masks(self._attribute_labels, self._object_labels, self._col_masks)

    def complement(self) -> "BinaryContext":
        """Negate every cell; labels unchanged."""
        full = (1 << self.n_attributes) - 1
        return BinaryContext._from_masks(
            self._object_labels, self._attribute_labels, [m ^ full for m in self._row_masks]
        )

    def project(self, keep_objects=None, keep_attributes=None, min_column_support=None) -> "BinaryContext":
        """Sub-context restricted to the given labels.

        ``keep_objects`` / ``keep_attributes`` are label collections
        (None keeps everything); axis order is preserved.  When
        ``min_column_support`` is given, attributes whose support after
        the object restriction falls below it are dropped as well.
        """
        if keep_objects is None:
            obj_ids = list(range(self.n_objects))
        else:
            wanted = set(keep_objects)
            for label in wanted:
                self.object_index(label)
            obj_ids = [i for i, lab in enumerate(self._object_labels) if lab in wanted]
        if keep_attributes is None:
            attr_ids = list(range(self.n_attributes))
        else:
            wanted = set(keep_attributes)
            for label in wanted:
                self.attribute_index(label)
            attr_ids = [j for j, lab in enumerate(self._attribute_labels) if lab in wanted]
        if min_column_support is not None:
            kept_obj_mask = mask_of(obj_ids)
            attr_ids = [
                j for j in attr_ids if (self._col_masks[j] & kept_obj_mask).bit_count() >= min_column_support
            ]
        remap = {j: k for k, j in enumerate(attr_ids)}
        rows = []
        for i in obj_ids:
            mask = self._row_masks[i]
            rows.append([remap[j] for j in bits_of(mask) if j in remap])
        return BinaryContext(
            [self._object_labels[i] for i in obj_ids],
            [self._attribute_labels[j] for j in attr_ids],
            rows,
        )

    def stats(self) -> ContextStats:
        ones = sum(m.bit_count() for m in self._row_masks)
        cells = self.n_objects * self.n_attributes
        return ContextStats(
            n_objects=self.n_objects,
            n_attributes=self.n_attributes,
            ones=ones,
            density=ones / cells if cells else 0.0,
            attribute_supports=tuple(m.bit_count() for m in self._col_masks),
        )


# -- TAB format -----------------------------------------------------------


def parse_tab(text: str) -> BinaryContext:
    """Parse TAB text.  Raises ParseError when no data line is present.

    There is no limit on line length or token count.
    """
    attr_order: dict[str, int] = {}
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = set()
        for token in stripped.split():
            if token not in attr_order:
                attr_order[token] = len(attr_order)
            row.add(attr_order[token])
        rows.append(row)
    if not rows:
        raise ParseError("TAB input contains no data lines")
    labels = [f"o{i + 1}" for i in range(len(rows))]
    return BinaryContext(labels, list(attr_order), rows)


def write_tab(ctx: BinaryContext) -> str:
    """Render as TAB: each row's attribute labels in label order.

    Labels containing whitespace or starting with ``#`` cannot be
    represented in this format and raise ConstraintError.  Objects with
    no attributes would produce blank (skipped) lines and also raise.
    """
    for label in ctx.attribute_labels:
        if not label or label.split() != [label] or label.startswith("#"):
            raise ConstraintError(f"attribute label not representable in TAB: {label!r}")
    lines = []
    for mask in ctx.row_masks:
        if not mask:
            raise ConstraintError("TAB cannot represent an object with no attributes")
        lines.append(" ".join(ctx.attribute_labels[j] for j in bits_of(mask)))
    return "\n".join(lines) + "\n"


# -- CXT format -----------------------------------------------------------


def parse_cxt(text: str) -> BinaryContext:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 5 or lines[0] != "B":
        raise ParseError("CXT input must start with a 'B' line")
    if lines[1] != "":
        raise ParseError("CXT line 2 must be blank")
    try:
        n = int(lines[2])
        m = int(lines[3])
    except ValueError:
        raise ParseError("CXT object/attribute counts must be integers") from None
    if n < 0 or m < 0:
        raise ParseError("CXT counts must be non-negative")
    if lines[4] != "":
        raise ParseError("CXT line 5 must be blank")
    expected = 5 + n + m + n
    if len(lines) != expected:
        raise ParseError(f"CXT declares {n} objects and {m} attributes but has {len(lines)} lines, expected {expected}")
    object_labels = lines[5 : 5 + n]
    attribute_labels = lines[5 + n : 5 + n + m]
    if len(set(object_labels)) != n:
        raise ParseError("CXT object names must be distinct")
    if len(set(attribute_labels)) != m:
        raise ParseError("CXT attribute names must be distinct")
    rows = []
    for k, line in enumerate(lines[5 + n + m :]):
        if len(line) != m:
            raise ParseError(f"CXT matrix line {k + 1} has {len(line)} characters, expected {m}")
        row = set()
        for j, ch in enumerate(line):
            if ch == "X":
                row.add(j)
            elif ch != ".":
                raise ParseError(f"CXT matrix line {k + 1} contains invalid character {ch!r}")
        rows.append(row)
    return BinaryContext(object_labels, attribute_labels, rows)


def write_cxt(ctx: BinaryContext) -> str:
    lines = ["B", "", str(ctx.n_objects), str(ctx.n_attributes), ""]
    lines.extend(ctx.object_labels)
    lines.extend(ctx.attribute_labels)
    for mask in ctx.row_masks:
        lines.append("".join("X" if mask >> j & 1 else "." for j in range(ctx.n_attributes)))
    return "\n".join(lines) + "\n"
