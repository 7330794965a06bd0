import pytest

from galmine import BinningSpec, ConstraintError, NumericTable, ParseError, discretize, parse_csv
from galmine.preprocess import convert, parse_context, write_context

from conftest import K4_TAB


def test_parse_csv_single_column():
    t = parse_csv("x\n1\n2\n")
    assert t.column_names == ("x",)
    assert t.rows == ((1.0,), (2.0,))
    assert t.object_labels == ("o1", "o2")


def test_parse_csv_label_column():
    t = parse_csv("id,x\no1,1.5\n", has_label_column=True)
    assert t.object_labels == ("o1",)
    assert t.rows == ((1.5,),)


def test_parse_csv_non_numeric():
    with pytest.raises(ParseError, match=r"row 1.*column x"):
        parse_csv("x\nfoo\n")


def test_parse_csv_ragged():
    with pytest.raises(ParseError):
        parse_csv("x,y\n1\n")


def test_parse_csv_empty():
    with pytest.raises(ParseError):
        parse_csv("")


def test_parse_csv_non_finite():
    with pytest.raises(ParseError):
        parse_csv("x\ninf\n")


def test_numeric_table_validation():
    with pytest.raises(ConstraintError):
        NumericTable(("x", "x"), ((1.0,),), ("o1",))
    with pytest.raises(ConstraintError):
        NumericTable(("x",), ((1.0, 2.0),), ("o1",))


def test_binning_spec_validation():
    with pytest.raises(ConstraintError):
        BinningSpec(strategy="nope")
    with pytest.raises(ConstraintError):
        BinningSpec(bin_count=0)


def _table(values):
    return NumericTable(("x",), tuple((v,) for v in values), tuple(f"o{i+1}" for i in range(len(values))))


def test_discretize_equal_width_midpoint():
    ctx = discretize(_table([1, 2, 3, 4]), BinningSpec("width", 2))
    assert ctx.attribute_labels == ("x[1.0;2.5)", "x[2.5;4.0]")
    assert ctx.rows == ((0,), (0,), (1,), (1,))


def test_discretize_equal_frequency_median():
    ctx = discretize(_table([1, 2, 3, 4]), BinningSpec("freq", 2))
    assert ctx.rows == ((0,), (0,), (1,), (1,))


def test_discretize_constant_column_collapses():
    ctx = discretize(_table([5, 5, 5]), BinningSpec("width", 3))
    assert ctx.n_attributes == 1
    assert all(r == (0,) for r in ctx.rows)
    ctx = discretize(_table([5, 5, 5]), BinningSpec("freq", 3))
    assert ctx.n_attributes == 1


def test_discretize_partition_property():
    table = NumericTable(
        ("x", "y"),
        ((1.0, 10.0), (2.0, 20.0), (3.0, 15.0), (9.0, 11.0)),
        ("o1", "o2", "o3", "o4"),
    )
    for strategy in ("width", "freq"):
        for bins in (1, 2, 3, 4):
            ctx = discretize(table, BinningSpec(strategy, bins))
            assert ctx.n_attributes <= 2 * bins
            for row in ctx.rows:
                per_col = {"x": 0, "y": 0}
                for j in row:
                    per_col[ctx.attribute_labels[j].split("[")[0]] += 1
                assert per_col == {"x": 1, "y": 1}


def test_discretize_equal_frequency_ties_to_lower_bin():
    # cut for bin 1 of [1,1,2,2] at the 2nd order statistic = 1
    ctx = discretize(_table([1, 1, 2, 2]), BinningSpec("freq", 2))
    assert ctx.rows == ((0,), (0,), (1,), (1,))
    # all values equal to the first cut go low even beyond the even split
    ctx = discretize(_table([1, 1, 1, 2]), BinningSpec("freq", 2))
    assert ctx.rows == ((0,), (0,), (0,), (1,))


def test_discretize_distinct_values_own_bins():
    ctx = discretize(_table([3, 1, 2]), BinningSpec("freq", 3))
    assert ctx.n_attributes == 3
    assert ctx.rows == ((2,), (0,), (1,))


def test_discretize_empty_table():
    with pytest.raises(ConstraintError):
        discretize(NumericTable(("x",), (), ()), BinningSpec())


def test_discretize_max_value_kept():
    ctx = discretize(_table([0, 10]), BinningSpec("width", 5))
    assert sum(len(r) for r in ctx.rows) == 2


def test_convert_roundtrip(tmp_path):
    src = tmp_path / "k4.tab"
    src.write_text(K4_TAB)
    cxt_text = convert(str(src), "tab", "cxt")
    dst = tmp_path / "k4.cxt"
    dst.write_text(cxt_text)
    back = convert(str(dst), "cxt", "tab")
    assert back == K4_TAB
    assert len(cxt_text.splitlines()) == 5 + 4 + 4 + 4  # header block + names + matrix
    assert convert(str(src), "tab", "tab") == K4_TAB  # canonicalizing identity


def test_parse_write_context_dispatch():
    ctx = parse_context(K4_TAB, "tab")
    assert write_context(ctx, "tab") == K4_TAB
    with pytest.raises(ConstraintError):
        parse_context(K4_TAB, "xml")
    with pytest.raises(ConstraintError):
        write_context(ctx, "xml")
