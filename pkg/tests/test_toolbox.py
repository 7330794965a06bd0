import pytest

from galmine import ConstraintError, GenSpec, mine_equivalence_classes, random_context, render_equivalence_classes


def test_density_extremes():
    empty = random_context(GenSpec(rows=5, cols=4, density=0.0, seed=1))
    assert all(r == () for r in empty.rows)
    full = random_context(GenSpec(rows=5, cols=4, density=1.0, seed=1))
    assert all(r == (0, 1, 2, 3) for r in full.rows)


def test_labels():
    ctx = random_context(GenSpec(rows=2, cols=3, density=0.5, seed=0))
    assert ctx.object_labels == ("o1", "o2")
    assert ctx.attribute_labels == ("a1", "a2", "a3")


def test_seed_determinism():
    a = random_context(GenSpec(rows=50, cols=20, density=0.5, seed=42))
    b = random_context(GenSpec(rows=50, cols=20, density=0.5, seed=42))
    assert a == b


def test_different_seeds_differ():
    a = random_context(GenSpec(rows=100, cols=20, density=0.5, seed=1))
    b = random_context(GenSpec(rows=100, cols=20, density=0.5, seed=2))
    assert a != b


def test_density_concentration():
    spec = GenSpec(rows=1000, cols=100, density=0.3, seed=7)
    stats = random_context(spec).stats()
    assert abs(stats.density - 0.3) < 0.02


def test_genspec_validation():
    with pytest.raises(ConstraintError):
        GenSpec(rows=-1, cols=2, density=0.5)
    with pytest.raises(ConstraintError):
        GenSpec(rows=1, cols=2, density=1.5)


def test_zero_size():
    ctx = random_context(GenSpec(rows=0, cols=0, density=0.5, seed=0))
    assert ctx.n_objects == 0 and ctx.n_attributes == 0


def test_render_classes_k4(k4):
    classes = mine_equivalence_classes(k4, 1)
    lines = render_equivalence_classes(classes, k4.attribute_labels)
    acd = lines.index("CLASS closed={a c d} supp=1")
    assert lines[acd + 1] == "  gen: {d}"
    # a self-closed class renders its own set as the generator line
    assert "CLASS closed={a} supp=3" in lines
    assert lines[lines.index("CLASS closed={a} supp=3") + 1] == "  gen: {a}"


def test_render_classes_empty():
    assert render_equivalence_classes([], ()) == []
