"""Degenerate-shape behavior: empty axes, full columns, zero supports."""

from galmine import (
    BinaryContext,
    build_lattice,
    duquenne_guigues,
    export_dot,
    mine_equivalence_classes,
    mine_frequent,
    mine_generators,
    mine_minimal_rare,
)
from galmine.miner import STRATEGIES
from galmine.rules import render_rules_text


def test_zero_attribute_context():
    ctx = BinaryContext(["o1", "o2"], [], [set(), set()])
    assert mine_frequent(ctx, 1) == []
    assert mine_equivalence_classes(ctx, 1) == []
    assert duquenne_guigues(ctx) == []
    lat = build_lattice(ctx)
    assert [(c.extent, c.intent) for c in lat.concepts] == [((0, 1), ())]
    assert lat.cover_edges == ()
    export_dot(lat)  # must not raise


def test_zero_object_context():
    ctx = BinaryContext([], ["a", "b"], [])
    assert mine_frequent(ctx, 1) == []
    assert mine_minimal_rare(ctx, 1) == []
    # with no objects every closure is the full set; ∅ is the only pseudo-closed set
    dg = duquenne_guigues(ctx)
    assert [(r.premise, r.consequent, r.support) for r in dg] == [((), ("a", "b"), 0)]
    assert [(c.extent, c.intent) for c in build_lattice(ctx).concepts] == [((), (0, 1))]


def test_identity_context_zero_support_implications():
    ctx = BinaryContext(["o1", "o2", "o3"], ["a", "b", "c"], [{0}, {1}, {2}])
    lines = render_rules_text(duquenne_guigues(ctx))
    assert lines == [
        "a b => c (supp=0; conf=1.0000; lift=0.0000; conv=inf)",
        "a c => b (supp=0; conf=1.0000; lift=0.0000; conv=inf)",
        "b c => a (supp=0; conf=1.0000; lift=0.0000; conv=inf)",
    ]


def test_full_column_context_strategies_agree():
    ctx = BinaryContext(["o1", "o2"], ["a", "b"], [{0, 1}, {0}])
    tables = {
        strategy: [(s.items, s.support) for s in mine_frequent(ctx, 1, strategy)]
        for strategy in STRATEGIES
    }
    assert tables["levelwise"] == tables["dfs"] == tables["hybrid"] == [((0,), 2), ((1,), 1), ((0, 1), 1)]
    assert render_rules_text(duquenne_guigues(ctx)) == [
        "{} => a (supp=2; conf=1.0000; lift=1.0000; conv=inf)"
    ]
    # the universal attribute is not a generator, so nothing flat is emitted for it
    assert [s.items for s in mine_generators(ctx, 1)] == [(1,)]


def test_single_full_cell():
    ctx = BinaryContext(["o1"], ["a"], [{0}])
    assert [(c.extent, c.intent) for c in build_lattice(ctx).concepts] == [((0,), (0,))]
    assert [(s.items, s.support) for s in mine_frequent(ctx, 1)] == [((0,), 1)]
