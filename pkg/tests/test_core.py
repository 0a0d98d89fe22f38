import pytest

from abvass.core import (
    LOSSY,
    STRICT,
    Configuration,
    DeductionTree,
    Instance,
    SemanticStep,
    Semantics,
    Step,
    System,
    UnaryRule,
    apply_rule,
    enumerate_steps,
    find_repetition,
    shorten,
    split_delta,
    tree_height,
    validate_system,
    validate_tree,
)
from abvass.gadgets import gen_example_bvass


def test_semantics_defaults_and_rejections():
    assert Semantics("strict").zero_reading == "test"
    assert Semantics("increasing").zero_reading == "jump"
    assert Semantics("lossy").free_steps == ("loss",)
    assert Semantics("expansive", pseudo=True).free_steps == ("expand",)
    assert Semantics("increasing", pseudo=True).free_steps == ()
    with pytest.raises(ValueError):
        Semantics("lossy", "jump")
    with pytest.raises(ValueError):
        Semantics("expansive", fork_reading="meet")
    with pytest.raises(ValueError):
        Semantics("strict", pseudo=True)
    with pytest.raises(ValueError):
        Semantics("chaotic")


def test_validate_system_messages():
    bad = System(("a",), 2, [("a", (1,), "b")])
    rep = validate_system(bad)
    assert not rep
    assert any("unknown state b" in v for v in rep.violations)
    assert any("expected 2" in v for v in rep.violations)


def test_split_delta():
    assert split_delta((2, -1, 0)) == ((2, 0, 0), (0, 1, 0))


def test_apply_unary_strict_and_increasing():
    r = UnaryRule("p", (-2, 1), "q")
    assert apply_rule(Configuration("p", (1, 0)), r, STRICT) is None
    (kid,) = apply_rule(Configuration("p", (3, 0)), r, STRICT)
    assert kid == Configuration("q", (1, 1))
    # pseudo-unary: (v join u-) + u
    (kid,) = apply_rule(Configuration("p", (1, 0)), r, Semantics("increasing"))
    assert kid == Configuration("q", (0, 1))


def test_pseudo_expansive_needs_support():
    r = UnaryRule("p", (-1,), "q")
    sem = Semantics("expansive", pseudo=True)
    assert apply_rule(Configuration("p", (0,)), r, sem) is None
    assert apply_rule(Configuration("p", (3,)), r, sem) == [Configuration("q", (2,))]


def test_semantic_steps():
    cfg = Configuration("p", (0, 2))
    assert apply_rule(cfg, SemanticStep("loss", 0), LOSSY) is None
    assert apply_rule(cfg, SemanticStep("loss", 1), LOSSY) == [Configuration("p", (0, 1))]
    assert apply_rule(cfg, SemanticStep("expand", 0), Semantics("expansive")) is None
    assert apply_rule(cfg, SemanticStep("loss", 1), STRICT) is None


def test_zero_readings():
    from abvass.core import ZeroRule
    r = ZeroRule("p", "q")
    assert apply_rule(Configuration("p", (1,)), r, STRICT) is None
    assert apply_rule(Configuration("p", (1,)), r, Semantics("strict", "reset")) == [Configuration("q", (0,))]
    assert apply_rule(Configuration("p", (0,)), r, Semantics("strict", "jump"), child_vectors=[(4,)]) == [
        Configuration("q", (4,))
    ]


def test_meet_fork():
    from abvass.core import ForkRule
    r = ForkRule("p", "a", "b")
    sem = Semantics("strict", "test", "meet")
    cfg = Configuration("p", (1, 2))
    assert apply_rule(cfg, r, sem, child_vectors=[(1, 5), (3, 2)]) is not None
    assert apply_rule(cfg, r, sem, child_vectors=[(2, 5), (3, 2)]) is None


def test_enumerate_steps_split_count():
    sys = System(("p", "a"), 2, split=[("p", "a", "a")])
    steps = enumerate_steps(sys, Configuration("p", (2, 1)), STRICT)
    assert len(steps) == 3 * 2


def _example_tree():
    inst = gen_example_bvass(4).instance
    from abvass.decide import decide_lossy
    return inst, decide_lossy(inst).witness


def test_validate_tree_reports_path():
    inst, t = _example_tree()
    assert validate_tree(inst, t)
    bad = DeductionTree(t.label, Step("unary", 1), t.children)
    rep = validate_tree(inst, bad)
    assert not rep and rep.path == ()


def test_leaf_condition():
    sys = System(("p",), 1)
    inst = Instance(sys, "p", {"p"}, STRICT, (1,))
    assert not validate_tree(inst, DeductionTree(Configuration("p", (1,))))
    assert validate_tree(inst.replace(leaf_condition="any"), DeductionTree(Configuration("p", (1,))))


def test_shorten_repetition():
    sys = System(("p", "q"), 1, [("p", (0,), "q"), ("q", (0,), "p")])
    inst = Instance(sys, "p", {"p"}, STRICT)
    leaf = DeductionTree(Configuration("p", (0,)))
    t = DeductionTree(Configuration("p", (0,)), Step("unary", 0),
                      (DeductionTree(Configuration("q", (0,)), Step("unary", 1), (leaf,)),))
    rep = find_repetition(t)
    assert rep == ((), (0, 0))
    s = shorten(t, inst=inst)
    assert tree_height(s) == 0
    with pytest.raises(ValueError, match="labels differ"):
        shorten(t, (), (0,))
    with pytest.raises(ValueError, match="invalid path"):
        shorten(t, (), (0, 5))
    with pytest.raises(ValueError, match="no repetition"):
        shorten(leaf)


def test_tree_height_semantic_steps():
    sys = System(("p",), 1)
    inst = Instance(sys, "p", {"p"}, LOSSY, (1,))
    t = DeductionTree(Configuration("p", (1,)), Step("loss", coord=0), (DeductionTree(Configuration("p", (0,))),))
    assert validate_tree(inst, t)
    assert tree_height(t) == 1
    assert tree_height(t, count_semantic=False) == 0
