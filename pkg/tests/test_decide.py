import pytest

from abvass.core import LOSSY, STRICT, Instance, Semantics, System, validate_tree, tree_height
from abvass.decide import (
    BoundOverflow,
    bound_H,
    bound_Hprime,
    brute_force,
    decide,
    decide_bounded_height,
    decide_expansive,
    decide_increasing,
    decide_lossy,
    decide_strict_bounded,
    hprime_growth,
    min_cover_antichains,
    tower,
)
from abvass.gadgets import gen_example_bvass
from abvass.reduce import coverability_view


def test_tower_values():
    assert [tower(n) for n in range(5)] == [1, 2, 4, 16, 65536]
    assert tower(5).bit_length() == 65537
    with pytest.raises(BoundOverflow):
        tower(6)


def test_bounds_small():
    assert bound_H(1, 2, 1) == 10
    assert bound_Hprime(1, 1, 0) == 16
    assert bound_H(0, 3, 5) >= 1


def test_hprime_growth_small_exact():
    ok, how = hprime_growth(0, 1, 0)
    assert ok and how == "exact"


@pytest.mark.parametrize("m,ans", [(m, "yes" if m >= 4 else "no") for m in range(7)])
def test_example_threshold(m, ans):
    inst = gen_example_bvass(m).instance
    d = decide_lossy(inst)
    assert d.answer == ans
    if d.witness is not None:
        assert validate_tree(inst, d.witness)


def test_antichain_elements_minimal():
    view, _ = coverability_view(gen_example_bvass(0).instance)
    ac = min_cover_antichains(view)
    for q, vs in ac.elements.items():
        for a in vs:
            for b in vs:
                assert a == b or not all(x <= y for x, y in zip(a, b))


def test_bounded_height_cap_sensitivity():
    inst = gen_example_bvass(5).instance.replace(semantics=STRICT)
    assert decide_bounded_height(inst, 17, 8).answer == "yes"
    assert decide_bounded_height(inst, 16, 8).answer == "unknown"
    assert brute_force(inst, 17, 8).answer == "yes"
    assert brute_force(inst, 16, 8).answer == "no"


def test_strict_bounded_forces_zero_leaves():
    sys = System(("p", "l"), 1, [("p", (1,), "l")])
    inst = Instance(sys, "p", {"l"}, STRICT, leaf_condition="any")
    assert decide_strict_bounded(inst, 4, 4).answer == "no"
    assert decide_bounded_height(inst, 4, 4).answer == "yes"


def test_increasing_uses_free_increases():
    sys = System(("p", "l"), 1, [("p", (-2,), "l")])
    inst = Instance(sys, "p", {"l"}, Semantics("increasing"))
    d = decide_increasing(inst, 4, 4)
    assert d.answer == "yes"
    assert validate_tree(inst, d.witness)
    assert brute_force(inst, 4, 4).answer == "yes"


def test_expansive_needs_support():
    sys = System(("p", "l"), 1, [("p", (-2,), "l")])
    inst = Instance(sys, "p", {"l"}, Semantics("expansive"), (1,))
    d = decide_expansive(inst, 4, 4)
    assert d.answer == "yes" and validate_tree(inst, d.witness)
    assert decide_expansive(inst.replace(root_vector=(0,)), 4, 4).answer == "no"


def test_dispatch():
    inst = gen_example_bvass(4).instance
    assert decide(inst).procedure == "antichain"
    assert decide(inst, "brute", 17, 8).answer == "yes"
    with pytest.raises(ValueError):
        decide(inst, "magic")


def test_lossy_guard_reports_unknown():
    inst = gen_example_bvass(6).instance
    from abvass.decide import decide_cover
    view, _ = coverability_view(inst)
    assert decide_cover(view, guard=1).answer == "unknown"


def test_example_tree_height_is_minimal():
    inst = gen_example_bvass(4).instance.replace(semantics=STRICT)
    t = decide_bounded_height(inst, 17, 8).witness
    assert tree_height(t) == 17
