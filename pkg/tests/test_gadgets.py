import pytest

from abvass.core import validate_tree
from abvass.decide import decide_lossy, decide_strict_bounded, tower
from abvass.gadgets import (
    MinskyMachine,
    bk_state,
    gen_example_bvass,
    gen_minsky_sim,
    gen_tower_bvass,
    gen_weak_tower_initializer,
    minsky_reaches,
    minsky_to_avass,
    simulate_minsky_bounded,
)


def test_example_shape():
    g = gen_example_bvass(5)
    assert len(g.system.states) == 5 and g.system.dim == 3
    assert g.legend == {0: "c", 1: "d", 2: "d'"}


def test_tower_gadget_shape():
    g = gen_tower_bvass(2)
    s = g.system
    assert s.dim == 3
    assert len(s.states) == 6
    assert bk_state("leaf") in s.states
    assert g.instance.root_state == bk_state("init", 2)


@pytest.mark.parametrize("k", [1, 2])
def test_tower_threshold(k):
    n = tower(k)
    assert decide_lossy(gen_tower_bvass(k, n - 1).instance).answer == "no"
    d = decide_lossy(gen_tower_bvass(k, n).instance)
    assert d.answer == "yes"
    assert validate_tree(gen_tower_bvass(k, n).instance, d.witness)


def test_minsky_validation():
    with pytest.raises(ValueError):
        MinskyMachine(("a",), ("x",), (("a", "mul", "x", "a"),))
    with pytest.raises(ValueError):
        MinskyMachine(("a",), ("x",), (("a", "inc", "y", "a"),))


def test_simulate_bounded():
    M = MinskyMachine(("a", "b"), ("x",), (("a", "inc", "x", "a"), ("a", "zero", "x", "b")), "a", "b")
    seen = simulate_minsky_bounded(M, "a", 2)
    assert ("a", (2,)) in seen and ("a", (3,)) not in seen
    assert minsky_reaches(M, "a", "b", 2)


def test_weak_initializer_fragment():
    fr = gen_weak_tower_initializer(1, [0], 1)
    assert fr.entry in fr.states and fr.exit in fr.states
    assert fr.system().dim >= 1


def _machines():
    inc3 = MinskyMachine(("a", "b", "c", "d"), ("x",),
                         (("a", "inc", "x", "b"), ("b", "inc", "x", "c"), ("c", "inc", "x", "d")), "a", "d")
    zero_after_inc = MinskyMachine(("a", "b", "c"), ("x",), (("a", "inc", "x", "b"), ("b", "zero", "x", "c")), "a", "c")
    ok = MinskyMachine(("a", "b", "c"), ("x",),
                       (("a", "inc", "x", "b"), ("b", "dec", "x", "b"), ("b", "zero", "x", "c")), "a", "c")
    return [(inc3, False), (zero_after_inc, False), (ok, True)]


@pytest.mark.parametrize("M,reach", _machines())
def test_minsky_sim_k1(M, reach):
    g = gen_minsky_sim(M, M.start, M.halt, 1)
    d = decide_lossy(g.instance)
    assert (d.answer == "yes") == reach == minsky_reaches(M, M.start, M.halt, tower(1))
    if d.witness is not None:
        assert validate_tree(g.instance, d.witness)


def test_minsky_to_avass():
    M = _machines()[2][0]
    g = minsky_to_avass(M, M.start, M.halt)
    d = decide_strict_bounded(g.instance, 16, 4)
    assert d.answer == "yes" and validate_tree(g.instance, d.witness)
    M2 = _machines()[1][0]
    assert decide_strict_bounded(minsky_to_avass(M2, M2.start, M2.halt).instance, 16, 4).answer == "no"
