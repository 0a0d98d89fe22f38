import random

import pytest

from abvass.core import LOSSY, STRICT, Instance, Semantics, System, validate_tree
from abvass.decide import brute_force, decide_cover, decide_increasing, decide_lossy
from abvass.reduce import (
    back_translate,
    coverability_view,
    eliminate_zero_tests,
    increasing_view,
    ordinary_instance,
    to_ordinary,
    to_pseudo_increasing,
    zt_state,
)
from corpus import corpus


def _zt_sys():
    # p -(+1)-> p, p =0-> q : strict reachability of q needs the zero test to pass
    return System(("p", "r", "q"), 1, [("p", (1,), "r"), ("r", (-1,), "p")], zero=[("p", "q")])


def test_zero_test_elimination_shape():
    inst = Instance(_zt_sys(), "p", {"q"}, STRICT)
    out, tr = eliminate_zero_tests(inst)
    assert not out.system.zero
    assert out.system.dim == (len(inst.system.states)) * inst.system.dim
    assert zt_state(1, "p") == out.root_state
    d = brute_force(out, 6, 4)
    assert d.answer == "yes"
    assert validate_tree(inst, back_translate(tr, d.witness, inst))


def test_zero_test_elimination_rejections():
    sys = _zt_sys()
    with pytest.raises(ValueError):
        eliminate_zero_tests(Instance(sys, "p", {"q"}, Semantics("increasing")))
    with pytest.raises(ValueError):
        eliminate_zero_tests(Instance(sys, "p", {"q"}, STRICT, leaf_condition="any"))


def test_identity_without_zero_tests():
    sys = System(("p",), 1)
    inst = Instance(sys, "p", {"p"}, STRICT)
    out, tr = eliminate_zero_tests(inst)
    assert out.system == sys


def test_to_ordinary_units():
    sys = System(("p", "q"), 2, [("p", (2, -1), "q"), ("q", (0, 0), "p")])
    out, tr = to_ordinary(sys)
    assert out.is_ordinary()
    assert all(sum(abs(x) for x in r.delta) <= 1 for r in out.unary)
    # the 0-delta rule is already ordinary and kept as is
    assert any(r.src == "q" and r.dst == "p" and not any(r.delta) for r in out.unary)


def test_ordinary_back_translation_lossy():
    for inst in corpus(11, 60, mode="lossy"):
        out, tr = ordinary_instance(inst)
        a, b = decide_lossy(inst), decide_lossy(out)
        assert a.answer == b.answer
        if b.witness is not None:
            assert validate_tree(inst, back_translate(tr, b.witness, inst))


def test_coverability_view_semantics():
    inst = corpus(12, 1, mode="lossy")[0]
    view, _ = coverability_view(inst)
    assert view.semantics == Semantics("strict", "reset")
    assert view.leaf_condition == "any"


def test_increasing_view_shape():
    inst = corpus(13, 1, mode="increasing")[0]
    view, _ = increasing_view(inst)
    assert view.semantics.fork_reading == "meet"
    assert view.root_condition == "cover"


def test_pseudo_increasing_agrees():
    for inst in corpus(14, 60, mode="increasing"):
        p, tr = to_pseudo_increasing(inst)
        assert p.semantics.pseudo
        a, b = decide_increasing(inst, 6, 6), decide_increasing(p, 6, 6)
        assert (a.answer == "yes") == (b.answer == "yes")
        if b.witness is not None:
            assert validate_tree(inst, back_translate(tr, b.witness, inst))
