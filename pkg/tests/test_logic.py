import json
from dataclasses import replace

import pytest

from abvass.core import System, validate_tree
from abvass.decide import decide_lossy, decide_strict_bounded
from abvass.logic import (
    ParseError,
    ProofNode,
    Sequent,
    check_proof,
    desugar,
    dual,
    ilz_to_abvass,
    parse_formula,
    parse_ll,
    parse_sequent,
    parse_theory,
    proof_from_json,
    prove_bounded,
    subformulas,
    theta,
    to_text,
)
from abvass.logic.syntax import Theory, atom, natom, ofc, par, tensor, whynot
from abvass.logic.translate import LEAF, abvass_to_theory, decide_ilz

F = parse_formula


def test_dual_de_morgan():
    assert dual(F("a * b")) == par(natom("a"), natom("b"))
    assert dual(dual(F("?a"))) == F("?a")
    assert dual(F("1 & top")) == F("bot + 0")
    assert desugar(F("a -o b")) == par(natom("a"), atom("b"))


def test_parse_precedence():
    assert F("a * b + c") == F("(a * b) + c")
    assert F("a -o b -o c") == F("a -o (b -o c)")
    assert F("!a * b") == tensor(ofc(atom("a")), atom("b"))
    assert F("~(a | b)") == F("~a * ~b")


def test_parse_errors_are_positioned():
    with pytest.raises(ParseError, match="col 7"):
        F("a * (b")
    with pytest.raises(ParseError):
        F("A")
    with pytest.raises(ParseError, match="line 2"):
        parse_theory("a ; p\n* ; q")


def test_parse_ll_shapes():
    s = parse_ll("|- ~q0, ?ql")
    assert isinstance(s, Sequent) and s.side == "one" and len(s.right) == 2
    assert parse_ll("!a -o (a * a)") == F("!a -o (a * a)")
    t = parse_ll("q1 * e1 ; q\nq1 ; q, e1")
    assert isinstance(t, Theory) and len(t.axioms) == 2
    two = parse_ll("a, b |- a * b")
    assert two.side == "two" and len(two.left) == 2


def test_printing_round_trips():
    for s in ["a -o b -o c", "(a -o b) -o c", "a * (b * c)", "(a * b) * c", "!(a & 1)", "?~a | bot",
              "a + b & c", "(a + b) * c", "~a"]:
        assert F(to_text(F(s))) == F(s)


def test_subformulas():
    S, S_ofc = subformulas(F("!a -o b"))
    assert {to_text(x) for x in S} == {"!a -o b", "!a", "a", "b"}
    assert S_ofc == {F("!a")}
    assert subformulas(F("a")) == ((F("a"),), frozenset())
    assert subformulas(F("!(a & 1)"))[1] == {F("!(a & 1)")}


def test_theory_rejects_exponentials():
    with pytest.raises(ValueError):
        Theory(((F("!a"), ("p",)),))


@pytest.mark.parametrize("seq,calc,depth,ans", [
    ("|- a, ~a", "MALL", 4, "yes"),
    ("|- 1", "MALL", 2, "yes"),
    ("|- a * ~a", "MALL", 6, "no"),
    ("|- a -o a", "ILZ", 6, "yes"),
    ("|- a * a -o a", "ILZ", 8, "no"),
    ("|- a * a -o a", "ILZW", 8, "yes"),
    ("|- !a -o a * a", "ILZ", 8, "yes"),
    ("|- ?a | ?~a", "LL", 10, "no"),
    ("|- ~a, a * a", "LLC", 8, "yes"),
    ("|- a, b", "LLW", 4, "no"),
    ("|- a, ~a, b", "LLW", 4, "yes"),
])
def test_prover_examples(seq, calc, depth, ans):
    d = prove_bounded(parse_sequent(seq), calc, depth=depth)
    assert d.answer == ans
    if d.witness is not None:
        assert check_proof(d.witness, calc)[0]


def test_prover_depth_cap_is_unknown():
    seq = parse_sequent("|- ~a, ~b, a * b")
    assert prove_bounded(seq, "MALL", depth=1).answer == "unknown"
    assert prove_bounded(seq, "MALL", depth=3).answer == "yes"


def test_fragment_filter():
    with pytest.raises(ValueError, match="not available"):
        prove_bounded(parse_sequent("|- !a"), "MALL")
    with pytest.raises(ValueError, match="not available"):
        prove_bounded(parse_sequent("|- a & b"), "MELL")


def test_check_proof_rejects_bad_tensor_split():
    d = prove_bounded(parse_sequent("|- ~a, ~b, a * b"), "MALL", depth=6)
    assert d.answer == "yes" and check_proof(d.witness, "MALL")[0]
    node = d.witness
    while node.rule != "tensor":
        node = node.premises[0]
    left, right = node.premises
    # duplicate a context formula into both premises
    extra = left.conclusion.gamma[0] if left.conclusion.gamma[0] != F("a") else left.conclusion.gamma[-1]
    bad_right = replace(right, conclusion=replace(right.conclusion,
                                                  gamma=tuple(sorted(right.conclusion.gamma + (extra,)))))
    bad = ProofNode("tensor", node.conclusion, (left, bad_right), node.principal)
    ok, msg = check_proof(bad, "MALL")
    assert not ok and "partition" in msg


def test_golden_proof(fixtures):
    data = json.loads((fixtures / "golden_proof.json").read_text())
    ok, msg = check_proof(proof_from_json(data), "MALL")
    assert ok, msg
    data["premises"][0]["rule"] = "plus_r"
    assert not check_proof(proof_from_json(data), "MALL")[0]


# ---------------------------------------------------------------- ILZ -> ABVASS

def test_ilz_instance_shape():
    inst = ilz_to_abvass(F("!a -o a * a"), "ILZ")
    S, _ = subformulas(F("!a -o a * a"))
    assert inst.system.dim == len(S)
    assert inst.leaf_states == {LEAF}
    assert inst.leaf_condition == "zero"
    assert not any(inst.root_vector)
    # zero tests only leave states whose consequent is a !-formula
    S_names = {str(i): f for i, f in enumerate(S)}
    for r in inst.system.zero:
        assert S_names[r.src.split(".")[-1]].op == "ofc"
    assert ilz_to_abvass(F("!a"), "ILZ").system.zero


@pytest.mark.parametrize("f,calc,ans", [
    ("a -o a", "ILZ", "yes"),
    ("a * a -o a", "ILZ", "no"),
    ("a * a -o a", "ILZW", "yes"),
    ("!a -o a * a", "ILZ", "yes"),
    ("a -o a * a", "ILZC", "yes"),
])
def test_ilz_translation_examples(f, calc, ans):
    d = decide_ilz(F(f), calc)
    assert d.answer == ans
    if d.witness is not None:
        assert validate_tree(ilz_to_abvass(F(f), calc), d.witness)


def test_store_normalization():
    f = F("!a -o a * a")
    inst = ilz_to_abvass(f, "ILZ")
    S, S_ofc = subformulas(f)
    ofc_idx = {S.index(x) for x in S_ofc}
    t = decide_strict_bounded(inst, 24, 4).witness
    for _, node in t.nodes():
        if node.step.kind == "unary":
            r = inst.system.unary[node.step.index]
            for i in ofc_idx:
                if r.delta[i] < 0:
                    # only store edges consume a !-formula, and they enlarge the store part of the name
                    assert r.src.split(".")[1] != r.dst.split(".")[1]


def test_ilz_rejects_classical_connectives():
    with pytest.raises(ValueError):
        ilz_to_abvass(F("a | b"), "ILZ")
    with pytest.raises(ValueError):
        ilz_to_abvass(F("?a"), "ILZ")
    with pytest.raises(ValueError):
        ilz_to_abvass(F("a"), "LL")


# ---------------------------------------------------------------- ABVASS -> theory

def test_axiom_table():
    sys = System(("q", "q1", "q2"), 1, [("q", (1,), "q1"), ("q1", (-1,), "q")],
                 fork=[("q", "q1", "q2")], split=[("q1", "q", "q2")])
    T, goal, flavor, pure = abvass_to_theory(sys, "q", {"q2"})
    assert T.axioms[0] == (F("q1 * e1"), ("q",))
    assert T.axioms[1] == (F("q"), ("q1", "e1"))
    assert T.axioms[2] == (F("q1 + q2"), ("q",))
    assert T.axioms[3] == (F("q | q2"), ("q1",))
    assert T.encode(0) == F("(~q1 | ~e1) * q")
    assert goal == parse_sequent("|- ~q, ?q2")
    assert len(pure.right) == 2 + 4


def test_theta_encoding():
    assert theta("q", (2, 0, 1)) == parse_sequent("|- ~q, ~e1, ~e1, ~e3")


def test_empty_system_leaf_root():
    sys = System(("q",), 1)
    T, goal, _, pure = abvass_to_theory(sys, "q", {"q"})
    assert prove_bounded(goal, "LL", T, depth=6).answer == "yes"
    assert prove_bounded(pure, "LL", None, depth=6).answer == "yes"


def test_theory_preconditions():
    with pytest.raises(ValueError):
        abvass_to_theory(System(("q",), 1, [("q", (2,), "q")]), "q", {"q"})
    with pytest.raises(ValueError):
        abvass_to_theory(System(("q",), 1, zero=[("q", "q")]), "q", {"q"})
    with pytest.raises(ValueError):
        abvass_to_theory(System(("q", "l"), 1, [("l", (0,), "q")]), "q", {"l"}, "LLC")


def test_reverse_small():
    sys = System(("q", "r", "l"), 1, [("q", (1,), "r"), ("r", (-1,), "l")])
    T, goal, _, _ = abvass_to_theory(sys, "q", {"l"})
    d = prove_bounded(goal, "LL", T, depth=12)
    assert d.answer == "yes"
    assert check_proof(d.witness, "LL", T)[0]
    sys2 = System(("q", "r", "l"), 1, [("q", (1,), "r"), ("r", (0,), "l")])
    T2, goal2, _, _ = abvass_to_theory(sys2, "q", {"l"})
    assert prove_bounded(goal2, "LL", T2, depth=12).answer == "no"


def test_llc_goal_shape():
    sys = System(("q", "l"), 1, [("q", (0,), "l")])
    T, goal, flavor, pure = abvass_to_theory(sys, "q", {"l"}, "LLC")
    assert flavor == "LLC"
    assert pure.right[0].op == "plus"
    assert prove_bounded(goal, "LLC", T, depth=8).answer == "yes"


@pytest.mark.parametrize("v,ans", [((1,), "yes"), ((2,), "no"), ((0,), "no")])
def test_reverse_with_root_vector(v, ans):
    from abvass.core import STRICT, Instance
    S = System(("p", "l"), 1, [("p", (-1,), "l")])
    assert decide_strict_bounded(Instance(S, "p", {"l"}, STRICT, v), 6, 4).answer == ans
    T, goal, _, _ = abvass_to_theory(S, "p", {"l"}, "LL", v)
    assert goal.right.count(natom("e1")) == v[0]
    assert prove_bounded(goal, "LL", T, depth=12).answer == ans
