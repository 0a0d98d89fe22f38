"""Linear-logic syntax, bounded provers and the translations to and from ABVASS."""

from .prover import CALCULI, Calculus, DSeq, ProofNode, check_proof, proof_from_json, proof_to_json, prove_bounded
from .syntax import (
    Formula,
    ParseError,
    Sequent,
    Theory,
    desugar,
    dual,
    parse_formula,
    parse_ll,
    parse_sequent,
    parse_theory,
    subformulas,
    to_text,
)
from .translate import abvass_to_theory, decide_ilz, ilz_to_abvass, theta

__all__ = [
    "CALCULI", "Calculus", "DSeq", "Formula", "ParseError", "ProofNode", "Sequent", "Theory",
    "abvass_to_theory", "check_proof", "decide_ilz", "desugar", "dual", "ilz_to_abvass",
    "parse_formula", "parse_ll", "parse_sequent", "parse_theory", "proof_from_json",
    "proof_to_json", "prove_bounded", "subformulas", "theta", "to_text",
]
