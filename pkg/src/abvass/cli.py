"""Command-line front end, file formats and exports.

``.abvass`` files are line oriented::

    dim 3
    state q0 q1 q2
    unary q0 q1 0 1 0
    fork q2 q3 q3
    split q2 q3 q3
    zerotest q3 q0
    root q0
    rootvec 5 0 0
    leaf q4
    leafcond any
    semantics lossy

``.mm`` files describe Minsky machines with ``counters``, ``states``,
``inc q c q1``, ``dec q c q1``, ``zero q c q1``, ``start`` and ``halt``.

Exit codes: 0 yes/ok, 1 no/invalid, 2 unknown, 64 usage, 65 bad input
data, 66 missing input file, 70 bound overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import (
    RULE_KINDS,
    SEMANTIC_STEPS,
    Configuration,
    DeductionTree,
    Instance,
    Report,
    STRICT,
    Semantics,
    Step,
    System,
    validate_system,
    validate_tree,
)
from .decide import BoundOverflow, bound_H, bound_Hprime, decide, tower
from . import gadgets as _gadgets
from . import reduce as _reduce

EXIT_YES, EXIT_NO, EXIT_UNKNOWN = 0, 1, 2
EX_USAGE, EX_DATAERR, EX_NOINPUT, EX_SOFTWARE = 64, 65, 66, 70
_ANSWER_EXIT = {"yes": EXIT_YES, "no": EXIT_NO, "unknown": EXIT_UNKNOWN}


class FormatError(ValueError):
    def __init__(self, msg, line=None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


# ---------------------------------------------------------------- .abvass

def _ints(tokens, line):
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)}", line) from None


def parse_abvass(text: str) -> Instance:
    dim = None
    states: list = []
    unary, fork, split, zero = [], [], [], []
    root = rootvec = None
    leaves: list = []
    leafcond, rootcond = "zero", "exact"
    sem = Semantics("strict")

    def need_dim(ln):
        if dim is None:
            raise FormatError("'dim' must come before vectors", ln)
        return dim

    def vec(tokens, ln):
        d = need_dim(ln)
        if len(tokens) != d:
            raise FormatError(f"expected {d} entries, got {len(tokens)}", ln)
        return _ints(tokens, ln)

    for ln, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        kw, args = toks[0], toks[1:]
        if kw == "dim":
            if len(args) != 1:
                raise FormatError("dim takes one integer", ln)
            (dim,) = _ints(args, ln)
            if dim < 0:
                raise FormatError("dimension must be non-negative", ln)
        elif kw == "state":
            states += [q for q in args if q not in states]
        elif kw == "unary":
            if len(args) < 2:
                raise FormatError("unary needs source, target and a delta", ln)
            unary.append((args[0], vec(args[2:], ln), args[1]))
        elif kw in ("fork", "split"):
            if len(args) != 3:
                raise FormatError(f"{kw} takes three states", ln)
            (fork if kw == "fork" else split).append(tuple(args))
        elif kw == "zerotest":
            if len(args) != 2:
                raise FormatError("zerotest takes two states", ln)
            zero.append(tuple(args))
        elif kw == "root":
            if len(args) != 1:
                raise FormatError("root takes one state", ln)
            root = args[0]
        elif kw == "rootvec":
            rootvec = vec(args, ln)
        elif kw == "leaf":
            leaves += args
        elif kw == "leafcond":
            if args not in (["zero"], ["any"]):
                raise FormatError("leafcond is 'zero' or 'any'", ln)
            leafcond = args[0]
        elif kw == "rootcond":
            if args not in (["exact"], ["cover"]):
                raise FormatError("rootcond is 'exact' or 'cover'", ln)
            rootcond = args[0]
        elif kw == "semantics":
            if not args:
                raise FormatError("semantics needs a mode", ln)
            pseudo = "pseudo" in args[1:]
            rest = [a for a in args[1:] if a != "pseudo"]
            try:
                sem = Semantics(args[0], rest[0] if rest else None, rest[1] if len(rest) > 1 else "copy", pseudo)
            except (ValueError, IndexError) as e:
                raise FormatError(str(e), ln) from None
        else:
            raise FormatError(f"unknown directive {kw!r}", ln)
    if dim is None:
        raise FormatError("missing 'dim'")
    if root is None:
        raise FormatError("missing 'root'")
    for q in [r[0] for r in unary] + [r[2] for r in unary] + [x for r in fork + split + zero for x in r] + [root] + leaves:
        if q not in states:
            states.append(q)
    sys_ = System(tuple(states), dim, unary, fork, split, zero)
    rep = validate_system(sys_)
    if not rep:
        raise FormatError("; ".join(rep.violations))
    return Instance(sys_, root, frozenset(leaves), sem, rootvec, leafcond, rootcond)


def serialize_abvass(inst: Instance, comments=()) -> str:
    s = inst.system
    out = [f"# {c}" for c in comments]
    out.append(f"dim {s.dim}")
    out.append("state " + " ".join(s.states))
    for r in s.unary:
        out.append(" ".join(["unary", r.src, r.dst] + [str(x) for x in r.delta]))
    for r in s.fork:
        out.append(f"fork {r.src} {r.left} {r.right}")
    for r in s.split:
        out.append(f"split {r.src} {r.left} {r.right}")
    for r in s.zero:
        out.append(f"zerotest {r.src} {r.dst}")
    out.append(f"root {inst.root_state}")
    if s.dim:
        out.append("rootvec " + " ".join(map(str, inst.root_vector)))
    if inst.leaf_states:
        out.append("leaf " + " ".join(sorted(inst.leaf_states)))
    out.append(f"leafcond {inst.leaf_condition}")
    if inst.root_condition != "exact":
        out.append(f"rootcond {inst.root_condition}")
    sem = inst.semantics
    line = f"semantics {sem.mode}"
    default = Semantics(sem.mode)
    if sem.zero_reading != default.zero_reading or sem.fork_reading != "copy":
        line += f" {sem.zero_reading}"
    if sem.fork_reading != "copy":
        line += f" {sem.fork_reading}"
    if sem.pseudo:
        line += " pseudo"
    out.append(line)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- .mm

def parse_mm(text: str) -> _gadgets.MinskyMachine:
    counters, states, rules = [], [], []
    start = halt = None
    for ln, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        kw, args = toks[0], toks[1:]
        if kw == "counters":
            counters += args
        elif kw == "states":
            states += args
        elif kw in ("inc", "dec", "zero"):
            if len(args) != 3:
                raise FormatError(f"{kw} takes: state counter state", ln)
            rules.append((args[0], kw, args[1], args[2]))
        elif kw in ("start", "halt"):
            if len(args) != 1:
                raise FormatError(f"{kw} takes one state", ln)
            if kw == "start":
                start = args[0]
            else:
                halt = args[0]
        else:
            raise FormatError(f"unknown directive {kw!r}", ln)
    for q in [r[0] for r in rules] + [r[3] for r in rules] + [x for x in (start, halt) if x]:
        if q not in states:
            states.append(q)
    if start is None or halt is None:
        raise FormatError("machine needs 'start' and 'halt'")
    try:
        return _gadgets.MinskyMachine(tuple(states), tuple(counters), tuple(rules), start, halt)
    except ValueError as e:
        raise FormatError(str(e)) from None


# ---------------------------------------------------------------- witness JSON

def _detail(sys_: System, step: Step) -> dict:
    if step.kind in SEMANTIC_STEPS:
        return {"coord": step.coord}
    if step.kind == "leaf":
        return {}
    r = sys_.rule(step.kind, step.index)
    d = {"index": step.index, "src": r.src}
    if step.kind == "unary":
        d["dst"] = r.dst
        d["delta"] = list(r.delta)
    elif step.kind == "zero":
        d["dst"] = r.dst
    else:
        d["left"], d["right"] = r.left, r.right
    return d


def tree_to_json(inst: Instance, tree: DeductionTree) -> dict:
    def conv(t):
        return {
            "state": t.label.state,
            "vector": list(t.label.vector),
            "rule": {"kind": t.step.kind, "detail": _detail(inst.system, t.step)},
            "children": [conv(c) for c in t.children],
        }
    return conv(tree)


def tree_from_json(inst: Instance, data: dict) -> DeductionTree:
    """Rebuild a tree, checking that every rule detail agrees with the system."""
    sys_ = inst.system

    def conv(d, path):
        where = f"at {path}"
        try:
            state, vector, rule, kids = d["state"], d["vector"], d["rule"], d.get("children", [])
            kind, detail = rule["kind"], rule.get("detail", {})
        except (KeyError, TypeError):
            raise FormatError(f"{where}: malformed node") from None
        if not isinstance(vector, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in vector):
            raise FormatError(f"{where}: vector must be a list of integers")
        if kind == "leaf":
            if detail:
                raise FormatError(f"{where}: leaf carries a rule detail")
            step = Step("leaf")
        elif kind in SEMANTIC_STEPS:
            if set(detail) != {"coord"} or not isinstance(detail["coord"], int):
                raise FormatError(f"{where}: {kind} needs exactly a coord")
            step = Step(kind, None, detail["coord"])
        elif kind in RULE_KINDS:
            idx = detail.get("index")
            lst = sys_.rule_list(kind)
            if not isinstance(idx, int) or not 0 <= idx < len(lst):
                raise FormatError(f"{where}: no {kind} rule with index {idx}")
            want = _detail(sys_, Step(kind, idx))
            if detail != want:
                raise FormatError(f"{where}: rule detail {detail} does not match {kind}[{idx}] = {want}")
            step = Step(kind, idx)
        else:
            raise FormatError(f"{where}: unknown rule kind {kind!r}")
        children = tuple(conv(c, path + [i]) for i, c in enumerate(kids))
        return DeductionTree(Configuration(state, tuple(vector)), step, children)

    return conv(data, [])


def validate_witness_json(inst: Instance, data: dict) -> Report:
    try:
        tree = tree_from_json(inst, data)
    except FormatError as e:
        return Report.fail(str(e))
    return validate_tree(inst, tree)


# ---------------------------------------------------------------- DOT

def _dot_id(s):
    return json.dumps(str(s), ensure_ascii=False)


def tree_to_dot(data: dict) -> str:
    lines = ["digraph witness {", "  node [shape=box, fontname=monospace];"]
    counter = [0]

    def walk(d):
        me = f"n{counter[0]}"
        counter[0] += 1
        label = f"{d['state']} ⟨{','.join(map(str, d['vector']))}⟩"
        lines.append(f"  {me} [label={_dot_id(label)}];")
        for c in d.get("children", []):
            kid = walk(c)
            lines.append(f"  {me} -> {kid} [label={_dot_id(d['rule']['kind'])}];")
        return me

    walk(data)
    lines.append("}")
    return "\n".join(lines) + "\n"


def system_to_dot(inst: Instance) -> str:
    s = inst.system
    lines = ["digraph abvass {", "  rankdir=LR;", "  node [shape=circle, fontname=monospace];"]
    for q in s.states:
        shape = "doublecircle" if q in inst.leaf_states else "circle"
        lines.append(f"  {_dot_id(q)} [shape={shape}];")
    for r in s.unary:
        lines.append(f"  {_dot_id(r.src)} -> {_dot_id(r.dst)} [label={_dot_id(tuple(r.delta))}];")
    for i, r in enumerate(s.fork):
        h = _dot_id(f"fork{i}")
        lines.append(f"  {h} [shape=point];")
        lines.append(f"  {_dot_id(r.src)} -> {h} [arrowhead=none, label=\"fork\"];")
        lines.append(f"  {h} -> {_dot_id(r.left)};")
        lines.append(f"  {h} -> {_dot_id(r.right)};")
    for i, r in enumerate(s.split):
        h = _dot_id(f"split{i}")
        lines.append(f"  {h} [shape=point];")
        lines.append(f"  {_dot_id(r.src)} -> {h} [arrowhead=none, label=\"split\"];")
        lines.append(f"  {h} -> {_dot_id(r.left)};")
        lines.append(f"  {h} -> {_dot_id(r.right)};")
    for r in s.zero:
        lines.append(f"  {_dot_id(r.src)} -> {_dot_id(r.dst)} [label=\"=0\", style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands

def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise FileNotFoundError(f"cannot read {path}: {e.strerror}") from None


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report(dec) -> int:
    print(dec.answer)
    for msg in dec.diagnostics:
        print(msg, file=sys.stderr)
    return _ANSWER_EXIT[dec.answer]


def cmd_decide(a) -> int:
    inst = parse_abvass(_read(a.file))
    dec = decide(inst, a.procedure, a.height, a.cap, want_witness=bool(a.witness))
    if dec.witness is not None and a.witness:
        Path(a.witness).write_text(json.dumps(tree_to_json(inst, dec.witness), indent=1) + "\n")
    if dec.bounds_used is not None:
        print(f"bounds: {dec.bounds_used}", file=sys.stderr)
    return _report(dec)


def cmd_validate(a) -> int:
    inst = parse_abvass(_read(a.file))
    try:
        data = json.loads(_read(a.witness))
    except json.JSONDecodeError as e:
        raise FormatError(f"{a.witness}: {e}") from None
    rep = validate_witness_json(inst, data)
    if rep:
        print("ok")
        return EXIT_YES
    print("invalid")
    for v in rep.violations:
        print(v, file=sys.stderr)
    return EXIT_NO


_PASSES = {
    "eliminate-zerotests": _reduce.eliminate_zero_tests,
    "ordinary": _reduce.ordinary_instance,
    "coverability-view": _reduce.coverability_view,
    "increasing-view": _reduce.increasing_view,
    "pseudo-increasing": _reduce.to_pseudo_increasing,
}


def cmd_reduce(a) -> int:
    inst = parse_abvass(_read(a.file))
    out, _trace = _PASSES[a.pass_name](inst)
    _emit(serialize_abvass(out), a.output)
    return EXIT_YES


def cmd_gen(a) -> int:
    what = a.what
    if what == "example":
        g = _gadgets.gen_example_bvass(a.m)
    elif what == "tower":
        if a.arg is None:
            raise FormatError("gen tower needs K")
        g = _gadgets.gen_tower_bvass(int(a.arg), a.n)
    elif what in ("minsky-sim", "minsky-avass"):
        if a.arg is None:
            raise FormatError(f"gen {what} needs a .mm file")
        M = parse_mm(_read(a.arg))
        if what == "minsky-sim":
            g = _gadgets.gen_minsky_sim(M, M.start, M.halt, a.tower_K)
        else:
            g = _gadgets.minsky_to_avass(M, M.start, M.halt)
    else:
        raise FormatError(f"unknown generator {what!r}")
    legend = [f"coordinate {i}: {name}" for i, name in sorted(g.legend.items())]
    _emit(serialize_abvass(g.instance, legend), a.output)
    return EXIT_YES


def cmd_translate(a) -> int:
    from . import logic
    if a.direction == "ll-to-abvass":
        obj = logic.parse_ll(_read(a.file))
        F = _single_formula(obj)
        inst = logic.ilz_to_abvass(F, a.calculus)
        enc = logic.translate.ILZEncoding(F)
        legend = [f"coordinate {i}: {t}" for i, t in enc.legend().items()]
        _emit(serialize_abvass(inst, legend), a.output)
        return EXIT_YES
    inst = parse_abvass(_read(a.file))
    sys_ = inst.system
    if not sys_.is_ordinary():
        sys_, _ = _reduce.to_ordinary(sys_)
    if inst.semantics != STRICT or inst.leaf_condition != "zero" or inst.root_condition != "exact":
        print("warning: the encoding captures strict reachability with zero leaves; "
              "the instance's semantics are ignored", file=sys.stderr)
    T, goal, flavor, pure = logic.abvass_to_theory(sys_, inst.root_state, inst.leaf_states, a.flavor,
                                                   inst.root_vector)
    names = logic.translate.state_atoms(sys_)
    head = [f"# {q} = {names[q]}" for q in sys_.states if names[q] != q]
    goal_text = "\n".join(head + [f"# with the theory: {goal}", str(pure)]) + "\n"
    theory_text = str(T) + "\n"
    if a.output:
        Path(a.output).write_text(goal_text)
        Path(a.output).with_suffix(".llt").write_text(theory_text)
    else:
        sys.stdout.write(goal_text + "# theory\n" + "".join(f"# {ln}\n" for ln in theory_text.splitlines()))
    return EXIT_YES


def _single_formula(obj):
    from .logic import Formula, Sequent
    if isinstance(obj, Formula):
        return obj
    if isinstance(obj, Sequent) and not obj.left and len(obj.right) == 1:
        return obj.right[0]
    raise FormatError("expected a single formula or a sequent '|- F'")


def cmd_prove(a) -> int:
    from . import logic
    obj = logic.parse_ll(_read(a.file))
    if isinstance(obj, logic.Theory):
        raise FormatError("expected a formula or a sequent, found a theory")
    if isinstance(obj, logic.Formula):
        obj = logic.Sequent("one", (), (obj,))
    theory = logic.parse_theory(_read(a.theory)) if a.theory else None
    dec = logic.prove_bounded(obj, a.calculus, theory, a.depth)
    if dec.witness is not None and a.proof:
        Path(a.proof).write_text(json.dumps(logic.proof_to_json(dec.witness), indent=1) + "\n")
    return _report(dec)


def cmd_bounds(a) -> int:
    try:
        if a.H:
            print(bound_H(*a.H))
        elif a.Hprime:
            print(bound_Hprime(*a.Hprime))
        else:
            print(tower(a.tower))
    except BoundOverflow as e:
        print(f"overflow: {e}", file=sys.stderr)
        return EX_SOFTWARE
    return EXIT_YES


def cmd_export(a) -> int:
    text = _read(a.file)
    if a.file.endswith(".json"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"{a.file}: {e}") from None
        _emit(tree_to_dot(data), a.output)
    else:
        _emit(system_to_dot(parse_abvass(text)), a.output)
    return EXIT_YES


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="abvass", description="Alternating branching VASS toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decide", help="decide reachability for an .abvass instance")
    d.add_argument("file")
    d.add_argument("--procedure", choices=["auto", "antichain", "bounded", "brute"], default="auto")
    d.add_argument("--height", type=int)
    d.add_argument("--cap", type=int)
    d.add_argument("--witness")
    d.set_defaults(func=cmd_decide)

    v = sub.add_parser("validate", help="check a witness JSON against an instance")
    v.add_argument("file")
    v.add_argument("--witness", required=True)
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("reduce", help="apply a reduction pass")
    r.add_argument("file")
    r.add_argument("--pass", dest="pass_name", choices=sorted(_PASSES), required=True)
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_reduce)

    g = sub.add_parser("gen", help="generate a gadget instance")
    g.add_argument("what", choices=["tower", "example", "minsky-sim", "minsky-avass"])
    g.add_argument("arg", nargs="?")
    g.add_argument("--n", type=int, default=0, help="initial value of the tower input counter")
    g.add_argument("--m", type=int, default=0, help="root counter value for the example")
    g.add_argument("--tower-K", dest="tower_K", type=int, default=1)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("translate", help="translate between formulas and systems")
    t.add_argument("direction", choices=["ll-to-abvass", "abvass-to-ll"])
    t.add_argument("file")
    t.add_argument("--calculus", choices=["ilz", "ilzw", "ilzc"], default="ilz")
    t.add_argument("--flavor", choices=["ll", "llc"], default="ll")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_translate)

    pr = sub.add_parser("prove", help="bounded proof search")
    pr.add_argument("file")
    pr.add_argument("--calculus", required=True,
                    type=str.upper, choices=["LL", "MELL", "MALL", "LLW", "MELLW", "LLC", "MALLC",
                                             "ILZ", "ILZW", "ILZC"])
    pr.add_argument("--theory")
    pr.add_argument("--depth", type=int, default=20)
    pr.add_argument("--proof", help="write the proof object as JSON")
    pr.set_defaults(func=cmd_prove)

    b = sub.add_parser("bounds", help="evaluate the height bounds")
    grp = b.add_mutually_exclusive_group(required=True)
    grp.add_argument("--H", nargs=3, type=int, metavar=("D", "S", "M"))
    grp.add_argument("--Hprime", nargs=3, type=int, metavar=("D", "S", "M"))
    grp.add_argument("--tower", type=int)
    b.set_defaults(func=cmd_bounds)

    e = sub.add_parser("export", help="export a system or witness as DOT")
    e.add_argument("format", choices=["dot"])
    e.add_argument("file")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_NOINPUT
    except ValueError as e:  # FormatError, ParseError and precondition failures
        print(f"error: {e}", file=sys.stderr)
        return EX_DATAERR


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
