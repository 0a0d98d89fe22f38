"""Compare the compiled kernels with the pure-Python fallback.

Each backend runs in its own interpreter (``ABVASS_PURE_PYTHON=1`` selects
the fallback), so both see a cold import.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, timeit
import abvass
from abvass import _vec
from abvass.decide import brute_force, decide_lossy
from abvass.gadgets import gen_example_bvass, gen_tower_bvass

rng = random.Random(0)
vecs = [tuple(rng.randint(0, 9) for _ in range(4)) for _ in range(400)]

def antichain():
    ac = []
    for v in vecs:
        new = _vec.antichain_insert(ac, v)
        if new is not None:
            ac = new

def leq():
    for a, b in zip(vecs, vecs[1:]):
        _vec.vec_leq(a, b)
        _vec.vec_add(a, b)

def splits():
    _vec.decompositions((6, 5, 4, 3))

tower3 = gen_tower_bvass(3, 16).instance
example = gen_example_bvass(4).instance

cases = {
    "antichain_insert x400": antichain,
    "vec_leq+vec_add x400": leq,
    "decompositions (6,5,4,3)": splits,
    "decide_lossy tower k=3": lambda: decide_lossy(tower3),
    "brute_force example (10,6)": lambda: brute_force(example, 10, 6),
}
repeat = int(sys.argv[1])
out = {"backend": abvass.BACKEND}
for name, fn in cases.items():
    out[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("ABVASS_PURE_PYTHON", None)
    if pure:
        env["ABVASS_PURE_PYTHON"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    a = ap.parse_args()
    fast, slow = run(False, a.repeat), run(True, a.repeat)
    if fast["backend"] != "cython":
        print("compiled kernels are not built; both columns use the fallback", file=sys.stderr)
    print(f"{'case':32} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for name in fast:
        if name == "backend":
            continue
        f, s = fast[name], slow[name]
        print(f"{name:32} {f * 1e3:9.2f}ms {s * 1e3:9.2f}ms {s / f:7.2f}x")


if __name__ == "__main__":
    main()
