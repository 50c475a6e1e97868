"""Compare the compiled and pure-Python backends.

Each backend runs in its own interpreter; TORUS_ZETA_PURE=1 forces the
fallback.  Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, time
import torus_zeta
from torus_zeta.gfq import FFPoly, make_field
from torus_zeta.zeta import nk_sequence
from tests.corpus import corpus, random_corpus

def best(fn, repeat):
    out = []
    for _ in range(repeat):
        t = time.perf_counter(); fn(); out.append(time.perf_counter() - t)
    return min(out)

repeat = int(__import__("sys").argv[1])
rng = random.Random(1)
res = {"backend": torus_zeta.BACKEND}
for label, field in (("GF(7)", make_field(7)), ("GF(4)", make_field(2, 2))):
    for n, reps in ((24, 2000), (400, 20)):
        a = FFPoly(field, [rng.randrange(field.q) for _ in range(n)])
        b = FFPoly(field, [rng.randrange(field.q) for _ in range(n)])
        res[f"poly_mul {n}x{reps} {label}"] = best(lambda: [a * b for _ in range(reps)], repeat)
mats = list(corpus().values()) + random_corpus(20)
res["nk_sequence kmax=48"] = best(lambda: [nk_sequence(m, 48, threads=1) for m in mats], repeat)
print(json.dumps(res))
"""


def run(pure, repeat):
    env = dict(os.environ)
    env.pop("TORUS_ZETA_PURE", None)
    if pure:
        env["TORUS_ZETA_PURE"] = "1"
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, cwd=root,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    print(f"{'workload':28s} {fast['backend']:>10s} {slow['backend']:>10s} {'speedup':>8s}")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:28s} {fast[key]:10.4f} {slow[key]:10.4f} {slow[key] / fast[key]:7.2f}x")


if __name__ == "__main__":
    main()
