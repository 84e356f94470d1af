"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py            # both backends, side by side
    python3 benchmarks/bench_kernels.py --json     # machine-readable

Each backend runs in its own interpreter, since the choice is made at
import time (RANKCODE_PURE_PYTHON=1 selects the fallback).
"""

import argparse
import json
import os
import subprocess
import sys
import timeit

CASES = ["gf2_rank", "gf2m_combine", "gf2m_lin_eval", "sample_rank_u", "decode_t2", "trial_t3"]


def measure(repeat: int) -> dict:
    import numpy as np

    from rankcode import kernels
    from rankcode.gabidulin import build_code, decode, encode
    from rankcode.gfq import field
    from rankcode.linpoly import LinearizedPoly
    from rankcode.rank_metric import sample_rank_u, uniform_elements, vec_add
    from rankcode.sim import TrialPlan, run_trial

    rng = np.random.default_rng(1)
    F = field(2, 16)
    tab = kernels.field_tables(F)
    vecs = [uniform_elements(F, rng, 16) for _ in range(64)]
    code2 = build_code(2, 16, 16, 12)
    msgs = [uniform_elements(F, rng, 12) for _ in range(64)]
    words = [vec_add(F, encode(code2, m), sample_rank_u(F, 16, 2, rng)) for m in msgs]
    poly = LinearizedPoly(F, uniform_elements(F, rng, 8))
    plan = TrialPlan(2, 16, 16, 10, 16)
    run_trial(plan, 0)  # build and cache the code

    bodies = {
        "gf2_rank": lambda: [kernels.gf2_rank(v) for v in vecs],
        "gf2m_combine": lambda: [kernels.gf2m_combine(tab, m, code2.generator, 16) for m in msgs],
        "gf2m_lin_eval": lambda: [poly(a) for v in vecs[:8] for a in v],
        "sample_rank_u": lambda: [sample_rank_u(F, 16, 16, rng) for _ in range(64)],
        "decode_t2": lambda: [decode(code2, w) for w in words],
        "trial_t3": lambda: [run_trial(plan, i) for i in range(64)],
    }
    out = {"backend": kernels.BACKEND}
    for name in CASES:
        t = min(timeit.repeat(bodies[name], number=1, repeat=repeat))
        out[name] = t / 64
    return out


def run_backend(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("RANKCODE_PURE_PYTHON", None)
    if pure:
        env["RANKCODE_PURE_PYTHON"] = "1"
    res = subprocess.run(
        [sys.executable, __file__, "--child", "--repeat", str(repeat)],
        env=env, check=True, capture_output=True, text=True,
    )
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(measure(args.repeat)))
        return
    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    if args.json:
        print(json.dumps({"compiled": fast, "python": slow}, indent=2))
        return
    if fast["backend"] != "cython":
        print("note: the compiled extension is not built; both columns use the Python kernels")
    print(f"{'case':<16}{'compiled (us)':>15}{'python (us)':>14}{'speedup':>10}")
    for name in CASES:
        a, b = fast[name] * 1e6, slow[name] * 1e6
        print(f"{name:<16}{a:>15.1f}{b:>14.1f}{b / a:>9.1f}x")


if __name__ == "__main__":
    main()
