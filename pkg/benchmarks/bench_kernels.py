"""Compare the pure-Python and compiled kernel backends.

Runs each workload once per backend in a subprocess (backend choice is an
import-time decision driven by MONOCLOSE_BACKEND), verifies both produced
identical results, and prints the timing table.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 5 --json
"""

import argparse
import hashlib
import json
import os
import random
import subprocess
import sys
import time


def load_workloads():
    from monoclose.ideals import MonomialIdeal, minimalize, power
    from monoclose.newton import closure

    def antichain(seed):
        # near-constant total degree keeps the frontier fat, so the
        # dominance loop is the cost, not the dedup preprocessing
        rng = random.Random(seed)
        vecs = []
        for _ in range(3000):
            s = 120 + rng.randint(0, 6)
            cuts = sorted(rng.randint(0, s) for _ in range(3))
            vecs.append(tuple(b - a for a, b in zip([0] + cuts, cuts + [s])))
        return minimalize(vecs, 4).generators

    def ideal_power(seed):
        I = MonomialIdeal(3, ((4, 0, 0), (0, 5, 0), (0, 0, 7)))
        return power(closure(I), 9).generators

    def closure_scan(seed):
        I = MonomialIdeal(4, tuple(
            tuple(a if i == j else 0 for j in range(4))
            for i, a in enumerate((17, 19, 16, 18))
        ))
        return closure(I).generators

    return {
        "antichain": antichain,
        "power": ideal_power,
        "closure_scan": closure_scan,
    }


def run_backend(args):
    from monoclose.kernels import backend_name

    if backend_name() != args.run:
        print(f"backend mismatch: wanted {args.run}, got {backend_name()}",
              file=sys.stderr)
        return 2
    results = {}
    for name, fn in load_workloads().items():
        best = None
        digest = None
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = fn(args.seed)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
            digest = hashlib.sha256(repr(out).encode()).hexdigest()[:16]
        results[name] = {"seconds": best, "digest": digest}
    print(json.dumps(results))
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per workload, best is kept")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--json", action="store_true", dest="as_json",
                        help="print raw results instead of the table")
    parser.add_argument("--run", choices=("python", "c"), help=argparse.SUPPRESS)
    args = parser.parse_args(argv)

    if args.run:
        return run_backend(args)

    from monoclose.kernels import available_backends

    backends = list(available_backends())
    per_backend = {}
    for backend in backends:
        env = dict(os.environ, MONOCLOSE_BACKEND=backend)
        cmd = [sys.executable, os.path.abspath(__file__),
               "--run", backend, "--repeat", str(args.repeat),
               "--seed", str(args.seed)]
        proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            return proc.returncode
        per_backend[backend] = json.loads(proc.stdout)

    workloads = list(next(iter(per_backend.values())))
    for name in workloads:
        digests = {per_backend[b][name]["digest"] for b in backends}
        if len(digests) > 1:
            print(f"output mismatch on {name}: {digests}", file=sys.stderr)
            return 2

    if args.as_json:
        print(json.dumps(per_backend, indent=2))
        return 0

    width = max(len(n) for n in workloads)
    header = f"{'workload':<{width}}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name in workloads:
        row = f"{name:<{width}}"
        times = [per_backend[b][name]["seconds"] for b in backends]
        for t in times:
            row += f"{t:>11.3f}s"
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
