"""Benchmark the compiled integer kernels against the pure-Python twins.

Workload mirrors real use: circuit sweeps over kernel bases of gadget
frameworks (many small integer determinants) plus rank/determinant
micro-cases.  Run after `pip install -e .`:

    python scripts/bench_kernels.py
"""

import random
import time

from stressmatroid import _exactla_py as pure

try:
    from stressmatroid import _exactla as compiled
except ImportError:
    compiled = None

from stressmatroid.arrangements import LineArrangement
from stressmatroid.exact_geom import line
from stressmatroid.gadget import build_gadget
from stressmatroid.sign_matroid import _columns
from stressmatroid.stress_kernel import stress_basis


def gadget_columns(n):
    coeffs = {
        2: [(1, -1, 0), (1, 1, -1)],
        3: [(1, -1, 0), (1, 1, -1), (3, -1, -2)],
        4: [(1, -1, 0), (1, 1, -1), (3, -1, -2), (3, 1, -5)],
    }[n]
    arr = LineArrangement(tuple(line(a, b, c) for a, b, c in coeffs))
    layout = build_gadget(arr)
    return _columns(stress_basis(layout.framework))


def time_call(fn, *args, repeat=3):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench_sign_circuits():
    print("sign_circuits on gadget kernel bases")
    for n in (2, 3):
        cols = gadget_columns(n)
        t_pure, r_pure = time_call(pure.sign_circuits, cols)
        line_out = f"  n={n} ({len(cols)} edges): pure {t_pure * 1e3:9.2f} ms"
        if compiled is not None:
            t_c, r_c = time_call(compiled.sign_circuits, cols)
            assert r_c == r_pure, "backends disagree"
            line_out += f"   compiled {t_c * 1e3:9.2f} ms   x{t_pure / t_c:.1f}"
        print(line_out)


def bench_dets():
    rng = random.Random(11)
    mats = [
        [[rng.randint(-10**9, 10**9) for _ in range(k)] for _ in range(k)]
        for k in (4, 6, 8) for _ in range(200)
    ]
    print("det_int batches (600 matrices, sizes 4/6/8)")

    def run(mod):
        return [mod.det_int(m) for m in mats]

    t_pure, r_pure = time_call(run, pure)
    out = f"  pure {t_pure * 1e3:9.2f} ms"
    if compiled is not None:
        t_c, r_c = time_call(run, compiled)
        assert r_c == r_pure, "backends disagree"
        out += f"   compiled {t_c * 1e3:9.2f} ms   x{t_pure / t_c:.1f}"
    print(out)


if __name__ == "__main__":
    if compiled is None:
        print("compiled backend not built; showing pure timings only")
    bench_sign_circuits()
    bench_dets()
