"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each case runs both backends on identical inputs, checks that the outputs
agree, and reports the best wall time of ``--repeat`` runs.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from polynet import _kernels, fixtures
from polynet.ff import hstack
from polynet.representation import rank_table_from_matrices


def _rep_inputs(name: str):
    rep = fixtures.load(name)
    offsets = np.zeros(rep.n + 1, dtype=np.int_)
    for i, m in enumerate(rep.matrices):
        offsets[i + 1] = offsets[i] + m.cols
    return hstack(list(rep.matrices), rep.rows).to_array(), offsets, rep.field.p


def cases():
    rng = np.random.default_rng(7)
    mats = [rng.integers(0, 3, size=(24, 24)) for _ in range(20)]
    yield "rank_mod_p 20x(24x24) GF(3)", "rank_mod_p", [(m, 3) for m in mats]

    for name in ("example7", "mnetwork_rep1"):
        cols, offsets, p = _rep_inputs(name)
        yield f"rank_table {name} (n={len(offsets) - 1})", "rank_table", [(cols, offsets, p)]

    t16 = np.array([min(bin(x).count("1"), 5) for x in range(1 << 16)], dtype=np.int64)
    yield "axiom_scan U(5,16)", "axiom_scan", [(t16, 16)]

    t12 = rank_table_from_matrices(fixtures.load("mnetwork_rep1"))
    caps = np.array(t12.singletons(), dtype=np.int64)
    yield "box_members mnetwork_rep1 (n=12)", "box_members", [(t12.values, 12, caps)]


def best_time(fn, args_list, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [fn(*args) for args in args_list]
        best = min(best, time.perf_counter() - t0)
    return best, out


def _same(a, b) -> bool:
    return all(np.array_equal(np.asarray(x), np.asarray(y)) for x, y in zip(a, b))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels.compiled is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return
    print(f"{'case':<34} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}  agree")
    for label, name, args_list in cases():
        tp, op = best_time(getattr(_kernels.python, name), args_list, args.repeat)
        tc, oc = best_time(getattr(_kernels.compiled, name), args_list, args.repeat)
        print(f"{label:<34} {tp:>11.4f} {tc:>11.4f} {tp / tc:>7.1f}x  {_same(op, oc)}")


if __name__ == "__main__":
    main()
