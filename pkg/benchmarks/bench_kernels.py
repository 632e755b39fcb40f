"""Compiled vs pure-Python kernels on Test-1 sized inputs.

    python benchmarks/bench_kernels.py [--cells 200] [--repeat 200] [--march]

Prints one line per kernel with the median time of each backend and the
ratio. ``--march`` also times a short fully implicit march under each
backend (the pure-Python one in a subprocess with MRTDAE_PURE_PYTHON=1).
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from mrtdae import kernels
from mrtdae.hydrate1d import materials as mt

MARCH = """
import time
from mrtdae.hydrate1d.model import build_test1_system
from mrtdae.mesh import build_uniform_mesh
from mrtdae.schemes import SchemeConfig, march_fully_implicit
s = build_test1_system()
t0 = time.perf_counter()
march_fully_implicit(s, build_uniform_mesh({t_end}, 60.0, 1), SchemeConfig())
print(time.perf_counter() - t0)
"""


def _inputs(n, seed=0):
    mat = mt.MaterialTable()
    rng = np.random.default_rng(seed)
    Sh = rng.uniform(0.0, 0.45, n)
    Sw = rng.uniform(mat.S_wr, 1.0 - Sh)
    P = rng.uniform(4e6, 11e6, n)
    T = rng.uniform(275.0, 295.0, n)
    eps = rng.uniform(-2e-3, 1e-3, n)
    u = np.concatenate([[0.0], np.cumsum(-rng.uniform(0, 1e-5, n))])
    ab = rng.normal(size=(19, 4 * n))
    ab[9] += 20.0
    b = rng.normal(size=4 * n)
    return mat, P, Sw, Sh, T, eps, u, ab, b


def _cases(mod, n):
    mat, P, Sw, Sh, T, eps, u, ab, b = _inputs(n)
    src, bnd = np.empty((n, 4)), np.empty((2, 4))
    dz = 1.0 / n
    return {
        "flow_storage": lambda: mod.flow_storage(P, Sw, Sh, T, eps, mat),
        "flow_rhs": lambda: mod.flow_rhs(P, Sw, Sh, T, eps, mat, dz, 9.81, 6e6, float("nan"), 283.15, src, bnd),
        "geomech_residual": lambda: mod.geomech_residual(u, P, Sw, Sh, mat, dz, 9.81, 1e6, 8e6),
        "banded_lu_solve(9,9)": lambda: mod.banded_lu_solve(ab, 9, 9, b),
    }


def _median(fn, repeat):
    return float(np.median(timeit.repeat(fn, number=1, repeat=repeat)))


def _march(t_end, pure):
    env = dict(os.environ)
    if pure:
        env["MRTDAE_PURE_PYTHON"] = "1"
    else:
        env.pop("MRTDAE_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", MARCH.format(t_end=t_end)], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cells", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--march", action="store_true", help="also time a 1800 s fully implicit march")
    args = ap.parse_args(argv)

    if kernels.compiled_kernels is None:
        print("compiled kernels not built; only the python backend is available")
        return 1
    py_cases = _cases(kernels.python_kernels, args.cells)
    cy_cases = _cases(kernels.compiled_kernels, args.cells)
    print(f"{'kernel':<22}{'python [us]':>14}{'cython [us]':>14}{'ratio':>8}")
    for name in py_cases:
        tp = _median(py_cases[name], args.repeat)
        tc = _median(cy_cases[name], args.repeat)
        print(f"{name:<22}{tp * 1e6:>14.1f}{tc * 1e6:>14.1f}{tp / tc:>8.1f}")
    if args.march:
        tp, tc = _march(1800.0, True), _march(1800.0, False)
        print(f"{'march 1800 s':<22}{tp * 1e6:>14.0f}{tc * 1e6:>14.0f}{tp / tc:>8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
