#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback on the
three workloads that dominate the pipeline: the dimension-4 algebra
enumeration, the heaviest coproduct solve (algebra P), and a full R-matrix
scan.  Also cross-checks that both backends return identical results.

Run:  python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

from f2hopf.catalog import _algebra_equations, catalog
from f2hopf.coproducts import (
    _coproduct_equations,
    _eliminate,
    _substitute,
    enumerate_counits,
)
from f2hopf.kernels import backends
from f2hopf.qtri import _equations as qt_equations


def workload_algebras():
    return 36, _algebra_equations(4)


def workload_coproducts():
    a = catalog(4)["P"].representative
    jobs = []
    for eps in enumerate_counits(a):
        linear, quadratic = _coproduct_equations(a, eps)
        elim = _eliminate(48, linear)
        if elim is None:
            continue
        free_vars, subst = elim
        reduced = _substitute(quadratic, subst)
        if reduced is None:
            continue
        jobs.append((len(free_vars), reduced))
    return jobs


def workload_qt():
    from f2hopf.golden import HOPF_FIXTURES_DIM4

    jobs = []
    for fx in HOPF_FIXTURES_DIM4:
        jobs.append((16, qt_equations(fx.bialgebra())))
    return jobs


def timed(solve, jobs):
    t0 = time.perf_counter()
    results = [tuple(solve(nvars, eqs)) for nvars, eqs in jobs]
    return time.perf_counter() - t0, results


def main():
    impls = backends()
    print(f"available backends: {', '.join(impls)}")
    suites = {
        "algebra enumeration n=4": [workload_algebras()],
        "coproduct solve, algebra P": workload_coproducts(),
        "R-matrix scan, 20 Hopf classes": workload_qt(),
    }
    for name, jobs in suites.items():
        row = [f"{name:32s}"]
        reference = None
        for backend, impl in impls.items():
            elapsed, results = timed(impl.solve_quadratic, jobs)
            if reference is None:
                reference = results
            elif results != reference:
                raise SystemExit(f"backend {backend} disagrees on {name}")
            row.append(f"{backend}: {elapsed:8.3f}s")
        sols = sum(len(r) for r in reference)
        row.append(f"({sols} solutions)")
        print("  ".join(row))


if __name__ == "__main__":
    main()
