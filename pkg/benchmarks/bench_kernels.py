"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--quick]

Both implementations live side by side in ``labansym.kernels.IMPLEMENTATIONS``,
so one process compares them directly; ``LABANSYM_BACKEND`` only picks which
pair the library itself uses.  The first numba call per kernel is timed
separately as ``jit`` (compile or on-disk cache load).
"""

import argparse
import timeit

import numpy as np

from labansym import kernels
from labansym import polyhedra as ph


def _sym_gens(n):
    cycle = np.roll(np.arange(n), -1)
    swap = np.arange(n)
    swap[[0, 1]] = [1, 0]
    return np.array([cycle, swap], dtype=np.int64)


def _small_gens(elements):
    """Greedy generating set: keep an element only if it grows the closure."""
    gens, order = [], 1
    for row in elements[1:]:
        trial = kernels.closure_np(np.array(gens + [row]))
        if len(trial) > order:
            gens.append(row)
            order = len(trial)
        if order == len(elements):
            break
    return np.array(gens, dtype=np.int64)


def workloads(quick):
    ico = ph.build("icosahedron")
    full = ph.full_symmetry_group(ico).array
    gens = _small_gens(full)
    adj = np.zeros((ico.n, ico.n), dtype=np.bool_)
    for a, b in ico.edges:
        adj[a, b] = adj[b, a] = True
    sym = 6 if quick else 7
    sym_elems = kernels.closure_np(_sym_gens(sym))
    rng = np.random.default_rng(1)
    cloud = rng.normal(size=(400, 3))
    shuffled = cloud[rng.permutation(len(cloud))]  # every point matches exactly once
    return [
        ("closure", f"icosahedral, {len(gens)} gens", (gens,)),
        ("closure", f"S{sym}, order {len(sym_elems)}", (_sym_gens(sym),)),
        ("cayley_table", f"icosahedral, {len(full)}x{len(full)}", (full,)),
        ("cayley_table", f"S5, 120x120", (kernels.closure_np(_sym_gens(5)),)),
        ("automorphisms", "icosahedron graph", (adj,)),
        ("orbit_labels", f"S{sym}", (sym_elems,)),
        ("match_points", "400 shuffled points", (shuffled, cloud, 1e-9)),
    ]


def bench(fn, args, repeat):
    t = timeit.Timer(lambda: fn(*args))
    number, _ = t.autorange()
    return min(t.repeat(repeat, number)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true", help="smaller symmetric-group cases")
    args = ap.parse_args()

    impls = kernels.IMPLEMENTATIONS
    if "numba" not in impls:
        raise SystemExit("numba is not importable; nothing to compare")
    print(f"{'kernel':<14}{'case':<28}{'jit':>9}{'numba':>12}{'numpy':>12}{'speedup':>9}")
    for name, case, fargs in workloads(args.quick):
        nb, npy = impls["numba"][name], impls["numpy"][name]
        start = timeit.default_timer()
        got = nb(*fargs)
        jit = timeit.default_timer() - start
        if not np.array_equal(got, npy(*fargs)):
            raise SystemExit(f"{name} ({case}): backends disagree")
        t_nb, t_np = bench(nb, fargs, args.repeat), bench(npy, fargs, args.repeat)
        print(f"{name:<14}{case:<28}{jit:>8.3f}s{t_nb * 1e3:>10.3f}ms{t_np * 1e3:>10.3f}ms"
              f"{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
