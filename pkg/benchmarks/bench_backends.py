"""Timing comparison of the pure-Python and compiled kernel backends.

Run with ``python benchmarks/bench_backends.py``. Each workload mirrors a
hot path of the verification suite: repeated 8x8 Hermitian diagonalization
(MUB construction and entropies), basis-transform statistics (the coherence
sweeps), Gram matrices of the 64-state set (overlap scans) and the sphere
grid scan (the qubit solver).
"""

import random
import time

from equicoh._kernels import compiled, pure


def _hermitian_flat(d, rng):
    raw = [[complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(d)] for _ in range(d)]
    return [(raw[i][j] + raw[j][i].conjugate()) / 2 for i in range(d) for j in range(d)]


def _kets_flat(count, d, rng):
    out = []
    for _ in range(count):
        amps = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(d)]
        norm = sum(abs(a) ** 2 for a in amps) ** 0.5
        out.extend(a / norm for a in amps)
    return out


def make_workloads():
    rng = random.Random(7)
    h = _hermitian_flat(8, rng)
    rho = _kets_flat(1, 8, rng)
    rho_mat = [rho[i] * rho[j].conjugate() for i in range(8) for j in range(8)]
    basis = _kets_flat(8, 8, rng)
    kets64 = _kets_flat(64, 8, rng)
    return [
        ("eigh 8x8 x200", lambda k: [k.eigh_jacobi(h, 8, 1e-14, 100) for _ in range(200)]),
        ("transform_stats x2000", lambda k: [k.transform_stats(rho_mat, basis, 8) for _ in range(2000)]),
        ("gram 64x64 x50", lambda k: [k.gram(kets64, 64, kets64, 64, 8) for _ in range(50)]),
        ("quad_forms 64 kets x500", lambda k: [k.quad_forms(rho_mat, kets64, 64, 8) for _ in range(500)]),
        ("fib scan 1e5 x3", lambda k: [k.fib_candidates(100_000, 0.08) for _ in range(3)]),
    ]


def main():
    backends = [("pure", pure)]
    if compiled is not None:
        backends.append(("compiled", compiled))
    else:
        print("compiled backend not built; timing pure only")
    print(f"{'workload':<28}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, work in make_workloads():
        times = []
        for _, backend in backends:
            work(backend)  # warm-up
            t0 = time.perf_counter()
            work(backend)
            times.append(time.perf_counter() - t0)
        row = f"{label:<28}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
