"""Compare the accelerated kernels against the plain-numpy fallback.

Run twice to see both paths:

    python benchmarks/bench_kernels.py
    PGCONES_NO_NUMBA=1 python benchmarks/bench_kernels.py
"""

import time

from pgcones import field_new, geometry_new, is_blocking, spectrum
from pgcones.kernels import USE_NUMBA
from pgcones.objects import hyperoval_cone, maxarc_cone, unital_cone


def timed(label, fn, repeat=3):
    fn()  # warm-up (includes any one-time compilation)
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    print(f"  {label:<48} {min(times) * 1000:9.1f} ms")


def main():
    print(f"kernel path: {'numba' if USE_NUMBA else 'numpy'}")
    gf4 = field_new(2, 2)

    pg44 = geometry_new(gf4, 4)
    K44 = unital_cone(pg44)
    timed("hyperplane spectrum, unital cone PG(4,4)", lambda: spectrum(K44, 3))
    timed("plane spectrum, unital cone PG(4,4)", lambda: spectrum(K44, 2))

    pg54 = geometry_new(gf4, 5)
    K54 = maxarc_cone(pg54, 2)
    timed("hyperplane spectrum, max-arc cone PG(5,4)", lambda: spectrum(K54, 4))
    timed("plane blocking check PG(5,4) (376,805 planes)",
          lambda: is_blocking(K54, 2))
    timed("plane blocking check PG(5,4), 4 workers",
          lambda: is_blocking(K54, 2, workers=4))

    pg34 = geometry_new(gf4, 3)
    K34 = hyperoval_cone(pg34)
    timed("line spectrum, hyperoval cone PG(3,4)", lambda: spectrum(K34, 1))


if __name__ == "__main__":
    main()
