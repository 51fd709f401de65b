"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--n 9]
"""
import argparse
import timeit

from cycledeg import _pykernels

try:
    from cycledeg import _ckernels
except ImportError:
    _ckernels = None

SSYT_CASES = [((2, 1, 2, 3, 1, 3), 6, 6), ((1,) * 10, 6, 4), ((4, 4, 4), 6, 6)]


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    print(f"  {label:<8} {best * 1e3:10.2f} ms")
    return best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=9, help="cycle length for the two-colored count")
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled extension not built; timing the fallback only")

    for r in (1, (args.n - 3) // 2):
        print(f"count_two_colored_paths(n={args.n}, r={r})")
        times = {name: bench(name, lambda m=mod: m.count_two_colored_paths(args.n, r), args.repeat) for name, mod in backends}
        values = {mod.count_two_colored_paths(args.n, r) for _, mod in backends}
        assert len(values) == 1, values
        if len(times) == 2:
            print(f"  speedup  {times['python'] / times['cython']:10.1f}x")

    print(f"count_ssyt_two_row over {len(SSYT_CASES)} shapes")
    run = lambda mod: [mod.count_ssyt_two_row(*c) for c in SSYT_CASES]
    times = {name: bench(name, lambda m=mod: run(m), args.repeat) for name, mod in backends}
    assert len({tuple(run(mod)) for _, mod in backends}) == 1
    if len(times) == 2:
        print(f"  speedup  {times['python'] / times['cython']:10.1f}x")


if __name__ == "__main__":
    main()
