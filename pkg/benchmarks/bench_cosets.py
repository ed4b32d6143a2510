"""Compare the compiled coset-enumeration kernel against the pure-Python one.

Usage: python benchmarks/bench_cosets.py [--limit N] [--base B]

Runs the full-orbit scan over all odd composite moduli coprime to the base
below the limit, once per backend, and reports throughput. Both backends
must produce identical (r, order) streams; the script verifies that too.
"""

import argparse
import time
from math import gcd

from primover import _accel
from primover._coset_pure import coset_scan as pure_scan
from primover.core_arith import smallest_factor_table


def run(scan, base, moduli):
    t0 = time.perf_counter()
    out = [scan(base, n) for n in moduli]
    return out, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=30000)
    ap.add_argument("--base", type=int, default=2)
    args = ap.parse_args()

    spf = smallest_factor_table(max(args.limit, 10))
    moduli = [n for n in range(3, args.limit, 2)
              if gcd(args.base, n) == 1 and int(spf[n]) != n]
    steps = sum(n - 1 for n in moduli)  # every orbit element is visited once
    print(f"base {args.base}, {len(moduli)} odd composite moduli < {args.limit}, "
          f"{steps:,} inner-loop steps per backend")

    pure_out, pure_t = run(pure_scan, args.base, moduli)
    print(f"pure python : {pure_t:8.3f}s  ({steps / pure_t / 1e6:7.1f} Msteps/s)")

    if _accel.BACKEND != "compiled":
        print("compiled    : unavailable (pure-python fallback active)")
        return

    from primover._cosetscan import coset_scan as kernel_scan
    kern_out, kern_t = run(kernel_scan, args.base, moduli)
    print(f"compiled    : {kern_t:8.3f}s  ({steps / kern_t / 1e6:7.1f} Msteps/s)")
    print(f"speedup     : {pure_t / kern_t:8.2f}x")

    if kern_out != pure_out:
        raise SystemExit("backend outputs differ!")
    print("outputs identical across backends")


if __name__ == "__main__":
    main()
