"""Benchmark the compiled kernels against the pure-Python fallback.

Each workload runs the same inputs through both kernel modules, checks
the outputs are identical, and reports wall times.  Run as

    python benchmarks/bench_backends.py [--full]

--full bumps the sizes towards the interesting range (slower).
"""

import argparse
import time

from sqfcount import _kernels_py as pure
from sqfcount.counting import _build_automaton_for, _sink_id

try:
    from sqfcount import _kernels as compiled
except ImportError:
    compiled = None


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return time.perf_counter() - t0, out


def workloads(full):
    n_dp = 60 if full else 45
    bound = n_dp // 3
    auto, _ = _build_automaton_for(bound)
    trans, states, sink = auto.transitions, auto.state_count, _sink_id(auto)
    rows = pure.rejected_rows(trans, states, sink, n_dp)

    big_auto, _ = _build_automaton_for(n_dp // 2)

    yield (f"forward_masses (M_{n_dp // 2}, {n_dp} rows)",
           lambda mod: mod.forward_masses(
               big_auto.transitions, big_auto.state_count,
               _sink_id(big_auto), n_dp))
    yield (f"rejected_rows (M_{bound}, {n_dp} rows)",
           lambda mod: mod.rejected_rows(trans, states, sink, n_dp))
    yield (f"correction_sums (n={n_dp})",
           lambda mod: mod.correction_sums(
               trans, states, sink, n_dp, bound + 1, n_dp // 2, rows))

    overlap_max = 160 if full else 100
    yield (f"overlap_scan (3..{overlap_max})",
           lambda mod: mod.overlap_scan(3, overlap_max, False))

    key_max = 18 if full else 15
    yield (f"key_lemma_scan (1..{key_max})",
           lambda mod: [mod.key_lemma_scan(length)
                        for length in range(1, key_max + 1)])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="larger workload sizes")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernels not available; nothing to compare")
        return

    header = f"{'workload':42} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, run in workloads(args.full):
        t_pure, out_pure = timed(run, pure)
        t_comp, out_comp = timed(run, compiled)
        assert out_pure == out_comp, f"backend mismatch in {name}"
        speedup = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"{name:42} {t_pure:10.4f} {t_comp:11.4f} {speedup:7.1f}x")
    print("all outputs identical across backends")


if __name__ == "__main__":
    main()
