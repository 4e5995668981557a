"""Measure stepping throughput against batch width.

Steps-per-second grows with the number of parallel environments up to the
machine's knee because the whole pipeline (physics, entity updates, frame
compositing) is vectorized across the batch. The hard configuration turns
every visual subsystem on and is far slower at equal width.
"""

from axisplat.cli import _load, measure_throughput

easy = _load("easy")
hard = _load("hard")

print(f"{'n_envs':>8} {'easy steps/s':>14}")
for p in range(0, 11, 2):
    n = 2**p
    rate, wall = measure_throughput(easy, n, steps=40, repeats=1)
    print(f"{n:>8} {rate:>14,.0f}")

rate_easy, _ = measure_throughput(easy, 16, steps=20, repeats=1)
rate_hard, _ = measure_throughput(hard, 16, steps=10, repeats=1)
print(f"\nat 16 envs: easy {rate_easy:,.0f} steps/s vs hard {rate_hard:,.0f} steps/s")
print("(hard runs the full filter stack, five point lights, NPCs, sticky")
print("NPCs, and distractors per frame)")
