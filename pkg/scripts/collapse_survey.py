"""Greedy collapse against exhaustive search on random contractible-looking complexes.

Usage: python scripts/collapse_survey.py [--complexes 200] [--budget 20000] [--seed 1]
"""

import argparse
import random
from collections import Counter

from simplicial_torsion.collapse import Collapsibility, greedy_collapse, is_collapsible
from simplicial_torsion.corpus import random_connected_complex
from simplicial_torsion.homology import is_acyclic


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--complexes", type=int, default=200)
    p.add_argument("--budget", type=int, default=20_000)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args()
    rng = random.Random(args.seed)
    tally = Counter()
    for _ in range(args.complexes):
        K = random_connected_complex(rng, rng.randint(4, 8), rng.randint(3, 7), 3)
        if not is_acyclic(K):
            tally["not acyclic"] += 1
            continue
        final, _ = greedy_collapse(K)
        greedy = len(final) == 1
        res = is_collapsible(K, args.budget)
        tally[(greedy, res.verdict.value)] += 1
    print(f"{'not acyclic (skipped)':>38}: {tally.pop('not acyclic', 0)}")
    for (greedy, verdict), count in sorted(tally.items()):
        print(f"greedy {'point' if greedy else 'stuck':>5}, search {verdict:>17}: {count}")


if __name__ == "__main__":
    main()
