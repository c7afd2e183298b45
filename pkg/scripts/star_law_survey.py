"""Tally how closed-star intersections compare with the star of the union.

For every pair and triple of simplices in a seeded corpus, classify the
intersection of their closed stars as: equal to Star(union), strictly larger
than Star(union), or nonempty although the union is not a simplex.  Prints
the smallest complex of each failing kind.

Usage: python scripts/star_law_survey.py [--complexes 100] [--seed 20240611]
"""

import argparse
import random
from collections import Counter
from itertools import combinations

from simplicial_torsion.complex import closed_star, intersect, open_star
from simplicial_torsion.corpus import random_complex
from simplicial_torsion.formats import format_scx


def survey(n_complexes: int, seed: int):
    rng = random.Random(seed)
    tally = Counter()
    smallest = {}
    for _ in range(n_complexes):
        K = random_complex(rng, rng.randint(3, 9), rng.randint(2, 5), 3)
        simplices = sorted(K.simplices)
        stars = {s: closed_star(K, s) for s in simplices}
        opens = {s: open_star(K, s) for s in simplices}
        for r in (2, 3):
            for group in combinations(simplices, r):
                common = intersect(*(stars[s] for s in group))
                top = tuple(sorted(set().union(*group)))
                if top in K.simplices:
                    kind = "equal" if common == stars[top] else "larger"
                    open_ok = frozenset.intersection(*(opens[s] for s in group)) == opens[top]
                else:
                    kind = "empty" if common.is_empty() else "nonempty"
                    open_ok = not frozenset.intersection(*(opens[s] for s in group))
                tally[kind] += 1
                tally["open law holds"] += open_ok
                if kind in ("larger", "nonempty") and (kind not in smallest or len(K) < len(smallest[kind][0])):
                    smallest[kind] = (K, group)
    return tally, smallest


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--complexes", type=int, default=100)
    p.add_argument("--seed", type=int, default=20240611)
    args = p.parse_args()
    tally, smallest = survey(args.complexes, args.seed)
    total = sum(tally[k] for k in ("equal", "larger", "empty", "nonempty"))
    for kind in ("equal", "larger", "empty", "nonempty", "open law holds"):
        print(f"{kind:>15}: {tally[kind]:>7} / {total}")
    for kind, (K, group) in sorted(smallest.items()):
        print(f"\nsmallest '{kind}' case, simplices {list(group)} in")
        print(format_scx(K), end="")


if __name__ == "__main__":
    main()
