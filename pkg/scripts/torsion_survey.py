"""Torsion classes along random expansion chains, and of unit-scaled complexes.

The first table should contain only trivial classes: expansions and their
composites are simple.  The second shows that rescaling one basis element of
an acyclic based complex by a unit moves the class by that unit or its
inverse, depending on the parity of the degree.

Usage: python scripts/torsion_survey.py [--chains 20] [--steps 3] [--seed 7]
"""

import argparse
import random
from collections import Counter
from functools import reduce

from simplicial_torsion.corpus import random_connected_complex, random_expansion_chain, random_labeling
from simplicial_torsion.groupring import GroupRingElement, WhiteheadClass, is_unit, trivial_units
from simplicial_torsion.simpmap import compose
from simplicial_torsion.torsion import torsion_of_based_acyclic, two_term_complex, whitehead_torsion


def small_units(n: int, spread: int = 1):
    """Nontrivial units with coefficients in ``[-spread, spread]``, up to trivial units."""
    from itertools import product

    seen, out = set(), []
    trivial = trivial_units(n)
    for coeffs in product(range(-spread, spread + 1), repeat=n):
        u = GroupRingElement(n, coeffs)
        if not u or not is_unit(u) or u in trivial:
            continue
        c = WhiteheadClass(u)
        if c not in seen:
            seen.add(c)
            out.append(u)
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--chains", type=int, default=20)
    p.add_argument("--steps", type=int, default=3)
    p.add_argument("--seed", type=int, default=7)
    args = p.parse_args()
    rng = random.Random(args.seed)
    classes = Counter()
    for _ in range(args.chains):
        K = random_connected_complex(rng, 5, 3, 2)
        L, incs = random_expansion_chain(rng, K, args.steps)
        n = rng.randint(1, 6)
        f = reduce(compose, incs)
        classes[str(whitehead_torsion(f, random_labeling(rng, L, n)))] += 1
    print("expansion chains:")
    for c, k in classes.items():
        print(f"  {c}: {k}")
    print("two-term complexes, degree 1 and degree 2:")
    for n in (5, 7, 8, 10):
        for u in small_units(n):
            odd = torsion_of_based_acyclic(two_term_complex(u))
            even = torsion_of_based_acyclic(two_term_complex(u, top=2))
            print(f"  n={n:>2}  u = {u}  ->  {odd.canonical()} | {even.canonical()}")


if __name__ == "__main__":
    main()
