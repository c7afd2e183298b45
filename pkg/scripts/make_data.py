"""Write the example input files under data/.

Usage: python scripts/make_data.py [outdir]
"""

import sys
from pathlib import Path

from simplicial_torsion.complex import close_downward, full_simplex, simplex_boundary
from simplicial_torsion.corpus import disc8, rp2
from simplicial_torsion.cover import CyclicCoverLabeling
from simplicial_torsion.formats import format_scx, format_slab, format_smap
from simplicial_torsion.simpmap import SimplicialMap, last_vertex_map


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    kite = close_downward([[0, 1, 2], [2, 3]])
    circle = simplex_boundary(range(3))
    edge = full_simplex([10, 11])
    complexes = {
        "circle": circle,
        "kite": kite,
        "simplex3": full_simplex(range(4)),
        "sphere2": simplex_boundary(range(4)),
        "rp2": rp2(),
        "disc8": disc8(),
        "edge": edge,
        "point": full_simplex([0]),
    }
    for name, K in complexes.items():
        (out / f"{name}.scx").write_text(format_scx(K))

    lv = last_vertex_map(kite)
    (out / "sd_kite.scx").write_text(format_scx(lv.source))
    (out / "sd_kite_last_vertex.smap").write_text(format_smap(lv))
    (out / "sd_kite_half_a.scx").write_text(format_scx(close_downward([[0, 1, 2]])))
    (out / "sd_kite_half_b.scx").write_text(format_scx(close_downward([[2, 3]])))

    squash = SimplicialMap(circle, edge, {0: 10, 1: 11, 2: 11})
    (out / "squash.smap").write_text(format_smap(squash))

    # a circle with holonomy 1 in Z/5, and its identity map
    w = CyclicCoverLabeling.from_oriented(circle, 5, {(0, 1): 1})
    (out / "circle_mod5.slab").write_text(format_slab(w))
    (out / "circle_identity.smap").write_text("0 -> 0\n1 -> 1\n2 -> 2\n")

    # g: sd(sd kite) -> sd kite, composable with the last-vertex map above
    lv2 = last_vertex_map(lv.source)
    (out / "sd2_kite.scx").write_text(format_scx(lv2.source))
    (out / "sd2_kite_last_vertex.smap").write_text(format_smap(lv2))


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data")
