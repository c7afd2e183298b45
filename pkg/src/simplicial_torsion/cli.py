"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 the map is not a homology equivalence
with the requested coefficients.  ``--json`` prints a versioned report
(``schema: 1``) instead of the text summary.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass, field

from . import __version__
from .collapse import Collapsibility, free_faces, greedy_collapse, is_collapsible
from .complex import euler_characteristic
from .errors import InternalInconsistency, NotAPiHomologyEquivalence, TorsionError
from .formats import load_scx, load_slab, load_smap, read_text
from .groupring import render
from .homology import chain_complex, homology, reduced_homology
from .localprofile import check_composition_formula, check_sum_formula, cover_report, is_locally_acyclic, local_profile
from .torsion import whitehead_torsion

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 2, 3


@dataclass
class Report:
    command: str
    inputs: dict
    result: dict
    warnings: list = field(default_factory=list)
    schema: int = SCHEMA

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(data["command"], data["inputs"], data["result"], data.get("warnings", []), data["schema"])


def _plain(obj):
    """Normalize to what JSON can carry exactly (string keys, lists)."""
    return json.loads(json.dumps(obj))


def _digest(path) -> str:
    return "sha256:" + hashlib.sha256(read_text(path).encode("utf-8")).hexdigest()[:16]


def _inputs(**paths) -> dict:
    return {k: {"path": str(p), "digest": _digest(p)} for k, p in paths.items() if p is not None}


def _braces(simplex) -> str:
    return "{" + ",".join(map(str, simplex)) + "}"


def _hline(groups, top=None) -> str:
    degrees = [i for i in sorted(groups) if i >= 0 and (top is None or i <= top)]
    return " ".join(f"H{i}={groups[i]}" for i in degrees)


# subcommands return (report, text lines)

def cmd_homology(args):
    K = load_scx(args.complex)
    H = homology(chain_complex(K)) if not K.is_empty() else {}
    R = reduced_homology(K)
    chi = euler_characteristic(K)
    top = max(K.dimension, 0)
    text = [f"{_hline(H, top)}, chi={chi}" if H else f"empty complex, chi={chi}",
            f"reduced: {' '.join(f'H~{i}={R[i]}' for i in sorted(R))}"]
    result = {
        "homology": {i: str(H[i]) for i in sorted(H) if 0 <= i <= top},
        "reduced_homology": {i: str(R[i]) for i in sorted(R)},
        "euler_characteristic": chi,
        "f_vector": list(K.f_vector()),
    }
    return Report("homology", _inputs(complex=args.complex), _plain(result)), text


def _load_map(args):
    X = load_scx(args.target)
    Y = load_scx(args.source)
    f = load_smap(args.map, Y, X)
    return X, Y, f


def cmd_fibers(args):
    X, Y, f = _load_map(args)
    prof = local_profile(f)
    verdict = is_locally_acyclic(f)
    text = ["simplex\tfiber\tfiber H~\tverdict"]
    for e in prof:
        nontriv = {i: H for i, H in e.fiber_homology.items() if not H.is_trivial()}
        fh = " ".join(f"H~{i}={H}" for i, H in sorted(nontriv.items())) or "0"
        text.append(f"{_braces(e.simplex)}\t{e.fiber_size}\t{fh}\t{'ok' if e.trivial else 'FAIL'}")
    if verdict.ok:
        text.append("LOCALLY-ACYCLIC")
    else:
        text.append(f"FAIL at {_braces(verdict.witness)}")
    result = {
        "entries": [e.to_dict() for e in prof],
        "locally_acyclic": verdict.ok,
        "witness": list(verdict.witness) if verdict.witness else None,
    }
    return Report("fibers", _inputs(target=args.target, source=args.source, map=args.map), _plain(result)), text


def cmd_torsion(args):
    X, Y, f = _load_map(args)
    if args.labels is not None:
        w = load_slab(args.labels, X)
        tau = whitehead_torsion(f, w)
        n = w.n
    else:
        n = args.n
        tau = whitehead_torsion(f, None, n)
    verdict = "TRIVIAL" if tau.is_trivial() else "NONTRIVIAL"
    rep = render(tau.canonical(), with_modulus=False)
    mod = "t - 1" if n == 1 else f"t^{n} - 1"
    text = [f"class = {rep} ({verdict})", f"coefficients Z[Z/{n}], modulo t^n = 1 up to +-t^k"]
    result = {"n": n, "class": rep, "modulus": mod, "trivial": tau.is_trivial(),
              "coefficients": list(tau.canonical().coeffs)}
    inputs = _inputs(target=args.target, source=args.source, map=args.map, labels=args.labels)
    return Report("torsion", inputs, _plain(result)), text


def cmd_collapse(args):
    K = load_scx(args.complex)
    final, seq = greedy_collapse(K)
    result = {"greedy_moves": len(seq), "greedy_remaining": len(final),
              "greedy_sequence": [[list(s), list(t)] for s, t in seq]}
    if not free_faces(K):
        text = ["no free faces"]
    elif len(final) == 1:
        text = [f"collapsed to point in {len(seq)} moves"]
    else:
        text = [f"stuck after {len(seq)} moves with {len(final)} simplices left"]
    if args.budget is not None:
        res = is_collapsible(K, args.budget)
        result["search"] = {"verdict": res.verdict.value, "nodes": res.nodes}
        if res.verdict is Collapsibility.YES:
            text.append(f"COLLAPSIBLE, {len(res.sequence)} moves")
            text.extend(res.sequence.dumps().splitlines())
            result["search"]["sequence"] = [[list(s), list(t)] for s, t in res.sequence]
        elif res.verdict is Collapsibility.NO:
            text.append("NOT COLLAPSIBLE")
        else:
            text.append(f"BUDGET EXHAUSTED after {res.nodes} nodes")
    return Report("collapse", _inputs(complex=args.complex), _plain(result)), text


def cmd_cover(args):
    K = load_scx(args.complex)
    rep = cover_report(K, "dual_blocks" if args.dual_blocks else "vertices")
    text = []
    for c, p, ok in zip(rep.centers, rep.cover.pieces, rep.piece_acyclic):
        text.append(f"star{_braces(c)}: {len(p)} simplices, {'acyclic' if ok else 'NOT acyclic'}")
    for J, ok in sorted(rep.intersections.items()):
        if len(J) == 2:
            names = " & ".join(_braces(rep.centers[j]) for j in J)
            text.append(f"{names}: {'acyclic' if ok else 'NOT acyclic'}")
    text.append("nerve: " + " ".join(_braces(s) for s in sorted(rep.nerve.maximal_simplices)))
    text.append("homology match" if rep.homology_match else "homology MISMATCH")
    if not rep.acyclic_cover:
        text.append("warning: some intersection is not acyclic, the nerve theorem does not apply")
    warnings = [] if rep.acyclic_cover else ["cover has non-acyclic intersections"]
    return Report("cover", _inputs(complex=args.complex), _plain(rep.to_dict()), warnings), text


def _exact_lines(report):
    lines = [f"degree {d.degree}: {'exact' if d.exact else 'NOT exact'}" for d in report.degrees]
    lines.append("euler identity " + ("holds" if report.euler_ok else "FAILS") + f" {report.euler}")
    lines.append("OK" if report.ok else "FAIL")
    return lines


def cmd_check(args):
    X, Y, f = _load_map(args)
    inputs = _inputs(target=args.target, source=args.source, map=args.map)
    if args.cover:
        A, B = (load_scx(p) for p in args.cover)
        rep = check_sum_formula(f, A, B)
        inputs.update(_inputs(cover_a=args.cover[0], cover_b=args.cover[1]))
        kind = "sum"
    else:
        Zpath, gpath = args.compose
        Z = load_scx(Zpath)
        g = load_smap(gpath, Z, Y)
        rep = check_composition_formula(g, f)
        inputs.update(_inputs(compose_source=Zpath, compose_map=gpath))
        kind = "composition"
    result = {"formula": kind, **rep.to_dict()}
    return Report("check", inputs, _plain(result)), [f"{kind} formula"] + _exact_lines(rep)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simptors", description="Simple-homotopy invariants of simplicial complexes and maps.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        q = sub.add_parser(name, help=help)
        q.add_argument("--json", action="store_true", help="print a structured report")
        q.set_defaults(func=func)
        return q

    def map_args(q):
        q.add_argument("target", help="SCX file of the target complex X")
        q.add_argument("source", help="SCX file of the source complex Y")
        q.add_argument("map", help="SMAP file with lines 'y -> x'")

    q = add("homology", cmd_homology, "integral homology and Euler characteristic")
    q.add_argument("complex")

    q = add("fibers", cmd_fibers, "fiberwise acyclicity profile of a map")
    map_args(q)

    q = add("torsion", cmd_torsion, "Whitehead torsion with Z[Z/n] coefficients")
    map_args(q)
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("labels", nargs="?", help="SLAB file with an edge labeling of the target")
    g.add_argument("--trivial-pi", action="store_true", help="use the zero labeling")
    q.add_argument("--n", type=int, default=1, help="modulus for --trivial-pi (default 1)")

    q = add("collapse", cmd_collapse, "greedy collapse, optionally an exhaustive search")
    q.add_argument("complex")
    q.add_argument("--budget", type=int, help="node budget for the exhaustive search")

    q = add("cover", cmd_cover, "closed-star cover, intersections and nerve")
    q.add_argument("complex")
    q.add_argument("--dual-blocks", action="store_true",
                   help="cover the barycentric subdivision by stars of the original vertices")

    q = add("check", cmd_check, "sum or composition formula for mapping cones")
    map_args(q)
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--cover", nargs=2, metavar=("A", "B"), help="SCX files of two subcomplexes covering the target")
    g.add_argument("--compose", nargs=2, metavar=("Z", "G"), help="SCX of Z and SMAP of g: Z -> Y")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "torsion" and args.n < 1:
        parser.error("--n must be at least 1")
    if args.command == "collapse" and args.budget is not None and args.budget < 1:
        parser.error("--budget must be at least 1")
    try:
        report, text = args.func(args)
    except NotAPiHomologyEquivalence as exc:
        print(f"error: not a homology equivalence: {exc}", file=sys.stderr)
        return EXIT_MATH
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except TorsionError as exc:
        simplex = getattr(exc, "simplex", None)
        extra = f" (simplex {_braces(simplex)})" if simplex else ""
        print(f"error: {exc}{extra}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(text))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
