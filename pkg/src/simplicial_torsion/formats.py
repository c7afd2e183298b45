"""Plain-text formats.

SCX   one maximal simplex per line, whitespace separated vertex ids.
SMAP  ``y -> x`` per line; every source vertex exactly once.
SLAB  first line ``mod n``, then ``u v g`` meaning omega(u, v) = g mod n.
Collapse sequences: ``sigma ; tau`` per line.

``#`` starts a comment in all of them.  Errors carry 1-based line numbers.
"""

from __future__ import annotations

from pathlib import Path

from .complex import SimplicialComplex, as_simplex, close_downward
from .cover import CyclicCoverLabeling, validate_labeling
from .errors import InvalidSimplex, NotACocycle, ParseError
from .simpmap import SimplicialMap, simplicial_map


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(line: str, no: int, path) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integer vertex ids, got {line!r}", path=path, line=no) from None


def parse_scx(text: str, path=None) -> SimplicialComplex:
    simplices = []
    for no, line in _lines(text):
        vs = _ints(line, no, path)
        if len(set(vs)) != len(vs):
            raise ParseError(f"repeated vertex in {line!r}", path=path, line=no)
        try:
            simplices.append(as_simplex(vs))
        except InvalidSimplex as exc:
            raise ParseError(str(exc), path=path, line=no) from None
    return close_downward(simplices)


def format_scx(K: SimplicialComplex) -> str:
    return "".join(" ".join(map(str, s)) + "\n" for s in sorted(K.maximal_simplices))


def parse_smap(text: str, source: SimplicialComplex, target: SimplicialComplex, path=None) -> SimplicialMap:
    vm = {}
    for no, line in _lines(text):
        parts = line.split("->")
        if len(parts) != 2:
            raise ParseError(f"expected 'y -> x', got {line!r}", path=path, line=no)
        left, right = (_ints(p, no, path) for p in parts)
        if len(left) != 1 or len(right) != 1:
            raise ParseError("expected one vertex on each side", path=path, line=no)
        y, x = left[0], right[0]
        if y in vm:
            raise ParseError(f"vertex {y} mapped twice", path=path, line=no)
        vm[y] = x
    missing = sorted(set(source.vertices) - set(vm))
    if missing:
        raise ParseError(f"source vertex {missing[0]} is not mapped", path=path)
    extra = sorted(set(vm) - set(source.vertices))
    if extra:
        raise ParseError(f"vertex {extra[0]} is not a source vertex", path=path)
    return simplicial_map(source, target, vm)


def format_smap(f: SimplicialMap) -> str:
    return "".join(f"{y} -> {f.vertex_map[y]}\n" for y in sorted(f.vertex_map))


def parse_slab(text: str, K: SimplicialComplex, path=None) -> CyclicCoverLabeling:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty labeling file, expected 'mod n'", path=path)
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "mod" or not parts[1].lstrip("-").isdigit() or int(parts[1]) < 1:
        raise ParseError("expected 'mod n' with n >= 1", path=path, line=no)
    n = int(parts[1])
    values = {}
    for no, line in lines[1:]:
        vals = _ints(line, no, path)
        if len(vals) != 3:
            raise ParseError("expected 'u v g'", path=path, line=no)
        u, v, g = vals
        if (min(u, v), max(u, v)) not in K.simplices:
            raise ParseError(f"({u}, {v}) is not an edge", path=path, line=no)
        values[(u, v)] = g
    w = CyclicCoverLabeling.from_oriented(K, n, values)
    bad = validate_labeling(w)
    if bad is not None:
        raise NotACocycle(f"labeling violates the cocycle condition at {list(bad)}", bad)
    return w


def format_slab(w: CyclicCoverLabeling) -> str:
    body = "".join(f"{u} {v} {g}\n" for (u, v), g in sorted(w.oriented_values().items()) if g)
    return f"mod {w.n}\n" + body


def parse_collapse_sequence(text: str, path=None):
    from .collapse import CollapseSequence

    moves = []
    for no, line in _lines(text):
        parts = line.split(";")
        if len(parts) != 2:
            raise ParseError("expected 'sigma ; tau'", path=path, line=no)
        try:
            sigma, tau = (as_simplex(_ints(p, no, path)) for p in parts)
        except InvalidSimplex as exc:
            raise ParseError(str(exc), path=path, line=no) from None
        moves.append((sigma, tau))
    return CollapseSequence(moves)


def read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read: {exc.strerror}", path=str(path)) from None


def load_scx(path) -> SimplicialComplex:
    return parse_scx(read_text(path), path=str(path))


def load_smap(path, source, target) -> SimplicialMap:
    return parse_smap(read_text(path), source, target, path=str(path))


def load_slab(path, K) -> CyclicCoverLabeling:
    return parse_slab(read_text(path), K, path=str(path))
