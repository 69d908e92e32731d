"""Text formats for instances, walks and solutions.

Instance files::

    # comment
    p cpcd <n> <c>
    a <tail> <head> <color> <weight>

Vertices are 1-based in files and 0-based in memory; arc ids are the
1-based order of the ``a`` lines.  Weights are decimals (``2.5``) or
fractions (``5/2``).  Walk files are ``w <weight> <k>`` followed by one line
of ``k`` 1-based arc ids.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .euler import ClosedWalk
from .graph import ColoredMultiDigraph, build_graph


def format_weight(w: Fraction) -> str:
    """Exact text for ``w``: an integer, a terminating decimal, or ``p/q``."""
    w = Fraction(w)
    if w.denominator == 1:
        return str(w.numerator)
    d = w.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{w.numerator}/{w.denominator}"
    digits = max(twos, fives)
    scaled = abs(w.numerator) * 10 ** digits // w.denominator
    sign = "-" if w < 0 else ""
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _parse_weight(token: str, line: int) -> Fraction:
    try:
        w = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid weight {token!r}", line) from None
    if w < 0:
        raise ParseError(f"negative weight {token}", line)
    return w


def _int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", line) from None


def parse_instance(text: str) -> ColoredMultiDigraph:
    header = None
    specs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "cpcd":
                raise ParseError("header must be 'p cpcd <n> <c>'", lineno)
            n, c = _int(parts[2], "vertex count", lineno), _int(parts[3], "color count", lineno)
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", lineno)
            if c < 2:
                raise ParseError(f"color count must be at least 2, got {c}", lineno)
            header = (n, c)
        elif kind == "a":
            if header is None:
                raise ParseError("arc line before header", lineno)
            if len(parts) != 5:
                raise ParseError("arc line must be 'a <tail> <head> <color> <weight>'", lineno)
            n, c = header
            tail = _int(parts[1], "tail", lineno)
            head = _int(parts[2], "head", lineno)
            color = _int(parts[3], "color", lineno)
            for end in (tail, head):
                if not 1 <= end <= n:
                    raise ParseError(f"vertex {end} out of range 1..{n}", lineno)
            if not 1 <= color <= c:
                raise ParseError(f"color {color} out of range 1..{c}", lineno)
            if tail == head:
                raise ParseError(f"self-loop at vertex {tail}", lineno)
            specs.append((tail - 1, head - 1, color, _parse_weight(parts[4], lineno)))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise ParseError("missing 'p cpcd' header", 1)
    return build_graph(header[1], header[0], specs)


def read_instance(path) -> ColoredMultiDigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def emit_instance(g: ColoredMultiDigraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"p cpcd {g.vertex_count} {g.color_count}")
    for a in g.arcs:
        lines.append(f"a {a.tail + 1} {a.head + 1} {a.color} {format_weight(a.weight)}")
    return "\n".join(lines) + "\n"


def emit_walk(walk: ClosedWalk) -> str:
    ids = " ".join(str(k + 1) for k in walk.arc_ids)
    return f"w {format_weight(walk.weight)} {len(walk.arc_ids)}\n{ids}\n"


def parse_walk(text: str, g: ColoredMultiDigraph | None = None) -> ClosedWalk:
    """Read a walk; with ``g`` given, arc ids are range-checked against it."""
    # solution files carry "s ..." summary lines ahead of the walk block
    lines = [(n, ln.strip()) for n, ln in enumerate(text.splitlines(), start=1)
             if ln.strip() and not ln.strip().startswith(("#", "s "))]
    if not lines:
        raise ParseError("empty walk file", 1)
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "w":
        raise ParseError("walk header must be 'w <weight> <k>'", lineno)
    weight = _parse_weight(parts[1], lineno)
    k = _int(parts[2], "walk length", lineno)
    ids = []
    id_line = lines[1][0] if len(lines) > 1 else lineno
    for n, ln in lines[1:]:
        for token in ln.split():
            ids.append(_int(token, "arc id", n) - 1)
    if len(ids) != k:
        raise ParseError(f"header announces {k} arcs, found {len(ids)}", id_line)
    if g is not None:
        for pos, a in enumerate(ids):
            if not 0 <= a < len(g.arcs):
                raise ParseError(f"arc {a + 1} at position {pos + 1} does not exist "
                                 f"(instance has {len(g.arcs)} arcs)", id_line)
    return ClosedWalk(tuple(ids), weight)


def read_walk(path, g: ColoredMultiDigraph | None = None) -> ClosedWalk:
    with open(path, encoding="utf-8") as fh:
        return parse_walk(fh.read(), g)


def emit_solution(solution) -> str:
    dup = " ".join(f"{k + 1}x{n}" for k, n in sorted(solution.duplicated.items()))
    lines = [f"s weight {format_weight(solution.total_weight)}",
             f"s duplicated {dup}".rstrip()]
    return "\n".join(lines) + "\n" + emit_walk(solution.walk)

