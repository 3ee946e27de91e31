"""Poset text files and Graphviz export.

File grammar (ASCII, one item per line)::

    # comment lines and blank lines are ignored anywhere
    poset <n> <m> <mode>        mode is "relations" or "covers"
    <x> <y>                     exactly m lines; x < y (relations)
                                or x covered by y (covers)
"""

from __future__ import annotations

from typing import Iterable

from .core import Poset, poset_from_covers, poset_from_relations, transitive_reduction
from .errors import ParseError
from .maxcut import Cut

MODES = ("relations", "covers")


def _int(token: str, lineno: int, what: str) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno) from None
    if v < 0:
        raise ParseError(f"{what} must be non-negative, got {v}", lineno)
    return v


def parse_poset(text: str) -> Poset:
    """Parse a poset file.

    Raises :class:`ParseError` for grammar problems and a
    :class:`~posetcut.errors.NotAPoset` subclass for axiom violations.
    """
    lines = [
        (i, line.split())
        for i, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header")
    lineno, header = lines[0]
    if len(header) != 4 or header[0] != "poset":
        raise ParseError("header must read 'poset <n> <m> <mode>'", lineno)
    n = _int(header[1], lineno, "n")
    m = _int(header[2], lineno, "m")
    mode = header[3]
    if mode not in MODES:
        raise ParseError(f"mode must be one of {MODES}, got {mode!r}", lineno)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} pairs, body has {len(body)}", lineno)
    pairs = []
    for lineno, fields in body:
        if len(fields) != 2:
            raise ParseError("expected 'x y'", lineno)
        x, y = (_int(f, lineno, "element") for f in fields)
        for v in (x, y):
            if v >= n:
                raise ParseError(f"element {v} out of range 0..{n - 1}", lineno)
        pairs.append((x, y))
    if mode == "relations":
        return poset_from_relations(n, pairs)
    return poset_from_covers(n, pairs)


def read_poset(path) -> Poset:
    with open(path, encoding="ascii") as fh:
        return parse_poset(fh.read())


def format_poset(p: Poset, mode: str = "relations") -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    pairs = list(p.relations()) if mode == "relations" else list(transitive_reduction(p))
    lines = [f"poset {p.n} {len(pairs)} {mode}"]
    lines += [f"{x} {y}" for x, y in pairs]
    return "\n".join(lines) + "\n"


B_COLOR = "#9ecae1"
U_COLOR = "#fdae6b"


def to_dot(p: Poset, cut: Cut | None = None, labels: Iterable[str] | None = None) -> str:
    """Hasse diagram in DOT, drawn bottom-up.

    With a cut, bottom-side nodes are filled blue, top-side nodes orange and
    cover edges crossing from bottom to top are drawn bold red.
    """
    labels = list(labels) if labels is not None else [str(v) for v in range(p.n)]
    out = ["digraph poset {", "  rankdir=BT;", "  node [shape=circle];"]
    for v in range(p.n):
        attrs = [f'label="{labels[v]}"']
        if cut is not None:
            color = B_COLOR if v in cut.b else U_COLOR
            attrs += ["style=filled", f'fillcolor="{color}"']
        out.append(f"  {v} [{', '.join(attrs)}];")
    for x, y in transitive_reduction(p):
        if cut is not None and x in cut.b and y in cut.u:
            out.append(f"  {x} -> {y} [color=red, penwidth=2];")
        else:
            out.append(f"  {x} -> {y};")
    out.append("}")
    return "\n".join(out) + "\n"
