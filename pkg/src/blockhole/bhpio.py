"""Reader/writer for the BHP text format.

A BHP document is UTF-8, line oriented and whitespace delimited; ``#``
starts a comment that runs to the end of the line.  Sections appear in the
order ``vertices``, ``edges``, ``rotation``, ``blocks``, ``holes``,
``discs`` and the document ends with ``end``.  See docs/bhp_format.md for
the exact grammar.  Serialization is canonical, so two equal polyhedra
always produce identical bytes.
"""
from __future__ import annotations

import hashlib
from typing import Dict, List, Optional, Set, Tuple

from .topology import (Block, Disc, Edge, Hole, Polyhedron, TopologicalGraph,
                       canonical_cycle, edge_key, tri_key)

SECTIONS = ("vertices", "edges", "rotation", "blocks", "holes", "discs")


class ParseError(Exception):
    """Malformed BHP input; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(lineno: int, toks: List[str]) -> List[int]:
    try:
        return [int(t) for t in toks]
    except ValueError as exc:
        raise ParseError(lineno, f"expected integers, got {toks}") from exc


def parse(text: str) -> Polyhedron:
    """Parse a BHP document into a polyhedron (embedding is Euler-checked)."""
    lines = list(_tokens(text))
    if not lines:
        raise ParseError(1, "empty document")
    i = 0
    lineno, toks = lines[i]
    if toks[0] != "bhp":
        raise ParseError(lineno, "document must start with a 'bhp <version>' line")
    if toks[1:] != ["1"]:
        raise ParseError(lineno, f"unsupported version {toks[1:]}")
    i += 1

    vertices: List[int] = []
    edges: Set[Edge] = set()
    rotation: Dict[int, List[int]] = {}
    blocks: List[Block] = []
    holes: List[Hole] = []
    discs: List[Disc] = []
    section: Optional[str] = None
    ended = False

    while i < len(lines):
        lineno, toks = lines[i]
        i += 1
        head = toks[0]
        if head == "end":
            if toks[1:]:
                raise ParseError(lineno, "'end' takes no arguments")
            ended = True
            break
        if head in SECTIONS:
            if toks[1:]:
                raise ParseError(lineno, f"section header '{head}' takes no arguments")
            section = head
            continue
        if section is None:
            raise ParseError(lineno, f"content before any section: {toks}")

        if section == "vertices":
            vertices.extend(_ints(lineno, toks))
        elif section == "edges":
            vals = _ints(lineno, toks)
            if len(vals) != 2:
                raise ParseError(lineno, "edge lines hold exactly two vertices")
            if vals[0] == vals[1]:
                raise ParseError(lineno, f"self-loop {vals}")
            e = edge_key(*vals)
            if e in edges:
                raise ParseError(lineno, f"duplicate edge {e}")
            edges.add(e)
        elif section == "rotation":
            vals = _ints(lineno, toks)
            if len(vals) < 2:
                raise ParseError(lineno, "rotation lines need a vertex and its neighbours")
            v, nbrs = vals[0], vals[1:]
            if v in rotation:
                raise ParseError(lineno, f"rotation for vertex {v} given twice")
            rotation[v] = nbrs
        elif section == "blocks":
            if head == "boundary":
                blocks.append(Block(_ints(lineno, toks[1:])))
            elif head == "braces":
                if not blocks:
                    raise ParseError(lineno, "'braces' before any block boundary")
                vals = _ints(lineno, toks[1:])
                if len(vals) % 2:
                    raise ParseError(lineno, "braces need an even number of vertices")
                for a, b in zip(vals[::2], vals[1::2]):
                    blocks[-1].braces.add(edge_key(a, b))
            else:
                raise ParseError(lineno, f"unexpected '{head}' in blocks section")
        elif section == "holes":
            if head != "boundary":
                raise ParseError(lineno, f"unexpected '{head}' in holes section")
            holes.append(Hole(_ints(lineno, toks[1:])))
        elif section == "discs":
            if head == "boundary":
                discs.append(Disc(_ints(lineno, toks[1:])))
            elif head == "interior":
                if not discs:
                    raise ParseError(lineno, "'interior' before any disc boundary")
                discs[-1].interior.update(_ints(lineno, toks[1:]))
            elif head == "triangles":
                if not discs:
                    raise ParseError(lineno, "'triangles' before any disc boundary")
                vals = _ints(lineno, toks[1:])
                if len(vals) % 3:
                    raise ParseError(lineno, "triangles need a multiple of three vertices")
                for a, b, c in zip(vals[::3], vals[1::3], vals[2::3]):
                    discs[-1].triangles.add(tri_key(a, b, c))
            else:
                raise ParseError(lineno, f"unexpected '{head}' in discs section")

    if not ended:
        raise ParseError(lines[-1][0], "missing 'end'")
    vset = set(vertices)
    if len(vset) != len(vertices):
        raise ParseError(1, "duplicate vertex ids")
    if set(rotation) != vset:
        raise ParseError(1, f"rotation given for {sorted(set(rotation) ^ vset)}, "
                            "not matching the vertex list")
    rot_edges = set()
    for v, nbrs in rotation.items():
        for u in nbrs:
            if u not in vset:
                raise ParseError(1, f"rotation at {v} names unknown vertex {u}")
            rot_edges.add(edge_key(u, v))
    if rot_edges != edges:
        raise ParseError(1, f"edges and rotation disagree on {sorted(rot_edges ^ edges)}")

    topo = TopologicalGraph(rotation)
    try:
        topo.derive_faces()
    except Exception as exc:
        raise ParseError(1, f"embedding inconsistent: {exc}") from exc
    return Polyhedron(topo, blocks, holes, discs)


def _canon_rotation(nbrs: List[int]) -> List[int]:
    k = nbrs.index(min(nbrs))
    return nbrs[k:] + nbrs[:k]


def serialize(p: Polyhedron) -> str:
    """Canonical BHP text: stable ordering everywhere, cyclic data rotated."""
    out: List[str] = ["bhp 1", "vertices"]
    verts = p.vertices
    out.append(" ".join(str(v) for v in verts))
    out.append("edges")
    for u, v in sorted(p.edge_set()):
        out.append(f"{u} {v}")
    out.append("rotation")
    for v in verts:
        nbrs = _canon_rotation(p.rotation[v])
        out.append(" ".join(str(x) for x in [v] + nbrs))

    def face_lines(kind: str, items, render) -> None:
        out.append(kind)
        keyed = sorted(((canonical_cycle(it.boundary), i) for i, it in enumerate(items)))
        for key, i in keyed:
            render(key, items[i])

    def render_block(key, b: Block) -> None:
        out.append("boundary " + " ".join(str(v) for v in key))
        if b.braces:
            flat = [str(x) for e in sorted(b.braces) for x in e]
            out.append("braces " + " ".join(flat))

    def render_hole(key, h: Hole) -> None:
        out.append("boundary " + " ".join(str(v) for v in key))

    def render_disc(key, d: Disc) -> None:
        out.append("boundary " + " ".join(str(v) for v in key))
        if d.interior:
            out.append("interior " + " ".join(str(v) for v in sorted(d.interior)))
        if d.triangles:
            flat = [str(x) for t in sorted(tuple(sorted(t)) for t in d.triangles)
                    for x in t]
            out.append("triangles " + " ".join(flat))

    face_lines("blocks", p.blocks, render_block)
    face_lines("holes", p.holes, render_hole)
    face_lines("discs", p.discs, render_disc)
    out.append("end")
    return "\n".join(out) + "\n"


def content_hash(p: Polyhedron) -> str:
    """sha256 of the canonical serialization."""
    return hashlib.sha256(serialize(p).encode()).hexdigest()
