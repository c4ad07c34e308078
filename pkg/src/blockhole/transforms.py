"""Graph surgery: edge contraction, vertex splitting, and their relatives.

All polyhedron-level transforms return new values and keep the rotation
system, the face partition, and the disc triangulations consistent; the
contraction move records carry enough state to replay the inverse vertex
split exactly (same identifiers, same triangulations).
"""
from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .graphs import Graph
from .topology import (Block, Disc, Edge, FaceRef, Hole, Polyhedron,
                       Triangle, TopologyError, canonical_cycle,
                       common_neighbors, cycle_edges, double_fan_braces,
                       edge_key, is_long_edge, tri_key)


class MoveError(TopologyError):
    """A transform precondition failed; the input is returned untouched."""


FaceSnapshot = Tuple[str, int, object]   # kind, index, copied face object


@dataclass
class SplitSpec:
    """A vertex split: two kept flank edges, a contiguous fan of moved edges.

    ``kept`` holds the flank neighbours (a, b) in rotation order: reading
    the rotation at ``vertex``, the moved neighbours appear consecutively
    between a and b.  Both flanks end up adjacent to the old and the new
    vertex, closing the two new triangles.
    """
    vertex: int
    kept: Tuple[int, int]
    moved: Tuple[int, ...]
    new_vertex: int
    owner_a: Optional[int] = None      # disc index for the triangle on the a flank
    owner_b: Optional[int] = None
    restore: Tuple[FaceSnapshot, ...] = ()
    resurrect: Tuple[Tuple[int, Disc], ...] = ()


@dataclass
class ContractionMove:
    """One recorded edge contraction, invertible as a vertex split."""
    kind: str                          # contract_interior|contract_spoke|contract_path|contract_length1
    survivor: int
    removed: int
    flank_a: int
    flank_b: int
    arc: Tuple[int, ...]               # removed vertex's exclusive neighbours, in rotation order
    witness: Tuple[int, ...]           # common-neighbour scan proving the edge was long
    owner_a: int                       # disc owning the dying triangle on the a flank
    owner_b: int
    snapshots: Tuple[FaceSnapshot, ...] = ()
    died: Tuple[Tuple[int, Disc], ...] = ()

    def edge(self) -> Edge:
        return edge_key(self.survivor, self.removed)


def _face_obj(p: Polyhedron, ref: FaceRef):
    kind, i = ref
    return {'block': p.blocks, 'hole': p.holes, 'disc': p.discs}[kind][i]


def _snapshot(p: Polyhedron, refs) -> Tuple[FaceSnapshot, ...]:
    out = []
    for kind, i in sorted(set(refs)):
        out.append((kind, i, _face_obj(p, (kind, i)).copy()))
    return tuple(out)


def _boundary_cycle_edges(p: Polyhedron) -> Set[Edge]:
    out: Set[Edge] = set()
    for b in p.blocks:
        out |= set(cycle_edges(b.boundary))
    for h in p.holes:
        out |= set(cycle_edges(h.boundary))
    return out


def _replace_cyclic(seq: List[int], old: int, new_items: List[int]) -> List[int]:
    i = seq.index(old)
    return seq[:i] + new_items + seq[i + 1:]


# ---------------------------------------------------------------------------
# contraction
# ---------------------------------------------------------------------------


def contract_edge(p: Polyhedron, e: Tuple[int, int], survivor: Optional[int] = None,
                  kind: str = 'contract_interior',
                  allow_disc_death: bool = False) -> Tuple[Polyhedron, ContractionMove]:
    """Contract a long edge lying in exactly two facial triangles.

    The move record stores the merged vertex, both shared neighbours, the
    removed vertex's edge fan and snapshots of every touched face, so the
    inverse vertex split reproduces the input bit for bit.
    """
    u, v = e
    key = edge_key(u, v)
    if key not in p.edge_set():
        raise MoveError(f"{key} is not a surface edge")
    if key in _boundary_cycle_edges(p):
        raise MoveError(f"{key} lies on a block or hole boundary")
    if key in p.brace_set():
        raise MoveError(f"{key} is a brace edge")

    cn = common_neighbors(p, key)
    facial = p.facial_triangles()
    bad = [w for w in cn if frozenset((u, v, w)) not in facial]
    if bad or len(cn) != 2:
        raise MoveError(
            f"{key} is short (common neighbours {cn}, non-facial {bad}); "
            "contracting it would create under-count |E'| = 3|V'| - 7")

    if survivor is None:
        survivor = min(u, v)
    if survivor not in key:
        raise MoveError(f"survivor {survivor} is not an endpoint of {key}")
    x = survivor
    y = v if x == u else u

    for fkind, faces in (('block', p.blocks), ('hole', p.holes)):
        for i, f in enumerate(faces):
            if x in f.boundary and y in f.boundary:
                raise MoveError(
                    f"contracting {key} would shrink {fkind} {i}")

    out = p.copy()
    rot = out.rotation
    roty = rot[y]
    i = roty.index(x)
    fan = roty[i + 1:] + roty[:i]
    a, b = fan[0], fan[-1]
    arc = tuple(fan[1:-1])
    if {a, b} != set(cn):
        raise TopologyError(f"flanks {a},{b} disagree with common neighbours {cn}")
    rotx = rot[x]
    j = rotx.index(y)
    if rotx[j - 1] != a or rotx[(j + 1) % len(rotx)] != b:
        raise TopologyError(f"rotation at {x} and {y} not coherent around {key}")

    owner_a = p.corner_owner(x, a, y)
    owner_b = p.corner_owner(x, y, b)
    if owner_a[0] != 'disc' or owner_b[0] != 'disc':
        raise MoveError(f"{key} does not lie between disc triangles")

    touched: List[FaceRef] = [owner_a, owner_b]
    for ref, face in p.face_list():
        if y in p.face_vertex_set(ref) and ref not in touched:
            touched.append(ref)
    snapshots = _snapshot(p, touched)

    # graph surgery
    rot[x] = _replace_cyclic(rotx, y, list(arc))
    for w in arc:
        rot[w] = [x if z == y else z for z in rot[w]]
    ra = rot[a]
    if ra[ra.index(x) - 1] != y:
        raise TopologyError(f"expected {y} before {x} in rotation at {a}")
    ra.remove(y)
    rb = rot[b]
    if rb[(rb.index(x) + 1) % len(rb)] != y:
        raise TopologyError(f"expected {y} after {x} in rotation at {b}")
    rb.remove(y)
    del rot[y]
    out.invalidate()

    # face surgery
    out.discs[owner_a[1]].triangles.discard(tri_key(x, y, a))
    out.discs[owner_b[1]].triangles.discard(tri_key(x, y, b))

    def rename_cycle(cyc: List[int], what: str) -> List[int]:
        if y not in cyc:
            return cyc
        n = len(cyc)
        iy = cyc.index(y)
        if x in cyc:
            if cyc[iy - 1] == x or cyc[(iy + 1) % n] == x:
                return cyc[:iy] + cyc[iy + 1:]
            raise MoveError(f"contracting {key} would pinch {what}")
        return [x if z == y else z for z in cyc]

    for di, d in enumerate(out.discs):
        renames = [t for t in d.triangles if y in t]
        for t in renames:
            d.triangles.discard(t)
            nt = frozenset(x if z == y else z for z in t)
            if len(nt) != 3 or nt in d.triangles:
                raise MoveError(f"triangle rename collision in disc {di}")
            d.triangles.add(nt)
        d.interior.discard(y)
        d.boundary = rename_cycle(d.boundary, f"disc {di}")
    for bi, blk in enumerate(out.blocks):
        blk.boundary = rename_cycle(blk.boundary, f"block {bi}")
        if any(y in br for br in blk.braces):
            blk.braces = {edge_key(*(x if z == y else z for z in br))
                          for br in blk.braces}
    for hi, h in enumerate(out.holes):
        h.boundary = rename_cycle(h.boundary, f"hole {hi}")

    died: List[Tuple[int, Disc]] = []
    for di in range(len(out.discs) - 1, -1, -1):
        if not out.discs[di].triangles:
            if not allow_disc_death:
                raise MoveError(
                    f"contracting {key} would erase disc {di}; the polyhedron "
                    "is not reducible here")
            died.append((di, p.discs[di].copy()))
            del out.discs[di]
    died.reverse()

    move = ContractionMove(kind, x, y, a, b, arc, tuple(cn),
                           owner_a[1], owner_b[1], snapshots, tuple(died))
    return out, move


def invert(move: ContractionMove) -> SplitSpec:
    """The vertex split that undoes a recorded contraction exactly."""
    return SplitSpec(vertex=move.survivor,
                     kept=(move.flank_a, move.flank_b),
                     moved=move.arc,
                     new_vertex=move.removed,
                     owner_a=move.owner_a,
                     owner_b=move.owner_b,
                     restore=move.snapshots,
                     resurrect=move.died)


# ---------------------------------------------------------------------------
# vertex split
# ---------------------------------------------------------------------------


def vertex_split(p: Polyhedron, spec: SplitSpec) -> Polyhedron:
    """Split a vertex along its rotation, adding one vertex and three edges.

    The flank pair of ``spec.kept`` ends up adjacent to both copies; the
    moved fan goes to the new vertex; both embeddings' triangulations are
    updated (two fresh triangles replace the split corner).
    """
    x, (a, b), moved, x2 = spec.vertex, spec.kept, list(spec.moved), spec.new_vertex
    rot = p.rotation
    if x not in rot:
        raise MoveError(f"no vertex {x}")
    if x2 in rot:
        raise MoveError(f"new vertex id {x2} already in use")
    if a == b:
        raise MoveError("kept edges must have two distinct endpoints")
    rotx = rot[x]
    for w in (a, b, *moved):
        if w not in rotx:
            raise MoveError(f"{w} is not a neighbour of {x}")
    ia = rotx.index(a)
    run = [rotx[(ia + 1 + t) % len(rotx)] for t in range(len(moved) + 1)]
    if run[:-1] != moved or run[-1] != b:
        raise MoveError(
            f"moved edges {moved} are not contiguous between {a} and {b} "
            f"in the rotation at {x}")

    out = p.copy()
    rot = out.rotation
    rotx = rot[x]

    gap_run = [a] + moved + [b]
    if not spec.restore:
        gap_refs = [p.corner_owner(x, gap_run[i], gap_run[i + 1])
                    for i in range(len(gap_run) - 1)]
        pred_a = rotx[rotx.index(a) - 1]
        succ_b = rotx[(rotx.index(b) + 1) % len(rotx)]

    # rotations
    ia = rotx.index(a)
    seq = rotx[ia:] + rotx[:ia]          # starts at a
    rot[x] = [a, x2] + seq[len(moved) + 1:]
    rot[x2] = [x, a] + moved + [b]
    for w in moved:
        rot[w] = [x2 if z == x else z for z in rot[w]]
    ra = rot[a]
    ra.insert(ra.index(x), x2)
    rb = rot[b]
    rb.insert(rb.index(x) + 1, x2)
    out.invalidate()
    out.fresh = max(out.fresh, x2 + 1)

    for idx, d in spec.resurrect:
        out.discs.insert(idx, d.copy())

    if spec.restore:
        # inverse-of-contraction replay: reinstate the recorded face state
        for kind, i, face in spec.restore:
            lst = {'block': out.blocks, 'hole': out.holes, 'disc': out.discs}[kind]
            lst[i] = face.copy()
        return out

    # rule-based face updates for fresh splits
    def pick_owner(hint: Optional[int], side_gap: FaceRef, keep_gap_face: FaceRef,
                   flank: int) -> int:
        if hint is not None:
            return hint
        cands = [r[1] for r in (keep_gap_face, side_gap) if r[0] == 'disc']
        if not cands:
            raise MoveError(f"no disc adjoins the new triangle at flank {flank}")
        if len(set(cands)) > 1:
            raise MoveError(
                f"ambiguous disc for the new triangle at flank {flank}; "
                "pass an owner hint")
        return cands[0]

    face_pa = p.corner_owner(x, pred_a, a)
    face_sb = p.corner_owner(x, b, succ_b)
    oa = pick_owner(spec.owner_a, gap_refs[0], face_pa, a)
    ob = pick_owner(spec.owner_b, gap_refs[-1], face_sb, b)

    for i, ref in enumerate(gap_refs):
        kind, fi = ref
        if kind == 'disc':
            d = out.discs[fi]
            t = tri_key(x, gap_run[i], gap_run[i + 1])
            if t not in d.triangles:
                raise TopologyError(f"expected triangle {sorted(t)} in disc {fi}")
            d.triangles.discard(t)
            d.triangles.add(tri_key(x2, gap_run[i], gap_run[i + 1]))
        else:
            face = _face_obj(out, ref)
            face.boundary = [x2 if z == x else z for z in face.boundary]
    out.discs[oa].triangles.add(tri_key(x, x2, a))
    out.discs[ob].triangles.add(tri_key(x, x2, b))

    # settle disc boundaries and interiors from the updated triangulations
    touched_discs = {r[1] for r in gap_refs if r[0] == 'disc'} | {oa, ob}
    if len(set(gap_refs) | {('disc', oa), ('disc', ob)}) == 1:
        # every face around the new vertex is one disc: it becomes interior
        out.discs[oa].interior.add(x2)
    else:
        for fi in sorted(touched_discs):
            d = out.discs[fi]
            d.boundary = _boundary_from_triangles(d.triangles, f"disc {fi}")
            d.interior = {v for t in d.triangles for v in t} - set(d.boundary)
    return out


def _boundary_from_triangles(triangles: Set[Triangle], what: str) -> List[int]:
    """Reconstruct a disc's boundary cycle: the edges covered exactly once."""
    count: Dict[Edge, int] = {}
    for t in triangles:
        va, vb, vc = sorted(t)
        for e in (edge_key(va, vb), edge_key(va, vc), edge_key(vb, vc)):
            count[e] = count.get(e, 0) + 1
    border = [e for e, n in count.items() if n == 1]
    adj: Dict[int, List[int]] = {}
    for u, v in border:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v, ns in adj.items():
        if len(ns) != 2:
            raise TopologyError(f"{what}: boundary does not close at vertex {v}")
    start = min(adj)
    cyc = [start, min(adj[start])]
    while True:
        prev, cur = cyc[-2], cyc[-1]
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            break
        cyc.append(nxt)
        if len(cyc) > len(adj):
            raise TopologyError(f"{what}: boundary walk does not close")
    if len(cyc) != len(adj):
        raise TopologyError(f"{what}: boundary is not a single cycle")
    return cyc


# ---------------------------------------------------------------------------
# local retriangulation moves
# ---------------------------------------------------------------------------


def _edge_faces(p: Polyhedron, e: Edge) -> Tuple[FaceRef, FaceRef, int, int]:
    """The two faces flanking an edge plus the opposite corner vertices."""
    u, v = e
    rotu = p.rotation[u]
    i = rotu.index(v)
    prev = rotu[i - 1]
    nxt = rotu[(i + 1) % len(rotu)]
    f_prev = p.corner_owner(u, prev, v)
    f_next = p.corner_owner(u, v, nxt)
    return f_prev, f_next, prev, nxt


def subdivide_boundary_edge(p: Polyhedron, e: Tuple[int, int]) -> Polyhedron:
    """Insert a path vertex on an edge separating two triangulated discs."""
    key = edge_key(*e)
    if key not in p.edge_set():
        raise MoveError(f"{key} is not a surface edge")
    if key in _boundary_cycle_edges(p):
        raise MoveError(f"{key} borders a block or hole; only disc-disc edges split")
    s, t = key
    f1, f2, c1, c2 = _edge_faces(p, (s, t))
    if f1[0] != 'disc' or f2[0] != 'disc' or f1 == f2:
        raise MoveError(f"{key} does not separate two distinct discs")
    spec = SplitSpec(vertex=s, kept=(c1, c2), moved=(t,),
                     new_vertex=p.fresh, owner_a=f1[1], owner_b=f2[1])
    out = vertex_split(p, spec)
    out.fresh = max(out.fresh, spec.new_vertex + 1)
    return out


def insert_interior_vertex(p: Polyhedron, disc_index: int,
                           triangle: Sequence[int]) -> Polyhedron:
    """Subdivide one triangle of a disc with a fresh 3-valent hub."""
    t = tri_key(*triangle)
    if disc_index >= len(p.discs) or t not in p.discs[disc_index].triangles:
        raise MoveError(f"{sorted(t)} is not a triangle of disc {disc_index}")
    out = p.copy()
    v = out.new_vertex_id()
    a, b, c = sorted(t)
    rot = out.rotation
    # orient: directed face (a, b, c) has successor(b)->? at a equal to b
    rota = rot[a]
    if rota[(rota.index(c) + 1) % len(rota)] == b:
        q, r = b, c            # directed face reads (a, q, r) with succ(r)=q at a
    else:
        q, r = c, b
    # directed face is (a, q, r): at a succ(r)=q, at q succ(a)=r, at r succ(q)=a
    for vert, prev, nxt in ((a, r, q), (q, a, r), (r, q, a)):
        rv = rot[vert]
        if rv[(rv.index(prev) + 1) % len(rv)] != nxt:
            raise TopologyError(f"triangle {sorted(t)} not coherent at {vert}")
        rv.insert(rv.index(nxt), v)
    rot[v] = [a, q, r][::-1]
    out.invalidate()
    d = out.discs[disc_index]
    d.triangles.discard(t)
    for pair in ((a, q), (q, r), (r, a)):
        d.triangles.add(tri_key(pair[0], pair[1], v))
    d.interior.add(v)
    return out


def flip_edge(p: Polyhedron, disc_index: int, e: Tuple[int, int]) -> Polyhedron:
    """Replace an interior diagonal of a disc by the opposite one."""
    key = edge_key(*e)
    d = p.discs[disc_index]
    if key in set(cycle_edges(d.boundary)) or key not in d.triangulation_edges():
        raise MoveError(f"{key} is not interior to disc {disc_index}")
    u, v = key
    rotu = p.rotation[u]
    i = rotu.index(v)
    a = rotu[i - 1]                    # triangle (u, v, a) read with succ(a)=v at u
    b = rotu[(i + 1) % len(rotu)]
    if tri_key(u, v, a) not in d.triangles or tri_key(u, v, b) not in d.triangles:
        raise MoveError(f"{key} does not separate two triangles of disc {disc_index}")
    if edge_key(a, b) in p.edge_set() or edge_key(a, b) in p.brace_set():
        raise MoveError(f"flip of {key} would duplicate edge {edge_key(a, b)}")
    out = p.copy()
    rot = out.rotation
    rot[u].remove(v)
    rot[v].remove(u)
    rota = rot[a]
    rota.insert(rota.index(u), b)      # [.., v, b, u, ..] at a
    rotb = rot[b]
    rotb.insert(rotb.index(v), a)      # [.., u, a, v, ..] at b
    out.invalidate()
    dd = out.discs[disc_index]
    dd.triangles.discard(tri_key(u, v, a))
    dd.triangles.discard(tri_key(u, v, b))
    dd.triangles.add(tri_key(u, a, b))
    dd.triangles.add(tri_key(v, a, b))
    return out


def swap_blocks_holes(p: Polyhedron) -> Polyhedron:
    """Turn every block into a hole and brace every hole into a block."""
    out = p.copy()
    new_holes = [Hole(list(b.boundary)) for b in out.blocks]
    new_blocks = []
    surface = p.edge_set()
    for h in out.holes:
        braces = double_fan_braces(h.boundary)
        clash = braces & surface
        if clash:
            raise MoveError(f"cannot brace hole {h.boundary}: {sorted(clash)} "
                            "already present")
        new_blocks.append(Block(list(h.boundary), braces))
    out.blocks = new_blocks
    out.holes = new_holes
    out.invalidate()
    return out


# ---------------------------------------------------------------------------
# graph-level splits
# ---------------------------------------------------------------------------


def split_graph(g: Graph, x: int, kept: Tuple[int, int],
                moved: Sequence[int], new_vertex: int) -> Graph:
    """Vertex split on a plain graph: +1 vertex, net +3 edges."""
    adj = g.adjacency()
    a, b = kept
    if x not in adj:
        raise MoveError(f"no vertex {x}")
    if new_vertex in adj:
        raise MoveError(f"vertex id {new_vertex} already in use")
    if a == b or a not in adj[x] or b not in adj[x]:
        raise MoveError(f"kept endpoints {kept} must be two neighbours of {x}")
    mv = set(moved)
    if not mv <= adj[x] or mv & {a, b}:
        raise MoveError(f"moved endpoints {sorted(mv)} must be neighbours of {x} "
                        "distinct from the kept pair")
    edges = set(g.edges)
    for w in mv:
        edges.discard(edge_key(x, w))
        edges.add(edge_key(new_vertex, w))
    edges |= {edge_key(x, new_vertex), edge_key(new_vertex, a), edge_key(new_vertex, b)}
    return Graph(tuple(sorted(set(g.vertices) | {new_vertex})), frozenset(edges))


@dataclass
class CycleSplitSpec:
    """Split a simple cycle into two, moving chosen edge fans to the copies.

    ``duplicates[i]`` is the fresh id for vertex i of the cycle, or the
    vertex itself to leave that position unsplit.  ``selections[i]`` lists
    the non-cycle neighbours whose edges move to the duplicate.
    """
    cycle: Tuple[int, ...]
    selections: Tuple[Tuple[int, ...], ...]
    duplicates: Tuple[int, ...]


def _as_graph(g) -> Graph:
    return Graph.from_polyhedron(g) if isinstance(g, Polyhedron) else g


def cycle_split(graph_or_poly, spec: CycleSplitSpec) -> Tuple[Graph, List[SplitSpec]]:
    """Insert a triangulated cylinder along a cycle via successive splits.

    Returns the new graph together with the vertex-split sequence that
    produced it, so the construction can be replayed and audited.
    """
    g = _as_graph(graph_or_poly)
    cyc = list(spec.cycle)
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k:
        raise MoveError("cycle must be simple with at least 3 vertices")
    if len(spec.selections) != k or len(spec.duplicates) != k:
        raise MoveError("need one selection and one duplicate per cycle vertex")
    adj = g.adjacency()
    for i in range(k):
        if cyc[(i + 1) % k] not in adj[cyc[i]]:
            raise MoveError(f"{cyc[i]}-{cyc[(i + 1) % k]} is not an edge")
    cyc_edges = {edge_key(cyc[i], cyc[(i + 1) % k]) for i in range(k)}
    split_at = [i for i in range(k) if spec.duplicates[i] != cyc[i]]
    if not split_at:
        raise MoveError("degenerate cycle split: no vertex is duplicated")
    fresh = set(spec.duplicates[i] for i in split_at)
    if len(fresh) != len(split_at) or fresh & set(g.vertices):
        raise MoveError("duplicate ids must be fresh and distinct")
    for i in range(k):
        sel = set(spec.selections[i])
        if spec.duplicates[i] == cyc[i] and sel:
            raise MoveError(f"selection at unsplit vertex {cyc[i]} must be empty")
        for w in sel:
            if w not in adj[cyc[i]]:
                raise MoveError(f"selected {w} is not a neighbour of {cyc[i]}")
            if edge_key(cyc[i], w) in cyc_edges:
                raise MoveError(f"selection at {cyc[i]} contains a cycle edge")

    steps: List[SplitSpec] = []
    cur = g
    done: Dict[int, int] = {}          # position -> duplicate id
    first = split_at[0]
    last = split_at[-1]
    for pos in split_at:
        x = cyc[pos]
        left_pos = (pos - 1) % k
        left = done.get(left_pos, cyc[left_pos])
        right = cyc[(pos + 1) % k]
        moved = []
        for w in spec.selections[pos]:
            wpos = cyc.index(w) if w in cyc else None
            if (wpos is not None and wpos in done
                    and cyc[pos] in spec.selections[wpos]):
                moved.append(done[wpos])
            else:
                moved.append(w)
        if pos == last and len(split_at) > 1 and (first - 1) % k == last:
            moved.append(spec.duplicates[first])
        s = SplitSpec(vertex=x, kept=(left, right), moved=tuple(moved),
                      new_vertex=spec.duplicates[pos])
        cur = split_graph(cur, x, (left, right), moved, spec.duplicates[pos])
        steps.append(s)
        done[pos] = spec.duplicates[pos]
    return cur, steps


def path_split(graph_or_poly, path: Sequence[int],
               selections: Sequence[Sequence[int]],
               duplicates: Sequence[int]) -> Tuple[Graph, List[SplitSpec]]:
    """Split a path, duplicating its interior vertices behind a fence.

    A length-2 path reduces to a single vertex split.  The path endpoints
    must not be adjacent and are never duplicated.
    """
    g = _as_graph(graph_or_poly)
    pth = list(path)
    k = len(pth)
    if k < 3 or len(set(pth)) != k:
        raise MoveError("path must be simple with length at least 2")
    adj = g.adjacency()
    for i in range(k - 1):
        if pth[i + 1] not in adj[pth[i]]:
            raise MoveError(f"{pth[i]}-{pth[i + 1]} is not an edge")
    if pth[-1] in adj[pth[0]]:
        raise MoveError("path endpoints must not be adjacent")
    inner = pth[1:-1]
    if len(selections) != len(inner) or len(duplicates) != len(inner):
        raise MoveError("need one selection and one duplicate per interior vertex")
    dups = list(duplicates)
    if len(set(dups)) != len(dups) or set(dups) & set(g.vertices):
        raise MoveError("duplicate ids must be fresh and distinct")
    path_edges = {edge_key(pth[i], pth[i + 1]) for i in range(k - 1)}
    for i, w_list in enumerate(selections):
        for w in w_list:
            if w not in adj[inner[i]]:
                raise MoveError(f"selected {w} is not a neighbour of {inner[i]}")
            if edge_key(inner[i], w) in path_edges:
                raise MoveError(f"selection at {inner[i]} contains a path edge")

    steps: List[SplitSpec] = []
    cur = g
    done: Dict[int, int] = {}
    for j, x in enumerate(inner):
        left = done.get(j - 1, pth[j]) if j > 0 else pth[0]
        right = pth[j + 2]
        moved = []
        for w in selections[j]:
            if w in inner:
                wj = inner.index(w)
                if wj in done and x in selections[wj]:
                    moved.append(done[wj])
                    continue
            moved.append(w)
        s = SplitSpec(vertex=x, kept=(left, right), moved=tuple(moved),
                      new_vertex=dups[j])
        cur = split_graph(cur, x, (left, right), moved, dups[j])
        steps.append(s)
        done[j] = dups[j]
    return cur, steps
