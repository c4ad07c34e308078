"""Sphere-embedded graphs with faces split into blocks, holes, and triangulated discs.

The embedding is stored as a rotation system: for every vertex, the cyclic
order of its neighbours.  Faces are derived from the rotation system on
demand and cached.  Blocks keep their bracing edges outside the rotation
system, so face derivation never sees them.
"""
from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

Edge = Tuple[int, int]
Triangle = FrozenSet[int]


class TopologyError(Exception):
    """The structure is not a consistent sphere embedding / face partition."""


def edge_key(u: int, v: int) -> Edge:
    """Normalized undirected edge."""
    return (u, v) if u < v else (v, u)


def tri_key(a: int, b: int, c: int) -> Triangle:
    t = frozenset((a, b, c))
    if len(t) != 3:
        raise TopologyError(f"degenerate triangle {(a, b, c)}")
    return t


def canonical_cycle(cycle: Sequence[int], directed: bool = False) -> Tuple[int, ...]:
    """Canonical form of a cyclic vertex sequence.

    Rotates so the smallest vertex comes first; when ``directed`` is false the
    lexicographically smaller of the two traversal directions is used, so
    mirror images compare equal.
    """
    seq = list(cycle)
    if not seq:
        return ()
    k = seq.index(min(seq))
    fwd = tuple(seq[k:] + seq[:k])
    if directed:
        return fwd
    rev = list(reversed(seq))
    k = rev.index(min(rev))
    bwd = tuple(rev[k:] + rev[:k])
    return min(fwd, bwd)


def cycle_edges(cycle: Sequence[int]) -> List[Edge]:
    return [edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def double_fan_braces(boundary: Sequence[int]) -> Set[Edge]:
    """Bracing edges that make a boundary cycle generically isostatic.

    Fans the cycle from its first vertex on one side and from its second
    vertex on the other, giving 2(n-3) chords; together with the n cycle
    edges this is a triangulated sphere on the cycle vertices.
    """
    cyc = list(canonical_cycle(boundary))
    n = len(cyc)
    if n < 3:
        raise TopologyError("boundary cycle needs at least 3 vertices")
    braces: Set[Edge] = set()
    for i in range(2, n - 1):
        braces.add(edge_key(cyc[0], cyc[i]))
    for i in range(3, n):
        braces.add(edge_key(cyc[1], cyc[i]))
    return braces


class TopologicalGraph:
    """A graph embedded in the sphere via a rotation system."""

    def __init__(self, rotation: Dict[int, List[int]]):
        self.rotation: Dict[int, List[int]] = {v: list(ns) for v, ns in rotation.items()}

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> List[int]:
        return sorted(self.rotation)

    def neighbors(self, v: int) -> List[int]:
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def edge_set(self) -> Set[Edge]:
        out: Set[Edge] = set()
        for v, ns in self.rotation.items():
            for u in ns:
                out.add(edge_key(u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation.get(u, ())

    def copy(self) -> "TopologicalGraph":
        return TopologicalGraph({v: list(ns) for v, ns in self.rotation.items()})

    # -- consistency -------------------------------------------------------

    def check_symmetric(self) -> None:
        for v, ns in self.rotation.items():
            if len(set(ns)) != len(ns):
                raise TopologyError(f"parallel edges at vertex {v}")
            if v in ns:
                raise TopologyError(f"self-loop at vertex {v}")
            for u in ns:
                if u not in self.rotation or v not in self.rotation[u]:
                    raise TopologyError(f"edge {v}-{u} not symmetric")

    # -- faces -------------------------------------------------------------

    def derive_faces(self) -> List[List[int]]:
        """Trace all face cycles of the embedding.

        Follows the successor convention: after arriving along u -> v the walk
        leaves along the neighbour after u in the rotation at v.  Every
        directed edge is used exactly once; the Euler relation is enforced.
        """
        self.check_symmetric()
        pos = {v: {u: i for i, u in enumerate(ns)} for v, ns in self.rotation.items()}
        faces: List[List[int]] = []
        seen: Set[Tuple[int, int]] = set()
        for v in sorted(self.rotation):
            for u in self.rotation[v]:
                if (v, u) in seen:
                    continue
                face = []
                a, b = v, u
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append(a)
                    ns = self.rotation[b]
                    a, b = b, ns[(pos[b][a] + 1) % len(ns)]
                if (a, b) != (v, u):
                    raise TopologyError("face walk did not close on its start")
                faces.append(face)
        nv = len(self.rotation)
        ne = len(self.edge_set())
        if nv - ne + len(faces) != 2:
            raise TopologyError(
                f"Euler check failed: V={nv} E={ne} F={len(faces)} gives "
                f"{nv - ne + len(faces)} != 2")
        return faces

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[int]]) -> "TopologicalGraph":
        """Build the rotation system from coherently oriented face cycles.

        Each undirected edge must appear exactly once per direction across
        all face cycles.
        """
        succ: Dict[int, Dict[int, int]] = {}
        for face in faces:
            f = list(face)
            n = len(f)
            for i in range(n):
                prev, cur, nxt = f[i - 1], f[i], f[(i + 1) % n]
                at = succ.setdefault(cur, {})
                if prev in at:
                    raise TopologyError(f"corner ({prev},{cur}) used twice; faces not coherent")
                at[prev] = nxt
        rotation: Dict[int, List[int]] = {}
        for v, nxt in succ.items():
            start = next(iter(nxt))
            cyc = [start]
            cur = nxt[start]
            while cur != start:
                cyc.append(cur)
                cur = nxt[cur]
                if len(cyc) > len(nxt):
                    raise TopologyError(f"rotation at {v} does not close")
            if len(cyc) != len(nxt):
                raise TopologyError(f"rotation at {v} is disconnected; not a sphere")
            rotation[v] = cyc
        g = cls(rotation)
        g.derive_faces()
        return g

    # -- connectivity ------------------------------------------------------

    def is_connected(self, skip: Set[int] = frozenset()) -> bool:
        verts = [v for v in self.rotation if v not in skip]
        if not verts:
            return True
        stack = [verts[0]]
        seen = {verts[0]}
        while stack:
            v = stack.pop()
            for u in self.rotation[v]:
                if u not in skip and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(verts)

    def is_three_connected(self) -> bool:
        """Brute-force 3-connectivity; fine at workbench scale."""
        verts = self.vertices
        if len(verts) < 4:
            return False
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if not self.is_connected(skip={u, v}):
                    return False
        return True


@dataclass
class Block:
    """A reserved face carrying an isostatic bracing of its boundary cycle."""
    boundary: List[int]
    braces: Set[Edge] = field(default_factory=set)

    def size(self) -> int:
        return len(self.boundary)

    def copy(self) -> "Block":
        return Block(list(self.boundary), set(self.braces))


@dataclass
class Hole:
    """A face left open: boundary cycle only."""
    boundary: List[int]

    def size(self) -> int:
        return len(self.boundary)

    def copy(self) -> "Hole":
        return Hole(list(self.boundary))


@dataclass
class Disc:
    """A triangulated face: boundary cycle, interior vertices, triangle set."""
    boundary: List[int]
    interior: Set[int] = field(default_factory=set)
    triangles: Set[Triangle] = field(default_factory=set)

    def vertex_set(self) -> Set[int]:
        return set(self.boundary) | self.interior

    def triangulation_edges(self) -> Set[Edge]:
        out: Set[Edge] = set()
        for t in self.triangles:
            a, b, c = sorted(t)
            out.update((edge_key(a, b), edge_key(a, c), edge_key(b, c)))
        return out

    def copy(self) -> "Disc":
        return Disc(list(self.boundary), set(self.interior), set(self.triangles))


FaceRef = Tuple[str, int]  # ('block'|'hole'|'disc', index)


class Polyhedron:
    """A block-and-hole polyhedron: embedded graph plus face partition."""

    def __init__(self, topo: TopologicalGraph,
                 blocks: Optional[List[Block]] = None,
                 holes: Optional[List[Hole]] = None,
                 discs: Optional[List[Disc]] = None):
        self.topo = topo
        self.blocks: List[Block] = blocks or []
        self.holes: List[Hole] = holes or []
        self.discs: List[Disc] = discs or []
        self.fresh = max(topo.rotation, default=0) + 1
        self._faces_cache: Optional[List[List[int]]] = None
        self._facial_cache: Optional[Set[Triangle]] = None
        self._corner_cache: Optional[Dict[Tuple[int, Triangle], FaceRef]] = None

    # -- bookkeeping -------------------------------------------------------

    def copy(self) -> "Polyhedron":
        p = Polyhedron(self.topo.copy(),
                       [b.copy() for b in self.blocks],
                       [h.copy() for h in self.holes],
                       [d.copy() for d in self.discs])
        p.fresh = self.fresh
        return p

    def invalidate(self) -> None:
        self._faces_cache = None
        self._facial_cache = None
        self._corner_cache = None

    def new_vertex_id(self) -> int:
        v = self.fresh
        self.fresh += 1
        return v

    @property
    def rotation(self) -> Dict[int, List[int]]:
        return self.topo.rotation

    @property
    def vertices(self) -> List[int]:
        return self.topo.vertices

    def edge_set(self) -> Set[Edge]:
        return self.topo.edge_set()

    def brace_set(self) -> Set[Edge]:
        out: Set[Edge] = set()
        for b in self.blocks:
            out |= b.braces
        return out

    def framework_edges(self) -> Set[Edge]:
        """All bars of the bar-joint framework: surface edges plus braces."""
        return self.edge_set() | self.brace_set()

    def faces(self) -> List[List[int]]:
        if self._faces_cache is None:
            self._faces_cache = self.topo.derive_faces()
        return self._faces_cache

    def face_list(self) -> List[Tuple[FaceRef, object]]:
        out: List[Tuple[FaceRef, object]] = []
        out.extend((('block', i), b) for i, b in enumerate(self.blocks))
        out.extend((('hole', i), h) for i, h in enumerate(self.holes))
        out.extend((('disc', i), d) for i, d in enumerate(self.discs))
        return out

    def face_vertex_set(self, ref: FaceRef) -> Set[int]:
        kind, i = ref
        if kind == 'block':
            return set(self.blocks[i].boundary)
        if kind == 'hole':
            return set(self.holes[i].boundary)
        return self.discs[i].vertex_set()

    def face_edge_set(self, ref: FaceRef) -> Set[Edge]:
        kind, i = ref
        if kind == 'block':
            return set(cycle_edges(self.blocks[i].boundary)) | self.blocks[i].braces
        if kind == 'hole':
            return set(cycle_edges(self.holes[i].boundary))
        d = self.discs[i]
        return d.triangulation_edges() | set(cycle_edges(d.boundary))

    # -- facial triangles and edge classification --------------------------

    def facial_triangles(self) -> Set[Triangle]:
        """All 3-cycles that bound a face or appear in a disc triangulation."""
        if self._facial_cache is None:
            out: Set[Triangle] = set()
            for f in self.faces():
                if len(f) == 3:
                    out.add(frozenset(f))
            for d in self.discs:
                out |= d.triangles
            for b in self.blocks:
                if len(b.boundary) == 3:
                    out.add(frozenset(b.boundary))
            for h in self.holes:
                if len(h.boundary) == 3:
                    out.add(frozenset(h.boundary))
            self._facial_cache = out
        return self._facial_cache

    def corner_owner(self, v: int, n1: int, n2: int) -> FaceRef:
        """Face occupying the corner at v between consecutive neighbours n1, n2."""
        if self._corner_cache is None:
            cache: Dict[Tuple[int, Triangle], FaceRef] = {}

            def put(v0, a, b, ref):
                k = (v0, frozenset((a, b)))
                if k in cache and cache[k] != ref:
                    raise TopologyError(f"ambiguous corner {k}: {cache[k]} vs {ref}")
                cache[k] = ref

            for i, d in enumerate(self.discs):
                for t in d.triangles:
                    a, b, c = sorted(t)
                    put(a, b, c, ('disc', i))
                    put(b, a, c, ('disc', i))
                    put(c, a, b, ('disc', i))
            for kind, faces in (('block', self.blocks), ('hole', self.holes)):
                for i, f in enumerate(faces):
                    cyc = f.boundary
                    n = len(cyc)
                    for j in range(n):
                        put(cyc[j], cyc[j - 1], cyc[(j + 1) % n], (kind, i))
            self._corner_cache = cache
        key = (v, frozenset((n1, n2)))
        try:
            return self._corner_cache[key]
        except KeyError:
            raise TopologyError(f"no face owns corner {key}") from None

    # -- validation ---------------------------------------------------------

    def validate(self) -> None:
        """Structural soundness: embedding, partition coverage, face invariants."""
        faces = self.topo.derive_faces()
        self._faces_cache = faces
        edges = self.edge_set()

        derived = {}
        for f in faces:
            k = canonical_cycle(f)
            derived[k] = derived.get(k, 0) + 1
        declared = {}
        for b in self.blocks:
            k = canonical_cycle(b.boundary)
            declared[k] = declared.get(k, 0) + 1
        for h in self.holes:
            k = canonical_cycle(h.boundary)
            declared[k] = declared.get(k, 0) + 1
        for d in self.discs:
            for t in d.triangles:
                k = canonical_cycle(sorted(t))
                declared[k] = declared.get(k, 0) + 1
        if derived != declared:
            missing = {k: v for k, v in derived.items() if declared.get(k) != v}
            extra = {k: v for k, v in declared.items() if derived.get(k) != v}
            raise TopologyError(
                f"face partition does not tile the sphere; unmatched derived={missing} "
                f"declared={extra}")

        owners: Dict[int, List[FaceRef]] = {v: [] for v in self.vertices}
        for ref, face in self.face_list():
            verts = self.face_vertex_set(ref)
            for v in verts:
                if v not in owners:
                    raise TopologyError(f"face {ref} names unknown vertex {v}")
                owners[v].append(ref)
        for v, refs in owners.items():
            if not refs:
                raise TopologyError(f"vertex {v} not covered by any face")

        for i, d in enumerate(self.discs):
            bset = set(d.boundary)
            if len(bset) != len(d.boundary):
                raise TopologyError(f"disc {i} boundary is not a simple cycle")
            if bset & d.interior:
                raise TopologyError(f"disc {i} interior meets its boundary")
            for e in cycle_edges(d.boundary):
                if e not in edges:
                    raise TopologyError(f"disc {i} boundary edge {e} missing from graph")
            dverts = d.vertex_set()
            for v in d.interior:
                for u in self.rotation[v]:
                    if u not in dverts:
                        raise TopologyError(
                            f"interior vertex {v} of disc {i} reaches outside the disc")
                for other, refs2 in ((x, owners[x]) for x in (v,)):
                    if len(refs2) != 1:
                        raise TopologyError(f"interior vertex {v} belongs to several faces")
            count: Dict[Edge, int] = {}
            for t in d.triangles:
                a, b, c = sorted(t)
                for e in (edge_key(a, b), edge_key(a, c), edge_key(b, c)):
                    if e not in edges:
                        raise TopologyError(f"disc {i} triangle edge {e} missing from graph")
                    count[e] = count.get(e, 0) + 1
            bedges = set(cycle_edges(d.boundary))
            for e, n in count.items():
                want = 1 if e in bedges else 2
                if n != want:
                    raise TopologyError(
                        f"disc {i}: edge {e} lies in {n} triangles, expected {want}")
            if d.triangles:
                for e in bedges:
                    if count.get(e, 0) != 1:
                        raise TopologyError(f"disc {i}: boundary edge {e} not covered")

        for i, b in enumerate(self.blocks):
            n = len(b.boundary)
            if len(set(b.boundary)) != n:
                raise TopologyError(f"block {i} boundary is not a simple cycle")
            if len(b.braces) != max(2 * n - 6, 0):
                raise TopologyError(
                    f"block {i}: {len(b.braces)} braces on a {n}-gon, expected {2 * n - 6}")
            bverts = set(b.boundary)
            for e in b.braces:
                if not set(e) <= bverts:
                    raise TopologyError(f"block {i} brace {e} leaves the boundary")
                if e in edges:
                    raise TopologyError(f"block {i} brace {e} duplicates a surface edge")
            for e in cycle_edges(b.boundary):
                if e not in edges:
                    raise TopologyError(f"block {i} boundary edge {e} missing")

        for i, h in enumerate(self.holes):
            if len(set(h.boundary)) != len(h.boundary):
                raise TopologyError(f"hole {i} boundary is not a simple cycle")
            for e in cycle_edges(h.boundary):
                if e not in edges:
                    raise TopologyError(f"hole {i} boundary edge {e} missing")


# -- predicates -------------------------------------------------------------


def derive_faces(graph: TopologicalGraph) -> List[List[int]]:
    """Face cycles of a rotation-system embedding (Euler-checked)."""
    return graph.derive_faces()


def is_nonfacial_triangle(p: Polyhedron, tri: Sequence[int]) -> bool:
    """True iff the 3-cycle exists in the surface graph but bounds no face.

    Such a triangle separates the sphere; its edges are the short edges.
    """
    a, b, c = tri
    edges = p.edge_set()
    for e in (edge_key(a, b), edge_key(a, c), edge_key(b, c)):
        if e not in edges:
            raise TopologyError(f"triangle {tri} misses edge {e}")
    return frozenset(tri) not in p.facial_triangles()


def is_long_edge(p: Polyhedron, e: Edge) -> bool:
    """True iff no separating triangle contains e.

    Scans the common neighbours of the endpoints; every common neighbour
    closes a triangle which is either a face (harmless) or a separating
    waist (making the edge short).
    """
    u, v = e
    if edge_key(u, v) not in p.edge_set():
        raise TopologyError(f"{e} is not a surface edge")
    facial = p.facial_triangles()
    common = set(p.rotation[u]) & set(p.rotation[v])
    return all(frozenset((u, v, w)) in facial for w in common)


def common_neighbors(p: Polyhedron, e: Edge) -> List[int]:
    u, v = e
    return sorted(set(p.rotation[u]) & set(p.rotation[v]))


def has_clean_boundary(p: Polyhedron, disc_index: int) -> bool:
    """True iff every chord between boundary vertices lies inside the disc."""
    d = p.discs[disc_index]
    inside = d.triangulation_edges() | set(cycle_edges(d.boundary))
    bverts = sorted(set(d.boundary))
    for i, u in enumerate(bverts):
        nbrs = set(p.rotation[u])
        for v in bverts[i + 1:]:
            if v in nbrs and edge_key(u, v) not in inside:
                return False
    return True


def boundary_run(cycle: Sequence[int], shared: Set[int]) -> Optional[List[int]]:
    """The shared vertices as one consecutive run of ``cycle``, or None.

    Returns the run in the cycle's own orientation.  A run covering the
    whole cycle is rejected (the faces would coincide).
    """
    n = len(cycle)
    flags = [v in shared for v in cycle]
    k = sum(flags)
    if k == 0 or k == n:
        return None
    for i in range(n):
        if flags[i] and not flags[(i - 1) % n]:
            run = [cycle[(i + j) % n] for j in range(k)]
            if all(v in shared for v in run):
                return run
            return None
    return None


def shared_path(p: Polyhedron, ref_a: FaceRef, ref_b: FaceRef) -> Optional[List[int]]:
    """The single boundary path two faces share, oriented along the first face.

    Returns None when they share at most one vertex; raises when the
    intersection is not a single path (the partition is malformed there).
    """
    va = p.face_vertex_set(ref_a)
    vb = p.face_vertex_set(ref_b)
    shared = va & vb
    if len(shared) <= 1:
        return None

    def cyc(ref):
        kind, i = ref
        if kind == 'block':
            return p.blocks[i].boundary
        if kind == 'hole':
            return p.holes[i].boundary
        return p.discs[i].boundary

    run_a = boundary_run(cyc(ref_a), shared)
    run_b = boundary_run(cyc(ref_b), shared)
    if run_a is None or run_b is None:
        raise TopologyError(
            f"faces {ref_a} and {ref_b} intersect in {sorted(shared)}, not a single path")
    ea = {edge_key(run_a[i], run_a[i + 1]) for i in range(len(run_a) - 1)}
    eb = {edge_key(run_b[i], run_b[i + 1]) for i in range(len(run_b) - 1)}
    if ea != eb:
        raise TopologyError(f"faces {ref_a} and {ref_b} share vertices but disagree on the path")
    return run_a


@dataclass
class WellDesignedReport:
    """Outcome of the structural conditions needed before contracting."""
    attachment_failures: List[str] = field(default_factory=list)
    surround_failures: List[str] = field(default_factory=list)
    coverage_failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.attachment_failures or self.surround_failures
                    or self.coverage_failures)

    def summary(self) -> str:
        if self.passed:
            return "well-designed: pass"
        lines = ["well-designed: FAIL"]
        for name, items in (("attachment", self.attachment_failures),
                            ("surround", self.surround_failures),
                            ("coverage", self.coverage_failures)):
            for it in items:
                lines.append(f"  [{name}] {it}")
        return "\n".join(lines)


def check_well_designed(p: Polyhedron) -> WellDesignedReport:
    """Check disc attachment, surrounding, and vertex coverage.

    Condition 1: every pair of triangulated discs sharing more than a vertex
    shares a single path, the path's inner vertices see only the two discs,
    and each disc keeps boundary edges off the path.

    Condition 2: around every disc, each neighbouring face meets it in a
    vertex or a single path, and every chord between its boundary vertices
    lies in one face.  A block or hole may share a longer path only if it is
    chord-free (its boundary path can then never become unclear).

    Condition 3: every vertex lies in some face.
    """
    report = WellDesignedReport()
    p.validate()

    disc_refs = [('disc', i) for i in range(len(p.discs))]
    all_refs = [ref for ref, _ in p.face_list()]

    for ai in range(len(disc_refs)):
        for bi in range(ai + 1, len(disc_refs)):
            ra, rb = disc_refs[ai], disc_refs[bi]
            try:
                path = shared_path(p, ra, rb)
            except TopologyError as exc:
                report.attachment_failures.append(str(exc))
                continue
            if path is None:
                continue
            da, db = p.discs[ra[1]], p.discs[rb[1]]
            union = da.vertex_set() | db.vertex_set()
            for v in path[1:-1]:
                outside = [u for u in p.rotation[v] if u not in union]
                if outside:
                    report.attachment_failures.append(
                        f"discs {ra[1]},{rb[1]}: path vertex {v} reaches {outside}")
            pedges = {edge_key(path[i], path[i + 1]) for i in range(len(path) - 1)}
            for r, d in ((ra, da), (rb, db)):
                off = [e for e in cycle_edges(d.boundary) if e not in pedges]
                if not off:
                    report.attachment_failures.append(
                        f"disc {r[1]} has no boundary edge off its path with the other disc")

    edges = p.edge_set()
    face_edges = {ref: p.face_edge_set(ref) for ref in all_refs}
    for di, d in enumerate(p.discs):
        ref = ('disc', di)
        bverts = set(d.boundary)
        for other in all_refs:
            if other == ref:
                continue
            overt = p.face_vertex_set(other)
            shared = overt & set(d.boundary)
            if len(shared) <= 1:
                continue
            try:
                path = shared_path(p, ref, other)
            except TopologyError as exc:
                report.surround_failures.append(str(exc))
                continue
            if path is None:
                report.surround_failures.append(
                    f"disc {di} meets {other} in isolated vertices {sorted(shared)}")
                continue
            if len(path) > 2 and other[0] != 'disc':
                kind, oi = other
                cyc = p.blocks[oi].boundary if kind == 'block' else p.holes[oi].boundary
                bnd = set(cyc)
                ring = set(cycle_edges(cyc))
                chords = [e for e in edges
                          if set(e) <= bnd and e not in ring]
                if kind == 'block':
                    chords = [e for e in chords if e not in p.blocks[oi].braces]
                if chords:
                    report.surround_failures.append(
                        f"disc {di} shares a long path with {other} which has chords {chords}")
        inside = face_edges[ref]
        for i, u in enumerate(sorted(bverts)):
            for v in sorted(bverts):
                if v <= u or v not in p.rotation[u]:
                    continue
                e = edge_key(u, v)
                if e in inside:
                    continue
                holders = [other for other in all_refs
                           if other != ref and e in face_edges[other]]
                if not holders:
                    report.surround_failures.append(
                        f"disc {di}: chord {e} lies in no surrounding face")

    covered: Set[int] = set()
    for ref, _ in p.face_list():
        covered |= p.face_vertex_set(ref)
    for v in p.vertices:
        if v not in covered:
            report.coverage_failures.append(f"vertex {v} lies in no face")
    return report
