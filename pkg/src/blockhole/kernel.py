"""Exact generic-rigidity oracle.

Rigidity matrices are evaluated at random integer configurations and their
rank is computed exactly over the prime field F_p, p = 2^31 - 1.  Entries
stay below p, so every product during elimination fits in int64 and numpy
can vectorize the row operations.  A random configuration can only
under-estimate the generic rank, and does so with probability at most
|E| / p per trial (see docs/kernel.md), so agreement across independent
trials certifies the generic value for every practical purpose.  A
Fraction-based elimination over the rationals is kept alongside as an
independent oracle for small instances.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .graphs import Graph
from .topology import Edge, Polyhedron, edge_key

log = logging.getLogger(__name__)

PRIME = 2_147_483_647  # 2^31 - 1; squares fit in int64
DEFAULT_TRIALS = 3


class KernelError(Exception):
    pass


@dataclass(frozen=True)
class Framework:
    """A graph together with an integer configuration in 3-space."""
    graph: Graph
    config: Dict[int, Tuple[int, int, int]]

    def __post_init__(self):
        missing = [v for v in self.graph.vertices if v not in self.config]
        if missing:
            raise KernelError(f"configuration missing vertices {missing}")


def _affine_rank_mod_p(points: Sequence[Tuple[int, int, int]], p: int) -> int:
    base = points[0]
    rows = [[(x - base[0]) % p, (y - base[1]) % p, (z - base[2]) % p]
            for x, y, z in points[1:]]
    if not rows:
        return 0
    return rank_mod_p(np.array(rows, dtype=np.int64), p)


def random_framework(graph: Graph, rng: random.Random, p: int = PRIME) -> Framework:
    """Uniform configuration in [1, p-1]^3, resampled until it spans.

    Spanning means affine rank min(|V|-1, 3): no accidental collinearity
    (or coplanarity, once there are enough vertices).
    """
    want = min(len(graph.vertices) - 1, 3)
    while True:
        config = {v: (rng.randrange(1, p), rng.randrange(1, p), rng.randrange(1, p))
                  for v in graph.vertices}
        pts = [config[v] for v in graph.vertices]
        if _affine_rank_mod_p(pts, p) >= want:
            return Framework(graph, config)


def rigidity_matrix(fw: Framework, p: int = PRIME) -> np.ndarray:
    """|E| x 3|V| matrix over F_p.

    The row of edge {x, y} carries p(x)-p(y) in the column block of x and
    the negation in the block of y.
    """
    verts = fw.graph.vertices
    col = {v: 3 * i for i, v in enumerate(verts)}
    m = np.zeros((len(fw.graph.edges), 3 * len(verts)), dtype=np.int64)
    for r, (x, y) in enumerate(sorted(fw.graph.edges)):
        px, py = fw.config[x], fw.config[y]
        for k in range(3):
            d = (px[k] - py[k]) % p
            m[r, col[x] + k] = d
            m[r, col[y] + k] = (-d) % p
    return m


def rank_mod_p(matrix: np.ndarray, p: int = PRIME) -> int:
    """Gaussian elimination over F_p with pivoting on the first nonzero."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        below = a[r + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = r + 1 + hit
            a[idx] = (a[idx] - below[hit, None] * a[r]) % p
        r += 1
    return r


def rank_exact_rational(fw: Framework) -> int:
    """Row reduction with Fractions; the independent cross-check oracle."""
    verts = fw.graph.vertices
    col = {v: 3 * i for i, v in enumerate(verts)}
    rows: List[List[Fraction]] = []
    for x, y in sorted(fw.graph.edges):
        row = [Fraction(0)] * (3 * len(verts))
        px, py = fw.config[x], fw.config[y]
        for k in range(3):
            row[col[x] + k] = Fraction(px[k] - py[k])
            row[col[y] + k] = Fraction(py[k] - px[k])
        rows.append(row)
    rank = 0
    ncols = 3 * len(verts)
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def generic_rank(graph: Graph, trials: int = DEFAULT_TRIALS,
                 seed: Optional[int] = None, p: int = PRIME) -> int:
    """Maximum rigidity-matrix rank over independent random configurations."""
    if trials < 1:
        raise KernelError("trials must be at least 1")
    if not graph.edges:
        return 0
    rng = random.Random(seed)
    ranks = []
    for _ in range(trials):
        fw = random_framework(graph, rng, p)
        ranks.append(rank_mod_p(rigidity_matrix(fw, p), p))
    best = max(ranks)
    if any(r != best for r in ranks):
        log.warning("degenerate configuration detected: ranks %s, keeping %d",
                    ranks, best)
    return best


def idof(graph: Graph, trials: int = DEFAULT_TRIALS, seed: Optional[int] = None) -> int:
    """Internal degrees of freedom: 3|V| - 6 minus the generic rank."""
    if len(graph.vertices) < 3:
        raise KernelError("need at least 3 vertices; the space of trivial "
                          "motions is smaller below that")
    return 3 * len(graph.vertices) - 6 - generic_rank(graph, trials, seed)


def edge_independent(graph: Graph, e: Tuple[int, int],
                     trials: int = DEFAULT_TRIALS, seed: Optional[int] = None) -> bool:
    """True iff adding the bar raises the generic rank (removes one idof)."""
    key = edge_key(*e)
    if key in graph.edges:
        raise KernelError(f"edge {key} already present")
    base = generic_rank(graph, trials, seed)
    return generic_rank(graph.with_edge(*key), trials, seed) == base + 1


def hole_idof(graph: Graph, hole_boundary: Sequence[int],
              trials: int = DEFAULT_TRIALS, seed: Optional[int] = None) -> int:
    """Independent constraints still addable among a hole's boundary joints.

    Measured as the rank gained by saturating the boundary vertex set with
    every absent edge.
    """
    verts = list(hole_boundary)
    missing = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]
               if u != v and edge_key(u, v) not in graph.edges]
    if not missing:
        return 0
    base = generic_rank(graph, trials, seed)
    return generic_rank(graph.with_edges(missing), trials, seed) - base


@dataclass
class RigidityReport:
    vertices: int
    edges: int
    rank: int
    idof: int
    isostatic: bool
    independent: bool
    redundant_edges: List[Edge] = field(default_factory=list)
    trials: int = DEFAULT_TRIALS

    def as_text(self) -> str:
        lines = [f"vertices {self.vertices}",
                 f"edges {self.edges}",
                 f"rank {self.rank}",
                 f"idof {self.idof}",
                 f"isostatic {'yes' if self.isostatic else 'no'}",
                 f"independent {'yes' if self.independent else 'no'}",
                 f"trials {self.trials}"]
        if self.redundant_edges:
            flat = " ".join(f"{u}-{v}" for u, v in self.redundant_edges)
            lines.append(f"redundant-edges {flat}")
        else:
            lines.append("redundant-edges none")
        return "\n".join(lines)


def analyze_graph(graph: Graph, trials: int = DEFAULT_TRIALS,
                  seed: Optional[int] = None,
                  find_redundant: bool = True) -> RigidityReport:
    """Full verdict: rank, idof, isostatic flag and (optionally) bad bars."""
    nv, ne = len(graph.vertices), len(graph.edges)
    if nv < 3:
        raise KernelError("need at least 3 vertices")
    rank = generic_rank(graph, trials, seed)
    dof = 3 * nv - 6 - rank
    independent = rank == ne
    isostatic = independent and ne == 3 * nv - 6 and nv > 3
    redundant: List[Edge] = []
    if find_redundant and not independent:
        for e in sorted(graph.edges):
            if generic_rank(graph.without_edge(*e), trials, seed) == rank:
                redundant.append(e)
    return RigidityReport(nv, ne, rank, dof, isostatic, independent,
                          redundant, trials)


def analyze_polyhedron(p: Polyhedron, trials: int = DEFAULT_TRIALS,
                       seed: Optional[int] = None,
                       find_redundant: bool = True) -> RigidityReport:
    return analyze_graph(Graph.from_polyhedron(p), trials, seed, find_redundant)
