"""Combinatorial polygonal surfaces.

A surface complex is given by faces only -- each face is a cyclic sequence
of at least three distinct vertex ids -- and everything else (edges, edge ->
face incidences, boundary, dual graph) is derived.  Validation enforces that
the data actually describes a compact surface, possibly with boundary:

* every edge lies in one face (boundary) or two faces (interior),
* the 1-skeleton and the dual graph are connected,
* every vertex star is a single fan (boundary vertex) or a single closed
  umbrella (interior vertex), so the boundary is a disjoint union of circles.

All objects are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .errors import (
    DegenerateFace,
    DisconnectedDual,
    DisconnectedSkeleton,
    DuplicateId,
    EdgeOverused,
    NonSurfaceVertexStar,
    RepeatedVertexInFace,
    UnknownFace,
    UnknownVertexRef,
    ValidationError,
)


def edge_key(u, v):
    """Canonical undirected key for the edge between vertices ``u`` and ``v``."""
    return (u, v) if u <= v else (v, u)


class SurfaceComplex:
    """Validated polygonal surface; construct via :func:`validate_surface`."""

    def __init__(self, vertices, face_ids, face_cycles):
        self.vertices = tuple(vertices)
        self.face_ids = tuple(face_ids)
        self.face_cycles = tuple(tuple(c) for c in face_cycles)
        self._face_index = {f: i for i, f in enumerate(self.face_ids)}

        # Derived incidence data, all in deterministic input order.
        edges = []
        edge_faces = {}
        face_dirs = []  # per face: edge key -> (tail, head) as the cycle runs
        for fi, cycle in enumerate(self.face_cycles):
            dirs = {}
            for k, tail in enumerate(cycle):
                head = cycle[(k + 1) % len(cycle)]
                key = edge_key(tail, head)
                if key not in edge_faces:
                    edge_faces[key] = []
                    edges.append(key)
                edge_faces[key].append(fi)
                dirs[key] = (tail, head)
            face_dirs.append(dirs)
        self.edges = tuple(edges)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self._edge_faces = {e: tuple(fs) for e, fs in edge_faces.items()}
        self._face_dirs = face_dirs
        self.interior_edges = tuple(e for e in edges if len(edge_faces[e]) == 2)
        self.boundary_edges = tuple(e for e in edges if len(edge_faces[e]) == 1)

        vertex_edges = {v: [] for v in self.vertices}
        for e in self.edges:
            vertex_edges[e[0]].append(e)
            vertex_edges[e[1]].append(e)
        self._vertex_edges = {v: tuple(es) for v, es in vertex_edges.items()}

    # -- lookups ---------------------------------------------------------

    def face_index(self, face_id):
        try:
            return self._face_index[face_id]
        except KeyError:
            raise UnknownFace(f"no face {face_id!r}") from None

    def face_cycle(self, face_id):
        return self.face_cycles[self.face_index(face_id)]

    def has_edge(self, u, v):
        return edge_key(u, v) in self._edge_faces

    def edge_index(self, key):
        return self._edge_index[key]

    def faces_of_edge(self, key):
        """Face ids incident to the edge, in face input order."""
        return tuple(self.face_ids[i] for i in self._edge_faces[key])

    def edges_at_vertex(self, v):
        return self._vertex_edges[v]

    def face_edge_direction(self, face_id, key):
        """How ``face_id``'s input cycle runs through edge ``key``."""
        return self._face_dirs[self.face_index(face_id)][key]

    def face_edges(self, face_id):
        """Edge keys of a face in boundary-cycle order."""
        cycle = self.face_cycle(face_id)
        return tuple(edge_key(cycle[k], cycle[(k + 1) % len(cycle)])
                     for k in range(len(cycle)))

    def is_interior_vertex(self, v):
        if v not in self._vertex_edges:
            return False
        return all(len(self._edge_faces[e]) == 2 for e in self._vertex_edges[v])

    def dual_neighbors(self, face_id):
        """(neighbor face id, shared edge) pairs, neighbors in input order.

        When two faces share several edges the pair appears once per edge,
        edges in global input order.
        """
        fi = self.face_index(face_id)
        found = []
        for e in self.face_edges(face_id):
            for gi in self._edge_faces[e]:
                if gi != fi:
                    found.append((gi, self._edge_index[e], e))
        found.sort(key=lambda t: (t[0], t[1]))
        return tuple((self.face_ids[gi], e) for gi, _, e in found)


def _check_vertex_stars(complex_):
    """Every star must be one fan or one umbrella (link = path or cycle)."""
    for v in complex_.vertices:
        nodes = complex_.edges_at_vertex(v)
        adj = {e: [] for e in nodes}
        for fi, dirs in enumerate(complex_._face_dirs):
            at_v = [e for e in dirs if v in e]
            if not at_v:
                continue
            if len(at_v) != 2:
                raise NonSurfaceVertexStar(
                    f"face {complex_.face_ids[fi]!r} meets vertex {v!r} "
                    f"in {len(at_v)} edges")
            a, b = at_v
            adj[a].append(b)
            adj[b].append(a)
        degs = [len(adj[e]) for e in nodes]
        if any(d > 2 for d in degs):
            raise NonSurfaceVertexStar(f"vertex {v!r} has a branching star")
        # connectivity of the link
        seen = {nodes[0]}
        queue = deque([nodes[0]])
        while queue:
            for nxt in adj[queue.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        if len(seen) != len(nodes):
            raise NonSurfaceVertexStar(
                f"vertex {v!r} joins several surface sheets")
        odd = degs.count(1)
        if odd not in (0, 2):
            raise NonSurfaceVertexStar(
                f"vertex {v!r} lies on {odd} boundary edges")


def validate_surface(faces, vertex_ids=None):
    """Build a :class:`SurfaceComplex` from ``faces``.

    ``faces`` is a sequence of ``(face_id, vertex id sequence)`` pairs; the
    vertex sequence is read cyclically.  ``vertex_ids`` optionally fixes the
    vertex order (ids not used by any face make the skeleton disconnected
    and are rejected).  Raises a :class:`ValidationError` subclass on the
    first problem found.
    """
    faces = list(faces)
    if not faces:
        raise ValidationError("empty face list")

    face_ids = []
    face_cycles = []
    seen_faces = set()
    for face_id, cycle in faces:
        cycle = tuple(cycle)
        if face_id in seen_faces:
            raise DuplicateId(f"face {face_id!r} declared twice")
        seen_faces.add(face_id)
        if len(cycle) < 3:
            raise DegenerateFace(
                f"face {face_id!r} has {len(cycle)} vertices, need >= 3")
        if len(set(cycle)) != len(cycle):
            raise RepeatedVertexInFace(
                f"face {face_id!r} repeats a vertex in its cycle")
        face_ids.append(face_id)
        face_cycles.append(cycle)

    derived = []
    derived_set = set()
    for cycle in face_cycles:
        for v in cycle:
            if v not in derived_set:
                derived_set.add(v)
                derived.append(v)
    if vertex_ids is None:
        vertices = derived
    else:
        vertices = list(vertex_ids)
        if len(set(vertices)) != len(vertices):
            raise DuplicateId("vertex id declared twice")
        missing = derived_set - set(vertices)
        if missing:
            raise UnknownVertexRef(
                f"faces use undeclared vertices {sorted(missing)!r}")
        unused = set(vertices) - derived_set
        if unused:
            raise DisconnectedSkeleton(
                f"vertices {sorted(unused)!r} belong to no face")

    complex_ = SurfaceComplex(vertices, face_ids, face_cycles)

    for e in complex_.edges:
        count = len(complex_._edge_faces[e])
        if count > 2:
            raise EdgeOverused(f"edge {e!r} lies in {count} faces")

    # skeleton connectivity
    start = complex_.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for e in complex_.edges_at_vertex(v):
            w = e[1] if e[0] == v else e[0]
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(complex_.vertices):
        raise DisconnectedSkeleton("the vertex-edge graph is not connected")

    # dual connectivity through interior edges
    seen_f = {complex_.face_ids[0]}
    queue = deque([complex_.face_ids[0]])
    while queue:
        f = queue.popleft()
        for g, _e in complex_.dual_neighbors(f):
            if g not in seen_f:
                seen_f.add(g)
                queue.append(g)
    if len(seen_f) != len(complex_.face_ids):
        raise DisconnectedDual("the dual graph is not connected")

    _check_vertex_stars(complex_)
    return complex_


# ---------------------------------------------------------------------------
# topology report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TopologyReport:
    euler_characteristic: int
    is_closed: bool
    is_orientable: bool
    betti1_rank: int
    boundary_component_count: int


def face_orientations(complex_):
    """Breadth-first orientation flags over the dual graph.

    Returns ``(flags, consistent)``: ``flags`` maps face id -> +1/-1 relative
    to the input cycle; ``consistent`` is False when some interior edge is
    traversed the same way by both its (flagged) faces, i.e. the surface is
    non-orientable.
    """
    flags = {complex_.face_ids[0]: 1}
    queue = deque([complex_.face_ids[0]])
    while queue:
        f = queue.popleft()
        for g, e in complex_.dual_neighbors(f):
            df = complex_.face_edge_direction(f, e)
            dg = complex_.face_edge_direction(g, e)
            # opposite traversal with both input cycles -> same flag
            needed = flags[f] if df != dg else -flags[f]
            if g not in flags:
                flags[g] = needed
                queue.append(g)
    consistent = True
    for e in complex_.interior_edges:
        f, g = complex_.faces_of_edge(e)
        df = complex_.face_edge_direction(f, e)
        dg = complex_.face_edge_direction(g, e)
        same_input = df == dg
        if (flags[f] == flags[g]) == same_input:
            consistent = False
            break
    return flags, consistent


def _boundary_components(complex_):
    verts = set()
    adj = {}
    for e in complex_.boundary_edges:
        u, v = e
        verts.update(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    count = 0
    seen = set()
    for v in sorted(verts):
        if v in seen:
            continue
        count += 1
        seen.add(v)
        queue = deque([v])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return count

def topology_report(complex_):
    """Euler characteristic, closedness, orientability and first Betti rank."""
    chi = (len(complex_.vertices) - len(complex_.edges)
           + len(complex_.face_ids))
    closed = not complex_.boundary_edges
    _, orientable = face_orientations(complex_)
    betti1 = 1 - chi + (1 if closed and orientable else 0)
    return TopologyReport(
        euler_characteristic=chi,
        is_closed=closed,
        is_orientable=orientable,
        betti1_rank=betti1,
        boundary_component_count=_boundary_components(complex_),
    )


# ---------------------------------------------------------------------------
# face paths, dual spanning tree, cotree loops
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FacePath:
    """Faces joined by designated shared (undirected) crossing edges."""

    faces: tuple
    crossings: tuple

    def __post_init__(self):
        if len(self.crossings) != max(len(self.faces) - 1, 0):
            raise ValueError("need one crossing per consecutive face pair")

    @property
    def is_loop(self):
        return len(self.faces) >= 1 and self.faces[0] == self.faces[-1]

    def reversed(self):
        return FacePath(tuple(reversed(self.faces)),
                        tuple(reversed(self.crossings)))


class CotreeLoopBasis:
    """Deterministic dual spanning tree plus one face-loop per cotree edge.

    The tree is grown breadth-first from ``base_face`` with neighbors taken
    in face input order (ties between parallel shared edges broken by edge
    input order).  Each non-tree interior edge ``e`` with incident faces
    ``(a, b)`` (face input order) yields the loop: tree path base -> a,
    cross ``e`` to ``b``, tree path b -> base.
    """

    def __init__(self, complex_, base_face):
        complex_.face_index(base_face)  # raises UnknownFace
        self.complex = complex_
        self.base_face = base_face
        parent = {base_face: None}  # face -> (parent face, tree edge)
        order = [base_face]
        queue = deque([base_face])
        tree_edges = []
        while queue:
            f = queue.popleft()
            for g, e in complex_.dual_neighbors(f):
                if g not in parent:
                    parent[g] = (f, e)
                    order.append(g)
                    tree_edges.append(e)
                    queue.append(g)
        self.parent = parent
        self.discovery_order = tuple(order)
        self.tree_edges = frozenset(tree_edges)
        self.cotree_edges = tuple(e for e in complex_.interior_edges
                                  if e not in self.tree_edges)
        loops = []
        for e in self.cotree_edges:
            a, b = complex_.faces_of_edge(e)
            out = self.path_from_base(a)
            back = self.path_to_base(b)
            loops.append(FacePath(out.faces + back.faces,
                                  out.crossings + (e,) + back.crossings))
        self.loops = tuple(loops)

    def _chain_to_base(self, face):
        chain = [(face, None)]
        f = face
        while self.parent[f] is not None:
            pf, e = self.parent[f]
            chain.append((pf, e))
            f = pf
        return chain  # [(face, edge crossed to reach previous entry), ...]

    def path_from_base(self, face):
        chain = self._chain_to_base(face)
        faces = tuple(f for f, _ in reversed(chain))
        crossings = tuple(e for _, e in reversed(chain[1:]))
        return FacePath(faces, crossings)

    def path_to_base(self, face):
        return self.path_from_base(face).reversed()


def cotree_loop_basis(complex_, base_face):
    """Spanning-tree loop basis of the dual graph rooted at ``base_face``."""
    return CotreeLoopBasis(complex_, base_face)


def tree_face_path(complex_, basis, src, dst):
    """The unique face path from ``src`` to ``dst`` inside the dual tree."""
    complex_.face_index(src)
    complex_.face_index(dst)
    up = basis._chain_to_base(src)      # src ... base
    down = basis._chain_to_base(dst)    # dst ... base
    up_faces = [f for f, _ in up]
    down_faces = [f for f, _ in down]
    # strip the common tail ending at the base, keep the meeting face
    i, j = len(up_faces) - 1, len(down_faces) - 1
    while i > 0 and j > 0 and up_faces[i - 1] == down_faces[j - 1]:
        i -= 1
        j -= 1
    faces = up_faces[:i + 1] + down_faces[:j][::-1]
    crossings = ([e for _, e in up[1:i + 1]]
                 + [e for _, e in down[1:j + 1]][::-1])
    return FacePath(tuple(faces), tuple(crossings))
