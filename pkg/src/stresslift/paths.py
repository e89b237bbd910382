"""Oriented face paths and the two elementary homotopy moves.

A face path visits faces through designated shared edges.  Orienting it
assigns each step a flag (+1: the face's input cycle, -1: reversed) such
that consecutive *distinct* faces traverse their crossing edge in opposite
directions; the crossing is recorded in the direction the earlier face
traverses it.  A step that stays on the same face keeps the flag unchanged
(its crossing contributes nothing to lifts, and re-orienting there would
break invariance of lifts under the first elementary move).

On a non-orientable surface a path may revisit a face with the opposite
flag; flags belong to path steps, never to faces of the surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BoundaryVertex,
    NotAdjacent,
    PreconditionViolated,
)
from .surface import FacePath, edge_key


@dataclass(frozen=True)
class OrientedFacePath:
    """Steps ``(face id, flag)`` plus directed crossings, one per step pair."""

    steps: tuple
    crossings: tuple  # directed (tail, head) vertex pairs

    @property
    def faces(self):
        return tuple(f for f, _ in self.steps)

    @property
    def flags(self):
        return tuple(s for _, s in self.steps)

    @property
    def initial_flag(self):
        return self.steps[0][1]

    @property
    def final_flag(self):
        return self.steps[-1][1]

    @property
    def is_loop(self):
        return self.steps[0][0] == self.steps[-1][0]

    def face_path(self):
        return FacePath(self.faces,
                        tuple(edge_key(*c) for c in self.crossings))


def _traversal(complex_, face, flag, key):
    """Directed run of ``face`` (with ``flag``) through edge ``key``."""
    tail, head = complex_.face_edge_direction(face, key)
    return (tail, head) if flag > 0 else (head, tail)


def orient_face_path(framework, faces, crossings, initial_flag=1):
    """Orient a face path by propagating ``initial_flag`` from its first face.

    ``faces`` and ``crossings`` are as in :class:`FacePath` (crossings
    undirected).  Raises :class:`NotAdjacent` when a crossing edge is not an
    edge of both neighbouring faces.
    """
    cx = framework.complex
    faces = tuple(faces)
    crossings = tuple(edge_key(*c) for c in crossings)
    if len(crossings) != len(faces) - 1:
        raise PreconditionViolated("need one crossing per consecutive pair")
    if initial_flag not in (1, -1):
        raise PreconditionViolated("initial orientation flag must be +1 or -1")
    for f in faces:
        cx.face_index(f)

    steps = [(faces[0], initial_flag)]
    directed = []
    for k, key in enumerate(crossings):
        f, flag = steps[-1]
        g = faces[k + 1]
        for face in (f, g):
            if key not in cx._face_dirs[cx.face_index(face)]:
                raise NotAdjacent(
                    f"edge {key!r} is not an edge of face {face!r}")
        run = _traversal(cx, f, flag, key)
        directed.append(run)
        if g == f:
            steps.append((g, flag))
            continue
        # the later face must traverse the crossing in the other direction
        g_flag = 1 if _traversal(cx, g, 1, key) == (run[1], run[0]) else -1
        steps.append((g, g_flag))
    return OrientedFacePath(tuple(steps), tuple(directed))


def orient(framework, face_path, initial_flag=1):
    """Orient an undirected :class:`FacePath`."""
    return orient_face_path(framework, face_path.faces, face_path.crossings,
                            initial_flag)


def reversed_path(framework, oriented):
    """Traverse ``oriented`` backwards, starting from its final flag."""
    fp = oriented.face_path().reversed()
    return orient(framework, fp, oriented.final_flag)


# ---------------------------------------------------------------------------
# elementary moves
# ---------------------------------------------------------------------------

def _reorient(framework, oriented, faces, crossings):
    return orient_face_path(framework, faces, crossings,
                            oriented.initial_flag)


def move1(framework, oriented, position, aux_face, aux_edge):
    """Insert two copies of ``aux_face`` at crossing ``position``.

    The path ``(..., f_i, f_{i+1}, ...)`` with crossing ``e`` at ``position``
    becomes ``(..., f_i, g, g, f_{i+1}, ...)`` with crossings ``(e, ê, e)``
    where ``g = aux_face`` must contain ``e`` and ``ê = aux_edge`` must be an
    edge of ``g``.  The result is re-oriented from the original initial flag.
    """
    cx = framework.complex
    faces = list(oriented.faces)
    crossings = [edge_key(*c) for c in oriented.crossings]
    if not 0 <= position < len(crossings):
        raise PreconditionViolated(f"no crossing at position {position}")
    e = crossings[position]
    g_dirs = cx._face_dirs[cx.face_index(aux_face)]
    if e not in g_dirs:
        raise PreconditionViolated(
            f"face {aux_face!r} does not contain crossing edge {e!r}")
    aux_edge = edge_key(*aux_edge)
    if aux_edge not in g_dirs:
        raise PreconditionViolated(
            f"edge {aux_edge!r} is not an edge of face {aux_face!r}")
    new_faces = faces[:position + 1] + [aux_face, aux_face] + faces[position + 1:]
    new_crossings = (crossings[:position]
                     + [e, aux_edge, e]
                     + crossings[position + 1:])
    return _reorient(framework, oriented, new_faces, new_crossings)


def move1_inverse(framework, oriented, position):
    """Remove an ``(f_i, g, g, f_{i+1})`` pattern inserted at ``position``."""
    faces = list(oriented.faces)
    crossings = [edge_key(*c) for c in oriented.crossings]
    if not (0 <= position
            and position + 2 < len(crossings)
            and faces[position + 1] == faces[position + 2]
            and crossings[position] == crossings[position + 2]):
        raise PreconditionViolated(
            f"no doubled-face insertion at position {position}")
    new_faces = faces[:position + 1] + faces[position + 3:]
    new_crossings = crossings[:position] + crossings[position + 2:]
    return _reorient(framework, oriented, new_faces, new_crossings)


def vertex_star_walk(complex_, vertex, start_edge, start_face):
    """Faces and edges around an interior ``vertex``.

    Starting on ``start_face`` coming in through ``start_edge``, walks the
    closed umbrella until the other face of ``start_edge`` is reached.
    Returns ``(faces, edges)``: the visited faces ``g_1 .. g_k`` and the
    crossing edges between them (``k - 1`` of them).
    """
    if not complex_.is_interior_vertex(vertex):
        raise BoundaryVertex(f"vertex {vertex!r} is not interior")
    deg = len(complex_.edges_at_vertex(vertex))
    faces = [start_face]
    edges = []
    cur_face, cur_edge = start_face, start_edge
    for _ in range(deg - 1):
        at_v = [e for e in complex_.face_edges(cur_face)
                if vertex in e and e != cur_edge]
        nxt_edge = at_v[0]
        a, b = complex_.faces_of_edge(nxt_edge)
        nxt_face = b if a == cur_face else a
        edges.append(nxt_edge)
        faces.append(nxt_face)
        cur_face, cur_edge = nxt_face, nxt_edge
    return faces, edges


def vertex_loop(framework, vertex, start_face=None):
    """The face-loop around an interior vertex as a :class:`FacePath`.

    Deterministic: starts at the lowest-input-index incident face (unless
    ``start_face`` is given) and leaves it through the edge its cycle runs
    into ``vertex`` with.
    """
    cx = framework.complex
    if not cx.is_interior_vertex(vertex):
        raise BoundaryVertex(f"vertex {vertex!r} is not interior")
    if start_face is None:
        start_face = min(
            (f for f in cx.face_ids if vertex in cx.face_cycle(f)),
            key=cx.face_index)
    first_edge = next(e for e in cx.face_edges(start_face)
                      if vertex in e)
    a, b = cx.faces_of_edge(first_edge)
    second = b if a == start_face else a
    faces, edges = vertex_star_walk(cx, vertex, first_edge, second)
    return FacePath((start_face, *faces, start_face),
                    (first_edge, *edges, first_edge))


def move2(framework, oriented, position, pivot):
    """Replace crossing ``position`` by the face loop around ``pivot``.

    ``pivot`` must be an interior vertex lying on the crossing edge.  The
    step ``f_i -> f_{i+1}`` over ``e`` becomes ``f_i -> g_1 -> ... -> g_k ->
    f_{i+1}`` where ``g_1 = f_{i+1}``, ``g_k = f_i`` and the intermediate
    crossings run around the star of ``pivot``.
    """
    cx = framework.complex
    faces = list(oriented.faces)
    crossings = [edge_key(*c) for c in oriented.crossings]
    if not 0 <= position < len(crossings):
        raise PreconditionViolated(f"no crossing at position {position}")
    e = crossings[position]
    if pivot not in e:
        raise PreconditionViolated(
            f"pivot {pivot!r} is not an endpoint of crossing {e!r}")
    if not cx.is_interior_vertex(pivot):
        raise BoundaryVertex(f"vertex {pivot!r} is not interior")
    f_prev, f_next = faces[position], faces[position + 1]
    if f_prev == f_next:
        raise PreconditionViolated("crossing does not change face")
    star_faces, star_edges = vertex_star_walk(cx, pivot, e, f_next)
    if star_faces[-1] != f_prev:
        raise PreconditionViolated(
            f"star of {pivot!r} does not close onto face {f_prev!r}")
    new_faces = (faces[:position + 1] + star_faces + faces[position + 1:])
    new_crossings = (crossings[:position]
                     + [e] + star_edges + [e]
                     + crossings[position + 1:])
    return _reorient(framework, oriented, new_faces, new_crossings)


def move2_inverse(framework, oriented, position, pivot):
    """Remove a vertex loop around ``pivot`` inserted at ``position``."""
    cx = framework.complex
    faces = list(oriented.faces)
    crossings = [edge_key(*c) for c in oriented.crossings]
    if not cx.is_interior_vertex(pivot):
        raise BoundaryVertex(f"vertex {pivot!r} is not interior")
    deg = len(cx.edges_at_vertex(pivot))
    last = position + deg + 1
    if not (0 <= position and last < len(faces)):
        raise PreconditionViolated(f"no vertex loop at position {position}")
    e = crossings[position]
    segment_faces = faces[position + 1:last]
    segment_edges = crossings[position + 1:last - 1]
    if (pivot not in e or crossings[last - 1] != e
            or segment_faces[-1] != faces[position]):
        raise PreconditionViolated(f"no vertex loop at position {position}")
    expect_faces, expect_edges = vertex_star_walk(
        cx, pivot, e, faces[position + 1])
    if segment_faces != expect_faces or segment_edges != list(expect_edges):
        raise PreconditionViolated(f"no vertex loop at position {position}")
    new_faces = faces[:position + 1] + faces[last:]
    new_crossings = crossings[:position] + [e] + crossings[last:]
    return _reorient(framework, oriented, new_faces, new_crossings)
