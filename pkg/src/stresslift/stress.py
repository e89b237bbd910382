"""Planar frameworks with exact rational coordinates and their self-stresses.

The equilibrium condition at a vertex i for edge weights w is

    sum over edges {i, j}  of  w({i, j}) * (p_i - p_j)  =  (0, 0),

and a self-stress is a weight vector satisfying it at every vertex.  The
self-stress space is the exact rational kernel of the 2|V| x |E| system,
computed by fraction-free elimination (see :mod:`stresslift.linalg`), so
its dimension and basis carry no tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (
    UnknownEdgeKey,
    UnknownVertex,
    ValidationError,
    ZeroLengthEdge,
)
from .surface import edge_key


class Framework:
    """A surface complex drawn in the plane with exact rational positions.

    ``positions`` maps every vertex id to an ``(x, y)`` pair; coordinates
    are coerced to :class:`~fractions.Fraction`.  Edges with coincident
    endpoints are rejected (their supporting line is undefined).  Face
    polygons may self-intersect; no planarity of the drawing is assumed.
    """

    def __init__(self, complex_, positions):
        self.complex = complex_
        pos = {}
        for v, (x, y) in positions.items():
            pos[v] = (Fraction(x), Fraction(y))
        missing = [v for v in complex_.vertices if v not in pos]
        if missing:
            raise ValidationError(f"vertices without positions: {missing!r}")
        extra = [v for v in pos if v not in complex_._vertex_edges]
        if extra:
            raise ValidationError(f"positions for unknown vertices: {extra!r}")
        for u, v in complex_.edges:
            if pos[u] == pos[v]:
                raise ZeroLengthEdge(f"edge {(u, v)!r} has coincident endpoints")
        self.positions = pos

    def position(self, v):
        try:
            return self.positions[v]
        except KeyError:
            raise UnknownVertex(f"no vertex {v!r}") from None

    @property
    def edges(self):
        return self.complex.edges


class StressVector:
    """Symmetric edge weights; edges not present carry weight zero."""

    def __init__(self, weights=()):
        items = weights.items() if isinstance(weights, dict) else weights
        w = {}
        for key, value in items:
            u, v = key
            value = Fraction(value)
            k = edge_key(u, v)
            if k in w:
                raise ValueError(f"weight for edge {k!r} given twice")
            if value:
                w[k] = value
        self._w = w

    def weight(self, u, v=None):
        key = edge_key(*u) if v is None else edge_key(u, v)
        return self._w.get(key, Fraction(0))

    @property
    def support(self):
        """Edges with nonzero weight."""
        return frozenset(self._w)

    def items(self):
        return self._w.items()

    def is_zero(self):
        return not self._w

    def __eq__(self, other):
        if not isinstance(other, StressVector):
            return NotImplemented
        return self._w == other._w

    def __hash__(self):
        return hash(frozenset(self._w.items()))

    def __add__(self, other):
        out = dict(self._w)
        for k, v in other._w.items():
            out[k] = out.get(k, Fraction(0)) + v
        return StressVector(out)

    def scaled(self, factor):
        factor = Fraction(factor)
        return StressVector({k: factor * v for k, v in self._w.items()})

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in sorted(self._w.items()))
        return f"StressVector({{{inner}}})"

    def as_coordinates(self, framework):
        """Weights as a list aligned with the framework's edge order."""
        self.check_keys(framework)
        return [self._w.get(e, Fraction(0)) for e in framework.edges]

    def check_keys(self, framework):
        for k in self._w:
            if k not in framework.complex._edge_faces:
                raise UnknownEdgeKey(f"{k!r} is not an edge of the framework")


class StressBasis:
    """A linearly independent list of self-stresses."""

    def __init__(self, vectors):
        self.vectors = tuple(vectors)

    @property
    def dimension(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, k):
        return self.vectors[k]


def equilibrium_residual(framework, stress, vertex):
    """Exact weighted edge-vector sum at ``vertex``; (0, 0) iff balanced."""
    if vertex not in framework.positions:
        raise UnknownVertex(f"no vertex {vertex!r}")
    stress.check_keys(framework)
    px, py = framework.positions[vertex]
    rx = ry = Fraction(0)
    for e in framework.complex.edges_at_vertex(vertex):
        w = stress.weight(e)
        if not w:
            continue
        other = e[1] if e[0] == vertex else e[0]
        qx, qy = framework.positions[other]
        rx += w * (px - qx)
        ry += w * (py - qy)
    return (rx, ry)


def is_self_stress(framework, stress):
    """True iff the equilibrium residual vanishes at every vertex."""
    stress.check_keys(framework)
    zero = (Fraction(0), Fraction(0))
    return all(equilibrium_residual(framework, stress, v) == zero
               for v in framework.complex.vertices)


def interior_equilibrium_holds(framework, stress):
    """Equilibrium restricted to interior vertices (no incident boundary edge)."""
    stress.check_keys(framework)
    zero = (Fraction(0), Fraction(0))
    return all(equilibrium_residual(framework, stress, v) == zero
               for v in framework.complex.vertices
               if framework.complex.is_interior_vertex(v))


def equilibrium_matrix(framework):
    """Rows of the 2|V| x |E| equilibrium system, vertex and edge input order."""
    cx = framework.complex
    rows = []
    for v in cx.vertices:
        px, py = framework.positions[v]
        row_x = [Fraction(0)] * len(cx.edges)
        row_y = [Fraction(0)] * len(cx.edges)
        for e in cx.edges_at_vertex(v):
            other = e[1] if e[0] == v else e[0]
            qx, qy = framework.positions[other]
            col = cx.edge_index(e)
            row_x[col] = px - qx
            row_y[col] = py - qy
        rows.append(row_x)
        rows.append(row_y)
    return rows


def self_stress_basis(framework):
    """Deterministic exact basis of the self-stress space."""
    cx = framework.complex
    kernel = linalg.nullspace(equilibrium_matrix(framework), len(cx.edges))
    vectors = [StressVector(zip(cx.edges, coords)) for coords in kernel]
    return StressBasis(vectors)
