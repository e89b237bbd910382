"""Lifts along oriented face paths, monodromy analysis and liftings.

Crossing a directed edge ``(p, q)`` between two distinct faces contributes
the affine function

    (x, y)  |->  w({p, q}) * det(p - q, p - (x, y)),

which vanishes on the line through p and q; a step that stays on the same
face contributes nothing.  Summing the contributions along an oriented face
path gives the path lift.  For a self-stress the lift only depends on the
homotopy class of the path, loops around interior vertices lift to zero
(that is exactly the equilibrium condition), and a stress whose loop lifts
all vanish induces a piecewise-affine height function over the surface:
face by face, the lift of the tree path from a chosen base face.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    FoldMismatch,
    MissingFaceHeight,
    NotAdjacent,
    NotMonodromyFree,
    NotSelfStress,
    StressRecoveryError,
    UnknownEdgeKey,
)
from .paths import OrientedFacePath, orient, orient_face_path
from .stress import (
    StressBasis,
    StressVector,
    interior_equilibrium_holds,
    is_self_stress,
)
from .surface import CotreeLoopBasis, cotree_loop_basis, edge_key


@dataclass(frozen=True)
class AffineFunction:
    """The planar affine function (x, y) -> a*x + b*y + c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))

    def __call__(self, x, y):
        return self.a * Fraction(x) + self.b * Fraction(y) + self.c

    def __add__(self, other):
        return AffineFunction(self.a + other.a, self.b + other.b,
                              self.c + other.c)

    def __sub__(self, other):
        return AffineFunction(self.a - other.a, self.b - other.b,
                              self.c - other.c)

    def __neg__(self):
        return AffineFunction(-self.a, -self.b, -self.c)

    def scaled(self, factor):
        factor = Fraction(factor)
        return AffineFunction(factor * self.a, factor * self.b,
                              factor * self.c)

    def is_zero(self):
        return not (self.a or self.b or self.c)

    def coefficients(self):
        return (self.a, self.b, self.c)

    def __str__(self):
        return f"{self.a} {self.b} {self.c}"


ZERO_FUNCTION = AffineFunction(0, 0, 0)


def edge_line_form(p, q):
    """det(p - q, p - (x, y)) as an :class:`AffineFunction`.

    Vanishes exactly on the line through p and q; reversing the direction
    negates it.
    """
    px, py = p
    qx, qy = q
    return AffineFunction(py - qy, qx - px, px * qy - py * qx)


def elementary_lift(framework, stress, f_prev, f_next, directed_edge):
    """Contribution of one crossing, directed as the earlier face runs it."""
    p, q = directed_edge
    key = edge_key(p, q)
    cx = framework.complex
    if key not in cx._edge_faces:
        raise UnknownEdgeKey(f"{key!r} is not an edge of the framework")
    for face in (f_prev, f_next):
        if key not in cx._face_dirs[cx.face_index(face)]:
            raise NotAdjacent(f"edge {key!r} is not an edge of face {face!r}")
    if f_prev == f_next:
        return ZERO_FUNCTION
    w = stress.weight(key)
    if not w:
        return ZERO_FUNCTION
    return edge_line_form(framework.position(p),
                          framework.position(q)).scaled(w)


def path_lift(framework, stress, oriented):
    """Sum of elementary lifts along an oriented face path."""
    stress.check_keys(framework)
    total = ZERO_FUNCTION
    for k, directed in enumerate(oriented.crossings):
        f_prev = oriented.steps[k][0]
        f_next = oriented.steps[k + 1][0]
        total = total + elementary_lift(framework, stress, f_prev, f_next,
                                        directed)
    return total


def _symbolic_lift(framework, oriented):
    """Per-edge affine coefficient of the path lift, as a dict edge -> triple."""
    acc = {}
    for k, directed in enumerate(oriented.crossings):
        if oriented.steps[k][0] == oriented.steps[k + 1][0]:
            continue
        key = edge_key(*directed)
        form = edge_line_form(framework.position(directed[0]),
                              framework.position(directed[1]))
        if key in acc:
            acc[key] = acc[key] + form
        else:
            acc[key] = form
    return acc


class MonodromyMatrix:
    """Loop lifts as exact linear functionals of the edge weights.

    Row block ``3*i .. 3*i+2`` gives the a, b, c coefficients of loop ``i``'s
    lift; columns follow the framework's edge input order.
    """

    def __init__(self, framework, loop_basis):
        self.framework = framework
        self.loop_basis = loop_basis
        self.loops = loop_basis.loops
        edges = framework.edges
        rows = []
        for loop in self.loops:
            acc = _symbolic_lift(framework, orient(framework, loop))
            block = [[Fraction(0)] * len(edges) for _ in range(3)]
            for key, form in acc.items():
                col = framework.complex.edge_index(key)
                block[0][col], block[1][col], block[2][col] = \
                    form.coefficients()
            rows.extend(block)
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def shape(self):
        return (len(self.rows), len(self.framework.edges))

    def evaluate(self, stress):
        """Loop lifts of ``stress``, one :class:`AffineFunction` per loop."""
        coords = stress.as_coordinates(self.framework)
        out = []
        for i in range(len(self.loops)):
            a, b, c = (
                sum((row[j] * coords[j] for j in range(len(coords))),
                    Fraction(0))
                for row in self.rows[3 * i:3 * i + 3])
            out.append(AffineFunction(a, b, c))
        return tuple(out)


def monodromy_matrix(framework, loop_basis=None, base_face=None):
    """Symbolic loop-lift functionals over a cotree loop basis."""
    if loop_basis is None:
        if base_face is None:
            base_face = framework.complex.face_ids[0]
        loop_basis = cotree_loop_basis(framework.complex, base_face)
    return MonodromyMatrix(framework, loop_basis)


def monodromy_free_basis(framework, base_face=None):
    """Exact basis of the self-stresses whose loop lifts all vanish.

    Computed as the kernel of the monodromy matrix restricted to the
    self-stress space.  All cotree loops are used (not a minimal homology
    basis): loops around interior vertices and torsion loops vanish on
    self-stresses automatically, so nothing is lost and no torsion
    bookkeeping is needed.
    """
    from .stress import self_stress_basis  # local to avoid cycle at import

    basis = self_stress_basis(framework)
    if basis.dimension == 0:
        return StressBasis(())
    matrix = monodromy_matrix(framework, base_face=base_face)
    if not matrix.loops:
        return basis
    columns = []
    for vec in basis:
        lifts = matrix.evaluate(vec)
        col = []
        for fn in lifts:
            col.extend(fn.coefficients())
        columns.append(col)
    # rows: one per loop coefficient, columns indexed by basis member
    rows = [[columns[j][i] for j in range(basis.dimension)]
            for i in range(len(columns[0]))]
    kernel = linalg.nullspace(rows, basis.dimension)
    vectors = []
    for coeffs in kernel:
        combo = StressVector()
        for c, vec in zip(coeffs, basis):
            if c:
                combo = combo + vec.scaled(c)
        vectors.append(combo)
    return StressBasis(vectors)


def stress_monodromy_rank(framework, base_face=None):
    """Rank of the monodromy functionals restricted to the stress space."""
    from .stress import self_stress_basis

    basis = self_stress_basis(framework)
    if basis.dimension == 0:
        return 0
    matrix = monodromy_matrix(framework, base_face=base_face)
    if not matrix.loops:
        return 0
    rows = []
    for vec in basis:
        row = []
        for fn in matrix.evaluate(vec):
            row.extend(fn.coefficients())
        rows.append(row)
    # members as rows; rank over the stress space equals rank of transpose
    return linalg.rank(rows, 3 * len(matrix.loops))


# ---------------------------------------------------------------------------
# liftings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LiftingResult:
    """Per-face affine heights of the tree lifting from ``base_face``."""

    base_face: str
    heights: dict
    tree: CotreeLoopBasis
    face_flags: dict

    def height(self, face_id):
        try:
            return self.heights[face_id]
        except KeyError:
            raise MissingFaceHeight(f"no height for face {face_id!r}") from None


@dataclass(frozen=True)
class FundamentalDomainLifting:
    """Tree lifting plus the loop monodromy attached to each cut edge."""

    lifting: LiftingResult
    cut_edges: tuple
    monodromy_generators: dict

    @property
    def base_face(self):
        return self.lifting.base_face

    @property
    def heights(self):
        return self.lifting.heights

    @property
    def is_single_valued(self):
        return all(g.is_zero() for g in self.monodromy_generators.values())

    def height(self, face_id):
        return self.lifting.height(face_id)


def _tree_heights(framework, stress, loop_basis, initial_flag=1):
    """Heights and orientation flags along the dual spanning tree."""
    cx = framework.complex
    base = loop_basis.base_face
    heights = {base: ZERO_FUNCTION}
    flags = {base: initial_flag}
    for f in loop_basis.discovery_order[1:]:
        parent, key = loop_basis.parent[f]
        tail, head = cx.face_edge_direction(parent, key)
        if flags[parent] < 0:
            tail, head = head, tail
        contribution = elementary_lift(framework, stress, parent, f,
                                       (tail, head))
        heights[f] = heights[parent] + contribution
        # the child must run the crossing the other way
        t2, h2 = cx.face_edge_direction(f, key)
        flags[f] = 1 if (t2, h2) == (head, tail) else -1
    return heights, flags


def loop_lifts(framework, stress, loop_basis, initial_flag=1):
    """Lift of every cotree loop, keyed by its cotree edge."""
    out = {}
    for e, loop in zip(loop_basis.cotree_edges, loop_basis.loops):
        out[e] = path_lift(framework, stress,
                           orient(framework, loop, initial_flag))
    return out


def lift_all_faces(framework, stress, base_face, initial_flag=1):
    """Single-valued lifting of a monodromy-free stress, zero on the base.

    Raises :class:`NotMonodromyFree` when some loop lift of ``stress`` is
    nonzero; loops around interior vertices are tested through their
    equivalent equilibrium conditions, all cotree loops directly.
    """
    stress.check_keys(framework)
    framework.complex.face_index(base_face)
    if not interior_equilibrium_holds(framework, stress):
        raise NotMonodromyFree(
            "a face-loop around an interior vertex has a nonzero lift")
    basis = cotree_loop_basis(framework.complex, base_face)
    for e, lift in loop_lifts(framework, stress, basis, initial_flag).items():
        if not lift.is_zero():
            raise NotMonodromyFree(
                f"the loop through cut edge {e!r} lifts to {lift}")
    heights, flags = _tree_heights(framework, stress, basis, initial_flag)
    return LiftingResult(base_face, heights, basis, flags)


def fundamental_domain_lifting(framework, stress, base_face, initial_flag=1):
    """Tree lifting of any self-stress plus per-cut-edge monodromy.

    The surface cut along the cotree edges is simply connected, so every
    self-stress lifts single-valuedly over it; each cut edge records the
    lift of its cotree loop.  All generators zero means the lifting is a
    single-valued lifting of the whole surface.
    """
    stress.check_keys(framework)
    framework.complex.face_index(base_face)
    if not is_self_stress(framework, stress):
        raise NotSelfStress("fundamental domains require a self-stress")
    basis = cotree_loop_basis(framework.complex, base_face)
    generators = loop_lifts(framework, stress, basis, initial_flag)
    heights, flags = _tree_heights(framework, stress, basis, initial_flag)
    lifting = LiftingResult(base_face, heights, basis, flags)
    return FundamentalDomainLifting(lifting, basis.cotree_edges, generators)


# ---------------------------------------------------------------------------
# stress recovery from heights
# ---------------------------------------------------------------------------

def _fold_weight(difference, form):
    """Solve ``difference == w * form`` exactly, or raise FoldMismatch."""
    if form.a:
        w = difference.a / form.a
    elif form.b:
        w = difference.b / form.b
    else:  # pragma: no cover - forms of real edges never degenerate
        raise FoldMismatch("edge line form is degenerate")
    if form.scaled(w) != difference:
        raise FoldMismatch(
            f"height difference {difference} does not fold over {form}")
    return w


def recover_stress(framework, heights, base_face=None, initial_flag=1):
    """Invert a lifting: read edge weights back off the face heights.

    ``heights`` maps every face to its :class:`AffineFunction` (a
    :class:`LiftingResult` or :class:`FundamentalDomainLifting` is also
    accepted, supplying its own base face).  Weights of interior edges come
    from the fold between the two incident heights -- mandatory across the
    spanning tree (:class:`FoldMismatch` otherwise), opportunistic
    elsewhere.  Edges whose fold is inconsistent (cuts of a multi-valued
    lifting) and boundary edges are completed through the equilibrium
    system; the completion must exist and be unique, else
    :class:`StressRecoveryError` is raised.
    """
    if isinstance(heights, (LiftingResult, FundamentalDomainLifting)):
        if base_face is None:
            base_face = heights.base_face
        if isinstance(heights, FundamentalDomainLifting):
            heights = heights.lifting.heights
        else:
            heights = heights.heights
    cx = framework.complex
    if base_face is None:
        base_face = cx.face_ids[0]
    for f in cx.face_ids:
        if f not in heights:
            raise MissingFaceHeight(f"no height for face {f!r}")

    basis = cotree_loop_basis(cx, base_face)
    _, flags = _tree_heights(framework, StressVector(), basis, initial_flag)

    weights = {}
    unknown = []
    for e in cx.edges:
        faces = cx.faces_of_edge(e)
        if len(faces) == 1:
            unknown.append(e)
            continue
        if e in basis.tree_edges:
            child = next(f for f in faces
                         if basis.parent[f] is not None
                         and basis.parent[f][1] == e
                         and basis.parent[f][0] in faces)
            earlier = basis.parent[child][0]
        else:
            earlier, child = faces
        tail, head = cx.face_edge_direction(earlier, e)
        if flags[earlier] < 0:
            tail, head = head, tail
        form = edge_line_form(framework.position(tail),
                              framework.position(head))
        difference = heights[child] - heights[earlier]
        try:
            weights[e] = _fold_weight(difference, form)
        except FoldMismatch:
            if e in basis.tree_edges:
                raise
            unknown.append(e)

    if not unknown:
        return StressVector(weights)

    # complete the undetermined edges so the whole vector is a self-stress
    known = StressVector(weights)
    cols = {e: i for i, e in enumerate(unknown)}
    rows = []
    rhs = []
    for v in cx.vertices:
        px, py = framework.positions[v]
        row_x = [Fraction(0)] * len(unknown)
        row_y = [Fraction(0)] * len(unknown)
        bx = by = Fraction(0)
        for e in cx.edges_at_vertex(v):
            other = e[1] if e[0] == v else e[0]
            qx, qy = framework.positions[other]
            if e in cols:
                row_x[cols[e]] = px - qx
                row_y[cols[e]] = py - qy
            else:
                w = known.weight(e)
                bx -= w * (px - qx)
                by -= w * (py - qy)
        rows.extend((row_x, row_y))
        rhs.extend((bx, by))
    particular, kernel = linalg.solve(rows, rhs, len(unknown))
    if particular is None:
        raise StressRecoveryError(
            "heights are not the lifting of any self-stress")
    if kernel:
        raise StressRecoveryError(
            "several self-stresses fit the heights; completion is ambiguous")
    for e, w in zip(unknown, particular):
        if w:
            weights[e] = w
    return StressVector(weights)
