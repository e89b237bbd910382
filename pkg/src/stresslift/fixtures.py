"""Deterministic test surfaces.

Every generator is a pure function of its integer parameters: identical
calls produce identical frameworks, so downstream bases, liftings and
serialized files are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterTooSmall
from .lifting import AffineFunction, recover_stress
from .stress import Framework
from .surface import validate_surface


def fan_disk():
    """Three triangles sharing a hub: the smallest surface with a cone lift.

    Hub O at the centroid of A, B, C; the one-dimensional stress space is
    spanned by spoke weight 1 with rim weight -1/3.
    """
    faces = [
        ("OAB", ("O", "A", "B")),
        ("OBC", ("O", "B", "C")),
        ("OCA", ("O", "C", "A")),
    ]
    positions = {
        "A": (0, 0),
        "B": (3, 0),
        "C": (0, 3),
        "O": (1, 1),
    }
    return Framework(validate_surface(faces), positions)


# ---------------------------------------------------------------------------
# the 9-vertex quadrangulated torus with a triangular-prism stress
# ---------------------------------------------------------------------------

_PRISM_TORUS_POSITIONS = {
    "p1": (0, 0), "p2": (4, 0), "p3": (5, 1),
    "p4": (1, 1), "p5": (0, 4), "p6": (1, 5),
    "p7": (-1, 2), "p8": (3, 2), "p9": (-1, 6),
}

_PRISM_TORUS_FACES = [
    ("f0", ("p1", "p2", "p3", "p4")),
    ("f1", ("p4", "p7", "p8", "p3")),
    ("f2", ("p1", "p7", "p8", "p2")),
    ("f3", ("p2", "p5", "p6", "p3")),
    ("f4", ("p3", "p8", "p9", "p6")),
    ("f5", ("p2", "p8", "p9", "p5")),
    ("f6", ("p1", "p4", "p6", "p5")),
    ("f7", ("p4", "p7", "p9", "p6")),
    ("f8", ("p1", "p5", "p9", "p7")),
]


@dataclass(frozen=True)
class ReferenceLifting:
    """Published heights of a multi-valued lifting, one representative per
    face, together with the constant lattice step separating its sheets."""

    base_face: str
    heights: dict
    lattice_step: Fraction


def prism_torus():
    """Quadrangulated torus (9 vertices, 9 quads) with a hidden prism stress.

    The framework carries a self-stress supported on a triangular-prism
    subgraph; its lifting has one trivial and one nontrivial monodromy, the
    nontrivial one a constant 32.
    """
    return Framework(validate_surface(_PRISM_TORUS_FACES),
                     _PRISM_TORUS_POSITIONS)


def prism_torus_reference():
    """Reference heights of the prism-stress lifting from face f0.

    Each entry is one representative of a class of affine functions that
    differ by integer multiples of the constant 32.
    """
    heights = {f: AffineFunction(0, 0, 0) for f in
               ("f0", "f1", "f2", "f3", "f4", "f5")}
    heights["f6"] = AffineFunction(8, -8, 0)
    heights["f7"] = AffineFunction(-4, -8, 12)
    heights["f8"] = AffineFunction(-16, -8, 0)
    return ReferenceLifting("f0", heights, Fraction(32))


def prism_torus_stress(framework=None):
    """The prism self-stress, recovered from the reference heights.

    This is the inverse route: fold equations across the dual spanning tree
    determine the weights the reference heights force, and the equilibrium
    completion fills in the cut edges.
    """
    if framework is None:
        framework = prism_torus()
    ref = prism_torus_reference()
    return recover_stress(framework, ref.heights, ref.base_face)


# ---------------------------------------------------------------------------
# quadrangulated grids on the torus and the Klein pattern
# ---------------------------------------------------------------------------

def _grid_positions(m, n):
    """Sheared lattice with a quadratic rational jog per vertex.

    x(i, j) = i + j/3 and y(i, j) = j + (t^2 + 1)/Q with t = i*n + j and
    Q = 4*(m*n)^2 + 1.  Same j gives distinct x (i differs); different j
    gives distinct y (the jog stays below 1), so all positions are distinct.
    The quadratic jog breaks every row/column collinearity.
    """
    q = 4 * (m * n) ** 2 + 1
    pos = {}
    for i in range(m):
        for j in range(n):
            t = i * n + j
            pos[f"v{i}_{j}"] = (Fraction(3 * i + j, 3),
                                Fraction(j) + Fraction(t * t + 1, q))
    return pos


def _vid(i, j, m, n):
    return f"v{i % m}_{j % n}"


def grid_torus(m, n):
    """m x n quad grid with both directions glued straight (a torus)."""
    if m < 3 or n < 3:
        raise ParameterTooSmall("grid_torus needs m, n >= 3")
    faces = []
    for i in range(m):
        for j in range(n):
            faces.append((f"f{i}_{j}", (
                _vid(i, j, m, n), _vid(i + 1, j, m, n),
                _vid(i + 1, j + 1, m, n), _vid(i, j + 1, m, n))))
    return Framework(validate_surface(faces), _grid_positions(m, n))


def grid_klein(m, n):
    """m x n quad grid glued straight in i and with an i-flip in j.

    The seam convention: the row j = n wraps to row 0 with the column index
    reversed, v(i, n) = v((m - i) mod m, 0).  Going once around a column
    therefore reverses orientation; going along a row does not.
    """
    if m < 3 or n < 3:
        raise ParameterTooSmall("grid_klein needs m, n >= 3")
    faces = []
    for i in range(m):
        for j in range(n):
            if j < n - 1:
                cycle = (_vid(i, j, m, n), _vid(i + 1, j, m, n),
                         _vid(i + 1, j + 1, m, n), _vid(i, j + 1, m, n))
            else:
                cycle = (_vid(i, j, m, n), _vid(i + 1, j, m, n),
                         _vid(m - i - 1, 0, m, n), _vid(m - i, 0, m, n))
            faces.append((f"f{i}_{j}", cycle))
    return Framework(validate_surface(faces), _grid_positions(m, n))


# ---------------------------------------------------------------------------
# triangulated disks for the bijection property suite
# ---------------------------------------------------------------------------

def wheel_disk(k):
    """Hub-and-rim triangulated disk with ``k`` rim vertices on a parabola."""
    if k < 3:
        raise ParameterTooSmall("wheel_disk needs k >= 3")
    positions = {"hub": (0, Fraction(1, 7))}
    rim = []
    for i in range(k):
        x = Fraction(2 * i - (k - 1), 2)
        rim.append(f"r{i}")
        positions[f"r{i}"] = (x, x * x + 1)
    faces = [(f"t{i}", ("hub", rim[i], rim[(i + 1) % k])) for i in range(k)]
    return Framework(validate_surface(faces), positions)


def split_wheel_disk(k):
    """Wheel disk with one triangle subdivided at its centroid."""
    base = wheel_disk(k)
    positions = dict(base.positions)
    hx, hy = positions["hub"]
    ax, ay = positions["r0"]
    bx, by = positions["r1"]
    positions["m"] = ((hx + ax + bx) / 3, (hy + ay + by) / 3)
    faces = [("s0", ("m", "hub", "r0")),
             ("s1", ("m", "r0", "r1")),
             ("s2", ("m", "r1", "hub"))]
    faces += [(f"t{i}", base.complex.face_cycle(f"t{i}")) for i in range(1, k)]
    return Framework(validate_surface(faces), positions)


# ---------------------------------------------------------------------------
# registry used by the command line
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FixtureSpec:
    name: str
    parameters: tuple = ()


_REGISTRY = {
    "fan-disk": (fan_disk, 0),
    "prism-torus": (prism_torus, 0),
    "grid-torus": (grid_torus, 2),
    "grid-klein": (grid_klein, 2),
    "wheel-disk": (wheel_disk, 1),
}


def fixture_names():
    return tuple(_REGISTRY)


def build_fixture(spec):
    """Instantiate a fixture from its :class:`FixtureSpec`."""
    if spec.name not in _REGISTRY:
        raise KeyError(f"unknown fixture {spec.name!r}; "
                       f"choose from {', '.join(_REGISTRY)}")
    builder, arity = _REGISTRY[spec.name]
    params = tuple(int(p) for p in spec.parameters)
    if len(params) != arity:
        raise ValueError(
            f"fixture {spec.name!r} takes {arity} integer parameter(s)")
    return builder(*params)
