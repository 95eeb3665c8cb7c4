"""Explicit genus-0 marked dessins for the four Lame families.

Every family is drawn as a plane graph ``G`` whose vertices carry a cyclic
(counter-clockwise) order of half-edges.  Two readings turn such a sketch
into a dessin:

* direct: vertices of ``G`` are the white vertices, edges are black
  vertices of valency 2 and legs (half-edges with a free end) are black
  leaves;
* dual: the same, except that afterwards white vertices and faces trade
  places, ``(black, white) -> (black, white^-1 black^-1)``.  Triangulated
  sketches are much easier to write down, so three families use it.

Half-edge orders come from exact sort keys (integer direction vectors or
plain tuples), so darts are numbered deterministically in the order the
sketch is built.  Correctness is not argued here; the validator checks
every output.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .hypermap import Dessin, Feature, MarkedDessin, perm_compose, perm_cycles, perm_invert

__all__ = [
    "generate", "generate_octahedral_half", "generate_octahedral_third",
    "generate_icosahedral_third", "generate_icosahedral_fifth", "GENERATORS",
]


def _angle_key(v):
    """Sort key increasing with the polar angle of an integer vector in [0, 2pi)."""
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero direction")
    if x > 0 and y >= 0:
        return (0, Fraction(y, x))
    if x <= 0 and y > 0:
        return (1, Fraction(-x, y))
    if x < 0 and y <= 0:
        return (2, Fraction(y, x))
    return (3, Fraction(-x, y))


def _turn(v, k):
    """``v`` rotated counter-clockwise by roughly ``k / 1000`` radians, exactly in integers."""
    x, y = v
    return (1000 * x - k * y, 1000 * y + k * x)


class _Sketch:
    """Plane graph given by half-edges with sort keys around each vertex."""

    def __init__(self, angles: bool = True):
        self._angles = angles
        self._at = defaultdict(list)  # vertex -> [(key, token)]
        self._order = []
        self._count = 0
        self.pos = {}

    def _key(self, k):
        return _angle_key(k) if self._angles else k

    def _add(self, v, key, token):
        if v not in self._at:
            self._order.append(v)
        self._at[v].append((self._key(key), token))

    def _dir(self, a, b):
        (xa, ya), (xb, yb) = self.pos[a], self.pos[b]
        return (xb - xa, yb - ya)

    def edge(self, a, b, ka=None, kb=None):
        tok = ("e", self._count)
        self._count += 1
        self._add(a, ka if ka is not None else self._dir(a, b), (tok, 0))
        self._add(b, kb if kb is not None else self._dir(b, a), (tok, 1))
        return tok

    def leg(self, a, key):
        tok = ("l", self._count)
        self._count += 1
        self._add(a, key, (tok, 0))
        return tok

    def build(self):
        """Return ``(black, white, dart)`` where ``dart[(token, end)]`` is a 0-based dart."""
        dart, white = {}, []
        for v in self._order:
            slots = sorted(self._at[v], key=lambda s: s[0])
            for s, t in zip(slots, slots[1:]):
                if s[0] == t[0]:
                    raise ValueError(f"two half-edges share a direction at {v!r}")
            first = len(dart)
            for i, (_, half) in enumerate(slots):
                dart[half] = first + i
                white.append(first + (i + 1) % len(slots))
        black = list(range(len(dart)))
        for (tok, end), d in dart.items():
            if tok[0] == "e":
                black[d] = dart[(tok, 1 - end)]
        return tuple(black), tuple(white), dart


def _cycle_of(p, x) -> tuple[int, ...]:
    for c in perm_cycles(p):
        if x + 1 in c:
            return c
    raise AssertionError("dart outside the permutation")


def _marked(d: Dessin, legs, infinity, extra=None) -> MarkedDessin:
    """Marks: black leaves from ``legs`` (0-based darts) in label order, the rest as (kind, dart)."""
    marks = {}
    names = ["0", "1", "lambda"][: len(legs)]
    for name, x in zip(names, legs):
        marks[name] = Feature("black", (x + 1,))
    kind, x = infinity
    marks["infinity"] = Feature(kind, _cycle_of(d.perm(kind), x))
    if extra is not None:
        kind, x = extra
        marks["lambda"] = Feature(kind, _cycle_of(d.perm(kind), x))
    return MarkedDessin(d, marks)


def _dual(black, white) -> tuple[Dessin, tuple[int, ...]]:
    """Swap white vertices and faces; also return ``black`` for locating old vertices."""
    face = perm_compose(perm_invert(white), perm_invert(black))
    return Dessin(black, face), black


def _check(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("parameter must be a non-negative integer")
    if k < 0:
        raise ValueError("parameter must be non-negative")
    return k


def _three_star() -> MarkedDessin:
    d = Dessin((0, 1, 2), (1, 2, 0))
    return _marked(d, [0, 1, 2], ("face", 0))


# -- octahedral, n = (N + 1/2) / 2 --------------------------------------------

def generate_octahedral_half(N: int) -> MarkedDessin:
    """Ladder of N-1 squares closed by a triangle holding one leaf; the outer face is infinity.

    Passport ({1,1,1} + {2}^3N, {3}^(2N+1), {2N+3} + {4}^N).
    """
    N = _check(N)
    if N == 0:
        return _three_star()
    g = _Sketch()
    m = N - 1
    for i in range(m + 1):
        g.pos["u", i] = (2 * i, 2)
        g.pos["v", i] = (2 * i, 0)
    g.pos["x"] = (2 * m + 2, 1)
    for i in range(m + 1):
        g.edge(("u", i), ("v", i))
    for i in range(m):
        g.edge(("u", i), ("u", i + 1))
        g.edge(("v", i), ("v", i + 1))
    g.edge(("u", m), "x")
    g.edge(("v", m), "x")
    legs = [g.leg(("u", 0), (-1, 1)), g.leg(("v", 0), (-1, -1)), g.leg("x", (-1, 0))]
    black, white, dart = g.build()
    d = Dessin(black, white)
    leg_darts = [dart[t, 0] for t in legs]
    return _marked(d, leg_darts, ("face", leg_darts[0]))


# -- octahedral, n = (N + 1/2) / 3 --------------------------------------------

def generate_octahedral_third(N: int) -> MarkedDessin:
    """Dual of a zigzag strip of triangles with a degree-2 vertex glued at one end.

    Passport ({1,1} + {2}^2N, {N+2} + {3}^N, {2} + {4}^N); infinity is the big
    white vertex, lambda the face of degree 2.
    """
    N = _check(N)
    if N == 0:
        d = Dessin((0, 1), (1, 0))
        return _marked(d, [0, 1], ("white", 0), ("face", 0))
    if N == 1:
        g = _Sketch()
        g.pos.update({"h": (0, 0), "w": (1, 0)})
        g.edge("h", "w", (1, 1), (-1, 1))
        g.edge("h", "w", (1, -1), (-1, -1))
        legs = [g.leg("h", (-1, 0)), g.leg("w", (1, 0))]
        black, white, dart = g.build()
        d = Dessin(black, white)
        digon = next(c for c in perm_cycles(d.face) if len(c) == 2)
        return _marked(d, [dart[t, 0] for t in legs], ("white", dart[("e", 0), 0]),
                       ("face", digon[0] - 1))
    g = _Sketch()
    for i in range(1, N + 1):
        g.pos["x", i] = (i, i % 2)
    g.pos["L"] = (0, 0)
    for i in range(1, N):
        g.edge(("x", i), ("x", i + 1))
    for i in range(1, N - 1):
        g.edge(("x", i), ("x", i + 2))
    lam = g.edge("L", ("x", 1))
    g.edge("L", ("x", 2))
    top = g.leg(("x", 1), (-1, 100))
    # second edge between the last two vertices, with a leaf inside the digon
    a = g._dir(("x", N), ("x", N - 1))
    b = g._dir(("x", N - 1), ("x", N))
    s = 1 if N % 2 else -1
    g.edge(("x", N - 1), ("x", N), _turn(b, 200 * s), _turn(a, -200 * s))
    inner = g.leg(("x", N), _turn(a, -100 * s))
    black, white, dart = g.build()
    d, b0 = _dual(black, white)
    legs = [dart[top, 0], dart[inner, 0]]
    return _marked(d, legs, ("white", dart[top, 0]), ("face", b0[dart[lam, 0]]))


# -- icosahedral, n = (M + 1/2) / 3 ---------------------------------------------

def _k23(legs_into):
    """K_{2,3} with a leaf at each middle vertex; used at the smallest parameters."""
    g = _Sketch()
    g.pos.update({"h": (0, 2), "z": (0, -2), "a": (-2, 0), "b": (0, 0), "c": (2, 0)})
    for v in ("a", "b", "c"):
        g.edge("h", v)
    for v in ("a", "b", "c"):
        g.edge("z", v)
    legs = [g.leg(v, (1, 0)) for v in legs_into]
    black, white, dart = g.build()
    return Dessin(black, white), [dart[t, 0] for t in legs], dart


def generate_icosahedral_third(M: int) -> MarkedDessin:
    """Dual of a three-row triangulated strip whose outer face becomes the hub.

    Passport ({1,1,1} + {2}^(5M+1), {M+2} + {3}^(3M+1), {5}^(2M+1)); infinity is
    the white vertex of valency M+2.
    """
    M = _check(M)
    if M == 0:
        g = _Sketch()
        g.pos.update({"h": (0, 0), "v": (1, 0)})
        g.edge("h", "v")
        legs = [g.leg("v", (1, 1)), g.leg("v", (1, -1)), g.leg("h", (-1, 0))]
        black, white, dart = g.build()
        d = Dessin(black, white)
        ld = [dart[t, 0] for t in legs]
        return _marked(d, ld, ("white", ld[2]))
    if M == 1:
        d, ld, dart = _k23("abc")
        return _marked(d, ld, ("white", dart[("e", 0), 0]))
    p, odd = divmod(M, 2)
    g = _Sketch()
    mid_hi = 2 * p + 1 if odd else 2 * p
    bot_hi = p - 1 if odd else p - 2
    for j in range(p):
        g.pos["t", j] = (2 * j + 1, 2)
    for i in range(mid_hi + 1):
        g.pos["m", i] = (i, 1)
    for j in range(-1, bot_hi + 1):
        g.pos["b", j] = (2 * j + 2, 0)
    for j in range(p - 1):
        g.edge(("t", j), ("t", j + 1))
    for i in range(mid_hi):
        g.edge(("m", i), ("m", i + 1))
    for j in range(-1, bot_hi):
        g.edge(("b", j), ("b", j + 1))
    for j in range(p):
        for i in (2 * j, 2 * j + 1, 2 * j + 2):
            if ("m", i) in g.pos:
                g.edge(("t", j), ("m", i))
    for j in range(-1, bot_hi + 1):
        for i in (2 * j + 1, 2 * j + 2, 2 * j + 3):
            if ("m", i) in g.pos:
                g.edge(("b", j), ("m", i))
    # left cap: doubled edge m0-b(-1) holding a leaf, then a chord t0-b(-1)
    m0, b_1, t0 = ("m", 0), ("b", -1), ("t", 0)
    g.edge(m0, b_1, (-1, -10), (-1, 10))
    legs = [g.leg(m0, (-1, -20))]
    g.edge(t0, b_1, (-1, 0), (-1, 0))
    # right cap: the last middle vertex is a "lone" vertex on one rail only
    if not odd:
        lone, nb, far, rim = ("m", 2 * p), ("m", 2 * p - 1), ("b", p - 2), ("t", p - 1)
        g.edge(lone, nb, (-10, -1), (10, -1))
        legs.append(g.leg(lone, (-20, -1)))
        g.edge(lone, far, (1, -1), (1, 0))
        hub = g.leg(rim, (1, 1))
    else:
        lone, nb, far, rim = ("m", 2 * p + 1), ("m", 2 * p), ("t", p - 1), ("b", p - 1)
        g.edge(lone, nb, (-10, 1), (10, 1))
        legs.append(g.leg(lone, (-20, 1)))
        g.edge(lone, far, (1, 1), (1, 0))
        hub = g.leg(rim, (1, -1))
    legs.append(hub)
    black, white, dart = g.build()
    d, _ = _dual(black, white)
    ld = [dart[t, 0] for t in legs]
    return _marked(d, ld, ("white", dart[hub, 0]))


# -- icosahedral, n = (N + 1/2) / 5 ---------------------------------------------

def _zigzag(N: int) -> list[tuple[int, int]]:
    chords, lo, hi, left = [], 1, N - 1, True
    while hi - lo >= 2:
        chords.append((lo, hi))
        if left:
            lo += 1
        else:
            hi -= 1
        left = not left
    return chords


def generate_icosahedral_fifth(N: int) -> MarkedDessin:
    """Dual of a wheel whose rim polygon is triangulated on the outside by a zigzag.

    Passport ({1,1,1} + {2}^3N, {3}^(2N+1), {N+3} + {5}^N); infinity is the face
    of degree N+3 (the wheel's hub).
    """
    N = _check(N)
    if N == 0:
        return _three_star()
    if N == 1:
        g = _Sketch()
        g.pos.update({"a": (0, 0), "b": (2, 0), "c": (1, 2)})
        g.edge("a", "b")
        g.edge("b", "c")
        g.edge("c", "a")
        legs = [g.leg("a", (1, 1)), g.leg("b", (1, -1)), g.leg("c", (0, 1))]
        black, white, dart = g.build()
        ld = [dart[t, 0] for t in legs]
        return _marked(Dessin(black, white), ld, ("face", ld[0]))
    if N == 2:
        d, ld, _ = _k23("abc")
        return _marked(d, ld, ("face", ld[2]))
    g = _Sketch(angles=False)
    chords = _zigzag(N)
    chord_deg = [0] * N
    for a, b in chords:
        chord_deg[a] += 1
        chord_deg[b] += 1
    ears = [i for i in range(N) if chord_deg[i] == 0]
    legs, spokes = [], []

    def spoke(i, doubled=False, leaf_at_hub=False):
        spokes.append(g.edge(i, "H", (0, 0), ((-i) % N, 2)))
        if doubled:
            g.edge(i, "H", (0, 2), ((-i) % N, 0))
            legs.append(g.leg("H", ((-i) % N, 1)) if leaf_at_hub else g.leg(i, (0, 1)))

    if N == 3:
        for i in range(N):
            g.edge(i, (i + 1) % N, (1, 0), (N - 1, 0))
        for i in range(N):
            spoke(i, doubled=True)
    else:
        ones = [i for i in range(N) if chord_deg[i] == 1]
        e1, e2 = ears
        o2 = next(o for o in ones if (o - e2) % N in (1, N - 1))
        o1 = next(o for o in ones if o != o2)
        for i in range(N):
            j = (i + 1) % N
            g.edge(i, j, (1, 2), (N - 1, 0))
            if {i, j} == {e2, o2}:
                g.edge(i, j, (1, 0), (N - 1, 2))
                legs.append(g.leg(e2, (1, 1) if e2 == i else (N - 1, 1)))
        for a, b in chords:
            g.edge(a, b, ((b - a) % N, 0), ((a - b) % N, 0))
        for i in range(N):
            spoke(i, doubled=i in (e1, o1), leaf_at_hub=(i == o1))
    black, white, dart = g.build()
    d, b0 = _dual(black, white)
    ld = [dart[t, 0] for t in legs]
    return _marked(d, ld, ("face", b0[dart[spokes[0], 1]]))


GENERATORS = {
    "oct_half": generate_octahedral_half,
    "oct_third": generate_octahedral_third,
    "ico_third": generate_icosahedral_third,
    "ico_fifth": generate_icosahedral_fifth,
}


def generate(case_id: str, k: int) -> MarkedDessin:
    try:
        gen = GENERATORS[case_id]
    except KeyError:
        raise ValueError(f"unknown case {case_id!r}; expected one of {', '.join(GENERATORS)}") from None
    return gen(k)
