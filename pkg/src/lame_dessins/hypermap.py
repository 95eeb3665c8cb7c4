"""Dessins d'enfants as transitive pairs of permutations.

A dessin of degree ``E`` has darts (edges) labelled ``1..E``.  Internally a
permutation is a tuple ``p`` of 0-based images, ``p[i] = j`` meaning dart
``i+1`` goes to dart ``j+1``; everything user-facing (cycles, documents)
uses 1-based darts.

Face convention: ``face * black * white == identity`` where permutations act
on the left, ``(f * g)(x) = f(g(x))``.  Hence ``face = white^-1 * black^-1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Perm = tuple[int, ...]

LABELS = ("0", "1", "lambda", "infinity")
KINDS = ("black", "white", "face")


class NotAPermutation(ValueError):
    pass


class NotConnected(ValueError):
    pass


class OddEulerDefect(AssertionError):
    pass


class MarkMismatch(ValueError):
    pass


# -- permutation helpers -----------------------------------------------------

def perm_check(p: Sequence[int], n: int) -> Perm:
    p = tuple(int(x) for x in p)
    if len(p) != n or sorted(p) != list(range(n)):
        raise NotAPermutation(f"not a permutation of {n} darts: {p!r}")
    return p


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    """Build a 0-based image tuple from 1-based disjoint cycles."""
    img = list(range(n))
    seen = set()
    for cyc in cycles:
        cyc = [int(c) for c in cyc]
        for c in cyc:
            if not 1 <= c <= n or c in seen:
                raise NotAPermutation(f"bad or repeated dart {c} in cycles")
            seen.add(c)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def perm_cycles(p: Perm, singletons: bool = True) -> list[tuple[int, ...]]:
    """1-based cycles, each starting at its smallest dart, sorted by first dart."""
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        if singletons or len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def perm_cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in perm_cycles(p)), reverse=True))


def perm_num_cycles(p: Perm) -> int:
    return len(perm_cycles(p))


def perm_invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_compose(f: Perm, g: Perm) -> Perm:
    """``f * g``: apply ``g`` first."""
    return tuple(f[g[i]] for i in range(len(g)))


def perm_conjugate(p: Perm, tau: Perm) -> Perm:
    """``tau * p * tau^-1``."""
    q = [0] * len(p)
    for i, j in enumerate(p):
        q[tau[i]] = tau[j]
    return tuple(q)


def is_transitive(*perms: Perm) -> bool:
    n = len(perms[0])
    if n == 0:
        return False
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        i = stack.pop()
        for p in perms:
            j = p[i]
            if not seen[j]:
                seen[j] = True
                count += 1
                stack.append(j)
    return count == n


# -- passports ---------------------------------------------------------------

def _partition(parts: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted((int(x) for x in parts), reverse=True))


@dataclass(frozen=True)
class Passport:
    """Cycle types of the black, white and face permutations (sorted descending)."""

    black: tuple[int, ...]
    white: tuple[int, ...]
    face: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "black", _partition(self.black))
        object.__setattr__(self, "white", _partition(self.white))
        object.__setattr__(self, "face", _partition(self.face))
        sums = {sum(self.black), sum(self.white), sum(self.face)}
        if len(sums) != 1 or 0 in sums:
            raise ValueError(f"partitions of different integers: {self}")

    @property
    def degree(self) -> int:
        return sum(self.black)

    def euler_count(self) -> int:
        return len(self.black) + len(self.white) + len(self.face) - self.degree

    @classmethod
    def parse(cls, text: str) -> "Passport":
        """Parse ``"1,1,1;3;3"`` (black; white; face)."""
        parts = text.split(";")
        if len(parts) != 3:
            raise ValueError(f"passport needs three ';'-separated partitions: {text!r}")
        try:
            b, w, f = ([int(x) for x in s.split(",") if x.strip()] for s in parts)
        except ValueError:
            raise ValueError(f"malformed passport {text!r}") from None
        if min(b + w + f, default=0) < 1:
            raise ValueError(f"parts must be positive: {text!r}")
        return cls(b, w, f)

    def __str__(self) -> str:
        return ";".join(",".join(map(str, p)) for p in (self.black, self.white, self.face))


# -- dessins -----------------------------------------------------------------

@dataclass(frozen=True)
class Dessin:
    black: Perm
    white: Perm
    _face: Perm = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.black)
        if n < 1:
            raise NotAPermutation("a dessin needs at least one dart")
        object.__setattr__(self, "black", perm_check(self.black, n))
        object.__setattr__(self, "white", perm_check(self.white, n))
        if not is_transitive(self.black, self.white):
            raise NotConnected("black and white rotations do not act transitively")
        face = perm_compose(perm_invert(self.white), perm_invert(self.black))
        object.__setattr__(self, "_face", face)

    @property
    def degree(self) -> int:
        return len(self.black)

    @property
    def face(self) -> Perm:
        return self._face

    @classmethod
    def from_cycles(cls, degree, black_cycles, white_cycles) -> "Dessin":
        return cls(perm_from_cycles(black_cycles, degree), perm_from_cycles(white_cycles, degree))

    def cycles(self, kind: str) -> list[tuple[int, ...]]:
        return perm_cycles(self.perm(kind))

    def perm(self, kind: str) -> Perm:
        if kind == "black":
            return self.black
        if kind == "white":
            return self.white
        if kind == "face":
            return self._face
        raise ValueError(f"unknown feature kind {kind!r}")

    def relabel(self, tau: Perm) -> "Dessin":
        """Conjugate both rotations by ``tau`` (0-based image tuple)."""
        return Dessin(perm_conjugate(self.black, tau), perm_conjugate(self.white, tau))

    def mirror(self) -> "Dessin":
        """Orientation-reversed dessin (inverse rotations)."""
        return Dessin(perm_invert(self.black), perm_invert(self.white))


def new_dessin(E: int, sigma_black, sigma_white) -> Dessin:
    """Construct a dessin from two permutations of ``1..E``.

    Each permutation may be given as a sequence of 1-based images of length
    ``E`` or as a list of 1-based cycles (lists), fixed points optional.
    """

    def coerce(p):
        p = list(p)
        if p and all(isinstance(c, (list, tuple)) for c in p):
            return perm_from_cycles(p, E)
        if len(p) == 0 and E > 0:
            return tuple(range(E))
        if len(p) != E:
            raise NotAPermutation(f"expected {E} images, got {len(p)}")
        return perm_check([x - 1 for x in p], E)

    return Dessin(coerce(sigma_black), coerce(sigma_white))


def face_permutation(d: Dessin) -> Perm:
    return d.face


def passport(d: Dessin) -> Passport:
    return Passport(perm_cycle_type(d.black), perm_cycle_type(d.white), perm_cycle_type(d.face))


def genus(d: Dessin) -> int:
    chi = perm_num_cycles(d.black) + perm_num_cycles(d.white) + perm_num_cycles(d.face) - d.degree
    if chi % 2 or chi > 2:
        raise OddEulerDefect(f"Euler characteristic {chi} of a transitive pair")
    return (2 - chi) // 2


def is_preclean(d: Dessin) -> bool:
    return all(len(c) <= 2 for c in d.cycles("white"))


def is_clean(d: Dessin) -> bool:
    return all(len(c) == 2 for c in d.cycles("white"))


# -- canonical forms ---------------------------------------------------------
#
# A transitive pair is rigid: a relabelling commuting with both rotations is
# fixed by the image of one dart.  Numbering darts in BFS order from a root
# (following black, then white) gives one labelling per root; the minimum
# over roots is a complete conjugacy invariant.

def _bfs_labelling(black: Perm, white: Perm, root: int) -> list[int]:
    n = len(black)
    lab = [-1] * n
    lab[root] = 0
    order = [root]
    k = 0
    while k < len(order):
        i = order[k]
        k += 1
        for p in (black, white):
            j = p[i]
            if lab[j] < 0:
                lab[j] = len(order)
                order.append(j)
    return lab


def _relabelled(black: Perm, white: Perm, lab: list[int]) -> tuple[Perm, Perm]:
    n = len(black)
    b = [0] * n
    w = [0] * n
    for i in range(n):
        b[lab[i]] = lab[black[i]]
        w[lab[i]] = lab[white[i]]
    return tuple(b), tuple(w)


def canonical_labellings(d: Dessin) -> list[tuple[tuple[Perm, Perm], list[int]]]:
    return [(_relabelled(d.black, d.white, lab), lab)
            for lab in (_bfs_labelling(d.black, d.white, r) for r in range(d.degree))]


def canonical_form(d: Dessin) -> tuple[Perm, Perm]:
    return min(form for form, _ in canonical_labellings(d))


def canonical_dessin(d: Dessin) -> Dessin:
    return Dessin(*canonical_form(d))


def automorphisms(d: Dessin) -> list[Perm]:
    """All relabellings (0-based image tuples) commuting with both rotations."""
    base = _bfs_labelling(d.black, d.white, 0)
    form0 = _relabelled(d.black, d.white, base)
    out = []
    for r in range(d.degree):
        lab = _bfs_labelling(d.black, d.white, r)
        if _relabelled(d.black, d.white, lab) == form0:
            # dart x -> the dart that has the same label under root r as x has under root 0
            inv = perm_invert(tuple(lab))
            out.append(tuple(inv[base[x]] for x in range(d.degree)))
    return out


def equivalent(d1: Dessin, d2: Dessin) -> bool:
    """Orientation-preserving equivalence (simultaneous conjugacy)."""
    if d1.degree != d2.degree or passport(d1) != passport(d2):
        return False
    return canonical_form(d1) == canonical_form(d2)


def mirror_equivalent(d1: Dessin, d2: Dessin) -> bool:
    """Equivalence allowing orientation reversal; not used in class counts."""
    return equivalent(d1, d2) or equivalent(d1.mirror(), d2)


# -- marked dessins ----------------------------------------------------------

@dataclass(frozen=True)
class Feature:
    kind: str
    cycle: tuple[int, ...]  # 1-based darts, starting at the smallest

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MarkMismatch(f"unknown feature kind {self.kind!r}")
        cyc = tuple(int(x) for x in self.cycle)
        if not cyc:
            raise MarkMismatch("empty feature cycle")
        k = cyc.index(min(cyc))
        object.__setattr__(self, "cycle", cyc[k:] + cyc[:k])

    @property
    def size(self) -> int:
        return len(self.cycle)


@dataclass(frozen=True)
class MarkedDessin:
    dessin: Dessin
    marks: Mapping[str, Feature]

    def __post_init__(self):
        marks = dict(self.marks)
        if set(marks) != set(LABELS):
            raise MarkMismatch(f"marks must cover exactly {LABELS}, got {sorted(marks)}")
        seen = set()
        for label in LABELS:
            feat = marks[label]
            if feat.cycle not in self.dessin.cycles(feat.kind):
                raise MarkMismatch(f"mark {label!r} is not a {feat.kind} cycle of the dessin")
            key = (feat.kind, feat.cycle)
            if key in seen:
                raise MarkMismatch(f"mark {label!r} reuses an already marked feature")
            seen.add(key)
        object.__setattr__(self, "marks", tuple((lab, marks[lab]) for lab in LABELS))

    @property
    def mark_map(self) -> dict[str, Feature]:
        return dict(self.marks)

    def __hash__(self):
        return hash((self.dessin, self.marks))


def _marked_key(m: MarkedDessin, lab: list[int]):
    key = []
    for _, feat in m.marks:
        key.append((feat.kind, min(lab[x - 1] for x in feat.cycle)))
    return tuple(key)


def marked_canonical_form(m: MarkedDessin):
    d = m.dessin
    best = None
    for r in range(d.degree):
        lab = _bfs_labelling(d.black, d.white, r)
        form = (_relabelled(d.black, d.white, lab), _marked_key(m, lab))
        if best is None or form < best:
            best = form
    return best


def marked_equivalent(m1: MarkedDessin, m2: MarkedDessin) -> bool:
    """Simultaneous conjugacy carrying every marked feature of m1 to its namesake in m2.

    Raises ``MarkMismatch`` when a label sits on features of different kind or
    size, i.e. the two were not marked against the same table.
    """
    for (lab, f1), (_, f2) in zip(m1.marks, m2.marks):
        if f1.kind != f2.kind or f1.size != f2.size:
            raise MarkMismatch(f"mark {lab!r}: {f1.kind} of size {f1.size} vs {f2.kind} of size {f2.size}")
    if m1.dessin.degree != m2.dessin.degree:
        return False
    return marked_canonical_form(m1) == marked_canonical_form(m2)


def relabel_marked(m: MarkedDessin, tau: Perm) -> MarkedDessin:
    d = m.dessin.relabel(tau)
    marks = {lab: Feature(f.kind, tuple(tau[x - 1] + 1 for x in f.cycle)) for lab, f in m.marks}
    return MarkedDessin(d, marks)


def feature_counts(d: Dessin) -> dict[str, Counter]:
    return {k: Counter(len(c) for c in d.cycles(k)) for k in KINDS}
