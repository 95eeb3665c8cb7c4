"""Projective monodromy of a pulled-back hypergeometric operator, at permutation level.

A polyhedral row of the Schwarz list has projective monodromy G (A4, S4 or
A5), the image of the free group <a, b> under a map sending a, b, ab to
elements of orders 1/lambda, 1/mu, 1/nu.  Pulling back along the Belyi map
of a dessin restricts this map to the stabilizer H of a dart, so the
pulled-back operator has projective monodromy rho(H).  Its order is computed
here from Schreier generators; it is independent of every choice made.

The exponent-difference condition only sees local data.  This module sees
the global group, which is why it can tell apart dessins that pass the
exponent check but whose pull-back has a smaller (dihedral) monodromy.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .fuchsian import SchwarzSignature
from .hypermap import Dessin, perm_compose, perm_invert

_GROUP_DEGREE = {"tetrahedral": 4, "octahedral": 4, "icosahedral": 5}
_GROUP_ORDER = {"tetrahedral": 12, "octahedral": 24, "icosahedral": 60}


def _then(p, q):
    # right action: apply p first, then q
    return perm_compose(q, p)


def _order(p) -> int:
    e = tuple(range(len(p)))
    k, q = 1, p
    while q != e:
        q, k = _then(q, p), k + 1
    return k


def _even(p) -> bool:
    inv = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return inv % 2 == 0


@lru_cache(maxsize=None)
def polyhedral_generators(group_tag: str):
    """A pair (x, y) of orders (2, 3) whose product has the order of the third vertex."""
    if group_tag not in _GROUP_DEGREE:
        raise ValueError(f"no polyhedral permutation model for {group_tag!r}")
    deg = _GROUP_DEGREE[group_tag]
    third = {"tetrahedral": 3, "octahedral": 4, "icosahedral": 5}[group_tag]
    perms = list(itertools.permutations(range(deg)))
    if group_tag != "octahedral":
        perms = [p for p in perms if _even(p)]
    for x in perms:
        if _order(x) != 2:
            continue
        for y in perms:
            if _order(y) == 3 and _order(_then(x, y)) == third:
                return x, y
    raise AssertionError("unreachable: polyhedral generators exist")


def _closure(gens, degree: int) -> set:
    e = tuple(range(degree))
    seen, todo = {e}, [e]
    while todo:
        g = todo.pop()
        for s in gens:
            h = _then(g, s)
            if h not in seen:
                seen.add(h)
                todo.append(h)
    return seen


def pulled_back_monodromy_order(d: Dessin, parent: SchwarzSignature) -> int:
    """Order of the projective monodromy of f*H for the Belyi map f of ``d``."""
    x, y = polyhedral_generators(parent.group_tag)
    gens = ((d.black, x), (d.white, y))
    # coset representatives along a spanning tree of the dart graph
    rep = {0: tuple(range(len(x)))}
    todo = [0]
    while todo:
        a = todo.pop()
        for move, img in gens:
            b = move[a]
            if b not in rep:
                rep[b] = _then(rep[a], img)
                todo.append(b)
    schreier = [_then(_then(rep[a], img), perm_invert(rep[move[a]]))
                for a in rep for move, img in gens]
    return len(_closure(schreier, len(x)))


def parent_group_order(parent: SchwarzSignature) -> int:
    return _GROUP_ORDER[parent.group_tag]


def has_full_monodromy(d: Dessin, parent: SchwarzSignature) -> bool:
    return pulled_back_monodromy_order(d, parent) == parent_group_order(parent)
