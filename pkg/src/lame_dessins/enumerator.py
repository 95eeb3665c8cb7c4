"""Exhaustive search for dessins with a prescribed passport or table.

The optimized search fixes the black rotation to a canonical permutation of
its cycle type and runs through every white rotation of the requested cycle
type; classes are then separated by canonical form.  ``naive_classes`` is
the independent brute force used to check it on small degrees.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .hypermap import (
    LABELS,
    Dessin,
    Feature,
    MarkedDessin,
    Passport,
    canonical_form,
    genus,
    is_transitive,
    marked_canonical_form,
    passport,
    perm_compose,
    perm_conjugate,
    perm_cycle_type,
    perm_invert,
)

DEFAULT_CAP = 12


class DegreeCapExceeded(ValueError):
    pass


def canonical_perm(cycle_type) -> tuple[int, ...]:
    """Permutation with consecutive cycles ``(1..a)(a+1..a+b)...``, 0-based."""
    img = []
    start = 0
    for length in sorted(cycle_type, reverse=True):
        img.extend(range(start + 1, start + length))
        img.append(start)
        start += length
    return tuple(img)


def perms_of_type(cycle_type) -> Iterator[tuple[int, ...]]:
    """Every permutation of ``range(sum(cycle_type))`` with that cycle type."""
    n = sum(cycle_type)
    img = [-1] * n
    remaining = sorted(cycle_type, reverse=True)

    def rec():
        try:
            first = img.index(-1)
        except ValueError:
            yield tuple(img)
            return
        free = [i for i in range(first + 1, n) if img[i] < 0]
        for length in sorted(set(remaining)):
            remaining.remove(length)
            for rest in itertools.permutations(free, length - 1):
                cyc = (first,) + rest
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    img[a] = b
                yield from rec()
                for a in cyc:
                    img[a] = -1
            remaining.append(length)
            remaining.sort(reverse=True)

    yield from rec()


def _check_cap(degree: int, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if degree > cap:
        raise DegreeCapExceeded(
            f"degree {degree} exceeds the search cap {cap}; raise it explicitly (e.g. --cap)")


def _scan(black, white_type, face_type, chunk, nchunks):
    inv_b = perm_invert(black)
    found = {}
    for idx, white in enumerate(perms_of_type(white_type)):
        if idx % nchunks != chunk:
            continue
        face = perm_compose(perm_invert(white), inv_b)
        if perm_cycle_type(face) != face_type or not is_transitive(black, white):
            continue
        d = Dessin(black, white)
        found.setdefault(canonical_form(d), d)
    return found


def enumerate_passport(p: Passport, cap: int | None = None, workers: int = 1) -> list[Dessin]:
    """One canonical representative per class of transitive pairs with passport ``p``."""
    _check_cap(p.degree, cap)
    black = canonical_perm(p.black)
    jobs = max(1, workers)
    if jobs == 1:
        found = _scan(black, p.white, p.face, 0, 1)
    else:
        found = {}
        with ProcessPoolExecutor(jobs) as ex:
            parts = ex.map(_scan, *zip(*[(black, p.white, p.face, c, jobs) for c in range(jobs)]))
            for part in parts:
                for k, v in part.items():
                    found.setdefault(k, v)
    return [Dessin(*form) for form in sorted(found)]


def naive_classes(degree: int) -> dict[Passport, set]:
    """Brute force over all pairs in S_E x S_E; canonical forms grouped by passport.

    Once a class is met, its whole conjugation orbit is marked as seen so the
    canonical form is computed once per class rather than once per pair.
    """
    out = defaultdict(set)
    perms = list(itertools.permutations(range(degree)))
    seen = set()
    for b in perms:
        for w in perms:
            if (b, w) in seen or not is_transitive(b, w):
                continue
            d = Dessin(b, w)
            out[passport(d)].add(canonical_form(d))
            for tau in perms:
                seen.add((perm_conjugate(b, tau), perm_conjugate(w, tau)))
    return dict(out)


def _mark_slots(d: Dessin, table):
    """Candidate features per label, as dictated by the table."""
    slots = {}
    for label in LABELS:
        kind, index = table.mark_of(label)
        slots[label] = [Feature(kind, c) for c in d.cycles(kind) if len(c) == index]
    return slots


def enumerate_marked(table, cap: int | None = None, workers: int = 1) -> list[MarkedDessin]:
    """One representative per marked class of genus-0 dessins realizing ``table``."""
    from .tables import InvalidTable, passport_of_table, validate_table

    if not validate_table(table):
        raise InvalidTable("table fails its consistency checks")
    p = passport_of_table(table)
    found = {}
    for d in enumerate_passport(p, cap=cap, workers=workers):
        if genus(d) != 0:
            continue
        slots = _mark_slots(d, table)
        for choice in itertools.product(*(slots[lab] for lab in LABELS)):
            if len({(f.kind, f.cycle) for f in choice}) < len(LABELS):
                continue
            m = MarkedDessin(d, dict(zip(LABELS, choice)))
            found.setdefault(marked_canonical_form(m), m)
    return [found[k] for k in sorted(found)]


def count_classes(table, cap: int | None = None, workers: int = 1) -> int:
    return len(enumerate_marked(table, cap=cap, workers=workers))


def default_workers() -> int:
    return max(1, min(4, os.cpu_count() or 1))
