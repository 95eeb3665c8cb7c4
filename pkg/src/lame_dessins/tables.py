"""Ramification tables of Belyi maps pulling a Schwarz-list operator back to a Lame operator.

A table has one row per fiber (over 0, 1 and infinity).  Each row lists the
Lame points sitting in that fiber with their ramification indices, plus a
count of generic points, all of which ramify with the fiber's generic
multiplicity ``1 / delta``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .fuchsian import (
    FIBER_KIND,
    FIBERS,
    HALF,
    ICOSAHEDRAL,
    OCTAHEDRAL,
    LameSignature,
    NotASchwarzRow,
    SchwarzSignature,
    format_rational,
    lame_degree,
)
from .hypermap import LABELS, Passport

CASES = ("oct_half", "oct_third", "ico_third", "ico_fifth")

__all__ = [
    "CASES", "FiberRow", "InvalidTable", "NotASchwarzRow", "RamificationTable",
    "case_parameter", "derive_tables", "passport_of_table", "render_table",
    "table_for_case", "table_problems", "validate_table",
]


class InvalidTable(ValueError):
    pass


@dataclass(frozen=True)
class FiberRow:
    fiber: str
    marks: tuple[tuple[str, int], ...]  # (label, index) in LABELS order
    generic_count: int
    generic_mult: int

    @property
    def mark_map(self) -> dict[str, int]:
        return dict(self.marks)

    def total(self) -> int:
        return sum(e for _, e in self.marks) + self.generic_count * self.generic_mult

    def parts(self) -> list[int]:
        return [e for _, e in self.marks] + [self.generic_mult] * self.generic_count


def _row(fiber, marks: dict, count: int, mult: int) -> FiberRow:
    ordered = tuple((lab, int(marks[lab])) for lab in LABELS if lab in marks)
    return FiberRow(fiber, ordered, count, mult)


@dataclass(frozen=True)
class RamificationTable:
    degree: int
    parent: SchwarzSignature
    n: Fraction
    rows: tuple[FiberRow, FiberRow, FiberRow]

    def row(self, fiber: str) -> FiberRow:
        for r in self.rows:
            if r.fiber == fiber:
                return r
        raise KeyError(fiber)

    def mark_of(self, label: str) -> tuple[str, int]:
        """(feature kind, ramification index) prescribed for a Lame point."""
        for r in self.rows:
            if label in r.mark_map:
                return FIBER_KIND[r.fiber], r.mark_map[label]
        raise InvalidTable(f"label {label!r} is not placed in any fiber")

    def generic_counts(self) -> tuple[int, int, int]:
        return tuple(r.generic_count for r in self.rows)

    def sort_key(self):
        return (self.parent.group_tag, self.n, self.degree,
                tuple((r.fiber, r.marks, r.generic_count) for r in self.rows))


# -- validation ---------------------------------------------------------------

def table_problems(t: RamificationTable) -> list[str]:
    """Human-readable list of violated invariants; empty when the table is sound."""
    out = []
    if t.degree < 1:
        out.append(f"degree {t.degree} is not positive")
    if [r.fiber for r in t.rows] != list(FIBERS):
        out.append("rows must be the fibers over 0, 1, infinity in that order")
    for r in t.rows:
        if r.generic_count < 0:
            out.append(f"fiber {r.fiber}: negative generic count {r.generic_count}")
        if any(e < 1 for _, e in r.marks):
            out.append(f"fiber {r.fiber}: non-positive ramification index")
        if r.total() != t.degree:
            out.append(f"row sum: fiber {r.fiber} sums to {r.total()}, not {t.degree}")
    placed = [lab for r in t.rows for lab, _ in r.marks]
    for lab in LABELS:
        if placed.count(lab) != 1:
            out.append(f"column condition: {lab} appears in {placed.count(lab)} fibers")
    if 4 + sum(t.generic_counts()) != t.degree + 2:
        out.append(f"fiber count: 4 + {sum(t.generic_counts())} != {t.degree} + 2")
    ram = sum(e - 1 for r in t.rows for e in r.parts())
    if ram != 2 * t.degree - 2:
        out.append(f"Riemann-Hurwitz: total ramification {ram} != {2 * t.degree - 2}")
    return out


def validate_table(t: RamificationTable, report: list | None = None) -> bool:
    problems = table_problems(t)
    if report is not None:
        report.extend(problems)
    return not problems


def passport_of_table(t: RamificationTable) -> Passport:
    if not validate_table(t):
        raise InvalidTable("; ".join(table_problems(t)))
    return Passport(*(tuple(r.parts()) for r in t.rows))


# -- derivation -----------------------------------------------------------------

def _integer(q: Fraction):
    return int(q) if q.denominator == 1 else None


def derive_tables(parent: SchwarzSignature, n) -> list[RamificationTable]:
    """Every counting-consistent table for a Lame operator of parameter ``n``."""
    if not isinstance(parent, SchwarzSignature):
        raise NotASchwarzRow(f"{parent!r} is not a Schwarz-list signature")
    n = Fraction(n)
    deg = lame_degree(n, parent)
    deg = _integer(deg)
    if deg is None or deg < 1:
        return []
    lame = LameSignature(n).exponents
    exps = parent.exponents
    options = {}
    for lab in LABELS:
        options[lab] = []
        for fiber in FIBERS:
            e = lame[lab] / exps[fiber]
            if e.denominator == 1 and e >= 1:
                options[lab].append((fiber, int(e)))
    found = set()
    for choice in itertools.product(*(options[lab] for lab in LABELS)):
        rows = []
        for fiber in FIBERS:
            mult = _integer(1 / exps[fiber])
            if mult is None:
                break
            marks = {lab: e for lab, (f, e) in zip(LABELS, choice) if f == fiber}
            rest = deg - sum(marks.values())
            if rest < 0 or rest % mult:
                break
            rows.append(_row(fiber, marks, rest // mult, mult))
        else:
            t = RamificationTable(deg, parent, n, tuple(rows))
            if validate_table(t):
                found.add(t)
    return sorted(found, key=RamificationTable.sort_key)


# -- the four specialised tables ----------------------------------------------------

def case_parameter(case_id: str, k: int) -> tuple[SchwarzSignature, Fraction]:
    """Parent operator and Lame parameter n certified by ``(case_id, k)``."""
    k2 = Fraction(2 * k + 1, 2)
    if case_id == "oct_half":
        return OCTAHEDRAL, k2 / 2
    if case_id == "oct_third":
        return OCTAHEDRAL, k2 / 3
    if case_id == "ico_third":
        return ICOSAHEDRAL, k2 / 3
    if case_id == "ico_fifth":
        return ICOSAHEDRAL, k2 / 5
    raise ValueError(f"unknown case {case_id!r}; expected one of {', '.join(CASES)}")


def _check_k(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("the case parameter must be a non-negative integer")
    if k < 0:
        raise ValueError("the case parameter must be non-negative")
    return k


def table_for_case(case_id: str, k: int) -> RamificationTable:
    k = _check_k(k)
    parent, n = case_parameter(case_id, k)
    leaves = {"0": 1, "1": 1, "lambda": 1}
    if case_id == "oct_half":
        deg = 6 * k + 3
        rows = (_row("0", leaves, 3 * k, 2), _row("1", {}, 2 * k + 1, 3),
                _row("infinity", {"infinity": 2 * k + 3}, k, 4))
    elif case_id == "oct_third":
        deg = 4 * k + 2
        rows = (_row("0", {"0": 1, "1": 1}, 2 * k, 2), _row("1", {"infinity": k + 2}, k, 3),
                _row("infinity", {"lambda": 2}, k, 4))
    elif case_id == "ico_third":
        deg = 10 * k + 5
        rows = (_row("0", leaves, 5 * k + 1, 2), _row("1", {"infinity": k + 2}, 3 * k + 1, 3),
                _row("infinity", {}, 2 * k + 1, 5))
    else:
        deg = 6 * k + 3
        rows = (_row("0", leaves, 3 * k, 2), _row("1", {}, 2 * k + 1, 3),
                _row("infinity", {"infinity": k + 3}, k, 5))
    return RamificationTable(deg, parent, n, rows)


# -- rendering ---------------------------------------------------------------------

_COLS = ("0", "1", "lambda", "infinity")


def render_table(t: RamificationTable) -> str:
    """Fixed-width text layout: fibers as rows; 0, 1, lambda, infinity, generic, deg as columns."""
    head = ["fiber", *_COLS, "generic", "deg"]
    body = []
    for r in t.rows:
        marks = r.mark_map
        generic = f"{r.generic_count} pts with mult. = {r.generic_mult}"
        body.append([r.fiber, *(str(marks.get(c, 0)) for c in _COLS), generic, str(t.degree)])
    widths = [max(len(row[i]) for row in [head, *body]) for i in range(len(head))]

    def line(cells):
        return "| " + " | ".join(c.ljust(w) if i in (0, 5) else c.rjust(w)
                                 for i, (c, w) in enumerate(zip(cells, widths))) + " |"

    rule = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    title = f"{t.parent}, n = {format_rational(t.n)}, degree {t.degree}"
    return "\n".join([title, rule, line(head), rule, *(line(b) for b in body), rule]) + "\n"
