"""Exponent-difference bookkeeping for rational pull-backs of Fuchsian operators.

Only the local exponent data is modelled: a second order operator is
represented by the exponent differences at its singular points, and a
pull-back along a Belyi map multiplies the difference at a point by the
ramification index there.  Everything is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .hypermap import LABELS, MarkedDessin, passport

ONE = Fraction(1)
HALF = Fraction(1, 2)

GROUPS = ("cyclic", "dihedral", "tetrahedral", "octahedral", "icosahedral")
FIBERS = ("0", "1", "infinity")
FIBER_KIND = {"0": "black", "1": "white", "infinity": "face"}

_LABEL_RE = re.compile(r"^(0|1|lambda|infinity|a_\d+)$")
_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class DegenerateParent(ZeroDivisionError):
    pass


class TableMismatch(ValueError):
    pass


class NotASchwarzRow(ValueError):
    pass


class RationalParseError(ValueError):
    pass


def parse_rational(text) -> Fraction:
    """Exact rational from ``"p/q"`` or an integer string.  Decimals are refused."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise RationalParseError(f"expected a 'p/q' string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise RationalParseError(f"not an exact rational of the form p/q: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise RationalParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SingularityProfile:
    """Exponent differences at finitely many points; every other point has difference 1."""

    entries: tuple[tuple[str, Fraction], ...] = ()

    def __init__(self, entries: Mapping[str, object] | None = None):
        clean = {}
        for label, value in dict(entries or {}).items():
            if not _LABEL_RE.match(str(label)):
                raise ValueError(f"unknown point label {label!r}")
            v = parse_rational(value) if isinstance(value, str) else Fraction(value)
            if v < 0:
                raise ValueError(f"exponent difference at {label} is negative: {v}")
            if v != 1:
                clean[str(label)] = v
        object.__setattr__(self, "entries", tuple(sorted(clean.items())))

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.entries)

    def __getitem__(self, label: str) -> Fraction:
        return self.as_dict().get(label, ONE)

    def __len__(self):
        return len(self.entries)


def delta_sum(p: SingularityProfile) -> Fraction:
    return sum((v - 1 for _, v in p.entries), Fraction(0))


def pullback_exponent(e: int, delta_parent) -> Fraction:
    if e < 1:
        raise ValueError("ramification index must be at least 1")
    return e * Fraction(delta_parent)


def pullback_degree(child: SingularityProfile, parent: SingularityProfile) -> Fraction:
    """deg f = (delta(child) + 2) / (delta(parent) + 2)."""
    den = delta_sum(parent) + 2
    if den == 0:
        raise DegenerateParent("parent profile has delta sum -2")
    return (delta_sum(child) + 2) / den


def fiber_count(deg: int) -> int:
    """Size of the preimage of {0, 1, infinity} under a table-compliant Belyi map."""
    if deg < 1:
        raise ValueError("degree must be positive")
    return deg + 2


@dataclass(frozen=True)
class SchwarzSignature:
    lambda_exp: Fraction
    mu_exp: Fraction
    nu_exp: Fraction
    group_tag: str

    def __post_init__(self):
        for name in ("lambda_exp", "mu_exp", "nu_exp"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not _matches_row(self.lambda_exp, self.mu_exp, self.nu_exp, self.group_tag):
            raise NotASchwarzRow(
                f"({self.lambda_exp}, {self.mu_exp}, {self.nu_exp}) is not a {self.group_tag} row")

    @property
    def exponents(self) -> dict[str, Fraction]:
        return {"0": self.lambda_exp, "1": self.mu_exp, "infinity": self.nu_exp}

    def profile(self) -> SingularityProfile:
        return SingularityProfile(self.exponents)

    def __str__(self):
        ex = ", ".join(format_rational(x) for x in (self.lambda_exp, self.mu_exp, self.nu_exp))
        return f"{self.group_tag} ({ex})"


def _unit_fraction(x: Fraction) -> bool:
    return x > 0 and x.numerator == 1


def _matches_row(lam, mu, nu, tag) -> bool:
    h, t = HALF, Fraction(1, 3)
    if tag == "cyclic":
        return _unit_fraction(lam) and lam == nu and mu == 1
    if tag == "dihedral":
        return lam == h and nu == h and _unit_fraction(mu) and mu.denominator >= 2
    if tag == "tetrahedral":
        return (lam, mu, nu) == (h, t, t)
    if tag == "octahedral":
        return (lam, mu, nu) == (h, t, Fraction(1, 4))
    if tag == "icosahedral":
        return (lam, mu, nu) == (h, t, Fraction(1, 5))
    return False


def schwarz_signature(group: str, order: int | None = None) -> SchwarzSignature:
    """Row of the Schwarz list by name; cyclic and dihedral rows take ``order``."""
    h, t = HALF, Fraction(1, 3)
    if group in ("cyclic", "dihedral"):
        if order is None or order < 1:
            raise NotASchwarzRow(f"{group} row needs a positive order")
        u = Fraction(1, order)
        return SchwarzSignature(u, 1, u, group) if group == "cyclic" else SchwarzSignature(h, u, h, group)
    rows = {"tetrahedral": (h, t, t), "octahedral": (h, t, Fraction(1, 4)),
            "icosahedral": (h, t, Fraction(1, 5))}
    if group not in rows:
        raise NotASchwarzRow(f"unknown group {group!r}")
    return SchwarzSignature(*rows[group], group)


OCTAHEDRAL = schwarz_signature("octahedral")
ICOSAHEDRAL = schwarz_signature("icosahedral")


@dataclass(frozen=True)
class LameSignature:
    n: Fraction
    profile: SingularityProfile = field(init=False, compare=False)

    def __post_init__(self):
        n = Fraction(self.n)
        object.__setattr__(self, "n", n)
        prof = {"0": HALF, "1": HALF, "lambda": HALF, "infinity": abs(n + HALF)}
        object.__setattr__(self, "profile", SingularityProfile(prof))

    @property
    def exponents(self) -> dict[str, Fraction]:
        return {"0": HALF, "1": HALF, "lambda": HALF, "infinity": abs(self.n + HALF)}


def lame_degree(n, parent: SchwarzSignature) -> Fraction:
    return pullback_degree(LameSignature(Fraction(n)).profile, parent.profile())


# -- marked dessins against a table ----------------------------------------

def _check_shape(m: MarkedDessin, t) -> None:
    from .tables import passport_of_table

    if m.dessin.degree != t.degree:
        raise TableMismatch(f"dessin has degree {m.dessin.degree}, table wants {t.degree}")
    if passport(m.dessin) != passport_of_table(t):
        raise TableMismatch(
            f"passport {passport(m.dessin)} differs from the table's {passport_of_table(t)}")


def pulled_back_profile(m: MarkedDessin, t) -> SingularityProfile:
    """Exponent differences of the pulled-back operator at the fiber points.

    Marked features keep their label; unmarked points whose difference is not
    1 become extra singular points ``a_1, a_2, ...``.
    """
    _check_shape(m, t)
    exps = t.parent.exponents
    marked = {(f.kind, f.cycle): lab for lab, f in m.marks}
    entries = {}
    extra = 0
    for fiber in FIBERS:
        kind = FIBER_KIND[fiber]
        for cyc in m.dessin.cycles(kind):
            value = pullback_exponent(len(cyc), exps[fiber])
            label = marked.get((kind, cyc))
            if label is None:
                if value == 1:
                    continue
                extra += 1
                label = f"a_{extra}"
            entries[label] = value
    for label in LABELS:
        entries.setdefault(label, ONE)
    return SingularityProfile(entries)


def check_condition_star(m: MarkedDessin, t) -> bool:
    """True iff the marked dessin pulls the parent back to the Lame profile of ``t.n``.

    Raises ``TableMismatch`` when degree or passport disagree with the table.
    """
    _check_shape(m, t)
    for label, feat in m.marks:
        kind, index = t.mark_of(label)
        if feat.kind != kind or feat.size != index:
            return False
    exps = t.parent.exponents
    marked = {(f.kind, f.cycle) for _, f in m.marks}
    for fiber in FIBERS:
        kind = FIBER_KIND[fiber]
        for cyc in m.dessin.cycles(kind):
            if (kind, cyc) not in marked and pullback_exponent(len(cyc), exps[fiber]) != 1:
                return False
    return pulled_back_profile(m, t) == LameSignature(t.n).profile


def exponent_balance(m: MarkedDessin, t) -> tuple[Fraction, Fraction]:
    """Both sides of  delta(f*L, f^-1 S) + #f^-1 S = deg * (delta(L, S) + #S).

    Here S = {0, 1, infinity} and the left side sums over every point of the
    three fibers, marked or not.
    """
    _check_shape(m, t)
    exps = t.parent.exponents
    lhs = Fraction(0)
    points = 0
    for fiber in FIBERS:
        for cyc in m.dessin.cycles(FIBER_KIND[fiber]):
            lhs += pullback_exponent(len(cyc), exps[fiber]) - 1
            points += 1
    rhs = t.degree * (sum((v - 1 for v in exps.values()), Fraction(0)) + len(FIBERS))
    return lhs + points, rhs


def riemann_hurwitz_balance(m: MarkedDessin) -> tuple[int, int]:
    """Both sides of  -2 + 2 deg = deg * #S - #f^-1(S)  for a genus-0 dessin."""
    d = m.dessin
    points = sum(len(d.cycles(k)) for k in ("black", "white", "face"))
    return -2 + 2 * d.degree, d.degree * 3 - points
