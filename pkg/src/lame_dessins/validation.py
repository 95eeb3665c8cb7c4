"""Full validator chain for a marked dessin against a ramification table."""

from __future__ import annotations

from dataclasses import dataclass

from .documents import DocumentError, parse_marks, raw_permutations, to_document
from .fuchsian import TableMismatch, check_condition_star
from .hypermap import (
    Dessin,
    MarkedDessin,
    genus,
    is_transitive,
    passport,
    perm_compose,
)
from .tables import passport_of_table


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f": {self.detail}" if self.detail else "")


CHECK_NAMES = ("permutations", "product identity", "transitivity", "genus 0",
               "degree", "passport", "marks", "condition star")


def run_checks(source, table) -> list[Check]:
    """Run every check in order; later checks are marked failed once a prerequisite fails.

    ``source`` is a parsed document (dict) or a ``MarkedDessin``.
    """
    doc = to_document(source) if isinstance(source, (Dessin, MarkedDessin)) else source
    out: list[Check] = []

    def skip(reason):
        done = {c.name for c in out}
        out.extend(Check(n, False, f"skipped ({reason})") for n in CHECK_NAMES if n not in done)
        return out

    try:
        degree, black, white, face = raw_permutations(doc)
    except DocumentError as exc:
        out.append(Check("permutations", False, str(exc)))
        return skip("unparseable permutations")
    out.append(Check("permutations", True, f"degree {degree}"))

    if face is None:
        out.append(Check("product identity", True, "no sigma_face given; face derived"))
    else:
        ident = perm_compose(face, perm_compose(black, white))
        bad = [i + 1 for i in range(degree) if ident[i] != i]
        out.append(Check("product identity", not bad,
                         "" if not bad else f"face*black*white moves darts {bad[:6]}"))

    if not is_transitive(black, white):
        out.append(Check("transitivity", False, "the permutations do not act transitively"))
        return skip("not connected")
    out.append(Check("transitivity", True))
    d = Dessin(black, white)

    g = genus(d)
    out.append(Check("genus 0", g == 0, f"genus {g}"))

    ok_deg = d.degree == table.degree
    out.append(Check("degree", ok_deg, f"{d.degree} vs table {table.degree}"))
    want = passport_of_table(table)
    got = passport(d)
    out.append(Check("passport", got == want, f"{got} vs table {want}"))

    try:
        marks = parse_marks(doc)
        if marks is None:
            raise DocumentError("document has no marks")
        m = MarkedDessin(d, marks)
        wrong = []
        for label, feat in m.marks:
            kind, index = table.mark_of(label)
            if feat.kind != kind or feat.size != index:
                wrong.append(f"{label} on {feat.kind} of size {feat.size}, want {kind} of size {index}")
        out.append(Check("marks", not wrong, "; ".join(wrong)))
    except (DocumentError, ValueError) as exc:
        out.append(Check("marks", False, str(exc)))
        return skip("marks unusable")

    try:
        star = check_condition_star(m, table)
        out.append(Check("condition star", star,
                         "" if star else "pulled-back profile differs from the Lame profile"))
    except TableMismatch as exc:
        out.append(Check("condition star", False, str(exc)))
    return out


def all_pass(checks) -> bool:
    return all(c.ok for c in checks)
