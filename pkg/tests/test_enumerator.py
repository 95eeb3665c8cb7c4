import itertools
import math
from collections import Counter
from fractions import Fraction as F

import pytest

from conftest import oracle_connected, oracle_cycle_type, oracle_face
from lame_dessins import (
    OCTAHEDRAL,
    DegreeCapExceeded,
    InvalidTable,
    Passport,
    count_classes,
    derive_tables,
    enumerate_marked,
    enumerate_passport,
    equivalent,
    generate,
    marked_equivalent,
    naive_classes,
    passport,
    table_for_case,
)
from lame_dessins.enumerator import canonical_perm, perms_of_type
from lame_dessins.hypermap import automorphisms, genus
from lame_dessins.tables import FiberRow


def brute_pair_counts(E):
    """Transitive pairs per passport, counted with sympy cycle types only."""
    out = Counter()
    perms = list(itertools.permutations(range(E)))
    for b in perms:
        for w in perms:
            if oracle_connected(b, w):
                key = (oracle_cycle_type(b), oracle_cycle_type(w), oracle_cycle_type(oracle_face(b, w)))
                out[key] += 1
    return out


@pytest.mark.parametrize("E", [1, 2, 3, 4, 5])
def test_mass_formula(E):
    # every class d contributes E!/|Aut d| labelled pairs
    for (b, w, f), pairs in brute_pair_counts(E).items():
        reps = enumerate_passport(Passport(b, w, f))
        mass = sum(F(math.factorial(E), len(automorphisms(d))) for d in reps)
        assert mass == pairs


def test_small_examples():
    star = enumerate_passport(Passport.parse("1,1,1;3;3"))
    assert len(star) == 1
    assert len(enumerate_passport(Passport.parse("1,1;2;2"))) == 1
    # degree 6, the passport of the second octahedral family at N=1
    reps = enumerate_passport(Passport.parse("1,1,2,2;3,3;2,4"))
    assert len(reps) == 1
    assert equivalent(reps[0], generate("oct_third", 1).dessin)


def test_soundness():
    p = Passport.parse("2,2,1,1;3,3;4,2")
    reps = enumerate_passport(p)
    for d in reps:
        assert passport(d) == p
    for a, b in itertools.combinations(reps, 2):
        assert not equivalent(a, b)


def test_genus_unrestricted():
    reps = enumerate_passport(Passport.parse("3;3;3"))
    assert {genus(d) for d in reps} == {1}


def test_perms_of_type():
    for ct in [(3,), (2, 1), (2, 2), (3, 1, 1), (2, 2, 1)]:
        got = set(perms_of_type(ct))
        want = {p for p in itertools.permutations(range(sum(ct))) if oracle_cycle_type(p) == tuple(sorted(ct, reverse=True))}
        assert got == want
    assert oracle_cycle_type(canonical_perm((1, 3, 2))) == (3, 2, 1)


@pytest.mark.parametrize("E", [1, 2, 3, 4, 5, 6])
def test_naive_vs_optimized(E):
    naive = naive_classes(E)
    for p, forms in naive.items():
        assert len(enumerate_passport(p)) == len(forms)


def test_cap():
    with pytest.raises(DegreeCapExceeded):
        enumerate_passport(Passport.parse("1,1,1,1,1,1,1,1,1,1,1,1,1;13;13"))
    with pytest.raises(DegreeCapExceeded):
        enumerate_passport(Passport.parse("1,1,1,1,1,1,1;7;7"), cap=6)
    assert len(enumerate_passport(Passport.parse("1,1,1,1,1,1,1;7;7"), cap=7)) == 1


def test_workers_deterministic():
    p = Passport.parse("2,2,2,1,1,1;3,3,3;5,4")
    assert enumerate_passport(p, workers=1) == enumerate_passport(p, workers=3)


def test_marked_counts():
    # oracle outputs; the 3-star gives two oriented classes (cyclic orders of 0, 1, lambda)
    assert count_classes(table_for_case("oct_half", 0)) == 2
    assert count_classes(table_for_case("oct_third", 0)) == 1
    assert count_classes(table_for_case("ico_third", 0)) == 6
    assert count_classes(table_for_case("ico_fifth", 1)) == 6
    assert count_classes(table_for_case("oct_third", 1)) == 2


def test_marked_classes_distinct():
    ms = enumerate_marked(table_for_case("ico_third", 0))
    for a, b in itertools.combinations(ms, 2):
        assert not marked_equivalent(a, b)


@pytest.mark.parametrize("case,k", [("oct_half", 0), ("oct_half", 1), ("oct_third", 0), ("oct_third", 1),
                                    ("oct_third", 2), ("ico_third", 0), ("ico_fifth", 0), ("ico_fifth", 1)])
def test_generator_found_by_oracle(case, k):
    g = generate(case, k)
    assert any(marked_equivalent(g, m) for m in enumerate_marked(table_for_case(case, k)))


def test_marked_invalid_table():
    t = table_for_case("oct_half", 0)
    r = t.rows[0]
    broken = type(t)(t.degree, t.parent, t.n, (FiberRow("0", r.marks, r.generic_count + 1, 2), *t.rows[1:]))
    with pytest.raises(InvalidTable):
        enumerate_marked(broken)


def test_marked_cap():
    with pytest.raises(DegreeCapExceeded):
        enumerate_marked(table_for_case("oct_half", 2))


def test_three_quarters_only_one_table_realized():
    general = table_for_case("oct_half", 1)
    for t in derive_tables(OCTAHEDRAL, F(3, 4)):
        assert (count_classes(t) > 0) == (t == general)


def test_exceptional_nothing_to_count():
    assert derive_tables(OCTAHEDRAL, F(-1, 4)) == []
