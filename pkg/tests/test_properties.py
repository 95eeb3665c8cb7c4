from fractions import Fraction as F

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import oracle_connected, oracle_genus
from lame_dessins import (
    ICOSAHEDRAL,
    OCTAHEDRAL,
    Dessin,
    canonical_form,
    derive_tables,
    equivalent,
    genus,
    passport,
    passport_of_table,
    validate_table,
)
from lame_dessins.documents import dumps, loads
from lame_dessins.fuchsian import format_rational, parse_rational
from lame_dessins.hypermap import perm_compose, perm_num_cycles


@st.composite
def dessins(draw, max_degree=9):
    E = draw(st.integers(1, max_degree))
    b = tuple(draw(st.permutations(range(E))))
    w = tuple(draw(st.permutations(range(E))))
    assume(oracle_connected(b, w))
    return Dessin(b, w)


@st.composite
def relabellings(draw, E):
    return tuple(draw(st.permutations(range(E))))


@given(dessins())
def test_passport_partitions_degree(d):
    p = passport(d)
    assert sum(p.black) == sum(p.white) == sum(p.face) == d.degree


@given(dessins())
def test_product_identity(d):
    assert perm_compose(d.face, perm_compose(d.black, d.white)) == tuple(range(d.degree))


@given(dessins())
def test_genus_parity_and_oracle(d):
    c = perm_num_cycles(d.black) + perm_num_cycles(d.white) + perm_num_cycles(d.face)
    assert (c - d.degree) % 2 == 0
    assert genus(d) >= 0
    assert genus(d) == oracle_genus(d.black, d.white)


@given(st.data())
def test_relabel_invariance(data):
    d = data.draw(dessins())
    tau = data.draw(relabellings(d.degree))
    e = d.relabel(tau)
    assert equivalent(d, e) and equivalent(e, d)
    assert passport(e) == passport(d) and genus(e) == genus(d)
    assert canonical_form(e) == canonical_form(d)


@given(dessins(6), dessins(6))
def test_passport_separates(d1, d2):
    if passport(d1) != passport(d2):
        assert not equivalent(d1, d2)
    assert equivalent(d1, d2) == (canonical_form(d1) == canonical_form(d2) and d1.degree == d2.degree)


@given(dessins())
def test_document_roundtrip(d):
    assert loads(dumps(d)) == d


@given(st.integers(-500, 500), st.integers(1, 500))
def test_rational_roundtrip(p, q):
    x = F(p, q)
    assert parse_rational(format_rational(x)) == x


@settings(max_examples=60)
@given(st.integers(0, 60), st.sampled_from([1, 2, 3, 4, 5, 6, 10, 12, 15]),
       st.sampled_from([OCTAHEDRAL, ICOSAHEDRAL]))
def test_derived_tables_consistent(p, q, parent):
    n = F(p, q)
    for t in derive_tables(parent, n):
        assert validate_table(t)
        pp = passport_of_table(t)
        assert len(pp.black) + len(pp.white) + len(pp.face) == t.degree + 2
