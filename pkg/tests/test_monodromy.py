from fractions import Fraction as F

import pytest

from conftest import sym
from lame_dessins import CASES, OCTAHEDRAL, ICOSAHEDRAL, generate, table_for_case
from lame_dessins.fuchsian import schwarz_signature
from lame_dessins.monodromy import (
    has_full_monodromy,
    parent_group_order,
    polyhedral_generators,
    pulled_back_monodromy_order,
)
from lame_dessins.tables import case_parameter
from sympy.combinatorics import PermutationGroup


@pytest.mark.parametrize("group,order", [("tetrahedral", 12), ("octahedral", 24), ("icosahedral", 60)])
def test_generators_span_the_group(group, order):
    x, y = polyhedral_generators(group)
    assert PermutationGroup([sym(x), sym(y)]).order() == order


def test_trivial_cover_keeps_group():
    # degree-1 cover: nothing is lost
    from lame_dessins import new_dessin
    single = new_dessin(1, [1], [1])
    assert pulled_back_monodromy_order(single, OCTAHEDRAL) == 24


def test_regular_cover_kills_monodromy():
    # the octahedral regular dessin itself (degree 24) pulls back to the trivial group
    from lame_dessins import Dessin
    x, y = polyhedral_generators("octahedral")
    elems = sorted(PermutationGroup([sym(x), sym(y)]).elements, key=lambda p: p.array_form)
    index = {tuple(p.array_form): i for i, p in enumerate(elems)}
    # right-regular action g -> g then x
    b = tuple(index[tuple((p * sym(x)).array_form)] for p in elems)
    w = tuple(index[tuple((p * sym(y)).array_form)] for p in elems)
    assert pulled_back_monodromy_order(Dessin(b, w), OCTAHEDRAL) == 1


def integer_exponent_at_infinity(case, k):
    _, n = case_parameter(case, k)
    return (n + F(1, 2)).denominator == 1


@pytest.mark.parametrize("case", CASES)
def test_generated_monodromy(case):
    for k in range(16):
        m = generate(case, k)
        parent = table_for_case(case, k).parent
        order = pulled_back_monodromy_order(m.dessin, parent)
        if integer_exponent_at_infinity(case, k):
            # only three half-integer points remain: the Klein four-group
            assert order == 4
        else:
            assert order == parent_group_order(parent)
            assert has_full_monodromy(m.dessin, parent)


def test_unsupported_row():
    with pytest.raises(ValueError):
        polyhedral_generators("dihedral")
    with pytest.raises(ValueError):
        pulled_back_monodromy_order(generate("oct_half", 0).dessin, schwarz_signature("dihedral", 3))
    assert parent_group_order(ICOSAHEDRAL) == 60
