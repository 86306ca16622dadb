import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freelie.errors import DomainError, InputError, NotLieElementError
from freelie.liealg import GF, QQ, AssocPoly, Field, LiePoly, expand, leading_word, ls_coordinates, to_ls_basis
from freelie.parse import parse_expr
from freelie.words import Tree, als_words, canonical_bracket

from conftest import XY, XZY, random_lie


def E(text, A=XZY, F=QQ):
    return parse_expr(text, A, F)


def test_field_parse_and_format():
    assert Field.parse("Q") == QQ
    assert Field.parse("GF(7)") == GF(7)
    with pytest.raises(InputError, match="not prime"):
        Field.parse("GF(4)")
    assert QQ.format(Fraction(2, 3)) == "2/3"
    assert GF(5).format(7) == "2 mod 5"
    assert GF(7)("1/3") == 5
    assert QQ.div(1, 3) == Fraction(1, 3)
    with pytest.raises(DomainError):
        QQ.inv(0)
    with pytest.raises(DomainError):
        GF(3)(Fraction(1, 3))


def test_expand_examples():
    t = canonical_bracket(XY.word("xyy"))
    p = expand(t, XY)
    assert p.format() == "xyy - 2*yxy + yyx"
    assert leading_word(p) == (XY.word("xyy"), 1)


def test_to_ls_basis_round_trip():
    t = canonical_bracket(XZY.word("xzzy"))
    assert to_ls_basis(expand(t, XZY)) == LiePoly.from_tree(t, XZY)


def test_non_lie_element_rejected():
    with pytest.raises(NotLieElementError):
        ls_coordinates({XY.word("xy"): 1})
    with pytest.raises(NotLieElementError):
        to_ls_basis(AssocPoly({XY.word("x"): 1, XY.word("xy"): 1}, XY, QQ))


def test_from_arbitrary_tree_is_rewritten_in_basis():
    x, y = (Tree(c) for c in XY.word("xy"))
    t = Tree.node(y, x)
    assert LiePoly.from_tree(t, XY) == -LiePoly.from_tree(Tree.node(x, y), XY)
    assert not LiePoly.from_tree(Tree.node(x, x), XY)


def test_monic_and_format():
    p = E("3*[[x,y],y] + [x,y]", XY)
    assert p.monic().format() == "[[x,y],y] + 1/3*[x,y]"
    assert p.leading_coeff == 3 and not p.is_monic()
    with pytest.raises(DomainError):
        LiePoly.zero(XY).monic()


def test_degrees_and_components():
    p = E("[[x,y],y] - [x,y] + x", XY)
    assert p.degree == 3 and p.degrees() == {1, 2, 3} and not p.is_homogeneous()
    assert p.component(2) == E("-[x,y]", XY)


def test_gf_arithmetic():
    F = GF(3)
    p = E("2*[x,y] + [x,y]", XY, F)
    assert not p
    q = E("2*[[x,y],y]", XY, F)
    assert q.monic() == E("[[x,y],y]", XY, F)
    assert q.format() == "2*[[x,y],y]"


def test_incompatible_operands():
    with pytest.raises(InputError):
        E("x", XY) + E("x", XZY)


def lie_elements(alphabet, max_deg):
    return st.integers(0, 10**6).map(
        lambda seed: random_lie(random.Random(seed), alphabet, max_deg, homogeneous=seed % 2 == 0))


@settings(max_examples=60, deadline=None)
@given(lie_elements(XZY, 3), lie_elements(XZY, 3))
def test_antisymmetry(a, b):
    assert a.bracket(b) == -b.bracket(a)
    assert not a.bracket(a)


@settings(max_examples=40, deadline=None)
@given(lie_elements(XZY, 3), lie_elements(XZY, 2), lie_elements(XZY, 2))
def test_jacobi(a, b, c):
    total = a.bracket(b).bracket(c) + b.bracket(c).bracket(a) + c.bracket(a).bracket(b)
    assert not total


@settings(max_examples=60, deadline=None)
@given(lie_elements(XZY, 4), st.integers(-5, 5).filter(bool))
def test_expansion_is_linear(a, k):
    lhs = a.scale(k).expansion_terms()
    rhs = {w: k * c for w, c in a.expansion_terms().items()}
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(lie_elements(XZY, 4))
def test_leading_word_of_lie_element_is_als_and_from_expansion(a):
    from freelie.words import is_als, lead_key

    exp = a.expansion_terms()
    top = min(exp, key=lead_key)
    assert top == a.leading_word and exp[top] == a.leading_coeff
    assert is_als(top)


def test_ls_trees_are_independent_spanning_set():
    from freelie.oracle import free_lie_dimension

    for n in range(1, 6):
        trees = [canonical_bracket(w) for w in als_words(XZY, n) if len(w) == n]
        assert len(trees) == free_lie_dimension(XZY, n)
